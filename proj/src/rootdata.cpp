#include "extq/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace extq {

long dot(const LVec& a, const LVec& b) {
    if (a.size() != b.size()) throw Error("pairing shape mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int RootDatum::root_index(const LVec& alpha) const {
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].alpha == alpha) return int(i);
    return -1;
}

IntMatrix RootDatum::reflection_on_characters(int root) const {
    const Root& r = roots.at(root);
    IntMatrix m = IntMatrix::identity(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m.at(i, j) -= mpz_class(r.alpha[i]) * r.coroot[j];
    return m;
}

RootDatum RootDatum::dual() const {
    RootDatum d = *this;
    for (auto& r : d.roots) std::swap(r.alpha, r.coroot);
    auto dual_type = [](const std::string& t) -> std::string {
        if (t == "B2") return "C2";
        if (t == "C2") return "B2";
        if (t == "B3") return "C3";
        if (t == "C3") return "B3";
        return t;  // A_n and G2 are self-dual
    };
    for (auto& f : d.declared) {
        f.type = dual_type(f.type);
        if (f.isogeny == "sc")
            f.isogeny = "adj";
        else if (f.isogeny == "adj")
            f.isogeny = "sc";
    }
    d.label = "dual(" + label + ")";
    // Recheck the saturation warning on the new coroot side.
    if (!d.roots.empty()) {
        IntMatrix m(d.rank, int(d.simples.size()));
        for (size_t j = 0; j < d.simples.size(); ++j)
            for (int i = 0; i < d.rank; ++i) m.at(i, int(j)) = d.roots[d.simples[j]].coroot[i];
        auto s = smith_normal_form(m);
        d.coroot_lattice_saturated = true;
        for (const auto& f : s.invariant_factors)
            if (f > 1) d.coroot_lattice_saturated = false;
    }
    return d;
}

std::vector<int> RootDatum::positive_roots() const {
    std::vector<int> p;
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].positive) p.push_back(int(i));
    return p;
}

namespace {

// Cartan matrix with C[i][j] = <alpha_j, alpha_i^v>, 0-based.
std::vector<std::vector<long>> cartan_matrix(const std::string& type) {
    char fam = type[0];
    int n = type[1] - '0';
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    if (fam == 'B' && n >= 2) c[n - 1][n - 2] = -2;  // alpha_{n-1} long, alpha_n short
    if (fam == 'C' && n >= 2) c[n - 2][n - 1] = -2;  // alpha_n long
    if (fam == 'G') {
        c[0][1] = -3;  // alpha_1 short, alpha_2 long
        c[1][0] = -1;
    }
    return c;
}

struct FactorBuild {
    int rank = 0;
    std::vector<Root> roots;        // local coordinates
    std::vector<int> simples;       // local root indices
    std::string type, isogeny;
};

// Closure of the simple (root, coroot) pairs under the simple reflections.
void generate_roots(FactorBuild& f) {
    auto key = [](const LVec& v) { return v; };
    std::map<LVec, int> seen;
    for (size_t i = 0; i < f.roots.size(); ++i) seen[key(f.roots[i].alpha)] = int(i);
    std::vector<int> queue;
    for (size_t i = 0; i < f.roots.size(); ++i) queue.push_back(int(i));
    std::vector<Root> simple_copy;
    for (int s : f.simples) simple_copy.push_back(f.roots[s]);
    while (!queue.empty()) {
        int idx = queue.back();
        queue.pop_back();
        Root cur = f.roots[idx];
        for (const Root& s : simple_copy) {
            long c1 = dot(cur.alpha, s.coroot);
            long c2 = dot(s.alpha, cur.coroot);
            Root img;
            img.alpha = cur.alpha;
            img.coroot = cur.coroot;
            for (int i = 0; i < f.rank; ++i) {
                img.alpha[i] -= c1 * s.alpha[i];
                img.coroot[i] -= c2 * s.coroot[i];
            }
            if (!seen.count(img.alpha)) {
                seen[img.alpha] = int(f.roots.size());
                f.roots.push_back(img);
                queue.push_back(int(f.roots.size()) - 1);
            }
        }
    }
}

void mark_positivity(std::vector<Root>& roots, const std::vector<int>& simples) {
    std::vector<VecQ> cols;
    for (int s : simples) {
        VecQ v;
        for (long x : roots[s].alpha) v.push_back(x);
        cols.push_back(v);
    }
    for (auto& r : roots) {
        VecQ t;
        for (long x : r.alpha) t.push_back(x);
        auto c = solve_linear(cols, t);
        if (!c) throw Error("root outside the span of the simple system");
        bool pos = true;
        for (const auto& q : *c)
            if (q < 0) pos = false;
        r.positive = pos;
    }
}

FactorBuild build_sc_factor(const std::string& type) {
    FactorBuild f;
    f.type = type;
    f.isogeny = "sc";
    auto c = cartan_matrix(type);
    f.rank = int(c.size());
    for (int j = 0; j < f.rank; ++j) {
        Root r;
        r.alpha.resize(f.rank);
        r.coroot.assign(f.rank, 0);
        for (int i = 0; i < f.rank; ++i) r.alpha[i] = c[i][j];
        r.coroot[j] = 1;
        f.roots.push_back(r);
        f.simples.push_back(j);
    }
    generate_roots(f);
    return f;
}

FactorBuild build_gl_factor(int n) {  // GL_n, rank n, type A_{n-1}
    FactorBuild f;
    f.type = "A" + std::to_string(n - 1);
    f.isogeny = "gl";
    f.rank = n;
    for (int j = 0; j + 1 < n; ++j) {
        Root r;
        r.alpha.assign(n, 0);
        r.coroot.assign(n, 0);
        r.alpha[j] = 1;
        r.alpha[j + 1] = -1;
        r.coroot = r.alpha;
        f.roots.push_back(r);
        f.simples.push_back(j);
    }
    generate_roots(f);
    return f;
}

FactorBuild dualize_factor(FactorBuild f) {
    for (auto& r : f.roots) std::swap(r.alpha, r.coroot);
    return f;
}

FactorBuild build_factor(const std::string& type, const std::string& isogeny) {
    static const std::set<std::string> supported = {"A1", "A2", "A3", "A4", "B2",
                                                    "B3", "C2", "C3", "G2"};
    if (!supported.count(type))
        throw UnsupportedType("unsupported Cartan type '" + type + "'");
    if (isogeny == "sc") return build_sc_factor(type);
    if (isogeny == "gl") {
        if (type[0] != 'A') throw UnsupportedType("GL-style isogeny requires type A");
        return build_gl_factor(type[1] - '0' + 1);
    }
    if (isogeny == "adj") {
        std::string dual_type = type;
        if (type[0] == 'B') dual_type[0] = 'C';
        if (type[0] == 'C') dual_type[0] = 'B';
        FactorBuild f = dualize_factor(build_sc_factor(dual_type));
        f.type = type;
        f.isogeny = "adj";
        return f;
    }
    throw ParseError("unknown isogeny tag '" + isogeny + "'");
}

struct ParsedSpec {
    std::vector<std::pair<std::string, std::string>> factors;  // (type, isogeny)
    int central = 0;
    bool dualize = false;
};

std::string expand_alias(const std::string& token) {
    static const std::map<std::string, std::string> aliases = {
        {"SL2", "A1:sc"},   {"SL3", "A2:sc"},   {"SL4", "A3:sc"},   {"SL5", "A4:sc"},
        {"PGL2", "A1:adj"}, {"PGL3", "A2:adj"}, {"PGL4", "A3:adj"}, {"PGL5", "A4:adj"},
        {"GL2", "A1:gl"},   {"GL3", "A2:gl"},   {"GL4", "A3:gl"},   {"GL5", "A4:gl"},
        {"Sp4", "C2:sc"},   {"Sp6", "C3:sc"},   {"PSp4", "C2:adj"}, {"PSp6", "C3:adj"},
        {"SO5", "B2:adj"},  {"SO7", "B3:adj"},  {"Spin5", "B2:sc"}, {"Spin7", "B3:sc"},
        {"G2", "G2:sc"}};
    auto it = aliases.find(token);
    return it == aliases.end() ? token : it->second;
}

ParsedSpec parse_descriptor(std::string spec) {
    ParsedSpec p;
    // strip whitespace
    spec.erase(std::remove_if(spec.begin(), spec.end(), [](char c) { return c == ' '; }),
               spec.end());
    if (spec.rfind("dual(", 0) == 0 && spec.back() == ')') {
        p = parse_descriptor(spec.substr(5, spec.size() - 6));
        p.dualize = !p.dualize;
        return p;
    }
    if (spec.empty()) throw ParseError("empty root datum descriptor");
    auto plus = spec.find('+');
    if (plus != std::string::npos) {
        std::string rest = spec.substr(plus + 1);
        if (rest.rfind("central=", 0) != 0) throw ParseError("expected +central=k, got '+" + rest + "'");
        try {
            p.central = std::stoi(rest.substr(8));
        } catch (...) {
            throw ParseError("bad central torus rank in '" + rest + "'");
        }
        if (p.central < 0) throw ParseError("central torus rank must be nonnegative");
        spec = spec.substr(0, plus);
    }
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, '*')) {
        if (token.empty()) throw ParseError("empty factor in descriptor");
        token = expand_alias(token);
        auto colon = token.find(':');
        std::string type = colon == std::string::npos ? token : token.substr(0, colon);
        std::string iso = colon == std::string::npos ? "sc" : token.substr(colon + 1);
        if (type.size() != 2 || !isupper(type[0]) || !isdigit(type[1]))
            throw ParseError("bad Cartan type '" + type + "'");
        p.factors.emplace_back(type, iso);
    }
    if (p.factors.empty() && p.central == 0) throw ParseError("descriptor names no factors");
    return p;
}

}  // namespace

RootDatum build_root_datum(const std::string& spec) {
    ParsedSpec p = parse_descriptor(spec);
    std::vector<FactorBuild> parts;
    for (const auto& [type, iso] : p.factors) parts.push_back(build_factor(type, iso));

    RootDatum rd;
    rd.label = spec;
    int offset = 0;
    for (const auto& f : parts) rd.rank += f.rank;
    rd.rank += p.central;
    for (const auto& f : parts) {
        DeclaredFactor df;
        df.type = f.type;
        df.isogeny = f.isogeny;
        for (size_t i = 0; i < f.roots.size(); ++i) {
            Root r;
            r.alpha.assign(rd.rank, 0);
            r.coroot.assign(rd.rank, 0);
            for (int j = 0; j < f.rank; ++j) {
                r.alpha[offset + j] = f.roots[i].alpha[j];
                r.coroot[offset + j] = f.roots[i].coroot[j];
            }
            rd.roots.push_back(r);
        }
        int base = int(rd.roots.size()) - int(f.roots.size());
        for (int s : f.simples) {
            rd.simples.push_back(base + s);
            df.simple_roots.push_back(base + s);
        }
        rd.declared.push_back(df);
        offset += f.rank;
    }
    if (!rd.roots.empty()) mark_positivity(rd.roots, rd.simples);

    // Saturation warning on the coroot lattice (derived subgroup of the dual).
    if (!rd.simples.empty()) {
        IntMatrix m(rd.rank, int(rd.simples.size()));
        for (size_t j = 0; j < rd.simples.size(); ++j)
            for (int i = 0; i < rd.rank; ++i) m.at(i, int(j)) = rd.roots[rd.simples[j]].coroot[i];
        auto s = smith_normal_form(m);
        for (const auto& f : s.invariant_factors)
            if (f > 1) rd.coroot_lattice_saturated = false;
    }

    if (p.dualize) rd = rd.dual();
    rd.label = spec;
    return rd;
}

// ----- type recognition --------------------------------------------------

namespace {

// |alpha|^2 / |beta|^2 for non-orthogonal roots.
long length_ratio(const RootDatum& rd, int a, int b) {
    long u = rd.pair(rd.roots[a].alpha, rd.roots[b].coroot);
    long v = rd.pair(rd.roots[b].alpha, rd.roots[a].coroot);
    if (u == 0 || v == 0) throw Error("length ratio of orthogonal roots");
    // <a,b^v>/<b,a^v> = |a|^2/|b|^2
    if (u % v == 0) return u / v;
    return -(v / u);  // negative encodes a reciprocal ratio
}

}  // namespace

std::string SystemType::str() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f.type;
        if (f.gl_style) s += ":gl";
    }
    return s.empty() ? "T" : s;
}

SystemType recognize_system(const RootDatum& rd, const std::vector<int>& root_subset) {
    SystemType out;
    std::vector<int> pos;
    for (int i : root_subset)
        if (rd.roots[i].positive) pos.push_back(i);
    std::sort(pos.begin(), pos.end());

    // Simple roots of the subsystem: positives not expressible as a sum of two.
    std::set<LVec> pos_set;
    for (int i : pos) pos_set.insert(rd.roots[i].alpha);
    std::vector<int> simples;
    for (int i : pos) {
        bool is_sum = false;
        for (int j : pos) {
            if (is_sum) break;
            for (int k : pos) {
                LVec s(rd.rank);
                for (int t = 0; t < rd.rank; ++t)
                    s[t] = rd.roots[j].alpha[t] + rd.roots[k].alpha[t];
                if (s == rd.roots[i].alpha) {
                    is_sum = true;
                    break;
                }
            }
        }
        if (!is_sum) simples.push_back(i);
    }

    // Split into connected components of the Coxeter diagram.
    int n = int(simples.size());
    std::vector<std::vector<int>> bond(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            long u = rd.pair(rd.roots[simples[a]].alpha, rd.roots[simples[b]].coroot);
            long v = rd.pair(rd.roots[simples[b]].alpha, rd.roots[simples[a]].coroot);
            bond[a][b] = int(u * v);
        }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int a = 0; a < n; ++a) {
        if (comp[a] >= 0) continue;
        std::vector<int> stack{a};
        comp[a] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y)
                if (comp[y] < 0 && bond[x][y]) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
        }
        ++ncomp;
    }

    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> local;  // positions into `simples`
        for (int a = 0; a < n; ++a)
            if (comp[a] == c) local.push_back(a);
        FactorType f;
        int k = int(local.size());
        if (k == 1) {
            f.type = "A1";
            f.simple_roots = {simples[local[0]]};
        } else {
            // Order along the path: start from an endpoint.
            auto degree = [&](int a) {
                int d = 0;
                for (int b : local)
                    if (b != a && bond[a][b]) ++d;
                return d;
            };
            std::vector<int> ends;
            for (int a : local)
                if (degree(a) == 1) ends.push_back(a);
            if (ends.size() != 2) throw UnsupportedType("subsystem diagram is not a path");
            auto path_from = [&](int start) {
                std::vector<int> path{start};
                std::set<int> used{start};
                while (int(path.size()) < k) {
                    int cur = path.back();
                    for (int b : local)
                        if (!used.count(b) && bond[cur][b]) {
                            path.push_back(b);
                            used.insert(b);
                            break;
                        }
                }
                return path;
            };
            int max_bond = 0;
            for (int a : local)
                for (int b : local) max_bond = std::max(max_bond, bond[a][b]);
            if (max_bond == 1) {
                if (k > 4) throw UnsupportedType("type A rank > 4 subsystem");
                f.type = "A" + std::to_string(k);
                // Deterministic orientation: smaller ambient index first.
                std::vector<int> p1 = path_from(ends[0]), p2 = path_from(ends[1]);
                f.simple_roots.clear();
                std::vector<int> chosen =
                    simples[p1.front()] <= simples[p2.front()] ? p1 : p2;
                for (int a : chosen) f.simple_roots.push_back(simples[a]);
            } else if (max_bond == 2) {
                if (k > 3) throw UnsupportedType("type B/C rank > 3 subsystem");
                // Count length classes among the component's simples.
                std::vector<int> longs, shorts;
                for (int a : local) {
                    bool is_long = false, is_short = false;
                    for (int b : local) {
                        if (a == b || !bond[a][b]) continue;
                        long r = length_ratio(rd, simples[a], simples[b]);
                        if (r == 2) is_long = true;
                        if (r == -2) is_short = true;
                        if (r == 1) {
                            // same length neighbour; classified via the other bonds
                        }
                    }
                    if (is_long) longs.push_back(a);
                    if (is_short) shorts.push_back(a);
                }
                if (k == 2) {
                    // Rank-2 double bond: canonical C2 ordering (short, long).
                    f.type = "C2";
                    int lng = longs.at(0), sht = shorts.at(0);
                    f.simple_roots = {simples[sht], simples[lng]};
                } else {
                    // Path of length 3 with the double bond at one end.
                    std::vector<int> path = path_from(ends[0]);
                    if (bond[path[0]][path[1]] != 1) path = path_from(ends[1]);
                    // Now the double bond joins path[1], path[2].
                    long r = length_ratio(rd, simples[path[1]], simples[path[2]]);
                    f.type = (r == 2) ? "B3" : "C3";
                    f.simple_roots = {simples[path[0]], simples[path[1]], simples[path[2]]};
                }
            } else if (max_bond == 3) {
                f.type = "G2";
                long r = length_ratio(rd, simples[local[0]], simples[local[1]]);
                int sht = r == -2 || r == -3 ? local[0] : local[1];
                int lng = sht == local[0] ? local[1] : local[0];
                f.simple_roots = {simples[sht], simples[lng]};
            } else {
                throw UnsupportedType("unrecognized bond multiplicity");
            }
        }
        // Declared-factor override: keep the declared naming when the simple
        // sets coincide (this preserves B2 vs C2 and GL-style tags).
        std::set<int> fset(f.simple_roots.begin(), f.simple_roots.end());
        for (const auto& df : rd.declared) {
            std::set<int> dset(df.simple_roots.begin(), df.simple_roots.end());
            if (dset == fset) {
                f.type = df.type;
                f.simple_roots = df.simple_roots;
                f.gl_style = df.isogeny == "gl";
                break;
            }
        }
        out.factors.push_back(f);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorType& a, const FactorType& b) {
                  return a.simple_roots < b.simple_roots;
              });
    return out;
}

}  // namespace extq

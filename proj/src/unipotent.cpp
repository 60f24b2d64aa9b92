#include "extq/unipotent.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace extq {

namespace {

using nlohmann::json;

// ----- partitions --------------------------------------------------------

using Partition = std::vector<int>;  // weakly decreasing, positive parts

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

Partition transpose(const Partition& p) {
    Partition t;
    for (int i = 1; !p.empty() && i <= p[0]; ++i) {
        int c = 0;
        for (int part : p)
            if (part >= i) ++c;
        t.push_back(c);
    }
    return t;
}

std::string format_partition(const Partition& p) {
    std::ostringstream os;
    os << "(";
    size_t i = 0;
    bool first = true;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!first) os << ",";
        os << p[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    os << ")";
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        int part = std::stoi(tok.substr(0, caret));
        int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        for (int i = 0; i < mult; ++i) p.push_back(part);
    }
    std::sort(p.rbegin(), p.rend());
    return p;
}

// "(2,1|1^2)" -> pair of partitions
std::pair<Partition, Partition> parse_bipartition(const std::string& s) {
    auto bar = s.find('|');
    std::string left = s.substr(1, bar - 1);
    std::string right = s.substr(bar + 1, s.size() - bar - 2);
    return {parse_partition(left), parse_partition(right)};
}

// Weighted Dynkin entries of a type-A class from the diagonal recipe.
std::vector<int> type_a_weights(const Partition& lam, int m) {
    std::vector<int> diag;
    for (int p : lam)
        for (int k = p - 1; k >= 1 - p; k -= 2) diag.push_back(k);
    std::sort(diag.rbegin(), diag.rend());
    std::vector<int> w;
    for (int i = 0; i + 1 < m; ++i) w.push_back(diag[i] - diag[i + 1]);
    return w;
}

int type_a_dim_b(const Partition& lam) {
    int d = 0;
    for (int c : transpose(lam)) d += c * (c - 1) / 2;
    return d;
}

// S_k character values by cycle type, k <= 3.
mpq_class small_sym_char(const Partition& irrep, const Partition& cycles) {
    int k = 0;
    for (int p : irrep) k += p;
    if (k <= 1) return 1;
    auto is = [&](const Partition& p, std::initializer_list<int> q) {
        return p == Partition(q);
    };
    if (k == 2) {
        if (is(irrep, {2})) return 1;
        return is(cycles, {2}) ? -1 : 1;  // sign
    }
    if (k == 3) {
        if (is(irrep, {3})) return 1;
        if (is(irrep, {1, 1, 1})) {
            if (is(cycles, {2, 1})) return -1;
            return 1;
        }
        // standard 2-dimensional
        if (is(cycles, {1, 1, 1})) return 2;
        if (is(cycles, {2, 1})) return 0;
        return -1;
    }
    throw Error("symmetric group character out of the supported range");
}

int element_det(const WeylGroup& w, int e) {
    IntMatrix m(w.rank, w.rank);
    for (int i = 0; i < w.rank; ++i)
        for (int j = 0; j < w.rank; ++j) m.at(i, j) = w.mats[e][size_t(i) * w.rank + j];
    return int(m.det().get_si());
}

VecQ act_rational_characters(const WeylGroup& w, int e, const VecQ& v) {
    VecQ r(w.rank, 0);
    for (int i = 0; i < w.rank; ++i)
        for (int j = 0; j < w.rank; ++j)
            if (w.mats[e][size_t(i) * w.rank + j])
                r[i] += mpq_class(w.mats[e][size_t(i) * w.rank + j]) * v[j];
    return r;
}

// ----- per-factor data ----------------------------------------------------

struct FactorData {
    FactorType type;
    Subgroup weyl;
    ConjClasses classes;
    std::vector<UnipotentClass> uclasses;  // weights factor-local, h ambient
    struct Row {
        int cls;
        std::string rho1;
        ClassFunction chr;  // on `classes`
    };
    std::vector<Row> rows;
};

VecQ solve_factor_h(const RootDatum& rd, const std::vector<int>& simple_roots,
                    const std::vector<int>& weights) {
    size_t n = simple_roots.size();
    std::vector<VecQ> cols(n);
    VecQ target(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            cols[j].push_back(
                rd.pair(rd.roots[simple_roots[i]].alpha, rd.roots[simple_roots[j]].coroot));
        target[i] = weights[i];
    }
    auto c = solve_linear(cols, target);
    if (!c) throw Error("weighted Dynkin system is inconsistent");
    VecQ h(rd.rank, 0);
    for (size_t j = 0; j < n; ++j)
        for (int i = 0; i < rd.rank; ++i)
            h[i] += (*c)[j] * mpq_class(rd.roots[simple_roots[j]].coroot[i]);
    return h;
}

std::vector<int> reflection_elements(const RootDatum& rd, const WeylGroup& master,
                                     const std::vector<int>& roots) {
    std::vector<int> out;
    for (int s : roots) {
        IntMatrix m = rd.reflection_on_characters(s);
        WMat wm(size_t(rd.rank) * rd.rank);
        for (int a = 0; a < rd.rank; ++a)
            for (int b = 0; b < rd.rank; ++b) wm[size_t(a) * rd.rank + b] = int(m.at(a, b).get_si());
        int e = master.index_of(wm);
        if (e < 0) throw Error("factor reflection missing from the master group");
        out.push_back(e);
    }
    return out;
}

Subgroup factor_weyl(const RootDatum& rd, const WeylGroup& master, const FactorType& f) {
    return subgroup_generated(master, reflection_elements(rd, master, f.simple_roots));
}

FactorData build_a_factor(const RootDatum& rd, const WeylGroup& master, const FactorType& f) {
    FactorData d;
    d.type = f;
    d.weyl = factor_weyl(rd, master, f);
    d.classes = conjugacy_classes(d.weyl);
    const auto& table = character_table(d.weyl);

    int m = int(f.simple_roots.size()) + 1;
    std::vector<int> path_gens = reflection_elements(rd, master, f.simple_roots);
    // Young subgroup of a composition: drop the generators at the boundaries.
    auto young = [&](const Partition& mu) {
        std::vector<int> gens;
        std::vector<bool> cut(m, false);
        int acc = 0;
        for (int part : mu) {
            acc += part;
            if (acc < m) cut[acc] = true;
        }
        for (int i = 1; i < m; ++i)
            if (!cut[i]) gens.push_back(path_gens[size_t(i - 1)]);
        return subgroup_generated(master, gens);
    };

    for (const Partition& lam : partitions_of(m)) {
        UnipotentClass c;
        c.name = format_partition(lam);
        c.bala_carter = c.name;
        c.weights = type_a_weights(lam, m);
        c.h = solve_factor_h(rd, f.simple_roots, c.weights);
        c.a_group = "1";
        c.dim_springer_fiber = type_a_dim_b(lam);
        d.uclasses.push_back(c);

        // chi^lambda: the common constituent of ind(triv, S_lambda) and
        // ind(sign, S_lambda') -- both contain it exactly once.
        auto ylam = young(lam);
        auto ylam_cl = conjugacy_classes(ylam);
        ClassFunction triv{std::vector<Cyclotomic>(ylam_cl.reps.size(), Cyclotomic(mpq_class(1)))};
        auto m1 = induce_and_decompose(ylam, ylam_cl, triv, d.weyl);
        auto ydual = young(transpose(lam));
        auto ydual_cl = conjugacy_classes(ydual);
        ClassFunction sgn = from_element_values(ydual_cl, [&](int e) {
            return Cyclotomic(mpq_class(element_det(master, e)));
        });
        auto m2 = induce_and_decompose(ydual, ydual_cl, sgn, d.weyl);
        int found = -1;
        for (size_t i = 0; i < m1.size(); ++i) {
            if (m1[i] < 1 || m2[i] < 1) continue;
            if (found >= 0) throw Error("type A Springer character is not unique");
            if (m1[i] != 1 || m2[i] != 1) throw Error("type A Springer multiplicity is not one");
            found = int(i);
        }
        if (found < 0) throw Error("type A Springer character not found");
        d.rows.push_back({int(d.uclasses.size()) - 1, "1", character_of(table, found)});
    }
    return d;
}

struct SignedPerm {
    std::vector<int> sigma;  // 0-based images
    std::vector<int> sign;   // +-1 per source index
};

// w e_i = sign_i * e_{sigma(i)} in the factor coordinates.
SignedPerm signed_perm(const WeylGroup& master, int e, const std::vector<VecQ>& coords) {
    int n = int(coords.size());
    SignedPerm sp;
    sp.sigma.assign(n, -1);
    sp.sign.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        VecQ img = act_rational_characters(master, e, coords[i]);
        for (int j = 0; j < n; ++j) {
            if (img == coords[j]) {
                sp.sigma[i] = j;
                sp.sign[i] = 1;
                break;
            }
            VecQ neg = coords[j];
            for (auto& x : neg) x = -x;
            if (img == neg) {
                sp.sigma[i] = j;
                sp.sign[i] = -1;
                break;
            }
        }
        if (sp.sigma[i] < 0) throw Error("element does not act by signed permutations");
    }
    return sp;
}

Partition cycle_type(const std::vector<int>& sigma, const std::vector<int>& block) {
    std::vector<bool> seen(sigma.size(), false);
    Partition out;
    for (int start : block) {
        if (seen[start]) continue;
        int len = 0, cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = sigma[cur];
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

FactorData build_bc_factor(const RootDatum& rd, const WeylGroup& master, const FactorType& f) {
    FactorData d;
    d.type = f;
    d.weyl = factor_weyl(rd, master, f);
    d.classes = conjugacy_classes(d.weyl);
    const auto& table = character_table(d.weyl);
    int n = int(f.simple_roots.size());
    bool is_b = f.type[0] == 'B';

    // Factor coordinates e_1..e_n in X^* (x) Q.
    std::vector<VecQ> coords(n, VecQ(rd.rank, 0));
    for (int i = 0; i < rd.rank; ++i)
        coords[n - 1][i] = mpq_class(rd.roots[f.simple_roots[n - 1]].alpha[i], is_b ? 1 : 2);
    for (int k = n - 2; k >= 0; --k)
        for (int i = 0; i < rd.rank; ++i)
            coords[k][i] = coords[k + 1][i] + mpq_class(rd.roots[f.simple_roots[k]].alpha[i]);

    json doc = json::parse(springer_table_sources().at(f.type));
    std::map<std::string, int> class_index;
    for (const auto& jc : doc["classes"]) {
        UnipotentClass c;
        c.name = jc["name"].get<std::string>();
        c.bala_carter = jc["bala_carter"].get<std::string>();
        for (const auto& w : jc["weights"]) c.weights.push_back(w.get<int>());
        c.h = solve_factor_h(rd, f.simple_roots, c.weights);
        c.a_group = jc["A_x"].get<std::string>();
        c.dim_springer_fiber = jc["dim_Bx"].get<int>();
        class_index[c.name] = int(d.uclasses.size());
        d.uclasses.push_back(c);
    }

    // chi_{(alpha|beta)} induced from the block subgroup S_a x S_b x (flips).
    auto bipartition_char = [&](const Partition& pa, const Partition& pb) {
        int a = 0;
        for (int p : pa) a += p;
        std::vector<int> block1, block2;
        for (int i = 0; i < n; ++i) (i < a ? block1 : block2).push_back(i);
        std::vector<int> elems;
        std::map<int, SignedPerm> perms;
        for (int e : d.weyl.elems) {
            SignedPerm sp = signed_perm(master, e, coords);
            bool keep = true;
            for (int i : block1)
                if (sp.sigma[i] >= a) keep = false;
            if (!keep) continue;
            perms[e] = sp;
            elems.push_back(e);
        }
        Subgroup block = subgroup_from_elements(master, elems);
        auto block_cl = conjugacy_classes(block);
        ClassFunction fn = from_element_values(block_cl, [&](int e) {
            const SignedPerm& sp = perms.at(e);
            mpq_class v = small_sym_char(pa, cycle_type(sp.sigma, block1)) *
                          small_sym_char(pb, cycle_type(sp.sigma, block2));
            for (int i : block2)
                if (sp.sign[i] < 0) v = -v;
            return Cyclotomic(v);
        });
        auto mult = induce_and_decompose(block, block_cl, fn, d.weyl);
        int found = -1;
        for (size_t i = 0; i < mult.size(); ++i) {
            if (!mult[i]) continue;
            if (found >= 0 || mult[i] != 1)
                throw Error("bipartition character failed to induce irreducibly");
            found = int(i);
        }
        return found;
    };

    for (const auto& jr : doc["springer"]) {
        auto [pa, pb] = parse_bipartition(jr["weyl_char"].get<std::string>());
        int idx = bipartition_char(pa, pb);
        d.rows.push_back({class_index.at(jr["class"].get<std::string>()),
                          jr["rho1"].get<std::string>(), character_of(table, idx)});
    }
    return d;
}

FactorData build_g2_factor(const RootDatum& rd, const WeylGroup& master, const FactorType& f) {
    FactorData d;
    d.type = f;
    d.weyl = factor_weyl(rd, master, f);
    d.classes = conjugacy_classes(d.weyl);
    const auto& table = character_table(d.weyl);

    // Short positive roots of the factor, for the reflection-sign characters.
    std::vector<int> factor_roots;
    {
        auto closure = reflection_subgroup(rd, master, f.simple_roots);
        factor_roots = closure.roots;
    }
    auto is_short = [&](int r) {
        for (int o : factor_roots) {
            if (rd.roots[o].alpha == rd.roots[r].alpha) continue;
            if (std::abs(rd.pair(rd.roots[o].alpha, rd.roots[r].coroot)) == 3) return true;
        }
        return false;
    };
    std::vector<int> short_pos, long_pos;
    for (int r : factor_roots) {
        if (!rd.roots[r].positive) continue;
        (is_short(r) ? short_pos : long_pos).push_back(r);
    }
    auto refl_sign = [&](const std::vector<int>& pos) {
        return from_element_values(d.classes, [&, pos](int e) {
            int count = 0;
            for (int r : pos) {
                LVec img = master.act_on_characters(e, rd.roots[r].alpha);
                int idx = rd.root_index(img);
                if (idx < 0) throw Error("factor root left the subsystem");
                if (!rd.roots[idx].positive) ++count;
            }
            return Cyclotomic(mpq_class(count % 2 ? -1 : 1));
        });
    };

    std::map<std::string, ClassFunction> named;
    named["triv"] =
        ClassFunction{std::vector<Cyclotomic>(d.classes.reps.size(), Cyclotomic(mpq_class(1)))};
    named["sign"] = sign_character(table);
    named["eps_s"] = refl_sign(short_pos);
    named["eps_l"] = refl_sign(long_pos);
    // the two 2-dimensionals, separated by their value at the Coxeter class
    int cox = master.mult(d.weyl.gens[0], d.weyl.gens[1]);
    int cox_class = d.classes.class_of[d.weyl.local(cox)];
    for (size_t i = 0; i < table.chi.size(); ++i) {
        if (table.degrees[i] != 2) continue;
        if (table.chi[i][cox_class] == Cyclotomic(mpq_class(1)))
            named["phi21"] = character_of(table, int(i));
        if (table.chi[i][cox_class] == Cyclotomic(mpq_class(-1)))
            named["phi22"] = character_of(table, int(i));
    }
    for (const char* key : {"eps_s", "eps_l"}) {
        auto m = decompose(table, named[key]);  // validates against the table
        long total = 0;
        for (long x : m) total += x;
        if (total != 1) throw Error("reflection sign character is not irreducible");
    }

    json doc = json::parse(springer_table_sources().at("G2"));
    std::map<std::string, int> class_index;
    for (const auto& jc : doc["classes"]) {
        UnipotentClass c;
        c.name = jc["name"].get<std::string>();
        c.bala_carter = jc["bala_carter"].get<std::string>();
        for (const auto& w : jc["weights"]) c.weights.push_back(w.get<int>());
        c.h = solve_factor_h(rd, f.simple_roots, c.weights);
        c.a_group = jc["A_x"].get<std::string>();
        c.dim_springer_fiber = jc["dim_Bx"].get<int>();
        class_index[c.name] = int(d.uclasses.size());
        d.uclasses.push_back(c);
    }
    for (const auto& jr : doc["springer"])
        d.rows.push_back({class_index.at(jr["class"].get<std::string>()),
                          jr["rho1"].get<std::string>(),
                          named.at(jr["weyl_char"].get<std::string>())});
    return d;
}

FactorData build_factor_data(const RootDatum& rd, const WeylGroup& master, const FactorType& f) {
    if (f.type[0] == 'A') return build_a_factor(rd, master, f);
    if (f.type == "G2") return build_g2_factor(rd, master, f);
    if (springer_table_sources().count(f.type)) return build_bc_factor(rd, master, f);
    throw UnsupportedType("no unipotent tables for type " + f.type);
}

// The component of e acting on factor f: the unique element of the factor
// group with the same action on the factor's simple roots.
int project_to_factor(const RootDatum& rd, const WeylGroup& master, const FactorData& f, int e) {
    for (int cand : f.weyl.elems) {
        bool ok = true;
        for (int s : f.type.simple_roots)
            if (master.act_on_characters(e, rd.roots[s].alpha) !=
                master.act_on_characters(cand, rd.roots[s].alpha)) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    throw Error("no factor component matches the element");
}

}  // namespace

Subsystem make_subsystem(const RootDatum& rd, const WeylGroup& master, std::vector<int> roots) {
    Subsystem s;
    s.ambient = &rd;
    s.sys = recognize_system(rd, roots);
    auto closed = reflection_subgroup(rd, master, roots);
    s.roots = closed.roots;
    s.weyl = closed.weyl;
    return s;
}

Subsystem full_system(const RootDatum& rd, const WeylGroup& master) {
    std::vector<int> all(rd.roots.size());
    std::iota(all.begin(), all.end(), 0);
    if (all.empty()) {
        Subsystem s;
        s.ambient = &rd;
        s.weyl = subgroup_generated(master, {});
        return s;
    }
    return make_subsystem(rd, master, all);
}

int UnipotentData::class_by_name(const std::string& name) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return int(i);
    return -1;
}

int UnipotentData::class_by_h(const VecQ& dominant_h) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].h == dominant_h) return int(i);
    return -1;
}

std::vector<int> UnipotentData::rows_of_class(int cls) const {
    std::vector<int> out;
    for (size_t i = 0; i < springer.size(); ++i)
        if (springer[i].class_index == cls) out.push_back(int(i));
    return out;
}

UnipotentData unipotent_data(const Subsystem& sub, SpringerConvention conv) {
    const RootDatum& rd = *sub.ambient;
    const WeylGroup& master = *sub.weyl.W;
    UnipotentData out;
    out.system = sub;

    std::vector<FactorData> factors;
    for (const auto& f : sub.sys.factors) factors.push_back(build_factor_data(rd, master, f));

    const auto& table = character_table(sub.weyl);
    auto sys_classes = conjugacy_classes(sub.weyl);

    // Cartesian product of factor classes; the empty product is the torus case.
    std::vector<std::vector<size_t>> tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<size_t>> next;
        for (const auto& t : tuples)
            for (size_t i = 0; i < f.uclasses.size(); ++i) {
                auto copy = t;
                copy.push_back(i);
                next.push_back(copy);
            }
        tuples = next;
    }
    for (const auto& t : tuples) {
        UnipotentClass c;
        c.h.assign(rd.rank, 0);
        c.a_group = "1";
        std::vector<std::string> names;
        for (size_t fi = 0; fi < factors.size(); ++fi) {
            const auto& fc = factors[fi].uclasses[t[fi]];
            names.push_back(fc.name);
            for (int w : fc.weights) c.weights.push_back(w);
            for (int i = 0; i < rd.rank; ++i) c.h[i] += fc.h[i];
            c.dim_springer_fiber += fc.dim_springer_fiber;
            if (fc.a_group != "1")
                c.a_group = c.a_group == "1" ? fc.a_group : c.a_group + "x" + fc.a_group;
            if (!c.bala_carter.empty()) c.bala_carter += "+";
            c.bala_carter += fc.bala_carter;
        }
        c.name = names.empty() ? "0" : names[0];
        for (size_t i = 1; i < names.size(); ++i) c.name += "*" + names[i];
        if (c.bala_carter.empty()) c.bala_carter = "0";
        out.classes.push_back(c);
    }

    // Product rows.
    std::vector<std::vector<size_t>> row_tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<size_t>> next;
        for (const auto& t : row_tuples)
            for (size_t i = 0; i < f.rows.size(); ++i) {
                auto copy = t;
                copy.push_back(i);
                next.push_back(copy);
            }
        row_tuples = next;
    }
    ClassFunction sys_sign = sign_character(table);
    for (const auto& t : row_tuples) {
        SpringerRow row;
        // locate the product class
        std::vector<size_t> cls_tuple;
        std::vector<std::string> rhos;
        for (size_t fi = 0; fi < factors.size(); ++fi) {
            cls_tuple.push_back(size_t(factors[fi].rows[t[fi]].cls));
            rhos.push_back(factors[fi].rows[t[fi]].rho1);
        }
        row.class_index = -1;
        for (size_t ci = 0; ci < tuples.size(); ++ci)
            if (tuples[ci] == cls_tuple) row.class_index = int(ci);
        if (row.class_index < 0) throw Error("product class lookup failed");
        row.rho1 = rhos.empty() ? "1" : rhos[0];
        for (size_t i = 1; i < rhos.size(); ++i) row.rho1 += "*" + rhos[i];

        ClassFunction chr = from_element_values(sys_classes, [&](int e) {
            Cyclotomic v(mpq_class(1));
            for (size_t fi = 0; fi < factors.size(); ++fi) {
                int comp = project_to_factor(rd, master, factors[fi], e);
                int cls = factors[fi].classes.class_of[factors[fi].weyl.local(comp)];
                v = v * factors[fi].rows[t[fi]].chr.values[cls];
            }
            return v;
        });
        if (conv == SpringerConvention::kato) chr = tensor(chr, sys_sign);
        auto mult = decompose(table, chr);
        int idx = -1;
        for (size_t i = 0; i < mult.size(); ++i) {
            if (!mult[i]) continue;
            if (idx >= 0 || mult[i] != 1) throw Error("Springer row is not irreducible");
            idx = int(i);
        }
        row.weyl_char = idx;
        row.character = character_of(table, idx);
        out.springer.push_back(row);
    }

    // The correspondence must be injective into Irr(W) and onto.
    std::vector<bool> hit(table.chi.size(), false);
    for (const auto& r : out.springer) {
        if (hit[r.weyl_char]) throw Error("Springer rows collide in Irr(W)");
        hit[r.weyl_char] = true;
    }
    for (bool h : hit)
        if (!h) throw Error("Springer rows do not exhaust Irr(W)");
    return out;
}

std::vector<UnipotentClass> unipotent_classes(const RootDatum& rd, const WeylGroup& master) {
    return unipotent_data(full_system(rd, master)).classes;
}

std::vector<SpringerRow> springer_correspondence(const RootDatum& rd, const WeylGroup& master) {
    return unipotent_data(full_system(rd, master)).springer;
}

std::vector<std::string> geometric_rho1(const UnipotentData& data, int class_index) {
    std::vector<std::string> out;
    for (const auto& r : data.springer)
        if (r.class_index == class_index) out.push_back(r.rho1);
    return out;
}

VecQ dominant_cocharacter(const Subsystem& sub, VecQ h) {
    const RootDatum& rd = *sub.ambient;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : sub.sys.factors)
            for (int s : f.simple_roots) {
                mpq_class v = 0;
                for (int i = 0; i < rd.rank; ++i) v += mpq_class(rd.roots[s].alpha[i]) * h[i];
                if (v < 0) {
                    for (int i = 0; i < rd.rank; ++i)
                        h[i] -= v * mpq_class(rd.roots[s].coroot[i]);
                    changed = true;
                }
            }
    }
    return h;
}

int embed_class_by_h(const UnipotentData& ambient_data, const VecQ& h_sub) {
    VecQ dom = dominant_cocharacter(ambient_data.system, h_sub);
    int idx = ambient_data.class_by_h(dom);
    if (idx < 0) throw Error("no ambient class matches the embedded cocharacter");
    return idx;
}

}  // namespace extq

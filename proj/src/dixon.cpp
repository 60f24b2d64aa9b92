// Exact character tables: Dixon's mod-p eigenvector method, lifted to
// cyclotomic integers and verified against the orthogonality relations.
#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "extq/rootdata.hpp"

namespace extq {

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return (__uint128_t(a) * b) % p; }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long find_prime(long e, long lower) {
    long p = lower + 1;
    p += (e - (p - 1) % e) % e;  // p = 1 mod e
    while (!is_prime(p)) p += e;
    return p;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> f;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        f.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) f.push_back(n);
    return f;
}

u64 primitive_root(u64 p) {
    auto fs = prime_factors(long(p - 1));
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (long q : fs)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

using ModMat = std::vector<std::vector<u64>>;

// det(xI - A) coefficients c_0..c_d with c_0 the x^d coefficient
// (Faddeev-LeVerrier; requires p > d).
std::vector<u64> char_poly(const ModMat& a, u64 p) {
    int d = int(a.size());
    std::vector<u64> c(d + 1, 0);
    c[0] = 1;
    ModMat m(d, std::vector<u64>(d, 0));
    for (int k = 1; k <= d; ++k) {
        // m = a*m + c_{k-1} I
        ModMat nm(d, std::vector<u64>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (!a[i][l]) continue;
                for (int j = 0; j < d; ++j)
                    nm[i][j] = (nm[i][j] + mulmod(a[i][l], m[l][j], p)) % p;
            }
        for (int i = 0; i < d; ++i) nm[i][i] = (nm[i][i] + c[k - 1]) % p;
        m = std::move(nm);
        u64 tr = 0;
        for (int i = 0; i < d; ++i) {
            u64 s = 0;
            for (int l = 0; l < d; ++l) s = (s + mulmod(a[i][l], m[l][i], p)) % p;
            tr = (tr + s) % p;
        }
        c[k] = mulmod(p - tr % p, invmod(k, p), p);
    }
    return c;
}

// Kernel basis of a (d x d) matrix mod p, vectors as columns of the result.
std::vector<std::vector<u64>> kernel_modp(ModMat a, u64 p) {
    int d = int(a.size());
    std::vector<int> pivot_of_col(d, -1);
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
        int pr = -1;
        for (int i = row; i < d; ++i)
            if (a[i][col]) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        u64 inv = invmod(a[row][col], p);
        for (int j = 0; j < d; ++j) a[row][j] = mulmod(a[row][j], inv, p);
        for (int i = 0; i < d; ++i) {
            if (i == row || !a[i][col]) continue;
            u64 f = a[i][col];
            for (int j = 0; j < d; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[row][j], p)) % p;
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<u64>> out;
    for (int col = 0; col < d; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<u64> v(d, 0);
        v[col] = 1;
        for (int c2 = 0; c2 < d; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - a[pivot_of_col[c2]][col]) % p;
        out.push_back(v);
    }
    return out;
}

struct Space {
    // basis vectors (length k), stored as columns
    std::vector<std::vector<u64>> basis;
};

// Express a*b_i in the basis (by Gaussian solve) and return the restriction.
ModMat restrict_operator(const ModMat& a, const Space& v, u64 p) {
    int k = int(a.size());
    int d = int(v.basis.size());
    // images
    std::vector<std::vector<u64>> img(d, std::vector<u64>(k, 0));
    for (int t = 0; t < d; ++t)
        for (int i = 0; i < k; ++i) {
            u64 s = 0;
            for (int j = 0; j < k; ++j)
                if (a[i][j]) s = (s + mulmod(a[i][j], v.basis[t][j], p)) % p;
            img[t][i] = s;
        }
    // solve basis * R = img (coordinates of img in the basis)
    // augmented elimination over the k x d basis matrix
    std::vector<std::vector<u64>> m(k, std::vector<u64>(d + d, 0));
    for (int i = 0; i < k; ++i) {
        for (int t = 0; t < d; ++t) m[i][t] = v.basis[t][i];
        for (int t = 0; t < d; ++t) m[i][d + t] = img[t][i];
    }
    int row = 0;
    std::vector<int> pivot_rows;
    for (int col = 0; col < d && row < k; ++col) {
        int pr = -1;
        for (int i = row; i < k; ++i)
            if (m[i][col]) {
                pr = i;
                break;
            }
        if (pr < 0) throw Error("dependent basis in eigenspace splitting");
        std::swap(m[row], m[pr]);
        u64 inv = invmod(m[row][col], p);
        for (int j = 0; j < 2 * d; ++j) m[row][j] = mulmod(m[row][j], inv, p);
        for (int i = 0; i < k; ++i) {
            if (i == row || !m[i][col]) continue;
            u64 f = m[i][col];
            for (int j = 0; j < 2 * d; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[row][j], p)) % p;
        }
        ++row;
    }
    ModMat r(d, std::vector<u64>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t) r[i][t] = m[i][d + t];
    return r;
}

}  // namespace

int CharacterTable::class_of_master(int master) const {
    int l = group.local(master);
    if (l < 0) throw Error("element outside the table's group");
    return classes.class_of[l];
}

namespace {

CharacterTable dixon_table(const Subgroup& h) {
    const WeylGroup& w = *h.W;
    CharacterTable t;
    t.group = h;
    t.classes = conjugacy_classes(h);
    long n = h.size();
    t.order = n;
    int k = int(t.classes.reps.size());

    long e = 1;
    std::vector<int> rep_order(k);
    for (int i = 0; i < k; ++i) {
        rep_order[i] = w.element_order(t.classes.reps[i]);
        e = std::lcm(e, long(rep_order[i]));
    }
    t.exponent = e;

    t.inverse_class.resize(k);
    t.class_det.resize(k);
    for (int i = 0; i < k; ++i) {
        t.inverse_class[i] = t.classes.class_of[h.local(w.inv[t.classes.reps[i]])];
        IntMatrix m(w.rank, w.rank);
        for (int r = 0; r < w.rank; ++r)
            for (int c = 0; c < w.rank; ++c)
                m.at(r, c) = w.mats[t.classes.reps[i]][size_t(r) * w.rank + c];
        t.class_det[i] = int(m.det().get_si());
    }

    long p = find_prime(e, std::max({n, 2L * k * k, 1000L}));

    // Class matrices A_i[j][m] = #{(u,v) in C_i x C_j : uv = rep_m}.
    std::vector<ModMat> a(k, ModMat(k, std::vector<u64>(k, 0)));
    for (int m = 0; m < k; ++m) {
        int zm = t.classes.reps[m];
        for (int xl = 0; xl < n; ++xl) {
            int i = t.classes.class_of[xl];
            int v = w.mult(w.inv[h.elems[xl]], zm);
            int vl = h.local(v);
            if (vl < 0) throw Error("class algebra product left the subgroup");
            int j = t.classes.class_of[vl];
            a[i][j][m] = (a[i][j][m] + 1) % p;
        }
    }

    // Split the coordinate space into the common eigenvectors.
    std::vector<Space> spaces(1);
    spaces[0].basis.resize(k);
    for (int i = 0; i < k; ++i) {
        spaces[0].basis[i].assign(k, 0);
        spaces[0].basis[i][i] = 1;
    }
    for (int i = 1; i < k; ++i) {
        bool all_one = true;
        for (const auto& s : spaces)
            if (s.basis.size() > 1) all_one = false;
        if (all_one) break;
        std::vector<Space> next;
        for (auto& s : spaces) {
            if (s.basis.size() <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            ModMat r = restrict_operator(a[i], s, u64(p));
            int d = int(r.size());
            bool scalar = true;
            for (int q = 0; q < d && scalar; ++q)
                for (int q2 = 0; q2 < d; ++q2)
                    if (r[q][q2] != (q == q2 ? r[0][0] : 0)) {
                        scalar = false;
                        break;
                    }
            if (scalar) {
                next.push_back(std::move(s));
                continue;
            }
            auto poly = char_poly(r, u64(p));
            for (u64 lam = 0; lam < u64(p); ++lam) {
                // Horner evaluation of det(xI - R) at lam.
                u64 val = 0;
                for (int c = 0; c <= d; ++c) val = (mulmod(val, lam, p) + poly[c]) % p;
                if (val) continue;
                ModMat shifted = r;
                for (int q = 0; q < d; ++q) shifted[q][q] = (shifted[q][q] + p - lam) % p;
                auto ker = kernel_modp(shifted, u64(p));
                if (ker.empty()) continue;
                Space ns;
                for (const auto& coeffs : ker) {
                    std::vector<u64> vec(k, 0);
                    for (int tloc = 0; tloc < d; ++tloc) {
                        if (!coeffs[tloc]) continue;
                        for (int j = 0; j < k; ++j)
                            vec[j] = (vec[j] + mulmod(coeffs[tloc], s.basis[tloc][j], p)) % p;
                    }
                    ns.basis.push_back(vec);
                }
                next.push_back(std::move(ns));
            }
        }
        spaces = std::move(next);
    }
    if (int(spaces.size()) != k)
        throw Error("class algebra did not split into one-dimensional eigenspaces");

    // Central characters omega and degrees.
    std::vector<std::vector<u64>> omega(k, std::vector<u64>(k, 0));
    std::vector<long> degrees(k, 0);
    std::vector<std::vector<u64>> chi_p(k, std::vector<u64>(k, 0));
    long sqrt_n = 1;
    while ((sqrt_n + 1) * (sqrt_n + 1) <= n) ++sqrt_n;
    for (int tdx = 0; tdx < k; ++tdx) {
        auto v = spaces[tdx].basis[0];
        if (!v[0]) throw Error("central character eigenvector vanishes at the identity");
        u64 scale = invmod(v[0], p);
        for (auto& x : v) x = mulmod(x, scale, p);
        for (int i = 0; i < k; ++i) {
            u64 s = 0;
            for (int j = 0; j < k; ++j)
                if (a[i][0][j]) s = (s + mulmod(a[i][0][j], v[j], p)) % p;
            omega[tdx][i] = s;
        }
        u64 acc = 0;
        for (int i = 0; i < k; ++i) {
            u64 term = mulmod(omega[tdx][i], omega[tdx][t.inverse_class[i]], p);
            acc = (acc + mulmod(term, invmod(u64(t.classes.sizes[i]), p), p)) % p;
        }
        u64 d2 = mulmod(u64(n % p), invmod(acc, p), p);
        long deg = -1;
        for (long d = 1; d <= sqrt_n; ++d)
            if (mulmod(u64(d), u64(d), p) == d2) {
                deg = d;
                break;
            }
        if (deg < 0) throw Error("no integral degree matches the central character");
        degrees[tdx] = deg;
        for (int i = 0; i < k; ++i)
            chi_p[tdx][i] =
                mulmod(mulmod(u64(deg), omega[tdx][i], p), invmod(u64(t.classes.sizes[i]), p), p);
    }

    // Lift to exact cyclotomic values via root-of-unity multiplicities.
    u64 ze = powmod(primitive_root(u64(p)), u64((p - 1) / e), u64(p));
    std::vector<std::vector<int>> power_class(k);
    for (int i = 0; i < k; ++i) {
        int m = rep_order[i];
        power_class[i].resize(m);
        int x = 0;
        for (int j = 0; j < m; ++j) {
            power_class[i][j] = t.classes.class_of[h.local(x)];
            x = w.mult(x, t.classes.reps[i]);
        }
    }
    t.chi.assign(k, std::vector<Cyclotomic>(k));
    for (int tdx = 0; tdx < k; ++tdx) {
        for (int i = 0; i < k; ++i) {
            int m = rep_order[i];
            u64 zm = powmod(ze, u64(e / m), u64(p));
            u64 zm_inv = invmod(zm, p);
            Cyclotomic val;
            long total = 0;
            for (int kk = 0; kk < m; ++kk) {
                u64 s = 0;
                u64 zpow = 1;
                for (int j = 0; j < m; ++j) {
                    s = (s + mulmod(chi_p[tdx][power_class[i][j]], zpow, p)) % p;
                    zpow = mulmod(zpow, powmod(zm_inv, u64(kk), p), p);
                }
                u64 mult = mulmod(s, invmod(u64(m), p), p);
                if (mult > u64(degrees[tdx]))
                    throw Error("root-of-unity multiplicity out of range in Dixon lift");
                if (mult == 0) continue;
                total += long(mult);
                val += Cyclotomic::root_of_unity(kk, m) * mpq_class(long(mult));
            }
            if (total != degrees[tdx] && i == 0)
                throw Error("character degree mismatch in Dixon lift");
            t.chi[tdx][i] = val;
        }
    }
    t.degrees = degrees;

    // Deterministic order: by degree, then lexicographic values.
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
        if (t.degrees[x] != t.degrees[y]) return t.degrees[x] < t.degrees[y];
        for (int i = 0; i < k; ++i) {
            int c = Cyclotomic::cmp(t.chi[x][i], t.chi[y][i]);
            if (c) return c < 0;
        }
        return false;
    });
    std::vector<std::vector<Cyclotomic>> chi2;
    std::vector<long> deg2;
    for (int i : perm) {
        chi2.push_back(t.chi[i]);
        deg2.push_back(t.degrees[i]);
    }
    t.chi = std::move(chi2);
    t.degrees = std::move(deg2);

    // Exact verification: row orthogonality (and hence the column relations).
    for (int x = 0; x < k; ++x)
        for (int y = 0; y <= x; ++y) {
            Cyclotomic s;
            for (int i = 0; i < k; ++i)
                s += t.chi[x][i] * t.chi[y][t.inverse_class[i]] * mpq_class(t.classes.sizes[i]);
            mpq_class expect = (x == y) ? mpq_class(n) : mpq_class(0);
            if (!s.is_rational() || s.rational_value() != expect)
                throw Error("character table failed exact orthogonality");
        }
    return t;
}

// Memo key built from the actual element matrices, so distinct master groups
// never collide even if they share an address.
std::string table_key(const Subgroup& h) {
    std::string key = std::to_string(h.W->rank) + "|";
    for (int e : h.elems) {
        for (int x : h.W->mats[e]) {
            key += std::to_string(x);
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::map<std::string, std::unique_ptr<CharacterTable>> g_tables;
std::mutex g_tables_mutex;

}  // namespace

const CharacterTable& character_table(const Subgroup& h, long cap) {
    if (h.size() > cap) throw GroupTooLarge("character table request exceeds the cap");
    std::string key = table_key(h);
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) return *it->second;
    auto table = std::make_unique<CharacterTable>(dixon_table(h));
    return *g_tables.emplace(key, std::move(table)).first->second;
}

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g) {
    Cyclotomic s;
    int k = t.num_classes();
    for (int i = 0; i < k; ++i)
        s += f.values[i] * g.values[i].conj() * mpq_class(t.classes.sizes[i]);
    return s / mpq_class(t.order);
}

std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f) {
    std::vector<long> m;
    for (size_t i = 0; i < t.chi.size(); ++i) {
        Cyclotomic ip = inner_product(t, f, character_of(t, int(i)));
        if (!ip.is_rational() || !is_integral(ip.rational_value()) || ip.rational_value() < 0)
            throw Error("class function is not a genuine character");
        m.push_back(long(ip.rational_value().get_num().get_si()));
    }
    return m;
}

ClassFunction character_of(const CharacterTable& t, int irrep) {
    return ClassFunction{t.chi.at(irrep)};
}

ClassFunction from_element_values(const ConjClasses& cl,
                                  const std::function<Cyclotomic(int master)>& f) {
    ClassFunction r;
    for (int rep : cl.reps) r.values.push_back(f(rep));
    return r;
}

ClassFunction restrict_to(const CharacterTable& big, int irrep, const Subgroup& /*h*/,
                          const ConjClasses& hcl) {
    ClassFunction r;
    for (int rep : hcl.reps) r.values.push_back(big.chi[irrep][big.class_of_master(rep)]);
    return r;
}

std::vector<long> induce_and_decompose(const Subgroup& h, const ConjClasses& hcl,
                                       const ClassFunction& f, const Subgroup& g) {
    if (!is_subgroup_of(h, g)) throw NotSubgroup("induction from a non-subgroup");
    const CharacterTable& gt = character_table(g);
    std::vector<long> out;
    long hn = h.size();
    for (size_t i = 0; i < gt.chi.size(); ++i) {
        // Frobenius reciprocity: <ind f, chi_i>_G = <f, res chi_i>_H.
        Cyclotomic s;
        for (size_t c = 0; c < hcl.reps.size(); ++c) {
            Cyclotomic big_val = gt.chi[i][gt.class_of_master(hcl.reps[c])];
            s += f.values[c] * big_val.conj() * mpq_class(hcl.sizes[c]);
        }
        s = s / mpq_class(hn);
        if (!s.is_rational() || !is_integral(s.rational_value()) || s.rational_value() < 0)
            throw Error("induced multiplicity is not a nonnegative integer");
        out.push_back(long(s.rational_value().get_num().get_si()));
    }
    return out;
}

ClassFunction induced_character(const Subgroup& h, const ConjClasses& hcl, const ClassFunction& f,
                                const Subgroup& g) {
    auto mult = induce_and_decompose(h, hcl, f, g);
    const CharacterTable& gt = character_table(g);
    ClassFunction r;
    r.values.assign(gt.num_classes(), Cyclotomic());
    for (size_t i = 0; i < mult.size(); ++i) {
        if (!mult[i]) continue;
        for (int c = 0; c < gt.num_classes(); ++c)
            r.values[c] += gt.chi[i][c] * mpq_class(mult[i]);
    }
    return r;
}

ClassFunction sign_character(const CharacterTable& t) {
    ClassFunction r;
    for (int d : t.class_det) r.values.push_back(Cyclotomic(mpq_class(d)));
    return r;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r;
    r.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values[i] = a.values[i] * b.values[i];
    return r;
}

}  // namespace extq

#include "extq/torus.hpp"

#include <algorithm>
#include <atomic>

namespace extq {

namespace {

std::atomic<long> g_symbol_counter{1};

void sort_symbols(std::vector<Symbol>& v) {
    std::sort(v.begin(), v.end(), [](const Symbol& a, const Symbol& b) { return a.id < b.id; });
}

int cmp_vecq(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = ::cmp(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

int cmp_symbols(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].id != b[i].id) return a[i].id < b[i].id ? -1 : 1;
        int c = cmp_vecq(a[i].coeffs, b[i].coeffs);
        if (c) return c;
    }
    return 0;
}

mpq_class dotq(const LVec& a, const VecQ& b) {
    mpq_class s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) s += mpq_class(a[i]) * b[i];
    return s;
}

}  // namespace

bool TorusPoint::operator==(const TorusPoint& o) const {
    return torsion == o.torsion && compact == o.compact && split == o.split;
}

TorusPoint torsion_point(const VecQ& v) {
    TorusPoint t;
    t.torsion = mod1(v);
    return t;
}

long fresh_symbol_id() { return g_symbol_counter.fetch_add(1); }

int cmp(const TorusPoint& a, const TorusPoint& b) {
    int c = cmp_vecq(a.torsion, b.torsion);
    if (c) return c;
    c = cmp_symbols(a.compact, b.compact);
    if (c) return c;
    return cmp_symbols(a.split, b.split);
}

TorusPoint weyl_action(const WeylGroup& w, int elt, const TorusPoint& t) {
    TorusPoint r;
    r.torsion = mod1(w.act_on_cocharacters(elt, t.torsion));
    for (const Symbol& s : t.compact) r.compact.push_back({s.id, w.act_on_cocharacters(elt, s.coeffs)});
    for (const Symbol& s : t.split) r.split.push_back({s.id, w.act_on_cocharacters(elt, s.coeffs)});
    sort_symbols(r.compact);
    sort_symbols(r.split);
    return r;
}

TorusCoset weyl_action(const WeylGroup& w, int elt, const TorusCoset& c) {
    TorusCoset r;
    r.base = weyl_action(w, elt, c.base);
    for (const VecZ& v : c.lattice) {
        VecQ q(v.begin(), v.end());
        VecQ img = w.act_on_cocharacters(elt, q);
        VecZ zi;
        for (const auto& x : img) {
            if (!is_integral(x)) throw Error("lattice vector left the lattice under the action");
            zi.push_back(x.get_num());
        }
        r.lattice.push_back(zi);
    }
    return r;
}

bool root_value_is_one(const LVec& alpha, const TorusPoint& t) {
    if (!is_integral(dotq(alpha, t.torsion))) return false;
    for (const Symbol& s : t.compact)
        if (dotq(alpha, s.coeffs) != 0) return false;
    for (const Symbol& s : t.split)
        if (dotq(alpha, s.coeffs) != 0) return false;
    return true;
}

std::vector<TorusCoset> fixed_point_components(const RootDatum& rd, const WeylGroup& w, int elt) {
    int n = rd.rank;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = w.mats[elt][size_t(i) * n + j] - (i == j ? 1 : 0);

    // Identity component: cocharacter lattice ker((w-1)^T) = X_*^w.
    std::vector<VecZ> lat = kernel_basis(m.transpose());

    auto coinv = coinvariant_decomposition(m);
    std::vector<TorusCoset> out;
    std::vector<size_t> counter(coinv.torsion.size(), 0);
    for (;;) {
        VecQ base(n, 0);
        for (size_t i = 0; i < counter.size(); ++i)
            for (int j = 0; j < n; ++j)
                base[j] += mpq_class(long(counter[i])) * coinv.torsion_lifts[i][j];
        TorusCoset c;
        c.base = torsion_point(base);
        c.lattice = lat;
        out.push_back(c);
        // odometer over the torsion orders
        size_t i = 0;
        while (i < counter.size()) {
            if (++counter[i] < coinv.torsion[i].get_ui()) break;
            counter[i] = 0;
            ++i;
        }
        if (i == counter.size()) break;
        if (counter.empty()) break;
    }
    return out;
}

bool coset_contains(const TorusCoset& c, const TorusPoint& t) {
    if (!t.pure_torsion()) throw Error("coset membership is defined for pure torsion points");
    // t - base must lie in span_Q(lattice) + Z^n. With U L V = D (all d_i = 1
    // by saturation), that holds iff the non-pivot coordinates of U (t - base)
    // are integers.
    int n = int(t.torsion.size());
    VecQ diff(n);
    for (int i = 0; i < n; ++i) diff[i] = t.torsion[i] - c.base.torsion[i];
    if (c.lattice.empty()) {
        for (const auto& q : diff)
            if (!is_integral(q)) return false;
        return true;
    }
    IntMatrix l(n, int(c.lattice.size()));
    for (size_t j = 0; j < c.lattice.size(); ++j)
        for (int i = 0; i < n; ++i) l.at(i, int(j)) = c.lattice[j][i];
    auto s = smith_normal_form(l);
    for (const auto& f : s.invariant_factors)
        if (f != 1) throw Error("coset lattice is not saturated");
    VecQ u_diff(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u_diff[i] += mpq_class(s.U.at(i, j)) * diff[j];
    for (int i = int(c.lattice.size()); i < n; ++i)
        if (!is_integral(u_diff[i])) return false;
    return true;
}

bool same_coset(const TorusCoset& a, const TorusCoset& b) {
    if (a.lattice.size() != b.lattice.size()) return false;
    // Equal subtori: same dimension plus span inclusion one way.
    if (!a.lattice.empty()) {
        std::vector<VecQ> cols;
        for (const auto& v : a.lattice) cols.push_back(VecQ(v.begin(), v.end()));
        for (const auto& v : b.lattice)
            if (!solve_linear(cols, VecQ(v.begin(), v.end()))) return false;
    }
    return coset_contains(a, b.base) && coset_contains(b, a.base);
}

TorusPoint generic_point(const TorusCoset& c) {
    TorusPoint t = c.base;
    for (const VecZ& v : c.lattice) {
        Symbol s;
        s.id = fresh_symbol_id();
        s.coeffs = VecQ(v.begin(), v.end());
        t.compact.push_back(s);
    }
    sort_symbols(t.compact);
    return t;
}

bool is_compact(const TorusPoint& t) { return t.split.empty(); }

StabilizerPair stabilizer_subgroup(const RootDatum& rd, const WeylGroup& w, const Subgroup& inside,
                                   const TorusPoint& t) {
    StabilizerPair out;
    std::vector<int> fix;
    for (int e : inside.elems)
        if (weyl_action(w, e, t) == t) fix.push_back(e);
    out.fixer = subgroup_from_elements(w, fix);

    std::vector<int> refl_gens;
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        if (!rd.roots[i].positive) continue;
        if (!root_value_is_one(rd.roots[i].alpha, t)) continue;
        IntMatrix m = rd.reflection_on_characters(int(i));
        WMat wm(size_t(rd.rank) * rd.rank);
        for (int a = 0; a < rd.rank; ++a)
            for (int b = 0; b < rd.rank; ++b) wm[size_t(a) * rd.rank + b] = int(m.at(a, b).get_si());
        int e = w.index_of(wm);
        if (e < 0) throw Error("reflection outside the master group");
        if (inside.contains(e)) refl_gens.push_back(e);
    }
    out.reflections = subgroup_generated(w, refl_gens);
    return out;
}

}  // namespace extq

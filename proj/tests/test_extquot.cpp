#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "extq/extquot.hpp"

using namespace extq;

namespace {

ExtendedQuotient full_eq(const RootDatum& rd, const WeylGroup& w) {
    return extended_quotient(rd, w, full_subgroup(w));
}

std::vector<int> dims(const ExtendedQuotient& eq) {
    std::vector<int> d;
    for (const auto& c : eq.components) d.push_back(c.dim);
    std::sort(d.rbegin(), d.rend());
    return d;
}

// Independent re-derivation: over each conjugacy class, count centralizer
// orbits on the coinvariant torsion directly.
int brute_component_count(const RootDatum& rd, const WeylGroup& w) {
    auto cl = conjugacy_classes(full_subgroup(w));
    int total = 0;
    for (int rep : cl.reps) {
        IntMatrix m(rd.rank, rd.rank);
        for (int i = 0; i < rd.rank; ++i)
            for (int j = 0; j < rd.rank; ++j)
                m.at(i, j) = w.mats[rep][size_t(i) * rd.rank + j] - (i == j ? 1 : 0);
        auto co = coinvariant_decomposition(m);
        // enumerate all torsion combinations as base points
        std::vector<VecQ> bases;
        std::vector<long> counter(co.torsion.size(), 0);
        for (;;) {
            VecQ b(rd.rank, 0);
            for (size_t i = 0; i < counter.size(); ++i)
                for (int j = 0; j < rd.rank; ++j)
                    b[j] += mpq_class(counter[i]) * co.torsion_lifts[i][j];
            bases.push_back(mod1(b));
            size_t i = 0;
            while (i < counter.size()) {
                if (++counter[i] < co.torsion[i].get_si()) break;
                counter[i] = 0;
                ++i;
            }
            if (i == counter.size()) break;
        }
        std::vector<VecZ> lat = kernel_basis(m.transpose());
        auto member = [&](const VecQ& pt, const VecQ& base) {
            TorusCoset c{torsion_point(base), lat};
            return coset_contains(c, torsion_point(pt));
        };
        // centralizer orbit count by union-find over base points
        std::vector<int> parent(bases.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (int g = 0; g < w.size(); ++g) {
            if (w.mult(w.mult(g, rep), w.inv[g]) != rep) continue;
            for (size_t i = 0; i < bases.size(); ++i) {
                VecQ img = mod1(w.act_on_cocharacters(g, bases[i]));
                for (size_t j = 0; j < bases.size(); ++j)
                    if (member(img, bases[j])) {
                        parent[find(int(i))] = find(int(j));
                        break;
                    }
            }
        }
        std::set<int> roots;
        for (size_t i = 0; i < bases.size(); ++i) roots.insert(find(int(i)));
        total += int(roots.size());
    }
    return total;
}

}  // namespace

TEST_CASE("extended quotient component counts and dimensions") {
    auto sl2 = build_root_datum("SL2");
    auto w2 = weyl_group(sl2);
    auto eq2 = full_eq(sl2, w2);
    CHECK(dims(eq2) == std::vector<int>{1, 0, 0});
    CHECK(int(eq2.components.size()) == brute_component_count(sl2, w2));

    auto gl2 = build_root_datum("GL2");
    auto wg = weyl_group(gl2);
    auto eqg = full_eq(gl2, wg);
    CHECK(dims(eqg) == std::vector<int>{2, 1});
    CHECK(int(eqg.components.size()) == brute_component_count(gl2, wg));

    auto sl3 = build_root_datum("SL3");
    auto w3 = weyl_group(sl3);
    auto eq3 = full_eq(sl3, w3);
    CHECK(dims(eq3) == std::vector<int>{2, 1, 0, 0, 0});
    CHECK(int(eq3.components.size()) == brute_component_count(sl3, w3));

    auto sp4 = build_root_datum("Sp4");
    auto w4 = weyl_group(sp4);
    auto eq4 = full_eq(sp4, w4);
    CHECK(int(eq4.components.size()) == brute_component_count(sp4, w4));

    auto g2 = build_root_datum("G2");
    auto wg2 = weyl_group(g2);
    auto eqg2 = full_eq(g2, wg2);
    CHECK(int(eqg2.components.size()) == brute_component_count(g2, wg2));
}

TEST_CASE("exactly one top-dimensional component, for the identity class") {
    for (const char* spec : {"SL2", "GL2", "SL3", "Sp4", "G2"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto eq = full_eq(rd, w);
        int top = 0;
        for (const auto& c : eq.components)
            if (c.dim == rd.rank) {
                ++top;
                CHECK(c.class_index == 0);
            }
        CHECK(top == 1);
    }
}

TEST_CASE("component ids are deterministic across runs") {
    auto rd = build_root_datum("Sp4");
    auto w = weyl_group(rd);
    auto a = full_eq(rd, w);
    auto b = full_eq(rd, w);
    REQUIRE(a.components.size() == b.components.size());
    for (size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].class_index == b.components[i].class_index);
        CHECK(a.components[i].dim == b.components[i].dim);
        CHECK(a.components[i].coset.base == b.components[i].coset.base);
    }
}

TEST_CASE("fibers over closed points") {
    auto sl2 = build_root_datum("SL2");
    auto w2 = weyl_group(sl2);
    auto eq2 = full_eq(sl2, w2);
    auto f1 = fiber_over(eq2, torsion_point({mpq_class(0)}));
    CHECK(f1.size() == 2);
    auto fi = fiber_over(eq2, torsion_point({mpq_class(1, 4)}));
    CHECK(fi.size() == 1);

    auto sl3 = build_root_datum("SL3");
    auto w3 = weyl_group(sl3);
    auto eq3 = full_eq(sl3, w3);
    CHECK(fiber_over(eq3, torsion_point({0, 0})).size() == 3);
}

TEST_CASE("fiber-count law against character tables") {
    // |fiber over t0| = #classes(W_t0) = #Irr(W_t0) for torsion of order <= 4
    for (const char* spec : {"SL2", "GL2", "SL3", "Sp4"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto eq = full_eq(rd, w);
        auto full = full_subgroup(w);
        std::vector<VecQ> pts;
        std::function<void(VecQ&)> enumerate = [&](VecQ& cur) {
            if (int(cur.size()) == rd.rank) {
                pts.push_back(cur);
                return;
            }
            for (int num = 0; num < 4; ++num) {
                cur.push_back(mpq_class(num, 4));
                enumerate(cur);
                cur.pop_back();
            }
        };
        VecQ cur;
        enumerate(cur);
        for (const auto& v : pts) {
            TorusPoint t0 = torsion_point(v);
            auto fib = fiber_over(eq, t0);
            auto st = stabilizer_subgroup(rd, w, full, t0);
            auto cls = conjugacy_classes(st.fixer);
            const auto& tab = character_table(st.fixer);
            CHECK(fib.size() == cls.reps.size());
            CHECK(fib.size() == tab.chi.size());
            // points are distinct in T//W: distinct components or distinct w-classes
            for (size_t a = 0; a < fib.size(); ++a)
                for (size_t b2 = a + 1; b2 < fib.size(); ++b2) {
                    bool same = fib[a].component == fib[b2].component && fib[a].w == fib[b2].w;
                    CHECK_FALSE(same);
                }
        }
    }
}

TEST_CASE("projection to the ordinary quotient") {
    auto sl2 = build_root_datum("SL2");
    auto w = weyl_group(sl2);
    auto eq = full_eq(sl2, w);
    auto fib = fiber_over(eq, torsion_point({mpq_class(1, 2)}));
    for (const auto& p : fib)
        CHECK(projection_to_quotient(eq, p) == torsion_point({mpq_class(1, 2)}));
    // the orbit of 3/4 canonicalizes to 1/4
    ExtQuotPoint p;
    p.w = 0;
    p.t = torsion_point({mpq_class(3, 4)});
    p.component = component_of(eq, 0, p.t);
    CHECK(projection_to_quotient(eq, p) == torsion_point({mpq_class(1, 4)}));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extq/torus.hpp"

using namespace extq;

namespace {

VecQ q(std::vector<mpq_class> v) { return v; }

bool fixes_coset_pointwise(const WeylGroup& w, int e, const TorusCoset& c) {
    if (!(weyl_action(w, e, c.base) == c.base)) return false;
    for (const auto& v : c.lattice) {
        VecQ qq(v.begin(), v.end());
        if (w.act_on_cocharacters(e, qq) != qq) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("weyl action on points") {
    auto sl2 = build_root_datum("SL2");
    auto w = weyl_group(sl2);
    int s = w.gens[0];

    TorusPoint i4 = torsion_point(q({mpq_class(1, 4)}));
    CHECK(weyl_action(w, 0, i4) == i4);
    CHECK(weyl_action(w, s, i4) == torsion_point(q({mpq_class(3, 4)})));

    TorusCoset minus_one{torsion_point(q({mpq_class(1, 2)})), {}};
    auto moved = weyl_action(w, s, minus_one);
    CHECK(moved.base == minus_one.base);
}

TEST_CASE("weyl action is a group action") {
    auto sp4 = build_root_datum("Sp4");
    auto w = weyl_group(sp4);
    TorusPoint t = torsion_point(q({mpq_class(1, 3), mpq_class(1, 4)}));
    Symbol sym{fresh_symbol_id(), q({mpq_class(1), mpq_class(-2)})};
    t.compact.push_back(sym);
    for (int a = 0; a < w.size(); ++a)
        for (int b = 0; b < w.size(); ++b) {
            auto lhs = weyl_action(w, w.mult(a, b), t);
            auto rhs = weyl_action(w, a, weyl_action(w, b, t));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fixed point components") {
    auto sl2 = build_root_datum("SL2");
    auto w2 = weyl_group(sl2);
    auto comps = fixed_point_components(sl2, w2, w2.gens[0]);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].dim() == 0);
    CHECK(comps[1].dim() == 0);
    CHECK(comps[0].base == torsion_point(q({0})));
    CHECK(comps[1].base == torsion_point(q({mpq_class(1, 2)})));

    auto gl2 = build_root_datum("GL2");
    auto wg = weyl_group(gl2);
    auto swap_comps = fixed_point_components(gl2, wg, wg.gens[0]);
    REQUIRE(swap_comps.size() == 1);
    CHECK(swap_comps[0].dim() == 1);

    auto sl3 = build_root_datum("SL3");
    auto w3 = weyl_group(sl3);
    int cox = w3.mult(w3.gens[0], w3.gens[1]);
    auto cox_comps = fixed_point_components(sl3, w3, cox);
    REQUIRE(cox_comps.size() == 3);
    for (const auto& c : cox_comps) {
        CHECK(c.dim() == 0);
        // every component point is fixed by the coxeter element
        CHECK(weyl_action(w3, cox, c.base) == c.base);
    }
}

TEST_CASE("fixed point components are fixed pointwise and count the torsion") {
    for (const char* spec : {"SL2", "SL3", "Sp4", "GL2", "G2"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto cl = conjugacy_classes(full_subgroup(w));
        for (int rep : cl.reps) {
            auto comps = fixed_point_components(rd, w, rep);
            IntMatrix m(rd.rank, rd.rank);
            for (int i = 0; i < rd.rank; ++i)
                for (int j = 0; j < rd.rank; ++j)
                    m.at(i, j) = w.mats[rep][size_t(i) * rd.rank + j] - (i == j ? 1 : 0);
            auto coinv = coinvariant_decomposition(m);
            mpz_class order = 1;
            for (const auto& d : coinv.torsion) order *= d;
            CHECK(mpz_class(long(comps.size())) == order);
            for (size_t a = 0; a < comps.size(); ++a) {
                CHECK(fixes_coset_pointwise(w, rep, comps[a]));
                for (size_t b = a + 1; b < comps.size(); ++b)
                    CHECK_FALSE(same_coset(comps[a], comps[b]));
            }
        }
    }
}

TEST_CASE("generic points and stabilizers") {
    auto sl2 = build_root_datum("SL2");
    auto w = weyl_group(sl2);
    auto full = full_subgroup(w);

    // 0-dimensional coset: the generic point is the base itself
    TorusCoset minus_one{torsion_point(q({mpq_class(1, 2)})), {}};
    CHECK(generic_point(minus_one) == minus_one.base);

    // full torus: fresh symbol, trivial stabilizer
    TorusCoset torus{torsion_point(q({0})), {VecZ{1}}};
    auto gp = generic_point(torus);
    CHECK(gp.compact.size() == 1);
    auto st = stabilizer_subgroup(sl2, w, full, gp);
    CHECK(st.fixer.size() == 1);

    // t = 1: everything fixes it, and alpha(1) = 1 gives the reflection part
    auto st1 = stabilizer_subgroup(sl2, w, full, torsion_point(q({0})));
    CHECK(st1.fixer.size() == 2);
    CHECK(st1.reflections.size() == 2);
    // t = -1: alpha(-I) = 1 since alpha = 2 in X^* = Z
    auto stm = stabilizer_subgroup(sl2, w, full, torsion_point(q({mpq_class(1, 2)})));
    CHECK(stm.fixer.size() == 2);
    CHECK(stm.reflections.size() == 2);
    // generic compact symbol: trivial stabilizer
    TorusPoint sym_pt = torsion_point(q({0}));
    sym_pt.compact.push_back({fresh_symbol_id(), q({1})});
    CHECK(stabilizer_subgroup(sl2, w, full, sym_pt).fixer.size() == 1);
}

TEST_CASE("generic point stabilizer law over whole groups") {
    for (const char* spec : {"SL2", "GL2", "SL3", "Sp4"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto full = full_subgroup(w);
        auto cl = conjugacy_classes(full);
        for (int rep : cl.reps) {
            for (const auto& c : fixed_point_components(rd, w, rep)) {
                auto gp = generic_point(c);
                auto st = stabilizer_subgroup(rd, w, full, gp);
                std::vector<int> expect;
                for (int e = 0; e < w.size(); ++e)
                    if (fixes_coset_pointwise(w, e, c)) expect.push_back(e);
                CHECK(st.fixer.elems == expect);
                // reflection part always sits inside the fixer
                for (int e : st.reflections.elems) CHECK(st.fixer.contains(e));
            }
        }
    }
}

TEST_CASE("compactness") {
    TorusPoint t = torsion_point(q({mpq_class(1, 2), 0}));
    CHECK(is_compact(t));
    t.compact.push_back({fresh_symbol_id(), q({1, 0})});
    CHECK(is_compact(t));
    TorusPoint tq = t;
    tq.split.push_back({kNuSymbol, q({1, 1})});
    CHECK_FALSE(is_compact(tq));
}

TEST_CASE("gl2 swap-fixed coset has the expected stabilizer") {
    auto gl2 = build_root_datum("GL2");
    auto w = weyl_group(gl2);
    auto full = full_subgroup(w);
    auto comps = fixed_point_components(gl2, w, w.gens[0]);
    REQUIRE(comps.size() == 1);
    auto gp = generic_point(comps[0]);
    auto st = stabilizer_subgroup(gl2, w, full, gp);
    CHECK(st.fixer.size() == 2);  // {e, swap}
}

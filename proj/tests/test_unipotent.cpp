#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "extq/unipotent.hpp"

using namespace extq;

namespace {

UnipotentData data_for(const std::string& spec, const RootDatum& rd, const WeylGroup& w) {
    (void)spec;
    return unipotent_data(full_system(rd, w));
}

// #standard Young tableaux by the hook length formula (oracle for degrees).
long syt_count(std::vector<int> lam) {
    long n = 0;
    for (int p : lam) n += p;
    std::vector<int> lamt;
    for (int i = 1; !lam.empty() && i <= lam[0]; ++i) {
        int c = 0;
        for (int p : lam)
            if (p >= i) ++c;
        lamt.push_back(c);
    }
    long num = 1;
    for (long k = 2; k <= n; ++k) num *= k;
    long hooks = 1;
    for (size_t r = 0; r < lam.size(); ++r)
        for (int c = 0; c < lam[r]; ++c) hooks *= (lam[r] - c) + (lamt[c] - int(r)) - 1;
    return num / hooks;
}

}  // namespace

TEST_CASE("type A classes are partitions") {
    auto sl2 = build_root_datum("SL2");
    auto w2 = weyl_group(sl2);
    auto cls2 = unipotent_classes(sl2, w2);
    REQUIRE(cls2.size() == 2);
    CHECK(cls2[0].name == "(2)");
    CHECK(cls2[1].name == "(1^2)");
    // regular class of SL2: h = alpha^v, i.e. <alpha, h> = 2
    CHECK(cls2[0].h == VecQ{1});
    CHECK(cls2[1].h == VecQ{0});

    auto sl3 = build_root_datum("SL3");
    auto w3 = weyl_group(sl3);
    auto cls3 = unipotent_classes(sl3, w3);
    CHECK(cls3.size() == 3);
    // regular class of SL3: weights (2,2), h = 2 rho^v = sum of positive coroots
    for (const auto& c : cls3)
        if (c.name == "(3)") {
            CHECK(c.weights == std::vector<int>{2, 2});
            CHECK(c.h == VecQ{2, 2});
        }
}

TEST_CASE("C2 classes follow the symplectic partition rule") {
    auto sp4 = build_root_datum("Sp4");
    auto w = weyl_group(sp4);
    auto cls = unipotent_classes(sp4, w);
    std::set<std::string> names;
    for (const auto& c : cls) names.insert(c.name);
    CHECK(names == std::set<std::string>{"(1^4)", "(2,1^2)", "(2^2)", "(4)"});
    // odd parts occur with even multiplicity in every class name: table sanity
    auto d = data_for("Sp4", sp4, w);
    CHECK(d.springer.size() == 5);
    int doubled = 0;
    for (const auto& c : cls) {
        int rows = 0;
        for (const auto& r : d.springer)
            if (d.classes[r.class_index].name == c.name) ++rows;
        if (rows == 2) ++doubled;
        CHECK(rows >= 1);
    }
    CHECK(doubled == 1);
}

TEST_CASE("weighted Dynkin pairings reproduce the stored weights") {
    for (const char* spec : {"SL2", "SL3", "SL4", "GL3", "Sp4", "SO5", "Sp6", "SO7", "G2",
                             "A1:sc*C2:sc", "A2:sc+central=1"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto sub = full_system(rd, w);
        auto d = unipotent_data(sub);
        for (const auto& c : d.classes) {
            size_t k = 0;
            for (const auto& f : sub.sys.factors)
                for (int s : f.simple_roots) {
                    mpq_class v = 0;
                    for (int i = 0; i < rd.rank; ++i)
                        v += mpq_class(rd.roots[s].alpha[i]) * c.h[i];
                    CHECK(v == c.weights[k]);
                    ++k;
                }
            CHECK(k == c.weights.size());
            // trivial class iff h = 0
            bool zero = true;
            for (const auto& x : c.h)
                if (x != 0) zero = false;
            CHECK(zero == (c.dim_springer_fiber ==
                           int(std::count_if(rd.roots.begin(), rd.roots.end(),
                                             [](const Root& r) { return r.positive; }))));
        }
    }
}

TEST_CASE("springer correspondence is a bijection onto Irr(W)") {
    for (const char* spec : {"SL2", "SL3", "SL4", "SL5", "GL2", "GL3", "Sp4", "SO5", "Sp6",
                             "SO7", "G2", "A1:sc*A1:sc", "A2:sc*C2:sc"}) {
        auto rd = build_root_datum(spec);
        auto w = weyl_group(rd);
        auto sub = full_system(rd, w);
        auto d = unipotent_data(sub);
        const auto& table = character_table(sub.weyl);
        CHECK(d.springer.size() == table.chi.size());
        std::set<int> targets;
        for (const auto& r : d.springer) targets.insert(r.weyl_char);
        CHECK(targets.size() == d.springer.size());
    }
}

TEST_CASE("type A rows match the partition rule under the frozen convention") {
    // In the Kato normalization the class lambda pairs with chi^{lambda'},
    // so the regular class pairs with sign and the trivial class with triv.
    auto sl3 = build_root_datum("SL3");
    auto w = weyl_group(sl3);
    auto sub = full_system(sl3, w);
    auto d = unipotent_data(sub, SpringerConvention::kato);
    const auto& table = character_table(sub.weyl);
    for (const auto& r : d.springer) {
        const auto& name = d.classes[r.class_index].name;
        long deg = table.degrees[r.weyl_char];
        if (name == "(3)") {
            CHECK(deg == 1);
            // sign character: value -1 on transpositions
            CHECK(r.character.values[1] == Cyclotomic(mpq_class(-1)));
        }
        if (name == "(2,1)") CHECK(deg == 2);
        if (name == "(1^3)") {
            for (const auto& v : r.character.values) CHECK(v == Cyclotomic(mpq_class(1)));
        }
        // degree = #SYT of the transposed partition under this convention
        if (name == "(2,1)") CHECK(deg == syt_count({2, 1}));
    }
    // Carter normalization flips regular <-> trivial
    auto dc = unipotent_data(sub, SpringerConvention::carter);
    for (const auto& r : dc.springer)
        if (dc.classes[r.class_index].name == "(3)")
            for (const auto& v : r.character.values) CHECK(v == Cyclotomic(mpq_class(1)));
}

TEST_CASE("geometric rho1 lists") {
    auto sp4 = build_root_datum("Sp4");
    auto w = weyl_group(sp4);
    auto d = data_for("Sp4", sp4, w);
    int c22 = d.class_by_name("(2^2)");
    REQUIRE(c22 >= 0);
    auto rho = geometric_rho1(d, c22);
    CHECK(rho == std::vector<std::string>{"1", "eps"});
    int c211 = d.class_by_name("(2,1^2)");
    CHECK(geometric_rho1(d, c211) == std::vector<std::string>{"1"});
    int triv = d.class_by_name("(1^4)");
    CHECK(geometric_rho1(d, triv).size() == 1);
}

TEST_CASE("product data are products of the factors") {
    auto rd = build_root_datum("A1:sc*C2:sc");
    auto w = weyl_group(rd);
    auto d = data_for("", rd, w);
    CHECK(d.classes.size() == 2 * 4);
    CHECK(d.springer.size() == 2 * 5);
    // dim of Springer fibers adds up
    int max_dim = 0;
    for (const auto& c : d.classes) max_dim = std::max(max_dim, c.dim_springer_fiber);
    CHECK(max_dim == 1 + 4);
}

TEST_CASE("embedding by dominant cocharacters") {
    auto sp4 = build_root_datum("Sp4");
    auto w = weyl_group(sp4);
    auto amb = data_for("Sp4", sp4, w);
    // long A1 x A1 subsystem: its (reg, reg) class lands on (2^2)
    std::vector<int> longs;
    for (size_t i = 0; i < sp4.roots.size(); ++i) {
        if (!sp4.roots[i].positive) continue;
        for (size_t j = 0; j < sp4.roots.size(); ++j)
            if (sp4.roots[j].alpha != sp4.roots[i].alpha &&
                std::abs(sp4.pair(sp4.roots[i].alpha, sp4.roots[j].coroot)) == 2) {
                LVec neg = sp4.roots[i].alpha;
                for (auto& x : neg) x = -x;
                if (sp4.roots[j].alpha != neg) longs.push_back(int(i));
                break;
            }
    }
    REQUIRE(longs.size() == 2);
    auto sub = make_subsystem(sp4, w, longs);
    auto subdata = unipotent_data(sub);
    int regreg = subdata.class_by_name("(2)*(2)");
    REQUIRE(regreg >= 0);
    int target = embed_class_by_h(amb, subdata.classes[regreg].h);
    CHECK(amb.classes[target].name == "(2^2)");
    int trivtriv = subdata.class_by_name("(1^2)*(1^2)");
    CHECK(amb.classes[embed_class_by_h(amb, subdata.classes[trivtriv].h)].name == "(1^4)");
    // single long root regular embeds to the minimal class (2,1^2)
    auto one = make_subsystem(sp4, w, {longs[0]});
    auto onedata = unipotent_data(one);
    int reg = onedata.class_by_name("(2)");
    CHECK(amb.classes[embed_class_by_h(amb, onedata.classes[reg].h)].name == "(2,1^2)");
}

TEST_CASE("table JSON files on disk match the embedded tables") {
    for (const auto& [type, text] : springer_table_sources()) {
        std::string path = std::string(EXTQ_SOURCE_DIR) + "/data/springer/" + type + ".json";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == text);
    }
}

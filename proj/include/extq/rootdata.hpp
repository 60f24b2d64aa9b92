// Root data, Weyl groups, conjugacy classes, exact character tables and
// class-function calculus.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extq/cyclotomic.hpp"
#include "extq/intmat.hpp"

namespace extq {

using LVec = std::vector<long>;

long dot(const LVec& a, const LVec& b);

struct Root {
    LVec alpha;    // coordinates in X^*
    LVec coroot;   // coordinates in X_*
    bool positive = false;
};

struct DeclaredFactor {
    std::string type;     // "A1".."A4", "B2", "B3", "C2", "C3", "G2"
    std::string isogeny;  // "sc", "adj", "gl"
    std::vector<int> simple_roots;  // indices into RootDatum::roots, Bourbaki order
};

struct RootDatum {
    int rank = 0;
    std::vector<Root> roots;
    std::vector<int> simples;  // indices of the simple roots
    std::string label;
    std::vector<DeclaredFactor> declared;  // factor structure when built from a descriptor
    bool coroot_lattice_saturated = true;  // warning flag, not an error

    int root_index(const LVec& alpha) const;
    long pair(const LVec& lambda, const LVec& mu) const { return dot(lambda, mu); }
    // Reflection s_alpha acting on X^*: x -> x - <x, alpha^v> alpha.
    IntMatrix reflection_on_characters(int root) const;
    RootDatum dual() const;
    std::vector<int> positive_roots() const;
};

// Descriptor grammar: TYPE[:isogeny][*TYPE[:isogeny]...][+central=k]
// with named aliases (SL2, GL3, PGL2, Sp4, SO5, Spin7, G2, ...) and dual(SPEC).
RootDatum build_root_datum(const std::string& spec);

// ----- Weyl groups ------------------------------------------------------

using WMat = std::vector<int>;  // rank x rank, row-major, action on X^*

class WeylGroup {
  public:
    int rank = 0;
    std::vector<WMat> mats;       // element matrices on X^*
    std::vector<WMat> costar;     // action on X_*: transpose of the inverse matrix
    std::vector<int> inv;
    std::vector<std::vector<int>> words;  // letters index gen_roots
    std::vector<int> gens;                // element indices of the generators
    std::vector<int> gen_roots;           // datum root index per generator

    int size() const { return int(mats.size()); }
    int mult(int a, int b) const;
    int index_of(const WMat& m) const;
    int element_order(int a) const;
    LVec act_on_characters(int a, const LVec& v) const;
    VecQ act_on_cocharacters(int a, const VecQ& v) const;  // transpose-inverse convention

    std::map<WMat, int> lookup;
};

WeylGroup weyl_group(const RootDatum& rd, long cap = 46080);
// Group generated by the reflections of the given datum roots, inside an
// enumerated master group.
struct Subgroup {
    const WeylGroup* W = nullptr;
    std::vector<int> elems;  // sorted master indices
    std::vector<int> gens;   // master indices generating the subgroup

    int size() const { return int(elems.size()); }
    bool contains(int master) const;
    int local(int master) const;  // -1 if absent
};

Subgroup full_subgroup(const WeylGroup& w);
Subgroup subgroup_generated(const WeylGroup& w, const std::vector<int>& gens);
Subgroup subgroup_from_elements(const WeylGroup& w, std::vector<int> elems);
bool is_subgroup_of(const Subgroup& h, const Subgroup& g);

struct ConjClasses {
    std::vector<int> reps;    // master indices; class 0 is the identity class
    std::vector<long> sizes;
    std::vector<long> centralizer_order;
    std::vector<int> class_of;     // by local element index
    std::vector<int> conj_to_rep;  // local -> master g with g * x * g^{-1} = rep
};

ConjClasses conjugacy_classes(const Subgroup& h);

struct CharacterTable {
    Subgroup group;
    ConjClasses classes;
    long order = 0;
    long exponent = 0;
    std::vector<std::vector<Cyclotomic>> chi;  // chi[irrep][class]
    std::vector<long> degrees;
    std::vector<int> inverse_class;
    std::vector<int> class_det;  // det of the lattice action, per class

    int num_classes() const { return int(classes.reps.size()); }
    int class_of_master(int master) const;
};

// Exact table via Dixon's method (mod-p eigenvector computation lifted to
// cyclotomics); memoized per subgroup behind a lock.
const CharacterTable& character_table(const Subgroup& h, long cap = 46080);

// A class function on a fixed group, values per conjugacy class.
struct ClassFunction {
    std::vector<Cyclotomic> values;

    bool operator==(const ClassFunction& o) const { return values == o.values; }
};

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g);
// Multiplicities <f, chi_i>; throws if any is not a nonnegative integer.
std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f);
ClassFunction character_of(const CharacterTable& t, int irrep);
ClassFunction from_element_values(const ConjClasses& cl,
                                  const std::function<Cyclotomic(int master)>& f);
ClassFunction restrict_to(const CharacterTable& big, int irrep, const Subgroup& h,
                          const ConjClasses& hcl);
// Frobenius reciprocity: multiplicities of ind_H^G(f) in Irr(G).
std::vector<long> induce_and_decompose(const Subgroup& h, const ConjClasses& hcl,
                                       const ClassFunction& f, const Subgroup& g);
ClassFunction induced_character(const Subgroup& h, const ConjClasses& hcl, const ClassFunction& f,
                                const Subgroup& g);
ClassFunction sign_character(const CharacterTable& t);  // det of the lattice action
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// ----- Reflection subgroups and type recognition ------------------------

struct ReflectionSubgroup {
    std::vector<int> roots;  // closed subsystem, ambient root indices
    Subgroup weyl;
};

// Closes root_subset under its own reflections and returns the subsystem
// with its Weyl group realized inside the master group.
ReflectionSubgroup reflection_subgroup(const RootDatum& rd, const WeylGroup& w,
                                       std::vector<int> root_subset);

struct FactorType {
    std::string type;               // "A1".."A4","B2","B3","C2","C3","G2"
    std::vector<int> simple_roots;  // ambient root indices, Bourbaki order
    bool gl_style = false;          // declared GL-style type-A factor
};

struct SystemType {
    std::vector<FactorType> factors;
    std::string str() const;
};

// Classifies a closed subsystem into irreducible factors of supported types.
SystemType recognize_system(const RootDatum& rd, const std::vector<int>& root_subset);

}  // namespace extq

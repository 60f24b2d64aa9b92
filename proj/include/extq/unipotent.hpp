// Unipotent classes with Bala-Carter data, sl2 cocharacters, component
// groups and the Springer correspondence, for the supported types.
#pragma once

#include "extq/torus.hpp"

namespace extq {

// A closed subsystem of an ambient datum, with its recognized factor types
// and its Weyl group realized in the master group.
struct Subsystem {
    const RootDatum* ambient = nullptr;
    std::vector<int> roots;  // ambient root indices, +- closed
    SystemType sys;
    Subgroup weyl;
};

Subsystem make_subsystem(const RootDatum& rd, const WeylGroup& master, std::vector<int> roots);
Subsystem full_system(const RootDatum& rd, const WeylGroup& master);

struct UnipotentClass {
    std::string name;         // classical type: partition; G2: Bala-Carter label
    std::string bala_carter;
    std::vector<int> weights;  // weighted Dynkin values, one per subsystem simple root
    VecQ h;                    // sl2 cocharacter, ambient coordinates, dominant
    std::string a_group;       // "1", "Z/2", "Z/2xZ/2", "S3"
    int dim_springer_fiber = 0;
};

struct SpringerRow {
    int class_index = 0;
    std::string rho1;          // "1", "eps", "eps1", "std", or product labels
    int weyl_char = -1;        // irreducible index in the subsystem's character table
    ClassFunction character;   // the same irreducible as a class function
};

// The homology normalization is fixed operationally: tables are stored in the
// cohomology convention (regular class <-> trivial character) and the Kato
// convention tensors every row by sign.
enum class SpringerConvention { carter, kato };
constexpr SpringerConvention kConvSpr = SpringerConvention::kato;

struct UnipotentData {
    Subsystem system;
    std::vector<UnipotentClass> classes;
    std::vector<SpringerRow> springer;

    int class_by_name(const std::string& name) const;
    int class_by_h(const VecQ& dominant_h) const;
    std::vector<int> rows_of_class(int cls) const;
};

UnipotentData unipotent_data(const Subsystem& sub, SpringerConvention conv = kConvSpr);

// Spec-level conveniences for a whole datum.
std::vector<UnipotentClass> unipotent_classes(const RootDatum& rd, const WeylGroup& master);
std::vector<SpringerRow> springer_correspondence(const RootDatum& rd, const WeylGroup& master);
std::vector<std::string> geometric_rho1(const UnipotentData& data, int class_index);

// W(sub)-dominant representative of a cocharacter.
VecQ dominant_cocharacter(const Subsystem& sub, VecQ h);

// Index of the ambient class of a (sub)system class given by its cocharacter:
// Jacobson-Morozov transports h, so matching the dominant h identifies the class.
int embed_class_by_h(const UnipotentData& ambient_data, const VecQ& h_sub);

// Raw JSON documents of the built-in tables, keyed by type (B2, C2, B3, C3, G2).
const std::map<std::string, std::string>& springer_table_sources();

}  // namespace extq

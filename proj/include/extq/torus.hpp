// Exact model of the dual torus T = X_* (x) C^*: torsion angles plus formal
// generic directions, subtorus cosets, Weyl actions and fixed points.
#pragma once

#include <optional>

#include "extq/rootdata.hpp"

namespace extq {

// id 0 is reserved for the distinguished split symbol nu standing for q^{1/2}.
constexpr long kNuSymbol = 0;

struct Symbol {
    long id = 0;
    VecQ coeffs;  // direction in X_* (x) Q, nonzero

    bool operator==(const Symbol& o) const { return id == o.id && coeffs == o.coeffs; }
};

// A point of T as a homomorphism X^* -> C^*: a finite-order unitary part
// (angle coordinates in Q/Z) times formal unitary and positive-real
// directions. Everything is exact; there are no numeric coordinates.
struct TorusPoint {
    VecQ torsion;                 // entries in [0,1)
    std::vector<Symbol> compact;  // formal unitary directions, sorted by id
    std::vector<Symbol> split;    // formal positive-real directions, sorted by id

    bool operator==(const TorusPoint& o) const;
    bool pure_torsion() const { return compact.empty() && split.empty(); }
};

TorusPoint torsion_point(const VecQ& v);
long fresh_symbol_id();  // atomic, never returns kNuSymbol

// Deterministic total order used for canonical orbit representatives.
int cmp(const TorusPoint& a, const TorusPoint& b);

// Coset base * S of a subtorus S with (saturated) cocharacter lattice.
struct TorusCoset {
    TorusPoint base;             // pure torsion
    std::vector<VecZ> lattice;   // Z-basis of the cocharacter lattice of S

    int dim() const { return int(lattice.size()); }
};

TorusPoint weyl_action(const WeylGroup& w, int elt, const TorusPoint& t);
TorusCoset weyl_action(const WeylGroup& w, int elt, const TorusCoset& c);

// alpha(t) = 1, decided exactly.
bool root_value_is_one(const LVec& alpha, const TorusPoint& t);

// Connected components of T^w = {t : w t = t}; their number equals the
// torsion order of the coinvariants of (w - 1) on X^*.
std::vector<TorusCoset> fixed_point_components(const RootDatum& rd, const WeylGroup& w, int elt);

// base * S membership: does the pure-torsion point lie on the coset?
bool coset_contains(const TorusCoset& c, const TorusPoint& t);
bool same_coset(const TorusCoset& a, const TorusCoset& b);

// The base point decorated with one fresh compact symbol per lattice
// direction; w fixes the result iff w fixes the coset pointwise.
TorusPoint generic_point(const TorusCoset& c);

bool is_compact(const TorusPoint& t);

struct StabilizerPair {
    Subgroup fixer;       // W_t = {w : w t = t}
    Subgroup reflections; // W_{M0}, generated by {s_alpha : alpha(t) = 1}
};

StabilizerPair stabilizer_subgroup(const RootDatum& rd, const WeylGroup& w, const Subgroup& inside,
                                   const TorusPoint& t);

}  // namespace extq

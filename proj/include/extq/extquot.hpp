// The extended quotient T//W as a finite list of labelled components.
#pragma once

#include "extq/torus.hpp"

namespace extq {

struct ExtQuotComponent {
    int id = 0;
    int class_index = 0;              // conjugacy class of w in the acting group
    int w_rep = 0;                    // master element index of the class representative
    TorusCoset coset;                 // canonical representative of the centralizer orbit
    std::vector<TorusCoset> orbit;    // the full Z_W(w)-orbit on pi_0(T^w)
    int dim = 0;
};

struct ExtQuotPoint {
    int w = 0;  // master element index with w.t = t
    TorusPoint t;
    int component = -1;
};

struct ExtendedQuotient {
    const RootDatum* rd = nullptr;
    const WeylGroup* master = nullptr;
    Subgroup group;        // the acting Weyl group W^s
    ConjClasses classes;   // conjugacy classes of `group`
    std::vector<ExtQuotComponent> components;
};

ExtendedQuotient extended_quotient(const RootDatum& rd, const WeylGroup& w, const Subgroup& group);

// Component containing [w, t] for pure-torsion t fixed by w.
int component_of(const ExtendedQuotient& eq, int w_master, const TorusPoint& t);

// One point per conjugacy class of the stabilizer W_{t0}.
std::vector<ExtQuotPoint> fiber_over(const ExtendedQuotient& eq, const TorusPoint& t0);

// Lexicographically least torsion representative of the W-orbit of t.
TorusPoint canonical_orbit_point(const WeylGroup& w, const Subgroup& group, const TorusPoint& t);

// Projection to the ordinary quotient T/W, canonicalized.
TorusPoint projection_to_quotient(const ExtendedQuotient& eq, const ExtQuotPoint& p);

}  // namespace extq

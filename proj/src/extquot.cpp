#include "extq/extquot.hpp"

#include <algorithm>
#include <numeric>

namespace extq {

namespace {

int find_coset(const std::vector<TorusCoset>& list, const TorusCoset& c) {
    for (size_t i = 0; i < list.size(); ++i)
        if (same_coset(list[i], c)) return int(i);
    return -1;
}

}  // namespace

ExtendedQuotient extended_quotient(const RootDatum& rd, const WeylGroup& w, const Subgroup& group) {
    ExtendedQuotient eq;
    eq.rd = &rd;
    eq.master = &w;
    eq.group = group;
    eq.classes = conjugacy_classes(group);

    for (size_t ci = 0; ci < eq.classes.reps.size(); ++ci) {
        int rep = eq.classes.reps[ci];
        auto comps = fixed_point_components(rd, w, rep);
        // Centralizer of the representative inside the acting group.
        std::vector<int> central;
        for (int g : group.elems)
            if (w.mult(w.mult(g, rep), w.inv[g]) == rep) central.push_back(g);
        // Orbits of the centralizer on pi_0(T^w).
        std::vector<int> orbit_of(comps.size(), -1);
        int norbits = 0;
        for (size_t start = 0; start < comps.size(); ++start) {
            if (orbit_of[start] >= 0) continue;
            int orb = norbits++;
            std::vector<size_t> queue{start};
            orbit_of[start] = orb;
            while (!queue.empty()) {
                size_t cur = queue.back();
                queue.pop_back();
                for (int g : central) {
                    TorusCoset img = weyl_action(w, g, comps[cur]);
                    int tgt = find_coset(comps, img);
                    if (tgt < 0) throw Error("centralizer action left pi_0(T^w)");
                    if (orbit_of[tgt] < 0) {
                        orbit_of[tgt] = orb;
                        queue.push_back(size_t(tgt));
                    }
                }
            }
        }
        for (int orb = 0; orb < norbits; ++orb) {
            ExtQuotComponent c;
            c.class_index = int(ci);
            c.w_rep = rep;
            int best = -1;
            for (size_t i = 0; i < comps.size(); ++i) {
                if (orbit_of[i] != orb) continue;
                c.orbit.push_back(comps[i]);
                if (best < 0 || cmp(comps[i].base, comps[best].base) < 0) best = int(i);
            }
            c.coset = comps[best];
            c.dim = c.coset.dim();
            eq.components.push_back(c);
        }
    }

    std::sort(eq.components.begin(), eq.components.end(),
              [](const ExtQuotComponent& a, const ExtQuotComponent& b) {
                  if (a.class_index != b.class_index) return a.class_index < b.class_index;
                  if (a.dim != b.dim) return a.dim > b.dim;
                  return cmp(a.coset.base, b.coset.base) < 0;
              });
    for (size_t i = 0; i < eq.components.size(); ++i) eq.components[i].id = int(i);
    return eq;
}

int component_of(const ExtendedQuotient& eq, int w_master, const TorusPoint& t) {
    const WeylGroup& w = *eq.master;
    int local = eq.group.local(w_master);
    if (local < 0) throw Error("element outside the acting group");
    int ci = eq.classes.class_of[local];
    int g = eq.classes.conj_to_rep[local];
    TorusPoint moved = weyl_action(w, g, t);
    for (const auto& comp : eq.components) {
        if (comp.class_index != ci) continue;
        for (const auto& coset : comp.orbit)
            if (coset_contains(coset, moved)) return comp.id;
    }
    throw Error("point not found in any component of its class");
}

std::vector<ExtQuotPoint> fiber_over(const ExtendedQuotient& eq, const TorusPoint& t0) {
    if (!t0.pure_torsion()) throw Error("fiber_over expects a pure torsion point");
    const WeylGroup& w = *eq.master;
    std::vector<int> fix;
    for (int e : eq.group.elems)
        if (weyl_action(w, e, t0) == t0) fix.push_back(e);
    Subgroup wt = subgroup_from_elements(w, fix);
    auto cls = conjugacy_classes(wt);
    std::vector<ExtQuotPoint> out;
    for (int rep : cls.reps) {
        ExtQuotPoint p;
        p.w = rep;
        p.t = t0;
        p.component = component_of(eq, rep, t0);
        out.push_back(p);
    }
    return out;
}

TorusPoint canonical_orbit_point(const WeylGroup& w, const Subgroup& group, const TorusPoint& t) {
    TorusPoint best = t;
    for (int e : group.elems) {
        TorusPoint img = weyl_action(w, e, t);
        if (cmp(img, best) < 0) best = img;
    }
    return best;
}

TorusPoint projection_to_quotient(const ExtendedQuotient& eq, const ExtQuotPoint& p) {
    return canonical_orbit_point(*eq.master, eq.group, p.t);
}

}  // namespace extq

#include <algorithm>
#include <set>

#include "extq/rootdata.hpp"

namespace extq {

namespace {

WMat wmat_identity(int n) {
    WMat m(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) m[size_t(i) * n + i] = 1;
    return m;
}

WMat wmat_mul(const WMat& a, const WMat& b, int n) {
    WMat r(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[size_t(i) * n + k];
            if (!x) continue;
            for (int j = 0; j < n; ++j) r[size_t(i) * n + j] += x * b[size_t(k) * n + j];
        }
    return r;
}

WMat wmat_transpose(const WMat& a, int n) {
    WMat r(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[size_t(j) * n + i] = a[size_t(i) * n + j];
    return r;
}

WMat reflection_wmat(const RootDatum& rd, int root) {
    int n = rd.rank;
    WMat m = wmat_identity(n);
    const Root& r = rd.roots[root];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[size_t(i) * n + j] -= int(r.alpha[i] * r.coroot[j]);
    return m;
}

}  // namespace

int WeylGroup::mult(int a, int b) const {
    WMat m = wmat_mul(mats[a], mats[b], rank);
    auto it = lookup.find(m);
    if (it == lookup.end()) throw Error("product left the enumerated group");
    return it->second;
}

int WeylGroup::index_of(const WMat& m) const {
    auto it = lookup.find(m);
    return it == lookup.end() ? -1 : it->second;
}

int WeylGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
        x = mult(x, a);
        ++n;
        if (n > size()) throw Error("element order exceeded the group size");
    }
    return n;
}

LVec WeylGroup::act_on_characters(int a, const LVec& v) const {
    LVec r(rank, 0);
    const WMat& m = mats[a];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r[i] += long(m[size_t(i) * rank + j]) * v[j];
    return r;
}

VecQ WeylGroup::act_on_cocharacters(int a, const VecQ& v) const {
    VecQ r(rank, 0);
    const WMat& m = costar[a];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (m[size_t(i) * rank + j]) r[i] += mpq_class(m[size_t(i) * rank + j]) * v[j];
    return r;
}

WeylGroup weyl_group(const RootDatum& rd, long cap) {
    WeylGroup w;
    w.rank = rd.rank;
    w.mats.push_back(wmat_identity(rd.rank));
    w.inv.push_back(0);
    w.words.push_back({});
    w.lookup[w.mats[0]] = 0;

    std::vector<WMat> gen_mats;
    for (size_t g = 0; g < rd.simples.size(); ++g) {
        gen_mats.push_back(reflection_wmat(rd, rd.simples[g]));
        w.gen_roots.push_back(rd.simples[g]);
    }

    for (size_t head = 0; head < w.mats.size(); ++head) {
        for (size_t g = 0; g < gen_mats.size(); ++g) {
            WMat m = wmat_mul(w.mats[head], gen_mats[g], rd.rank);
            if (w.lookup.count(m)) continue;
            if (long(w.mats.size()) >= cap)
                throw GroupTooLarge("Weyl group order exceeds the cap " + std::to_string(cap));
            int idx = int(w.mats.size());
            w.lookup[m] = idx;
            w.mats.push_back(m);
            auto word = w.words[head];
            word.push_back(int(g));
            w.words.push_back(word);
            w.inv.push_back(-1);
        }
    }
    // Inverses: reverse words (generators are involutions).
    for (size_t i = 0; i < w.mats.size(); ++i) {
        if (w.inv[i] >= 0) continue;
        WMat m = wmat_identity(rd.rank);
        const auto& word = w.words[i];
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            m = wmat_mul(m, gen_mats[*it], rd.rank);
        w.inv[i] = w.lookup.at(m);
    }
    for (size_t i = 0; i < w.mats.size(); ++i)
        w.costar.push_back(wmat_transpose(w.mats[w.inv[i]], rd.rank));
    for (const auto& gm : gen_mats) w.gens.push_back(w.lookup.at(gm));
    return w;
}

bool Subgroup::contains(int master) const {
    return std::binary_search(elems.begin(), elems.end(), master);
}

int Subgroup::local(int master) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), master);
    if (it == elems.end() || *it != master) return -1;
    return int(it - elems.begin());
}

Subgroup full_subgroup(const WeylGroup& w) {
    Subgroup s;
    s.W = &w;
    s.elems.resize(w.size());
    for (int i = 0; i < w.size(); ++i) s.elems[i] = i;
    s.gens = w.gens;
    return s;
}

Subgroup subgroup_generated(const WeylGroup& w, const std::vector<int>& gens) {
    Subgroup s;
    s.W = &w;
    std::set<int> seen{0};
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g : gens) {
            int y = w.mult(x, g);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    s.elems.assign(seen.begin(), seen.end());
    s.gens = gens;
    std::sort(s.gens.begin(), s.gens.end());
    s.gens.erase(std::unique(s.gens.begin(), s.gens.end()), s.gens.end());
    return s;
}

Subgroup subgroup_from_elements(const WeylGroup& w, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<int> gens;
    std::set<int> closure{0};
    for (int e : elems) {
        if (closure.count(e)) continue;
        gens.push_back(e);
        // regenerate the closure with the enlarged generating set
        std::vector<int> queue(closure.begin(), closure.end());
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int g : gens) {
                int y = w.mult(x, g);
                if (closure.insert(y).second) queue.push_back(y);
            }
        }
    }
    if (closure.size() != elems.size())
        throw Error("element set is not closed under multiplication");
    Subgroup s;
    s.W = &w;
    s.elems = std::move(elems);
    s.gens = std::move(gens);
    return s;
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& g) {
    if (h.W != g.W) return false;
    for (int e : h.elems)
        if (!g.contains(e)) return false;
    return true;
}

ReflectionSubgroup reflection_subgroup(const RootDatum& rd, const WeylGroup& w,
                                       std::vector<int> root_subset) {
    std::set<int> s;
    for (int i : root_subset) {
        s.insert(i);
        LVec neg = rd.roots[i].alpha;
        for (auto& x : neg) x = -x;
        int ni = rd.root_index(neg);
        if (ni < 0) throw Error("root set is not symmetric");
        s.insert(ni);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur) {
                long c = rd.pair(rd.roots[b].alpha, rd.roots[a].coroot);
                LVec img = rd.roots[b].alpha;
                for (int t = 0; t < rd.rank; ++t) img[t] -= c * rd.roots[a].alpha[t];
                int idx = rd.root_index(img);
                if (idx < 0) throw Error("reflection image is not a root");
                if (s.insert(idx).second) changed = true;
            }
    }
    ReflectionSubgroup out;
    out.roots.assign(s.begin(), s.end());
    std::vector<int> gens;
    for (int i : out.roots) {
        if (!rd.roots[i].positive) continue;
        int e = w.index_of(reflection_wmat(rd, i));
        if (e < 0) throw Error("reflection outside the master group");
        gens.push_back(e);
    }
    out.weyl = subgroup_generated(w, gens);
    return out;
}

ConjClasses conjugacy_classes(const Subgroup& h) {
    const WeylGroup& w = *h.W;
    ConjClasses c;
    int n = h.size();
    c.class_of.assign(n, -1);
    c.conj_to_rep.assign(n, 0);
    for (int start = 0; start < n; ++start) {
        if (c.class_of[start] >= 0) continue;
        int cls = int(c.reps.size());
        int rep = h.elems[start];
        c.reps.push_back(rep);
        c.class_of[start] = cls;
        c.conj_to_rep[start] = 0;  // identity conjugates rep to itself
        std::vector<int> queue{start};
        long size = 1;
        while (!queue.empty()) {
            int xl = queue.back();
            queue.pop_back();
            int x = h.elems[xl];
            for (int g : h.gens) {
                int y = w.mult(w.mult(g, x), w.inv[g]);
                int yl = h.local(y);
                if (yl < 0) throw Error("conjugation left the subgroup");
                if (c.class_of[yl] >= 0) continue;
                c.class_of[yl] = cls;
                // g x g^{-1} = y and conj_to_rep[x] x conj_to_rep[x]^{-1} = rep,
                // so (conj_to_rep[x] g^{-1}) y (...)^{-1} = rep.
                c.conj_to_rep[yl] = w.mult(c.conj_to_rep[xl], w.inv[g]);
                queue.push_back(yl);
                ++size;
            }
        }
        c.sizes.push_back(size);
        c.centralizer_order.push_back(long(n) / size);
    }
    return c;
}

}  // namespace extq

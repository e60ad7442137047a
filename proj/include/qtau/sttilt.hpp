#pragma once

// Support tau-tilting pairs, left mutation and the Hasse quiver of the poset
// s-tau-tilt. Pairs are stored against a per-algebra registry of
// indecomposable isomorphism classes so that node identity, summand order and
// BFS traversal are all canonical.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtau/decompose.hpp"

namespace qtau {

// Registry of indecomposable iso classes. Keys are fingerprint strings with a
// disambiguator counting same-fingerprint classes in insertion order.
class ClassRegistry {
public:
    explicit ClassRegistry(AlgebraPtr alg) : alg_(std::move(alg)) {
        for (int v : alg_->quiver().vertices) {
            projs_.push_back(projective(alg_, v));
            injs_.push_back(injective(alg_, v));
        }
    }

    const AlgebraPtr& algebra() const { return alg_; }

    int add(const Rep& indec) {
        QTAU_CHECK(indec.alg == alg_, "registry: representation over a different algebra");
        QTAU_CHECK(!indec.is_zero(), "registry: zero is not an indecomposable");
        std::string fp = fingerprint(indec, projs_, injs_);
        int disamb = 0;
        for (int i = 0; i < int(entries_.size()); ++i) {
            if (entries_[i].fp != fp) continue;
            if (iso_indec(entries_[i].rep, indec)) return i;
            disamb = std::max(disamb, entries_[i].disamb + 1);
        }
        Entry e;
        e.rep = indec;
        e.fp = fp;
        e.disamb = disamb;
        e.key = fp + "#" + std::to_string(disamb);
        entries_.push_back(std::move(e));
        return int(entries_.size()) - 1;
    }

    int size() const { return int(entries_.size()); }
    const Rep& rep(int id) const { return entries_.at(id).rep; }
    const std::string& key(int id) const { return entries_.at(id).key; }

    const std::vector<Rep>& projectives() const { return projs_; }
    const std::vector<Rep>& injectives() const { return injs_; }

private:
    struct Entry {
        Rep rep;
        std::string fp;
        int disamb;
        std::string key;
    };
    AlgebraPtr alg_;
    std::vector<Rep> projs_, injs_;
    std::vector<Entry> entries_;
};

using RegistryPtr = std::shared_ptr<ClassRegistry>;

// (module part as registry classes, support vertex set), both sorted.
struct STPair {
    std::vector<int> summands;  // registry ids, sorted by class key
    std::vector<int> support;   // vertex ids, ascending
};

inline void sort_pair(const ClassRegistry& reg, STPair& p) {
    std::sort(p.summands.begin(), p.summands.end(),
              [&](int a, int b) { return reg.key(a) < reg.key(b); });
    std::sort(p.support.begin(), p.support.end());
}

inline STPair make_pair_from_summands(ClassRegistry& reg, const std::vector<Rep>& summands,
                                      std::vector<int> support) {
    STPair p;
    for (const Rep& s : summands) p.summands.push_back(reg.add(s));
    p.support = std::move(support);
    sort_pair(reg, p);
    return p;
}

inline STPair make_pair_from_module(ClassRegistry& reg, const Rep& module,
                                    std::vector<int> support) {
    std::vector<Rep> parts;
    for (const auto& [rep, mult] : decompose(module)) {
        QTAU_CHECK(mult == 1, "module part of a pair must be basic");
        parts.push_back(rep);
    }
    return make_pair_from_summands(reg, parts, std::move(support));
}

inline std::string pair_key(const ClassRegistry& reg, const STPair& p) {
    std::string k;
    for (int s : p.summands) k += reg.key(s) + "|";
    k += "P:";
    for (int v : p.support) k += std::to_string(v) + ",";
    return k;
}

inline Rep pair_module(const ClassRegistry& reg, const STPair& p) {
    std::vector<Rep> parts;
    for (int s : p.summands) parts.push_back(reg.rep(s));
    return direct_sum(reg.algebra(), parts);
}

// tau-rigidity, computed two ways and asserted equal: Hom(M, tau M) = 0 and
// the presentation criterion (Hom(P0, M) -> Hom(P1, M) surjective).
inline bool is_tau_rigid(const Rep& m) {
    if (m.is_zero()) return true;
    bool via_tau = hom_basis(m, tau(m)).empty();
    bool via_presentation = hom_to_tau_dim(m, m) == 0;
    QTAU_CHECK(via_tau == via_presentation, "tau-rigidity oracles disagree");
    return via_tau;
}

// The three pair invariants: module tau-rigid and basic, module vanishes on
// the support vertices, counts add up to |A|.
inline bool is_stt_pair(const ClassRegistry& reg, const STPair& p) {
    for (size_t i = 0; i < p.summands.size(); ++i)
        for (size_t j = i + 1; j < p.summands.size(); ++j)
            if (p.summands[i] == p.summands[j]) return false;
    Rep module = pair_module(reg, p);
    for (int v : p.support)
        if (module.dim_at(v) != 0) return false;
    if (int(p.summands.size() + p.support.size()) != reg.algebra()->n_vertices()) return false;
    return is_tau_rigid(module);
}

inline bool is_stt_pair(const Rep& module, const std::vector<int>& support) {
    ClassRegistry reg(module.alg);
    if (module.is_zero()) {
        STPair p;
        p.support = support;
        sort_pair(reg, p);
        return is_stt_pair(reg, p);
    }
    for (const auto& [rep, mult] : decompose(module)) {
        (void)rep;
        if (mult != 1) return false;
    }
    return is_stt_pair(reg, make_pair_from_module(reg, module, support));
}

// Partial order: p <= q iff Fac(p.module) is contained in Fac(q.module),
// tested summand-wise.
inline bool leq(const ClassRegistry& reg, const STPair& p, const STPair& q) {
    Rep qm = pair_module(reg, q);
    for (int s : p.summands)
        if (!fac_contains(qm, reg.rep(s))) return false;
    return true;
}

struct MutationStep {
    int position;       // index into p.summands
    int mutated_class;  // registry id of the removed summand
    RepMorphism approx;
    Rep coker;
    STPair result;
};

// Left mutation at the k-th module summand. Requires X not in Fac(U); the
// cokernel of the minimal left approximation either contributes the new
// summand (one isomorphism class, multiplicity collapsed) or vanishes, in
// which case the support grows by the unique legal vertex.
inline MutationStep left_mutation_step(ClassRegistry& reg, const STPair& p, int k) {
    QTAU_CHECK(k >= 0 && k < int(p.summands.size()), "mutation position out of range");
    const Rep& x = reg.rep(p.summands[k]);
    std::vector<Rep> u_parts;
    for (int i = 0; i < int(p.summands.size()); ++i)
        if (i != k) u_parts.push_back(reg.rep(p.summands[i]));
    Rep u = direct_sum(reg.algebra(), u_parts);
    if (fac_contains(u, x))
        throw error("X in Fac U: summand not eligible for left mutation");

    MutationStep step;
    step.position = k;
    step.mutated_class = p.summands[k];
    LeftApprox la = min_left_approx(x, u_parts);
    step.approx = la.f;
    step.coker = cokernel(la.f).rep;

    STPair out;
    out.support = p.support;
    for (int i = 0; i < int(p.summands.size()); ++i)
        if (i != k) out.summands.push_back(p.summands[i]);
    if (!step.coker.is_zero()) {
        Decomposition d = decompose(step.coker);
        QTAU_CHECK(d.size() == 1,
                   "exchange cokernel splits into several classes; contradicts the "
                   "two-complements theorem");
        out.summands.push_back(reg.add(d[0].first));
    } else {
        std::vector<int> candidates;
        for (int v : reg.algebra()->quiver().vertices) {
            if (std::find(p.support.begin(), p.support.end(), v) != p.support.end()) continue;
            if (u.dim_at(v) == 0) candidates.push_back(v);
        }
        QTAU_CHECK(candidates.size() == 1,
                   "support growth vertex not unique; contradicts the two-complements theorem");
        out.support.push_back(candidates[0]);
    }
    sort_pair(reg, out);
    QTAU_CHECK(is_stt_pair(reg, out), "left mutation produced an invalid pair");
    QTAU_CHECK(leq(reg, out, p), "left mutation did not move down the poset");
    QTAU_CHECK(pair_key(reg, out) != pair_key(reg, p), "left mutation returned the same pair");
    step.result = out;
    return step;
}

inline STPair left_mutation(ClassRegistry& reg, const STPair& p, int k) {
    return left_mutation_step(reg, p, k).result;
}

struct HasseArrow {
    int from = 0, to = 0;
    int mutated_class = 0;  // registry id of the exchanged summand
};

struct HassePoset {
    RegistryPtr reg;
    std::vector<STPair> nodes;      // sorted by pair key
    std::vector<std::string> keys;  // pair keys, parallel to nodes
    std::vector<HasseArrow> arrows;
    bool complete = true;

    int index_of(const std::string& key) const {
        for (int i = 0; i < int(keys.size()); ++i)
            if (keys[i] == key) return i;
        return -1;
    }

    std::vector<int> out_arrows(int node) const {
        std::vector<int> out;
        for (int i = 0; i < int(arrows.size()); ++i)
            if (arrows[i].from == node) out.push_back(i);
        return out;
    }
    std::vector<int> in_arrows(int node) const {
        std::vector<int> out;
        for (int i = 0; i < int(arrows.size()); ++i)
            if (arrows[i].to == node) out.push_back(i);
        return out;
    }
    int degree(int node) const {
        return int(out_arrows(node).size() + in_arrows(node).size());
    }
};

// Downward BFS from (A, 0) by left mutations; in a finite poset with maximum
// every pair is reached through a chain of covers. Nodes are deduplicated by
// canonical key and the result is re-sorted canonically, so runs are
// reproducible bit for bit.
inline HassePoset hasse(const AlgebraPtr& alg, int max_nodes = 10000) {
    HassePoset poset;
    poset.reg = std::make_shared<ClassRegistry>(alg);
    ClassRegistry& reg = *poset.reg;

    std::vector<Rep> projs;
    for (int v : alg->quiver().vertices) projs.push_back(projective(alg, v));
    STPair top = make_pair_from_summands(reg, projs, {});
    QTAU_CHECK(is_stt_pair(reg, top), "(A, 0) is not a valid pair");

    std::vector<STPair> nodes{top};
    std::vector<std::string> keys{pair_key(reg, top)};
    std::map<std::string, int> index{{keys[0], 0}};
    std::vector<HasseArrow> arrows;
    size_t head = 0;
    bool complete = true;
    while (head < nodes.size()) {
        if (int(nodes.size()) > max_nodes) {
            complete = false;
            break;
        }
        STPair cur = nodes[head];
        for (int k = 0; k < int(cur.summands.size()); ++k) {
            const Rep& x = reg.rep(cur.summands[k]);
            std::vector<Rep> u_parts;
            for (int i = 0; i < int(cur.summands.size()); ++i)
                if (i != k) u_parts.push_back(reg.rep(cur.summands[i]));
            if (fac_contains(direct_sum(alg, u_parts), x)) continue;
            MutationStep step = left_mutation_step(reg, cur, k);
            std::string key = pair_key(reg, step.result);
            auto it = index.find(key);
            int to;
            if (it == index.end()) {
                to = int(nodes.size());
                nodes.push_back(step.result);
                keys.push_back(key);
                index.emplace(key, to);
            } else {
                to = it->second;
            }
            arrows.push_back({int(head), to, step.mutated_class});
        }
        ++head;
    }
    poset.complete = complete;

    // canonical order
    std::vector<int> order(nodes.size());
    for (int i = 0; i < int(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> where(nodes.size());
    for (int i = 0; i < int(order.size()); ++i) where[order[i]] = i;
    for (int i : order) {
        poset.nodes.push_back(nodes[i]);
        poset.keys.push_back(keys[i]);
    }
    for (HasseArrow a : arrows) {
        a.from = where[a.from];
        a.to = where[a.to];
        poset.arrows.push_back(a);
    }
    std::sort(poset.arrows.begin(), poset.arrows.end(), [](const HasseArrow& a, const HasseArrow& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.mutated_class < b.mutated_class;
    });
    return poset;
}

// The two completions of an almost complete pair, read off the enumerated
// poset: nodes containing the pair componentwise.
inline std::vector<int> complements(const HassePoset& poset, const std::vector<Rep>& summands,
                                    const std::vector<int>& support) {
    QTAU_CHECK(poset.complete, "complements require a complete enumeration");
    ClassRegistry& reg = *poset.reg;
    std::vector<int> ids;
    for (const Rep& s : summands) ids.push_back(reg.add(s));
    std::vector<int> hits;
    for (int i = 0; i < int(poset.nodes.size()); ++i) {
        const STPair& node = poset.nodes[i];
        bool ok = true;
        for (int id : ids)
            ok = ok && std::find(node.summands.begin(), node.summands.end(), id) !=
                           node.summands.end();
        for (int v : support)
            ok = ok && std::find(node.support.begin(), node.support.end(), v) !=
                           node.support.end();
        if (ok) hits.push_back(i);
    }
    return hits;
}

// Bongartz completion of a tau-rigid module: the unique leq-maximum among the
// enumerated pairs whose module part contains every summand of U.
inline int bongartz(const HassePoset& poset, const Rep& u) {
    QTAU_CHECK(poset.complete, "Bongartz completion requires a complete enumeration");
    ClassRegistry& reg = *poset.reg;
    std::vector<int> ids;
    if (!u.is_zero())
        for (const auto& [rep, mult] : decompose(u)) {
            (void)mult;
            ids.push_back(reg.add(rep));
        }
    std::vector<int> hits;
    for (int i = 0; i < int(poset.nodes.size()); ++i) {
        const STPair& node = poset.nodes[i];
        bool ok = true;
        for (int id : ids)
            ok = ok && std::find(node.summands.begin(), node.summands.end(), id) !=
                           node.summands.end();
        if (ok) hits.push_back(i);
    }
    QTAU_CHECK(!hits.empty(), "no completion found; U is not tau-rigid?");
    int best = hits[0];
    for (int h : hits)
        if (leq(reg, poset.nodes[best], poset.nodes[h])) best = h;
    for (int h : hits)
        QTAU_CHECK(leq(reg, poset.nodes[h], poset.nodes[best]),
                   "Bongartz maximum is not unique");
    return best;
}

}  // namespace qtau

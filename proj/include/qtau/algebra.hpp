#pragma once

// Bound quiver algebras kQ/I. The admissible ideal is turned into a
// confluent rewriting system by length-lex tip reduction with overlap
// completion, after which the normal-form paths are a basis of the algebra.
// Instances are immutable after construction and shared via AlgebraPtr.

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qtau/quiver.hpp"

namespace qtau {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    static constexpr int kDefaultCap = 50;

    static AlgebraPtr make(std::string name, Quiver quiver, std::vector<Relation> relations,
                           int cap = kDefaultCap) {
        auto alg = std::shared_ptr<BoundQuiverAlgebra>(
            new BoundQuiverAlgebra(std::move(name), std::move(quiver), std::move(relations), cap));
        alg->complete_rewrite_system();
        alg->enumerate_basis();
        return alg;
    }

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int cap() const { return cap_; }

    int n_vertices() const { return quiver_.n_vertices(); }
    int dim() const { return int(basis_.size()); }

    // Normal-form words grouped as basis(i, j) = words from vertex i to
    // vertex j, in length-lex order; indices are vertex ids.
    const std::vector<PathWord>& basis(int i, int j) const {
        return basis_by_pair_[quiver_.vertex_index(i) * quiver_.n_vertices() +
                              quiver_.vertex_index(j)];
    }

    // All words from i, grouped by target in vertex order, length-lex within
    // a target. This ordering is the fixed basis of the projective P(i).
    std::vector<PathWord> basis_from(int i) const {
        std::vector<PathWord> out;
        for (int j : quiver_.vertices) {
            const auto& b = basis(i, j);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }

    bool is_basis_word(const PathWord& w) const {
        for (const Rule& r : rules_)
            if (contains_tip(w, r.tip)) return false;
        return true;
    }

    LinComb normal_form(const PathWord& w) const {
        QTAU_CHECK(w.composable(quiver_), "normal_form of non-composable word");
        LinComb c;
        add_term(c, w, 1);
        return normal_form(c);
    }

    // Rewrites until no term contains a rule tip; idempotent by construction.
    LinComb normal_form(LinComb c) const {
        for (;;) {
            bool changed = false;
            // rewrite the largest reducible term first
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                const PathWord w = it->first;
                const Rational coef = it->second;
                int pos = -1;
                const Rule* rule = nullptr;
                for (const Rule& r : rules_) {
                    int p = find_tip(w, r.tip);
                    if (p >= 0 && (pos < 0 || p < pos)) {
                        pos = p;
                        rule = &r;
                    }
                }
                if (!rule) continue;
                c.erase(w);
                for (const auto& [rw, rc] : rule->rest)
                    add_term(c, splice(w, pos, rule->tip.length(), rw), coef * rc);
                changed = true;
                break;
            }
            if (!changed) return c;
        }
    }

    // The opposite algebra: arrows reversed (same names), relations reversed
    // termwise. Applying it twice returns the original instance.
    AlgebraPtr opposite() const {
        std::scoped_lock lock(opp_mutex_);
        if (auto w = opp_weak_.lock()) return w;
        if (opp_strong_) return opp_strong_;
        Quiver q;
        q.vertices = quiver_.vertices;
        for (const Arrow& a : quiver_.arrows) q.arrows.push_back({a.name, a.target, a.source});
        std::vector<Relation> rels;
        for (const Relation& r : relations_) {
            Relation ro;
            for (const auto& [c, w] : r.terms) {
                PathWord rw;
                rw.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
                rw.source = w.target(quiver_);
                ro.terms.emplace_back(c, rw);
            }
            rels.push_back(std::move(ro));
        }
        AlgebraPtr op = make(name_ + "_op", std::move(q), std::move(rels), cap_);
        op->opp_weak_ = shared_from_this();
        opp_strong_ = op;
        return op;
    }

private:
    BoundQuiverAlgebra(std::string name, Quiver quiver, std::vector<Relation> relations, int cap)
        : name_(std::move(name)), quiver_(std::move(quiver)), relations_(std::move(relations)),
          cap_(cap) {
        quiver_.validate();
        if (cap_ < 2) throw error("length cap must be at least 2");
        for (const Relation& r : relations_) r.validate(quiver_);
    }

    struct Rule {
        PathWord tip;   // length-lex largest word, coefficient 1
        LinComb rest;   // tip rewrites to this (strictly smaller words)
    };

    static int find_tip(const PathWord& w, const PathWord& tip) {
        int n = w.length(), m = tip.length();
        for (int p = 0; p + m <= n; ++p) {
            bool hit = true;
            for (int k = 0; k < m; ++k)
                if (w.arrows[p + k] != tip.arrows[k]) { hit = false; break; }
            if (hit) return p;
        }
        return -1;
    }

    static bool contains_tip(const PathWord& w, const PathWord& tip) {
        return find_tip(w, tip) >= 0;
    }

    // w with w[pos .. pos+len) replaced by the word r.
    PathWord splice(const PathWord& w, int pos, int len, const PathWord& r) const {
        PathWord out;
        out.source = w.source;
        out.arrows.insert(out.arrows.end(), w.arrows.begin(), w.arrows.begin() + pos);
        out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
        out.arrows.insert(out.arrows.end(), w.arrows.begin() + pos + len, w.arrows.end());
        return out;
    }

    // Splits a combination into a rewrite rule tip -> rest (tip monic).
    static Rule to_rule(LinComb c) {
        Rule r;
        auto it = std::prev(c.end());
        r.tip = it->first;
        Rational lead = it->second;
        c.erase(it);
        for (auto& [w, coef] : c) add_term(r.rest, w, -coef / lead);
        return r;
    }

    void complete_rewrite_system() {
        for (const Relation& rel : relations_) {
            LinComb c;
            for (const auto& [coef, w] : rel.terms) add_term(c, w, coef);
            c = normal_form(std::move(c));
            if (c.empty()) continue;
            add_rule(to_rule(std::move(c)));
        }
        // Buchberger-style fixpoint: interreduce, then resolve every overlap
        // ambiguity; a nonzero resolution becomes a new rule and we restart.
        for (;;) {
            interreduce();
            std::vector<LinComb> pending;
            for (const Rule& a : rules_)
                for (const Rule& b : rules_) overlap_into(a, b, pending);
            bool added = false;
            for (LinComb& c : pending) {
                LinComb nf = normal_form(std::move(c));
                if (nf.empty()) continue;
                add_rule(to_rule(std::move(nf)));
                added = true;
                break;
            }
            if (!added) return;
        }
    }

    void add_rule(Rule r) {
        if (r.tip.length() >= cap_)
            throw error("admissibility failure: rewrite rule tip reached length cap");
        rules_.push_back(std::move(r));
        if (rules_.size() > 4096) throw error("rewrite completion exploded; ideal too wild");
    }

    // Re-normalize every rule against the others until stable, so no tip
    // contains another tip as a subword (inclusion ambiguities vanish).
    void interreduce() {
        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t i = 0; i < rules_.size();) {
                Rule r = rules_[i];
                LinComb as_comb = r.rest;
                for (auto& [w, coef] : as_comb) coef = -coef;
                add_term(as_comb, r.tip, 1);
                rules_.erase(rules_.begin() + i);
                LinComb nf = normal_form(as_comb);
                if (nf.empty()) {
                    stable = false;  // redundant rule dropped
                    continue;
                }
                Rule rr = to_rule(std::move(nf));
                if (!(rr.tip == r.tip) || rr.rest != r.rest) stable = false;
                rules_.insert(rules_.begin() + i, std::move(rr));
                ++i;
            }
        }
    }

    // For every proper overlap (suffix of a.tip == prefix of b.tip), push the
    // difference of the two rewritings of the overlap word.
    void overlap_into(const Rule& a, const Rule& b, std::vector<LinComb>& pending) const {
        int la = a.tip.length(), lb = b.tip.length();
        for (int k = 1; k < la && k < lb; ++k) {
            bool match = true;
            for (int t = 0; t < k; ++t)
                if (a.tip.arrows[la - k + t] != b.tip.arrows[t]) { match = false; break; }
            if (!match) continue;
            PathWord w;
            w.source = a.tip.source;
            w.arrows = a.tip.arrows;
            w.arrows.insert(w.arrows.end(), b.tip.arrows.begin() + k, b.tip.arrows.end());
            // rewrite w by a at position 0, and by b at position la - k
            LinComb via_a, via_b;
            for (const auto& [rw, rc] : a.rest) add_term(via_a, splice(w, 0, la, rw), rc);
            for (const auto& [rw, rc] : b.rest) add_term(via_b, splice(w, la - k, lb, rw), rc);
            LinComb diff = via_a;
            for (const auto& [rw, rc] : via_b) add_term(diff, rw, -rc);
            if (!diff.empty()) pending.push_back(std::move(diff));
        }
    }

    void enumerate_basis() {
        int n = quiver_.n_vertices();
        basis_by_pair_.assign(size_t(n) * n, {});
        for (int src : quiver_.vertices) {
            std::vector<PathWord> frontier;
            PathWord e;
            e.source = src;
            frontier.push_back(e);
            while (!frontier.empty()) {
                std::vector<PathWord> next;
                for (const PathWord& w : frontier) {
                    basis_.push_back(w);
                    int tgt = w.target(quiver_);
                    basis_by_pair_[quiver_.vertex_index(src) * n + quiver_.vertex_index(tgt)]
                        .push_back(w);
                    for (int ai = 0; ai < quiver_.n_arrows(); ++ai) {
                        if (quiver_.arrows[ai].source != tgt) continue;
                        PathWord wa = w;
                        wa.arrows.push_back(ai);
                        if (wa.length() >= cap_)
                            throw error("admissibility failure: normal-form path reached length cap");
                        if (is_basis_word(wa)) next.push_back(wa);
                    }
                }
                frontier = std::move(next);
            }
        }
        std::sort(basis_.begin(), basis_.end(), lenlex_less);
    }

    std::string name_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    int cap_;
    std::vector<Rule> rules_;
    std::vector<PathWord> basis_;
    std::vector<std::vector<PathWord>> basis_by_pair_;

    mutable std::mutex opp_mutex_;
    mutable AlgebraPtr opp_strong_;
    mutable std::weak_ptr<const BoundQuiverAlgebra> opp_weak_;
};

inline AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

// Same presentation data: vertices, arrows, relations up to normal form.
inline bool same_presentation(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->quiver().vertices != b->quiver().vertices) return false;
    if (a->quiver().n_arrows() != b->quiver().n_arrows()) return false;
    for (int i = 0; i < a->quiver().n_arrows(); ++i) {
        const Arrow& x = a->quiver().arrows[i];
        const Arrow& y = b->quiver().arrows[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    if (a->dim() != b->dim()) return false;
    for (int i : a->quiver().vertices)
        for (int j : a->quiver().vertices) {
            auto ba = a->basis(i, j);
            auto bb = b->basis(i, j);
            if (ba.size() != bb.size()) return false;
            for (size_t k = 0; k < ba.size(); ++k)
                if (!(ba[k] == bb[k])) return false;
        }
    return true;
}

}  // namespace qtau

#pragma once

// Representations of a bound quiver algebra and their morphisms. A Rep holds
// one dimension per vertex and one exact matrix per arrow; arrow a: i -> j
// acts as mats[a]: M_i -> M_j. Reps are immutable values.

#include <vector>

#include "qtau/algebra.hpp"
#include "qtau/matrix.hpp"

namespace qtau {

struct Rep {
    AlgebraPtr alg;
    std::vector<int> dims;   // by vertex index
    std::vector<QMat> mats;  // by arrow index

    int dim_at(int vertex_id) const { return dims[alg->quiver().vertex_index(vertex_id)]; }
    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Rep& o) const {
        return alg == o.alg && dims == o.dims && mats == o.mats;
    }

    std::string dim_vector_string() const {
        std::string s = "(";
        for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
        return s + ")";
    }
};

inline Rep zero_rep(const AlgebraPtr& alg) {
    Rep m;
    m.alg = alg;
    m.dims.assign(alg->n_vertices(), 0);
    for (const Arrow& a : alg->quiver().arrows) {
        (void)a;
        m.mats.emplace_back(0, 0);
    }
    return m;
}

inline bool shapes_ok(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    if (int(m.dims.size()) != q.n_vertices() || int(m.mats.size()) != q.n_arrows()) return false;
    for (int a = 0; a < q.n_arrows(); ++a) {
        if (m.mats[a].rows() != m.dims[q.vertex_index(q.arrows[a].target)]) return false;
        if (m.mats[a].cols() != m.dims[q.vertex_index(q.arrows[a].source)]) return false;
    }
    return true;
}

// Matrix of the action of a path word, M_source -> M_target.
inline QMat path_action(const Rep& m, const PathWord& w) {
    const Quiver& q = m.alg->quiver();
    QMat acc = QMat::identity(m.dims[q.vertex_index(w.source)]);
    for (int a : w.arrows) acc = m.mats[a] * acc;
    return acc;
}

inline QMat eval_comb(const Rep& m, const LinComb& c, int src_vertex, int tgt_vertex) {
    const Quiver& q = m.alg->quiver();
    QMat acc(m.dims[q.vertex_index(tgt_vertex)], m.dims[q.vertex_index(src_vertex)]);
    for (const auto& [w, coef] : c) acc = acc + path_action(m, w) * coef;
    return acc;
}

inline bool check_rep(const Rep& m) {
    if (!shapes_ok(m)) throw error("representation shape mismatch");
    const Quiver& q = m.alg->quiver();
    for (const Relation& r : m.alg->relations()) {
        QMat acc(m.dims[q.vertex_index(r.terms[0].second.target(q))],
                 m.dims[q.vertex_index(r.terms[0].second.source)]);
        for (const auto& [coef, w] : r.terms) acc = acc + path_action(m, w) * coef;
        if (!acc.is_zero()) return false;
    }
    return true;
}

inline Rep simple(const AlgebraPtr& alg, int vertex) {
    Rep m = zero_rep(alg);
    m.dims[alg->quiver().vertex_index(vertex)] = 1;
    for (int a = 0; a < alg->quiver().n_arrows(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        m.mats[a] = QMat(m.dims[alg->quiver().vertex_index(ar.target)],
                         m.dims[alg->quiver().vertex_index(ar.source)]);
    }
    return m;
}

// P(i): basis at vertex j is the set of normal-form words i -> j; an arrow
// acts by appending itself and reducing to normal form.
inline Rep projective(const AlgebraPtr& alg, int vertex) {
    const Quiver& q = alg->quiver();
    Rep m;
    m.alg = alg;
    m.dims.assign(q.n_vertices(), 0);
    m.mats.resize(q.n_arrows());
    std::vector<std::vector<PathWord>> fiber(q.n_vertices());
    for (int j : q.vertices) {
        fiber[q.vertex_index(j)] = alg->basis(vertex, j);
        m.dims[q.vertex_index(j)] = int(fiber[q.vertex_index(j)].size());
    }
    auto find_word = [&](int vidx, const PathWord& w) {
        const auto& f = fiber[vidx];
        for (int k = 0; k < int(f.size()); ++k)
            if (f[k] == w) return k;
        throw error("internal: normal-form word missing from projective basis");
    };
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        QMat mat(m.dims[ti], m.dims[si]);
        for (int col = 0; col < int(fiber[si].size()); ++col) {
            PathWord wa = fiber[si][col];
            wa.arrows.push_back(a);
            for (const auto& [u, c] : alg->normal_form(wa)) mat.at(find_word(ti, u), col) = c;
        }
        m.mats[a] = std::move(mat);
    }
    return m;
}

// Duality D = Hom_k(-, k): a representation of the opposite algebra with the
// same dimensions and transposed arrow matrices.
inline Rep dualize(const Rep& m) {
    Rep d;
    d.alg = m.alg->opposite();
    d.dims = m.dims;
    for (const QMat& a : m.mats) d.mats.push_back(a.transpose());
    return d;
}

inline Rep injective(const AlgebraPtr& alg, int vertex) {
    return dualize(projective(alg->opposite(), vertex));
}

// Uniserial module along a composable word: one basis vector per prefix.
// Errors when a prefix reduces to zero (the diagram denotes no module) or
// when the result violates a relation.
inline Rep uniserial(const AlgebraPtr& alg, const PathWord& w) {
    const Quiver& q = alg->quiver();
    if (!w.composable(q)) throw error("uniserial walk is not composable");
    Rep m = zero_rep(alg);
    std::vector<int> vertex_of_prefix, index_of_prefix;
    for (int k = 0; k <= w.length(); ++k) {
        PathWord pre = w;
        pre.arrows.resize(k);
        if (alg->normal_form(pre).empty())
            throw error("uniserial prefix reduces to zero: " + pre.to_string(q));
        int vid = q.vertex_index(pre.target(q));
        vertex_of_prefix.push_back(vid);
        index_of_prefix.push_back(m.dims[vid]++);
    }
    for (int a = 0; a < q.n_arrows(); ++a)
        m.mats[a] = QMat(m.dims[q.vertex_index(q.arrows[a].target)],
                         m.dims[q.vertex_index(q.arrows[a].source)]);
    for (int k = 0; k < w.length(); ++k)
        m.mats[w.arrows[k]].at(index_of_prefix[k + 1], index_of_prefix[k]) = 1;
    if (!check_rep(m)) throw error("uniserial diagram violates the relations");
    return m;
}

inline Rep direct_sum(const AlgebraPtr& alg, const std::vector<Rep>& parts) {
    Rep m = zero_rep(alg);
    std::vector<int> off(alg->n_vertices(), 0);
    for (const Rep& p : parts) {
        QTAU_CHECK(p.alg == alg, "direct sum over mixed algebras");
        for (int v = 0; v < alg->n_vertices(); ++v) m.dims[v] += p.dims[v];
    }
    const Quiver& q = alg->quiver();
    for (int a = 0; a < q.n_arrows(); ++a)
        m.mats[a] = QMat(m.dims[q.vertex_index(q.arrows[a].target)],
                         m.dims[q.vertex_index(q.arrows[a].source)]);
    for (const Rep& p : parts) {
        for (int a = 0; a < q.n_arrows(); ++a) {
            int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
            m.mats[a].set_block(off[ti], off[si], p.mats[a]);
        }
        for (int v = 0; v < alg->n_vertices(); ++v) off[v] += p.dims[v];
    }
    return m;
}

struct RepMorphism {
    Rep src, tgt;
    std::vector<QMat> f;  // by vertex index

    bool valid() const {
        if (src.alg != tgt.alg || int(f.size()) != src.alg->n_vertices()) return false;
        const Quiver& q = src.alg->quiver();
        for (int v = 0; v < q.n_vertices(); ++v)
            if (f[v].rows() != tgt.dims[v] || f[v].cols() != src.dims[v]) return false;
        for (int a = 0; a < q.n_arrows(); ++a) {
            int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
            if (!(f[ti] * src.mats[a] == tgt.mats[a] * f[si])) return false;
        }
        return true;
    }

    bool is_zero() const {
        for (const QMat& m : f)
            if (!m.is_zero()) return false;
        return true;
    }

    int total_rank() const {
        int r = 0;
        for (const QMat& m : f) r += rank(m);
        return r;
    }

    bool injective_map() const { return total_rank() == src.total_dim(); }
    bool surjective_map() const { return total_rank() == tgt.total_dim(); }
    bool invertible() const {
        for (size_t v = 0; v < f.size(); ++v)
            if (f[v].rows() != f[v].cols() || !is_invertible(f[v])) return false;
        return true;
    }

    // Row-major concatenation over vertices; the coordinate system used when
    // morphism spaces are treated as vector spaces.
    std::vector<Rational> flatten() const {
        std::vector<Rational> out;
        for (const QMat& m : f) {
            auto v = m.flatten();
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
};

inline RepMorphism zero_morphism(const Rep& src, const Rep& tgt) {
    RepMorphism h;
    h.src = src;
    h.tgt = tgt;
    for (int v = 0; v < src.alg->n_vertices(); ++v) h.f.emplace_back(tgt.dims[v], src.dims[v]);
    return h;
}

inline RepMorphism identity_morphism(const Rep& m) {
    RepMorphism h;
    h.src = m;
    h.tgt = m;
    for (int d : m.dims) h.f.push_back(QMat::identity(d));
    return h;
}

inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    QTAU_CHECK(g.src.dims == f.tgt.dims, "composition shape mismatch");
    RepMorphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
    return h;
}

inline RepMorphism dualize_morphism(const RepMorphism& f) {
    RepMorphism d;
    d.src = dualize(f.tgt);
    d.tgt = dualize(f.src);
    for (const QMat& m : f.f) d.f.push_back(m.transpose());
    return d;
}

inline RepMorphism morphism_sum(const RepMorphism& a, const RepMorphism& b) {
    RepMorphism h = a;
    for (size_t v = 0; v < h.f.size(); ++v) h.f[v] = h.f[v] + b.f[v];
    return h;
}

inline RepMorphism morphism_scale(const RepMorphism& a, const Rational& c) {
    RepMorphism h = a;
    for (auto& m : h.f) m = m * c;
    return h;
}

}  // namespace qtau

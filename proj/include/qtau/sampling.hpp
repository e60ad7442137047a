#pragma once

// Seeded random modules and morphisms for the property suites. A random
// module is the cokernel of a random path-coordinate morphism between sums
// of projectives, so it is a valid representation by construction and every
// module arises this way.

#include <random>

#include "qtau/homalg.hpp"

namespace qtau {

using Rng = std::mt19937_64;

inline Rep random_module(const AlgebraPtr& alg, Rng& rng, int max_total_dim = 10) {
    const auto& verts = alg->quiver().vertices;
    std::uniform_int_distribution<int> nsum(1, 3), vpick(0, int(verts.size()) - 1),
        coef(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> v0, v1;
        int n0 = nsum(rng), n1 = nsum(rng) - 1;
        for (int i = 0; i < n0; ++i) v0.push_back(verts[vpick(rng)]);
        for (int i = 0; i < n1; ++i) v1.push_back(verts[vpick(rng)]);
        ProjSum p0 = build_proj_sum(alg, v0), p1 = build_proj_sum(alg, v1);
        std::vector<std::vector<LinComb>> blocks(v0.size(), std::vector<LinComb>(v1.size()));
        for (size_t t = 0; t < v0.size(); ++t)
            for (size_t s = 0; s < v1.size(); ++s)
                for (const PathWord& w : alg->basis(v0[t], v1[s]))
                    add_term(blocks[t][s], w, coef(rng));
        Rep m = cokernel(proj_sum_morphism(p1, p0, blocks)).rep;
        if (!m.is_zero() && m.total_dim() <= max_total_dim) return m;
    }
    // fall back to a simple module; keeps the suites total
    return simple(alg, verts[vpick(rng)]);
}

inline RepMorphism random_morphism(const Rep& m, const Rep& n, Rng& rng) {
    auto basis = hom_basis(m, n);
    RepMorphism f = zero_morphism(m, n);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const auto& h : basis) f = morphism_sum(f, morphism_scale(h, coef(rng)));
    return f;
}

// Conjugates every fiber by a random unimodular matrix: an isomorphic copy
// with scrambled coordinates.
inline Rep random_base_change(const Rep& m, Rng& rng) {
    const Quiver& q = m.alg->quiver();
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<QMat> u, uinv;
    for (int d : m.dims) {
        QMat g = QMat::identity(d);
        // a few random elementary row operations keep it invertible
        std::uniform_int_distribution<int> pick(0, d > 0 ? d - 1 : 0);
        for (int k = 0; k < 2 * d; ++k) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            Rational c = coef(rng);
            for (int col = 0; col < d; ++col) g.at(i, col) += c * g.at(j, col);
        }
        u.push_back(g);
        auto gi = inverse(g);
        QTAU_CHECK(gi.has_value(), "unimodular matrix not invertible");
        uinv.push_back(*gi);
    }
    Rep out = m;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        out.mats[a] = u[ti] * m.mats[a] * uinv[si];
    }
    QTAU_CHECK(check_rep(out), "base change broke the relations");
    return out;
}

}  // namespace qtau

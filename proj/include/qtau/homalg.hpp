#pragma once

// Homological machinery on representations: Hom spaces, kernels/cokernels,
// radicals and tops, minimal projective presentations, the transpose and the
// Auslander-Reiten translate, Ext^1, stable Hom, Fac membership and minimal
// left approximations. Everything reduces to exact linear algebra.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qtau/rep.hpp"

namespace qtau {

// ---------------------------------------------------------------------------
// Hom spaces

// Basis of Hom(M, N): solutions of f_t M_a = N_a f_s for all arrows.
inline std::vector<RepMorphism> hom_basis(const Rep& m, const Rep& n) {
    QTAU_CHECK(m.alg == n.alg, "hom between representations of different algebras");
    const Quiver& q = m.alg->quiver();
    int nv = q.n_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    int unknowns = off[nv];
    int eqs = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        eqs += n.dims[ti] * m.dims[si];
    }
    QMat sys(eqs, unknowns);
    int row = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        for (int i = 0; i < n.dims[ti]; ++i)
            for (int j = 0; j < m.dims[si]; ++j) {
                // (f_t M_a - N_a f_s)[i][j] = 0
                for (int k = 0; k < m.dims[ti]; ++k)
                    if (!is_zero(m.mats[a].at(k, j)))
                        sys.at(row, off[ti] + i * m.dims[ti] + k) += m.mats[a].at(k, j);
                for (int l = 0; l < n.dims[si]; ++l)
                    if (!is_zero(n.mats[a].at(i, l)))
                        sys.at(row, off[si] + l * m.dims[si] + j) -= n.mats[a].at(i, l);
                ++row;
            }
    }
    QMat ker = nullspace(sys);
    std::vector<RepMorphism> basis;
    for (int c = 0; c < ker.cols(); ++c) {
        RepMorphism h = zero_morphism(m, n);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    h.f[v].at(i, j) = ker.at(off[v] + i * m.dims[v] + j, c);
        basis.push_back(std::move(h));
    }
    return basis;
}

inline int hom_dim(const Rep& m, const Rep& n) { return int(hom_basis(m, n).size()); }

// Rank of the span of a family inside its Hom space, via flattening.
inline int span_rank(const std::vector<RepMorphism>& fam) {
    if (fam.empty()) return 0;
    auto first = fam[0].flatten();
    QMat mat(int(first.size()), int(fam.size()));
    for (int c = 0; c < int(fam.size()); ++c) {
        auto v = fam[c].flatten();
        for (int r = 0; r < int(v.size()); ++r) mat.at(r, c) = v[r];
    }
    return rank(mat);
}

// ---------------------------------------------------------------------------
// Kernels, images, cokernels

struct SubObject {
    Rep rep;
    RepMorphism incl;  // rep -> ambient
};

struct QuotObject {
    Rep rep;
    RepMorphism proj;           // ambient -> rep
    std::vector<QMat> section;  // linear sections rep -> ambient, per vertex
};

inline SubObject subobject_from_fibers(const Rep& ambient, const std::vector<QMat>& fiber_basis) {
    const Quiver& q = ambient.alg->quiver();
    SubObject s;
    s.rep = zero_rep(ambient.alg);
    for (int v = 0; v < q.n_vertices(); ++v) s.rep.dims[v] = fiber_basis[v].cols();
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        auto x = solve(fiber_basis[ti], ambient.mats[a] * fiber_basis[si]);
        QTAU_CHECK(x.has_value(), "fibers do not span a subrepresentation");
        s.rep.mats[a] = *x;
    }
    s.incl.src = s.rep;
    s.incl.tgt = ambient;
    s.incl.f = fiber_basis;
    QTAU_CHECK(s.incl.valid(), "subobject inclusion is not a morphism");
    return s;
}

inline SubObject kernel(const RepMorphism& f) {
    std::vector<QMat> fibers;
    for (const QMat& m : f.f) fibers.push_back(nullspace(m));
    return subobject_from_fibers(f.src, fibers);
}

inline SubObject image(const RepMorphism& f) {
    std::vector<QMat> fibers;
    for (const QMat& m : f.f) fibers.push_back(m.columns(column_basis(m)));
    return subobject_from_fibers(f.tgt, fibers);
}

// Quotient of the target by the column span of the given fibers.
inline QuotObject quotient_by_fibers(const Rep& ambient, const std::vector<QMat>& span) {
    const Quiver& q = ambient.alg->quiver();
    QuotObject c;
    c.rep = zero_rep(ambient.alg);
    std::vector<QMat> proj(q.n_vertices()), sect(q.n_vertices());
    for (int v = 0; v < q.n_vertices(); ++v) {
        int n = ambient.dims[v];
        QMat basis = span[v].columns(column_basis(span[v]));
        int r = basis.cols();
        // extend to a basis of the fiber with standard vectors
        std::vector<int> chosen;
        QMat cur = basis;
        for (int j = 0; j < n && cur.cols() < n; ++j) {
            QMat e(n, 1);
            e.at(j, 0) = 1;
            QMat cand = hstack(cur, e);
            if (rank(cand) > cur.cols()) {
                cur = cand;
                chosen.push_back(j);
            }
        }
        QTAU_CHECK(cur.cols() == n, "basis completion failed");
        auto inv = inverse(cur);
        QTAU_CHECK(inv.has_value(), "basis completion not invertible");
        std::vector<int> last;
        for (int i = r; i < n; ++i) last.push_back(i);
        proj[v] = inv->rows_of(last);
        QMat s(n, n - r);
        for (int k = 0; k < n - r; ++k) s.at(chosen[k], k) = 1;
        sect[v] = s;
        c.rep.dims[v] = n - r;
    }
    for (int a = 0; a < q.n_arrows(); ++a) {
        int si = q.vertex_index(q.arrows[a].source), ti = q.vertex_index(q.arrows[a].target);
        c.rep.mats[a] = proj[ti] * ambient.mats[a] * sect[si];
    }
    c.proj.src = ambient;
    c.proj.tgt = c.rep;
    c.proj.f = proj;
    c.section = sect;
    QTAU_CHECK(c.proj.valid(), "cokernel projection is not a morphism");
    return c;
}

inline QuotObject cokernel(const RepMorphism& f) {
    QuotObject c = quotient_by_fibers(f.tgt, f.f);
    QTAU_CHECK(compose(c.proj, f).is_zero(), "cokernel does not annihilate the image");
    return c;
}

// ---------------------------------------------------------------------------
// Radical, top, socle

// rad M at vertex t is the sum of the images of all arrows into t.
inline SubObject radical(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    std::vector<QMat> fibers;
    for (int v = 0; v < q.n_vertices(); ++v) fibers.emplace_back(m.dims[v], 0);
    for (int a = 0; a < q.n_arrows(); ++a) {
        int ti = q.vertex_index(q.arrows[a].target);
        fibers[ti] = hstack(fibers[ti], m.mats[a]);
    }
    for (auto& f : fibers) f = f.columns(column_basis(f));
    return subobject_from_fibers(m, fibers);
}

inline QuotObject top_of(const Rep& m) {
    SubObject rad = radical(m);
    QuotObject t = quotient_by_fibers(m, rad.incl.f);
    for (const QMat& a : t.rep.mats) QTAU_CHECK(a.is_zero(), "top is not semisimple");
    return t;
}

inline SubObject socle(const Rep& m) {
    const Quiver& q = m.alg->quiver();
    std::vector<QMat> fibers;
    for (int v = 0; v < q.n_vertices(); ++v) {
        QMat stack(0, m.dims[v]);
        for (int a = 0; a < q.n_arrows(); ++a)
            if (q.vertex_index(q.arrows[a].source) == v) stack = vstack(stack, m.mats[a]);
        fibers.push_back(nullspace(stack));
    }
    return subobject_from_fibers(m, fibers);
}

// Loewy layers top-down: layer k lists dim(rad^k M / rad^{k+1} M) per vertex.
inline std::vector<std::vector<int>> loewy_layers(const Rep& m) {
    std::vector<std::vector<int>> layers;
    Rep cur = m;
    while (!cur.is_zero()) {
        SubObject rad = radical(cur);
        std::vector<int> layer;
        for (size_t v = 0; v < cur.dims.size(); ++v)
            layer.push_back(cur.dims[v] - rad.rep.dims[v]);
        layers.push_back(std::move(layer));
        cur = rad.rep;
    }
    return layers;
}

// Socle filtration top-down (last layer is the socle); this is the filtration
// composition-factor diagrams usually draw.
inline std::vector<std::vector<int>> socle_layers(const Rep& m) {
    std::vector<std::vector<int>> layers;
    Rep cur = m;
    while (!cur.is_zero()) {
        SubObject soc = socle(cur);
        layers.push_back(soc.rep.dims);
        cur = quotient_by_fibers(cur, soc.incl.f).rep;
    }
    std::reverse(layers.begin(), layers.end());
    return layers;
}

// ---------------------------------------------------------------------------
// Projective presentations

// Morphism P(v) -> N given by the image n of the generator e_v.
inline RepMorphism yoneda_from(const AlgebraPtr& alg, int vertex, const Rep& n,
                               const std::vector<Rational>& gen_image) {
    const Quiver& q = alg->quiver();
    Rep p = projective(alg, vertex);
    RepMorphism h = zero_morphism(p, n);
    int vi = q.vertex_index(vertex);
    QMat gen(n.dims[vi], 1);
    for (int i = 0; i < n.dims[vi]; ++i) gen.at(i, 0) = gen_image[i];
    for (int j : q.vertices) {
        int ji = q.vertex_index(j);
        const auto& words = alg->basis(vertex, j);
        for (int k = 0; k < int(words.size()); ++k) {
            QMat col = path_action(n, words[k]) * gen;
            for (int i = 0; i < n.dims[ji]; ++i) h.f[ji].at(i, k) = col.at(i, 0);
        }
    }
    return h;
}

// Finite direct sum of projectives with per-summand fiber offsets.
struct ProjSum {
    AlgebraPtr alg;
    std::vector<int> verts;            // vertex id per summand
    std::vector<Rep> parts;
    Rep sum;
    std::vector<std::vector<int>> off;  // off[s][vertex index]
};

inline ProjSum build_proj_sum(const AlgebraPtr& alg, const std::vector<int>& verts) {
    ProjSum ps;
    ps.alg = alg;
    ps.verts = verts;
    for (int v : verts) ps.parts.push_back(projective(alg, v));
    ps.sum = direct_sum(alg, ps.parts);
    std::vector<int> run(alg->n_vertices(), 0);
    for (const Rep& p : ps.parts) {
        ps.off.push_back(run);
        for (int v = 0; v < alg->n_vertices(); ++v) run[v] += p.dims[v];
    }
    return ps;
}

// Morphism between sums of projectives from path coordinates:
// blocks[t][s] is an element of span(words tgt.verts[t] -> src.verts[s]),
// i.e. the image of the s-th generator inside the t-th target summand.
inline RepMorphism proj_sum_morphism(const ProjSum& src, const ProjSum& tgt,
                                     const std::vector<std::vector<LinComb>>& blocks) {
    const AlgebraPtr& alg = src.alg;
    const Quiver& q = alg->quiver();
    RepMorphism h = zero_morphism(src.sum, tgt.sum);
    for (int s = 0; s < int(src.verts.size()); ++s)
        for (int t = 0; t < int(tgt.verts.size()); ++t) {
            const LinComb& lam = blocks[t][s];
            if (lam.empty()) continue;
            for (int j : q.vertices) {
                int ji = q.vertex_index(j);
                const auto& swords = alg->basis(src.verts[s], j);
                const auto& twords = alg->basis(tgt.verts[t], j);
                for (int col = 0; col < int(swords.size()); ++col) {
                    LinComb img;
                    for (const auto& [u, cu] : lam) {
                        PathWord uw = u;
                        uw.arrows.insert(uw.arrows.end(), swords[col].arrows.begin(),
                                         swords[col].arrows.end());
                        for (const auto& [y, cy] : alg->normal_form(uw))
                            add_term(img, y, cu * cy);
                    }
                    for (const auto& [y, cy] : img) {
                        int row = -1;
                        for (int k = 0; k < int(twords.size()); ++k)
                            if (twords[k] == y) { row = k; break; }
                        QTAU_CHECK(row >= 0, "path coordinate outside target basis");
                        h.f[ji].at(tgt.off[t][ji] + row, src.off[s][ji] + col) += cy;
                    }
                }
            }
        }
    QTAU_CHECK(h.valid(), "path-coordinate morphism is not a morphism");
    return h;
}

// Inverse of the above: read the path coordinates of a morphism between sums
// of projectives off the generator columns.
inline std::vector<std::vector<LinComb>> path_coords(const ProjSum& src, const ProjSum& tgt,
                                                     const RepMorphism& h) {
    const AlgebraPtr& alg = src.alg;
    const Quiver& q = alg->quiver();
    std::vector<std::vector<LinComb>> blocks(tgt.verts.size(),
                                             std::vector<LinComb>(src.verts.size()));
    for (int s = 0; s < int(src.verts.size()); ++s) {
        int v = src.verts[s];
        int vi = q.vertex_index(v);
        int col = src.off[s][vi];  // the empty word is first in basis(v, v)
        for (int t = 0; t < int(tgt.verts.size()); ++t) {
            const auto& twords = alg->basis(tgt.verts[t], v);
            for (int k = 0; k < int(twords.size()); ++k) {
                const Rational& c = h.f[vi].at(tgt.off[t][vi] + k, col);
                if (!is_zero(c)) add_term(blocks[t][s], twords[k], c);
            }
        }
    }
    return blocks;
}

struct Cover {
    ProjSum P;
    RepMorphism p;  // P.sum ->> M
};

// Projective cover: one P(v) per top basis vector, generators lifted through
// the chosen section of M ->> top M.
inline Cover projective_cover(const Rep& m) {
    if (m.is_zero()) throw error("projective cover of the zero module");
    const Quiver& q = m.alg->quiver();
    QuotObject top = top_of(m);
    std::vector<int> verts;
    std::vector<std::vector<Rational>> gens;
    for (int v : q.vertices) {
        int vi = q.vertex_index(v);
        for (int k = 0; k < top.rep.dims[vi]; ++k) {
            verts.push_back(v);
            std::vector<Rational> g(m.dims[vi]);
            for (int i = 0; i < m.dims[vi]; ++i) g[i] = top.section[vi].at(i, k);
            gens.push_back(std::move(g));
        }
    }
    Cover c;
    c.P = build_proj_sum(m.alg, verts);
    c.p = zero_morphism(c.P.sum, m);
    for (int s = 0; s < int(verts.size()); ++s) {
        RepMorphism comp = yoneda_from(m.alg, verts[s], m, gens[s]);
        for (int vi = 0; vi < q.n_vertices(); ++vi)
            c.p.f[vi].set_block(0, c.P.off[s][vi], comp.f[vi]);
    }
    QTAU_CHECK(c.p.valid(), "cover map is not a morphism");
    QTAU_CHECK(c.p.surjective_map(), "cover map is not surjective");
    return c;
}

struct Presentation {
    ProjSum P1, P0;
    RepMorphism p1;  // P1.sum -> P0.sum
    RepMorphism p0;  // P0.sum ->> M
};

// Minimal projective presentation P1 -> P0 ->> M.
inline Presentation min_presentation(const Rep& m) {
    Presentation pr;
    if (m.is_zero()) {
        pr.P1 = build_proj_sum(m.alg, {});
        pr.P0 = build_proj_sum(m.alg, {});
        pr.p1 = zero_morphism(pr.P1.sum, pr.P0.sum);
        pr.p0 = zero_morphism(pr.P0.sum, m);
        return pr;
    }
    Cover c0 = projective_cover(m);
    pr.P0 = c0.P;
    pr.p0 = c0.p;
    SubObject omega = kernel(pr.p0);
    if (omega.rep.is_zero()) {
        pr.P1 = build_proj_sum(m.alg, {});
        pr.p1 = zero_morphism(pr.P1.sum, pr.P0.sum);
        return pr;
    }
    Cover c1 = projective_cover(omega.rep);
    pr.P1 = c1.P;
    pr.p1 = compose(omega.incl, c1.p);
    return pr;
}

// ---------------------------------------------------------------------------
// Transpose and the Auslander-Reiten translate

// Hom(p1, A) as a morphism of opposite-algebra representations between the
// dual sums of projectives. Morphisms between projectives are stored in path
// coordinates, so this is a formal reversal of words.
inline RepMorphism hom_p1_to_algebra(const Presentation& pr) {
    const AlgebraPtr& alg = pr.P0.alg;
    AlgebraPtr op = alg->opposite();
    const Quiver& q = alg->quiver();
    auto blocks = path_coords(pr.P1, pr.P0, pr.p1);  // blocks[gamma][beta]
    ProjSum op0 = build_proj_sum(op, pr.P0.verts);
    ProjSum op1 = build_proj_sum(op, pr.P1.verts);
    // op morphism OP0 -> OP1: block (beta, gamma) reverses each word.
    std::vector<std::vector<LinComb>> oblocks(pr.P1.verts.size(),
                                              std::vector<LinComb>(pr.P0.verts.size()));
    for (size_t g = 0; g < pr.P0.verts.size(); ++g)
        for (size_t b = 0; b < pr.P1.verts.size(); ++b)
            for (const auto& [w, c] : blocks[g][b]) {
                PathWord rw;
                rw.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
                rw.source = w.target(q);
                add_term(oblocks[b][g], rw, c);
            }
    return proj_sum_morphism(op0, op1, oblocks);
}

// Tr M = coker Hom(p1, A), a representation of the opposite algebra.
inline Rep transpose(const Rep& m) {
    Presentation pr = min_presentation(m);
    RepMorphism g = hom_p1_to_algebra(pr);
    return cokernel(g).rep;
}

// tau M = D Tr M; vanishes exactly on projectives.
inline Rep tau(const Rep& m) {
    if (m.is_zero()) return zero_rep(m.alg);
    return dualize(transpose(m));
}

inline Rep tau_minus(const Rep& m) {
    if (m.is_zero()) return zero_rep(m.alg);
    return transpose(dualize(m));
}

// Independent route: 0 -> tau M -> nu P1 -> nu P0 with nu the Nakayama
// functor, computed by dualizing Hom(p1, A).
inline Rep tau_via_nakayama(const Rep& m) {
    if (m.is_zero()) return zero_rep(m.alg);
    Presentation pr = min_presentation(m);
    RepMorphism nu_p1 = dualize_morphism(hom_p1_to_algebra(pr));
    return kernel(nu_p1).rep;
}

// ---------------------------------------------------------------------------
// Ext^1 and stable Hom

// dim Ext^1(M, N) = dim Hom(Omega M, N) - rank(Hom(P0, N) -> Hom(Omega M, N)).
inline int ext1_dim(const Rep& m, const Rep& n) {
    if (m.is_zero() || n.is_zero()) return 0;
    Cover c = projective_cover(m);
    SubObject omega = kernel(c.p);
    if (omega.rep.is_zero()) return 0;
    auto homs = hom_basis(omega.rep, n);
    if (homs.empty()) return 0;
    auto lift = hom_basis(c.P.sum, n);
    std::vector<RepMorphism> restricted;
    for (const auto& h : lift) restricted.push_back(compose(h, omega.incl));
    return int(homs.size()) - span_rank(restricted);
}

// dim Hom(N, tau M) without forming tau M: the dual of coker Hom(p1, N).
inline int hom_to_tau_dim(const Rep& m, const Rep& n) {
    if (m.is_zero()) return 0;
    Presentation pr = min_presentation(m);
    if (pr.P1.verts.empty()) return 0;
    auto h1 = hom_basis(pr.P1.sum, n);
    if (h1.empty()) return 0;
    auto h0 = hom_basis(pr.P0.sum, n);
    std::vector<RepMorphism> pulled;
    for (const auto& h : h0) pulled.push_back(compose(h, pr.p1));
    return int(h1.size()) - span_rank(pulled);
}

// (proj-stable dim, inj-stable dim) of Hom(M, N).
inline std::pair<int, int> stable_hom_dims(const Rep& m, const Rep& n) {
    auto proj_stable = [](const Rep& x, const Rep& y) {
        auto homs = hom_basis(x, y);
        if (homs.empty()) return 0;
        if (y.is_zero()) return 0;
        Cover c = projective_cover(y);
        auto up = hom_basis(x, c.P.sum);
        std::vector<RepMorphism> through;
        for (const auto& h : up) through.push_back(compose(c.p, h));
        return int(homs.size()) - span_rank(through);
    };
    int ps = proj_stable(m, n);
    int is = proj_stable(dualize(n), dualize(m));
    return {ps, is};
}

// ---------------------------------------------------------------------------
// Fac membership and minimal left approximations

// X lies in Fac U iff the evaluation map U^{dim Hom(U,X)} -> X stacking a
// Hom basis is surjective at every vertex.
inline bool fac_contains(const Rep& u, const Rep& x) {
    if (x.is_zero()) return true;
    auto homs = hom_basis(u, x);
    for (size_t v = 0; v < x.dims.size(); ++v) {
        if (x.dims[v] == 0) continue;
        QMat stack(x.dims[v], 0);
        for (const auto& h : homs) stack = hstack(stack, h.f[v]);
        if (rank(stack) < x.dims[v]) return false;
    }
    return true;
}

struct LeftApprox {
    RepMorphism f;                 // X -> U'
    std::vector<int> components;   // index into the summand list, one per slot kept
};

// Minimal left add(U)-approximation of X, where U = sum of the given
// indecomposable summands. Start from the universal map stacking all Hom
// bases and drop slots while every map X -> U_i still factors through.
inline LeftApprox min_left_approx(const Rep& x, const std::vector<Rep>& summands) {
    const AlgebraPtr& alg = x.alg;
    int m = int(summands.size());
    std::vector<std::vector<RepMorphism>> bases;
    for (const Rep& u : summands) bases.push_back(hom_basis(x, u));
    std::vector<std::pair<int, int>> slots;  // (summand, basis index)
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < int(bases[i].size()); ++k) slots.emplace_back(i, k);

    std::map<std::pair<int, int>, std::vector<RepMorphism>> pair_hom;
    auto homs_between = [&](int a, int b) -> const std::vector<RepMorphism>& {
        auto key = std::make_pair(a, b);
        auto it = pair_hom.find(key);
        if (it == pair_hom.end())
            it = pair_hom.emplace(key, hom_basis(summands[a], summands[b])).first;
        return it->second;
    };

    // Does every basis map X -> U_i factor through the kept slots?
    auto is_approximation = [&](const std::vector<std::pair<int, int>>& kept) {
        for (int i = 0; i < m; ++i) {
            if (bases[i].empty()) continue;
            std::vector<RepMorphism> cols;
            for (const auto& [j, l] : kept)
                for (const auto& h : homs_between(j, i)) cols.push_back(compose(h, bases[j][l]));
            int base_rank = span_rank(cols);
            for (const auto& g : bases[i]) {
                std::vector<RepMorphism> aug = cols;
                aug.push_back(g);
                if (span_rank(aug) != base_rank) return false;
            }
        }
        return true;
    };

    QTAU_CHECK(is_approximation(slots), "universal map is not an approximation");
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t s = 0; s < slots.size(); ++s) {
            std::vector<std::pair<int, int>> trial = slots;
            trial.erase(trial.begin() + s);
            if (is_approximation(trial)) {
                slots = std::move(trial);
                shrunk = true;
                break;
            }
        }
    }

    LeftApprox out;
    std::vector<Rep> parts;
    for (const auto& [i, k] : slots) {
        (void)k;
        parts.push_back(summands[i]);
        out.components.push_back(i);
    }
    Rep target = direct_sum(alg, parts);
    out.f = zero_morphism(x, target);
    std::vector<int> off(alg->n_vertices(), 0);
    for (size_t s = 0; s < slots.size(); ++s) {
        const RepMorphism& g = bases[slots[s].first][slots[s].second];
        for (int v = 0; v < alg->n_vertices(); ++v) out.f.f[v].set_block(off[v], 0, g.f[v]);
        for (int v = 0; v < alg->n_vertices(); ++v) off[v] += parts[s].dims[v];
    }
    QTAU_CHECK(out.f.valid(), "approximation is not a morphism");
    return out;
}

}  // namespace qtau

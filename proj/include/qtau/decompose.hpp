#pragma once

// Direct-sum decomposition into indecomposables, isomorphism testing and
// isomorphism-invariant fingerprints.
//
// Splitting strategy: an endomorphism z with a rational eigenvalue lambda
// such that z - lambda is neither nilpotent nor invertible yields a Fitting
// decomposition M = ker (z-lambda)^N  (+)  im (z-lambda)^N into
// subrepresentations. Candidates are taken in a fixed order: lifts of central
// elements of End(M)/rad (whose eigenvalues on M are automatically rational
// when the semisimple quotient is split), then the Hom basis itself, then an
// expanding integer lattice of combinations. M is declared indecomposable
// when dim End(M)/rad = 1, with rad End read off the trace form (valid in
// characteristic zero).

#include <algorithm>
#include <string>
#include <vector>

#include "qtau/homalg.hpp"

namespace qtau {
namespace detail {

// Characteristic polynomial by Faddeev-LeVerrier; coeffs[k] multiplies x^k.
inline std::vector<Rational> char_poly(const QMat& a) {
    int n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMat mk(n, n);
    for (int k = 1; k <= n; ++k) {
        QMat id = QMat::identity(n);
        mk = a * (mk + id * c[n - k + 1]);
        Rational tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / k;
    }
    return c;
}

inline std::vector<mpz_class> divisors_bounded(mpz_class n, size_t limit) {
    // trial division; when the cofactor stays composite beyond the sieve the
    // divisor list is simply incomplete, which only shrinks the root search
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> fac;
    if (n == 0) return {};
    for (mpz_class p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const mpz_class& d : divs) {
                next.push_back(d * pk);
                if (next.size() > limit) return next;
            }
            pk *= p;
        }
        divs = std::move(next);
    }
    return divs;
}

inline std::vector<Rational> rational_roots(std::vector<Rational> poly) {
    std::vector<Rational> roots;
    if (poly.size() > 1 && is_zero(poly.front())) roots.push_back(0);
    while (poly.size() > 1 && is_zero(poly.front())) poly.erase(poly.begin());
    while (!poly.empty() && is_zero(poly.back())) poly.pop_back();
    if (poly.size() < 2) return roots;
    mpz_class den_lcm = 1;
    for (const Rational& c : poly) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<mpz_class> z;
    for (const Rational& c : poly) {
        Rational t = c * Rational(den_lcm);
        z.push_back(t.get_num());
    }
    auto eval_zero = [&](const Rational& x) {
        Rational acc = 0;
        for (int k = int(z.size()) - 1; k >= 0; --k) acc = acc * x + Rational(z[k]);
        return is_zero(acc);
    };
    std::vector<Rational> cands;
    for (const mpz_class& p : divisors_bounded(z.front(), 4096))
        for (const mpz_class& q : divisors_bounded(z.back(), 256)) {
            cands.emplace_back(p, q);
            cands.emplace_back(-p, q);
        }
    for (int t = 0; t <= 16; ++t) {
        cands.push_back(t);
        cands.push_back(-t);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (Rational c : cands) {
        c.canonicalize();
        if (eval_zero(c)) roots.push_back(c);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace detail

// Trace form on End(M); its kernel is rad End(M) in characteristic zero.
inline QMat end_rad_coords(const std::vector<RepMorphism>& basis) {
    int d = int(basis.size());
    QMat gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational tr = 0;
            for (size_t v = 0; v < basis[i].f.size(); ++v) {
                QMat prod = basis[i].f[v] * basis[j].f[v];
                for (int k = 0; k < prod.rows(); ++k) tr += prod.at(k, k);
            }
            gram.at(i, j) = tr;
        }
    return nullspace(gram);
}

inline bool is_indecomposable(const Rep& m) {
    if (m.is_zero()) return false;
    auto basis = hom_basis(m, m);
    QMat rad = end_rad_coords(basis);
    return int(basis.size()) - rad.cols() == 1;
}

namespace detail {

// Lifts of a basis of the center of End(M)/rad End(M), in matrix form.
inline std::vector<RepMorphism> central_lifts(const Rep& m,
                                              const std::vector<RepMorphism>& basis,
                                              const QMat& radcoords) {
    int d = int(basis.size());
    if (d == 0) return {};
    size_t flat = basis[0].flatten().size();
    QMat bmat(int(flat), d);
    for (int c = 0; c < d; ++c) {
        auto v = basis[c].flatten();
        for (size_t r = 0; r < flat; ++r) bmat.at(int(r), c) = v[r];
    }
    // rows annihilating the flattened rad-basis: v in rad-span iff ann v = 0
    QMat radflat = bmat * radcoords;
    QMat ann = nullspace(radflat.transpose()).transpose();
    // unknown x: for every k, ann * vec([X, b_k]) = 0 with X = sum x_i b_i
    QMat sys(ann.rows() * d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            RepMorphism comm = morphism_sum(compose(basis[i], basis[k]),
                                            morphism_scale(compose(basis[k], basis[i]), -1));
            auto v = comm.flatten();
            QMat vec(int(flat), 1);
            for (size_t r = 0; r < flat; ++r) vec.at(int(r), 0) = v[r];
            QMat proj = ann * vec;
            for (int r = 0; r < proj.rows(); ++r) sys.at(k * ann.rows() + r, i) = proj.at(r, 0);
        }
    QMat ker = nullspace(sys);
    std::vector<RepMorphism> out;
    for (int c = 0; c < ker.cols(); ++c) {
        RepMorphism z = zero_morphism(m, m);
        for (int i = 0; i < d; ++i)
            if (!is_zero(ker.at(i, c)))
                z = morphism_sum(z, morphism_scale(basis[i], ker.at(i, c)));
        out.push_back(std::move(z));
    }
    return out;
}

// Fitting split along (z - lambda)^N when it is neither zero nor everything.
inline bool fitting_split(const Rep& m, const RepMorphism& z, const Rational& lambda,
                          Rep& part1, Rep& part2) {
    RepMorphism f = morphism_sum(z, morphism_scale(identity_morphism(m), -lambda));
    int n = m.total_dim();
    RepMorphism p = identity_morphism(m);
    for (int k = 0; k < n; ++k) p = compose(f, p);
    SubObject ker_p = kernel(p);
    int kd = ker_p.rep.total_dim();
    if (kd == 0 || kd == n) return false;
    SubObject im_p = image(p);
    QTAU_CHECK(kd + im_p.rep.total_dim() == n, "Fitting dimensions do not add up");
    part1 = ker_p.rep;
    part2 = im_p.rep;
    return true;
}

inline bool try_split(const Rep& m, const std::vector<RepMorphism>& basis,
                      const QMat& radcoords, Rep& part1, Rep& part2) {
    std::vector<RepMorphism> cands = central_lifts(m, basis, radcoords);
    cands.insert(cands.end(), basis.begin(), basis.end());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            cands.push_back(morphism_sum(basis[i], basis[j]));
            cands.push_back(compose(basis[i], basis[j]));
        }
    for (const RepMorphism& z : cands) {
        std::vector<Rational> lambdas{0};
        for (const QMat& zv : z.f)
            for (const Rational& r : detail::rational_roots(detail::char_poly(zv)))
                lambdas.push_back(r);
        std::sort(lambdas.begin(), lambdas.end());
        lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
        for (const Rational& lambda : lambdas)
            if (fitting_split(m, z, lambda, part1, part2)) return true;
    }
    // expanding integer lattice over pairs of basis elements
    for (int h = 2; h <= 8; ++h)
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                RepMorphism z =
                    morphism_sum(morphism_scale(basis[i], h), basis[j]);
                std::vector<Rational> lambdas{0};
                for (const QMat& zv : z.f)
                    for (const Rational& r : detail::rational_roots(detail::char_poly(zv)))
                        lambdas.push_back(r);
                for (const Rational& lambda : lambdas)
                    if (fitting_split(m, z, lambda, part1, part2)) return true;
            }
    return false;
}

}  // namespace detail

// Complete for indecomposables: any Hom-basis element outside the radical of
// the category is an isomorphism, and a basis cannot lie inside a proper
// subspace.
inline bool iso_indec(const Rep& a, const Rep& b) {
    if (a.dims != b.dims) return false;
    for (const RepMorphism& h : hom_basis(a, b))
        if (h.invertible()) return true;
    return false;
}

using Decomposition = std::vector<std::pair<Rep, int>>;

inline Decomposition decompose(const Rep& m);

namespace detail {

inline void decompose_into(const Rep& m, std::vector<Rep>& parts) {
    if (m.is_zero()) return;
    auto basis = hom_basis(m, m);
    QMat radcoords = end_rad_coords(basis);
    if (int(basis.size()) - radcoords.cols() == 1) {
        parts.push_back(m);
        return;
    }
    Rep a, b;
    if (!try_split(m, basis, radcoords, a, b))
        throw error("decompose: no rational splitting found (End/rad not split over Q?)");
    decompose_into(a, parts);
    decompose_into(b, parts);
}

inline std::string matrix_encoding(const Rep& m) {
    std::string s;
    for (const QMat& a : m.mats) s += a.to_string() + ";";
    return s;
}

}  // namespace detail

inline Decomposition decompose(const Rep& m) {
    std::vector<Rep> parts;
    detail::decompose_into(m, parts);
    Decomposition out;
    for (const Rep& p : parts) {
        bool merged = false;
        for (auto& [rep, mult] : out)
            if (iso_indec(rep, p)) {
                ++mult;
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(p, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.total_dim() != y.first.total_dim())
            return x.first.total_dim() < y.first.total_dim();
        if (x.first.dims != y.first.dims) return x.first.dims < y.first.dims;
        return detail::matrix_encoding(x.first) < detail::matrix_encoding(y.first);
    });
    return out;
}

// Equal dimension vectors plus an invertible element of Hom(M, N). Basis
// elements and a growing integer grid catch nearly everything; the
// deterministic fallback decomposes both sides and matches indecomposables.
inline bool is_isomorphic(const Rep& a, const Rep& b) {
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    auto homs = hom_basis(a, b);
    for (const RepMorphism& h : homs)
        if (h.invertible()) return true;
    for (size_t i = 0; i < homs.size(); ++i)
        for (size_t j = i + 1; j < homs.size(); ++j) {
            if (morphism_sum(homs[i], homs[j]).invertible()) return true;
            if (morphism_sum(homs[i], morphism_scale(homs[j], -1)).invertible()) return true;
        }
    Decomposition da = decompose(a), db = decompose(b);
    if (da.size() != db.size()) return false;
    std::vector<bool> used(db.size(), false);
    for (const auto& [rep, mult] : da) {
        bool found = false;
        for (size_t j = 0; j < db.size(); ++j) {
            if (used[j] || db[j].second != mult) continue;
            if (iso_indec(rep, db[j].first)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Indecomposables reachable from the projectives, injectives and simples by
// radicals, tops, tau and tau-minus, capped by total dimension. For the
// representation-finite fixtures this closure finds every indecomposable of
// bounded dimension.
inline std::vector<Rep> collect_indecomposables(const AlgebraPtr& alg, int dim_cap = 8,
                                                int rounds = 6) {
    std::vector<Rep> pool;
    auto add = [&](const Rep& candidate) {
        if (candidate.is_zero()) return false;
        bool grew = false;
        for (const auto& [part, mult] : decompose(candidate)) {
            (void)mult;
            if (part.total_dim() > dim_cap) continue;
            bool known = false;
            for (const Rep& have : pool)
                if (iso_indec(have, part)) {
                    known = true;
                    break;
                }
            if (!known) {
                pool.push_back(part);
                grew = true;
            }
        }
        return grew;
    };
    for (int v : alg->quiver().vertices) {
        add(projective(alg, v));
        add(injective(alg, v));
        add(simple(alg, v));
    }
    for (int r = 0; r < rounds; ++r) {
        bool grew = false;
        std::vector<Rep> snapshot = pool;
        for (const Rep& m : snapshot) {
            grew |= add(radical(m).rep);
            grew |= add(top_of(m).rep);
            grew |= add(tau(m));
            grew |= add(tau_minus(m));
        }
        if (!grew) break;
    }
    std::sort(pool.begin(), pool.end(), [](const Rep& x, const Rep& y) {
        if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
        if (x.dims != y.dims) return x.dims < y.dims;
        return detail::matrix_encoding(x) < detail::matrix_encoding(y);
    });
    return pool;
}

// Isomorphism-invariant fingerprint; not injective in general, collisions are
// disambiguated by explicit isomorphism tests in the class registry.
inline std::string fingerprint(const Rep& m, const std::vector<Rep>& projectives,
                               const std::vector<Rep>& injectives) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    std::vector<int> top, soc, hp, hi;
    QuotObject t = top_of(m);
    SubObject s = socle(m);
    top = t.rep.dims;
    soc = s.rep.dims;
    for (const Rep& p : projectives) hp.push_back(hom_dim(m, p));
    for (const Rep& i : injectives) hi.push_back(hom_dim(m, i));
    return "d" + join(m.dims) + ";t" + join(top) + ";s" + join(soc) + ";e" +
           std::to_string(hom_dim(m, m)) + ";p" + join(hp) + ";i" + join(hi);
}

}  // namespace qtau

#ifndef COURANTKIT_CONSTRAINED_HPP
#define COURANTKIT_CONSTRAINED_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "courantkit/matrix.hpp"
#include "courantkit/point_fiber.hpp"
#include "courantkit/subspace.hpp"
#include "courantkit/tensor.hpp"

namespace courantkit::ecourant {

/// The constrained complex on gl(V): alternating cochains Hom(/\^k gl(V), V)
/// whose flat maps land in the jet space. Wedge coordinates are indexed by
/// (increasing tuple, output); tuples follow the global lexicographic order.

inline std::size_t wedge_space_dim(std::size_t gl_dim, std::size_t k, std::size_t n) {
    if (k > gl_dim) return 0;
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * (gl_dim - i) / (i + 1);
    return c * n;
}

/// Accumulates coeff * mu(tuple) into a linear form over wedge coordinates:
/// row[rank(sorted tuple) * n + f] += sign * coeff.
inline void accumulate_alternating(std::size_t gl_dim, std::size_t n, std::vector<Rational>& row,
                                   std::vector<std::size_t> tuple, std::size_t f,
                                   const Rational& coeff) {
    const int sign = sort_tuple(tuple);
    if (sign == 0) return;
    row[wedge_rank(gl_dim, tuple) * n + f] += Rational(sign) * coeff;
}

/// Value of an alternating cochain (wedge coordinates) at an arbitrary index
/// tuple; output component f.
inline Rational alternating_value(std::size_t gl_dim, std::size_t n,
                                  const std::vector<Rational>& coords,
                                  std::vector<std::size_t> tuple, std::size_t f) {
    const int sign = sort_tuple(tuple);
    if (sign == 0) return {};
    const Rational& v = coords[wedge_rank(gl_dim, tuple) * n + f];
    return sign == 1 ? v : -v;
}

/// Hom(/\^k gl(V), V) constrained to the jet space, as a Subspace in wedge
/// coordinates. Degree 0 is all of V; degree 1 is the copy of V inside
/// Hom(gl(V), V) cut out by nu(Phi) = Phi(nu(1)); for k >= 2 the same
/// constraint is imposed on every flat map and, over a point, forces zero.
inline Subspace constrained_cochain_space(std::size_t n, std::size_t k) {
    const PointFiber pf(n);
    const std::size_t g = pf.gl_dim();
    const std::size_t ambient = wedge_space_dim(g, k, n);
    if (k == 0) return Subspace::full(n);

    const auto id_coords = pf.identity_coords();
    const auto prefixes = wedge_basis(g, k - 1);
    std::vector<std::vector<Rational>> rows;
    for (const auto& prefix : prefixes) {
        for (std::size_t b = 0; b < g; ++b) {
            const std::size_t bi = pf.unit_row(b), bj = pf.unit_col(b);
            for (std::size_t f = 0; f < n; ++f) {
                std::vector<Rational> row(ambient);
                // mu(prefix, Phi_b)_f
                {
                    auto tup = prefix;
                    tup.push_back(b);
                    accumulate_alternating(g, n, row, tup, f, Rational(1));
                }
                // - (Phi_b mu(prefix, 1))_f = - sum_w Phi_b[f][w] mu(prefix, 1)_w;
                // Phi_b = E_{bi,bj} picks w = bj when f = bi.
                if (f == bi) {
                    for (std::size_t a = 0; a < g; ++a) {
                        if (id_coords[a].is_zero()) continue;
                        auto tup = prefix;
                        tup.push_back(a);
                        accumulate_alternating(g, n, row, tup, bj, -id_coords[a]);
                    }
                }
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix m(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
    return Subspace::kernel_of(m);
}

/// The coboundary of the natural gl(V)-representation on V,
///   (d mu)(d_1..d_{k+1}) = sum_i (-1)^{i+1} d_i mu(..^d_i..)
///                        + sum_{i<j} (-1)^{i+j} mu([d_i,d_j], d_1, ..^i..^j..),
/// as a matrix between wedge-coordinate spaces of degrees k and k+1.
inline Matrix ce_coboundary_matrix(std::size_t n, std::size_t k) {
    const PointFiber pf(n);
    const std::size_t g = pf.gl_dim();
    const Tensor comm = pf.commutator();
    const Tensor act = pf.standard_action();
    const std::size_t cols = k == 0 ? n : wedge_space_dim(g, k, n);
    const std::size_t rows = wedge_space_dim(g, k + 1, n);
    Matrix m(rows, cols);
    const auto out_tuples = wedge_basis(g, k + 1);
    for (std::size_t r = 0; r < out_tuples.size(); ++r) {
        const auto& tup = out_tuples[r];
        for (std::size_t i = 0; i <= k; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;  // (-1)^{i+1}, 1-based
            std::vector<std::size_t> rest;
            for (std::size_t s = 0; s <= k; ++s)
                if (s != i) rest.push_back(tup[s]);
            // d_i mu(rest): output f gets sum_w act[tup[i]][w][f] mu(rest)_w
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t f = 0; f < n; ++f) {
                    const Rational& c = act.at({tup[i], w, f});
                    if (c.is_zero()) continue;
                    if (k == 0)
                        m(r * n + f, w) += Rational(sign) * c;
                    else
                        m(r * n + f, wedge_rank(g, rest) * n + w) += Rational(sign) * c;
                }
        }
        if (k == 0) continue;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                const int sign = (i + j) % 2 == 0 ? 1 : -1;  // (-1)^{i+j}, same parity 1-based
                std::vector<std::size_t> rest;
                for (std::size_t s = 0; s <= k; ++s)
                    if (s != i && s != j) rest.push_back(tup[s]);
                for (std::size_t t = 0; t < g; ++t) {
                    const Rational& c = comm.at({tup[i], tup[j], t});
                    if (c.is_zero()) continue;
                    std::vector<std::size_t> newtup{t};
                    newtup.insert(newtup.end(), rest.begin(), rest.end());
                    for (std::size_t f = 0; f < n; ++f) {
                        std::vector<Rational> row(m.cols());
                        accumulate_alternating(g, n, row, newtup, f, Rational(sign) * c);
                        for (std::size_t cidx = 0; cidx < m.cols(); ++cidx)
                            if (!row[cidx].is_zero()) m(r * n + f, cidx) += row[cidx];
                    }
                }
            }
    }
    return m;
}

/// Same coboundary evaluated on a dense alternating cochain tensor
/// (k slots of gl plus the codomain slot; degree 0 is a bare V tensor).
/// Throws on non-alternating input.
inline Tensor ce_coboundary(std::size_t n, std::size_t k, const Tensor& mu) {
    const PointFiber pf(n);
    const std::size_t g = pf.gl_dim();
    std::vector<std::size_t> expect(k, g);
    expect.push_back(n);
    if (mu.shape() != expect) throw std::invalid_argument("ce_coboundary: shape mismatch");
    if (!is_alternating(mu)) throw std::invalid_argument("ce_coboundary: input not alternating");

    const Tensor comm = pf.commutator();
    const Tensor act = pf.standard_action();
    std::vector<std::size_t> out_shape(k + 1, g);
    out_shape.push_back(n);
    Tensor out(out_shape);
    std::vector<std::size_t> tuple_shape(k + 1, g);
    for_each_index(tuple_shape, [&](const std::vector<std::size_t>& tup) {
        std::vector<Rational> acc(n);
        for (std::size_t i = 0; i <= k; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;
            std::vector<std::size_t> rest;
            for (std::size_t s = 0; s <= k; ++s)
                if (s != i) rest.push_back(tup[s]);
            for (std::size_t w = 0; w < n; ++w) {
                rest.push_back(w);
                const Rational mv = mu.at(rest);
                rest.pop_back();
                if (mv.is_zero()) continue;
                for (std::size_t f = 0; f < n; ++f) {
                    const Rational& c = act.at({tup[i], w, f});
                    if (!c.is_zero()) acc[f] += Rational(sign) * c * mv;
                }
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                const int sign = (i + j) % 2 == 0 ? 1 : -1;
                std::vector<std::size_t> rest;
                for (std::size_t s = 0; s <= k; ++s)
                    if (s != i && s != j) rest.push_back(tup[s]);
                for (std::size_t t = 0; t < g; ++t) {
                    const Rational& c = comm.at({tup[i], tup[j], t});
                    if (c.is_zero()) continue;
                    std::vector<std::size_t> args{t};
                    args.insert(args.end(), rest.begin(), rest.end());
                    args.push_back(0);
                    for (std::size_t f = 0; f < n; ++f) {
                        args.back() = f;
                        const Rational mv = mu.at(args);
                        if (!mv.is_zero()) acc[f] += Rational(sign) * c * mv;
                    }
                }
            }
        std::vector<std::size_t> idx = tup;
        idx.push_back(0);
        for (std::size_t f = 0; f < n; ++f) {
            idx.back() = f;
            out.at(idx) = acc[f];
        }
    });
    return out;
}

/// Cohomology of the constrained complex at degree k, by exact rank
/// computation: restrict the coboundary to the constrained subspaces and take
/// dim ker - rank of the previous map. The restriction is checked to land in
/// the next constrained space (the subcomplex property).
inline std::size_t constrained_cohomology_dim(std::size_t n, std::size_t k) {
    const PointFiber pf(n);
    auto restricted = [&](std::size_t deg) -> Matrix {
        const Subspace dom = constrained_cochain_space(n, deg);
        const Subspace cod = constrained_cochain_space(n, deg + 1);
        const Matrix d = ce_coboundary_matrix(n, deg);
        Matrix img(d.rows(), dom.dim());
        for (std::size_t b = 0; b < dom.dim(); ++b) {
            const auto v = d.apply(dom.basis_vector(b));
            if (!cod.contains(v))
                throw std::logic_error("constrained complex: coboundary left the subcomplex");
            for (std::size_t i = 0; i < d.rows(); ++i) img(i, b) = v[i];
        }
        return img;
    };
    const Matrix dk = restricted(k);
    const std::size_t ker = dk.cols() - rank_checked(dk);
    std::size_t im = 0;
    if (k > 0) im = rank_checked(restricted(k - 1));
    return ker - im;
}

/// The cyclic-symmetry condition a twisting 3-cochain inherits from the
/// pairing: T(d,r,t) = T(r,t,d) = T(t,d,r) on all basis triples.
inline bool has_cyclic_symmetry(const Tensor& t3) {
    const auto& sh = t3.shape();
    if (sh.size() != 4 || sh[0] != sh[1] || sh[1] != sh[2]) return false;
    const std::size_t g = sh[0], n = sh[3];
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c)
                for (std::size_t f = 0; f < n; ++f) {
                    const Rational& v = t3.at({a, b, c, f});
                    if (v != t3.at({b, c, a, f}) || v != t3.at({c, a, b, f})) return false;
                }
    return true;
}

}  // namespace courantkit::ecourant

#endif

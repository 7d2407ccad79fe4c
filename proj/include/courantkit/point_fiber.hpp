#ifndef COURANTKIT_POINT_FIBER_HPP
#define COURANTKIT_POINT_FIBER_HPP

#include <cstddef>
#include <vector>

#include "courantkit/matrix.hpp"
#include "courantkit/tensor.hpp"

namespace courantkit {

/// The point-fiber dictionary, the single place where the degeneration over a
/// one-point base is spelled out. With the base reduced to a point every
/// bundle is a vector space and:
///
///   * the operator bundle is gl(V), with basis the matrix units E_ij in
///     row-major order (index i*n + j);
///   * the jet space is V itself: a jet nu with nu(Phi) = Phi(nu(1)) is
///     identified with the vector u = nu(1);
///   * the jet differential is the identity on V, and the tangent projection
///     is zero;
///   * the duality pairing of a jet u with an operator A is <u, A> = A u,
///     and the Lie derivative of a jet along an operator is L_A u = A u.
///
/// No other module re-derives these identifications.
class PointFiber {
  public:
    explicit PointFiber(std::size_t n) : n_(n) {}

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t gl_dim() const { return n_ * n_; }

    /// Basis index of the matrix unit E_ij.
    [[nodiscard]] std::size_t unit(std::size_t i, std::size_t j) const { return i * n_ + j; }
    [[nodiscard]] std::size_t unit_row(std::size_t a) const { return a / n_; }
    [[nodiscard]] std::size_t unit_col(std::size_t a) const { return a % n_; }

    /// gl(V) coordinates of the identity operator.
    [[nodiscard]] std::vector<Rational> identity_coords() const {
        std::vector<Rational> v(gl_dim());
        for (std::size_t i = 0; i < n_; ++i) v[unit(i, i)] = 1;
        return v;
    }

    [[nodiscard]] Matrix to_matrix(const std::vector<Rational>& gl_coords) const {
        Matrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = gl_coords[unit(i, j)];
        return m;
    }

    [[nodiscard]] std::vector<Rational> to_coords(const Matrix& m) const {
        std::vector<Rational> v(gl_dim());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) v[unit(i, j)] = m(i, j);
        return v;
    }

    /// Commutator structure constants as a tensor gl (x) gl -> gl.
    /// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
    [[nodiscard]] Tensor commutator() const {
        const std::size_t g = gl_dim();
        Tensor t({g, g, g});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l) {
                        const std::size_t a = unit(i, j), b = unit(k, l);
                        if (j == k) t.at({a, b, unit(i, l)}) += 1;
                        if (l == i) t.at({a, b, unit(k, j)}) -= 1;
                    }
        return t;
    }

    /// Standard action gl (x) V -> V: E_ij e_k = delta_jk e_i.
    [[nodiscard]] Tensor standard_action() const {
        const std::size_t g = gl_dim();
        Tensor t({g, n_, n_});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t.at({unit(i, j), j, i}) = 1;
        return t;
    }

    /// Applies an operator in gl coordinates to a vector: the jet pairing
    /// <u, A> = A u and the jet Lie derivative L_A u = A u both reduce to this.
    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& gl_coords,
                                              const std::vector<Rational>& v) const {
        std::vector<Rational> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational& c = gl_coords[unit(i, j)];
                if (!c.is_zero()) out[i] += c * v[j];
            }
        return out;
    }

  private:
    std::size_t n_;
};

}  // namespace courantkit

#endif

#ifndef COURANTKIT_ECOURANT_HPP
#define COURANTKIT_ECOURANT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "courantkit/leibniz.hpp"
#include "courantkit/matrix.hpp"
#include "courantkit/point_fiber.hpp"
#include "courantkit/subspace.hpp"
#include "courantkit/tensor.hpp"

namespace courantkit::ecourant {

using leibniz::all_zero;
using leibniz::basis_vector;

/// E-Courant structure over a point: a space K with an E-valued pairing, a
/// bracket and an anchor into gl(E), all as structure-constant tensors.
struct ECourantStructure {
    std::size_t k_dim = 0;
    std::size_t e_dim = 0;
    Tensor pairing;  // K (x) K -> E, shape {k,k,e}
    Tensor bracket;  // K (x) K -> K, shape {k,k,k}
    Tensor anchor;   // K (x) E -> E, shape {k,e,e}: anchor[x][u][v] = e_v coeff of rho(e_x) e_u

    ECourantStructure() = default;
    ECourantStructure(std::size_t k, std::size_t e, Tensor p, Tensor b, Tensor a)
        : k_dim(k), e_dim(e), pairing(std::move(p)), bracket(std::move(b)), anchor(std::move(a)) {
        if (pairing.shape() != std::vector<std::size_t>{k, k, e} ||
            bracket.shape() != std::vector<std::size_t>{k, k, k} ||
            anchor.shape() != std::vector<std::size_t>{k, e, e})
            throw std::invalid_argument("ECourantStructure: tensor shape mismatch");
    }

    [[nodiscard]] std::vector<Rational> pair(const std::vector<Rational>& x,
                                             const std::vector<Rational>& y) const {
        std::vector<Rational> out(e_dim);
        for (std::size_t i = 0; i < k_dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < k_dim; ++j) {
                if (y[j].is_zero()) continue;
                const Rational c = x[i] * y[j];
                for (std::size_t f = 0; f < e_dim; ++f) out[f] += c * pairing.at({i, j, f});
            }
        }
        return out;
    }

    [[nodiscard]] std::vector<Rational> brk(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
        return algebra().apply(x, y);
    }

    /// rho(x) as an e_dim x e_dim operator.
    [[nodiscard]] Matrix anchor_op(const std::vector<Rational>& x) const {
        Matrix m(e_dim, e_dim);
        for (std::size_t i = 0; i < k_dim; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t u = 0; u < e_dim; ++u)
                for (std::size_t v = 0; v < e_dim; ++v) m(v, u) += x[i] * anchor.at({i, u, v});
        }
        return m;
    }

    [[nodiscard]] leibniz::LeibnizAlgebra algebra() const { return {k_dim, bracket}; }
};

struct AxiomStatus {
    bool pass = true;
    bool evaluated = true;  // false when a prerequisite axiom failed first
    std::vector<std::size_t> witness;
};

/// Per-axiom verdicts; the lexicographically first violating basis tuple is
/// kept as witness. Overall pass iff every sub-status passes.
struct AxiomReport {
    AxiomStatus symmetry, nondegeneracy, leibniz_identity, ec1, ec2, ec3, ec4, ec5;

    [[nodiscard]] bool pass() const {
        for (const auto* s :
             {&symmetry, &nondegeneracy, &leibniz_identity, &ec1, &ec2, &ec3, &ec4, &ec5})
            if (!s->pass || !s->evaluated) return false;
        return true;
    }
};

/// Matrix of x |-> P(x, .) as a map K -> Hom(K, E); rows indexed by (y, f).
inline Matrix pairing_flat(const ECourantStructure& s) {
    Matrix m(s.k_dim * s.e_dim, s.k_dim);
    for (std::size_t x = 0; x < s.k_dim; ++x)
        for (std::size_t y = 0; y < s.k_dim; ++y)
            for (std::size_t f = 0; f < s.e_dim; ++f) m(y * s.e_dim + f, x) = s.pairing.at({x, y, f});
    return m;
}

/// Solves <W, X> = 1/2 u(rho(X)) for W, i.e. the E-adjoint of the anchor
/// applied to the jet u. Empty result signals an EC-4 failure for this u.
inline std::optional<std::vector<Rational>> rho_star(const ECourantStructure& s,
                                                     const std::vector<Rational>& u) {
    if (u.size() != s.e_dim) throw std::invalid_argument("rho_star: jet dimension mismatch");
    std::vector<Rational> rhs(s.k_dim * s.e_dim);
    const Rational h = half();
    for (std::size_t x = 0; x < s.k_dim; ++x) {
        // mu(rho(X)) with mu = [u] is rho(X) u
        for (std::size_t e = 0; e < s.e_dim; ++e) {
            if (u[e].is_zero()) continue;
            for (std::size_t f = 0; f < s.e_dim; ++f)
                rhs[x * s.e_dim + f] += h * u[e] * s.anchor.at({x, e, f});
        }
    }
    return solve_vector(pairing_flat(s), rhs);
}

/// rho_star on the whole jet space as a k_dim x e_dim matrix of columns, or
/// nullopt as soon as one basis jet is not representable.
inline std::optional<Matrix> rho_star_matrix(const ECourantStructure& s) {
    Matrix r(s.k_dim, s.e_dim);
    for (std::size_t u = 0; u < s.e_dim; ++u) {
        auto w = rho_star(s, basis_vector(s.e_dim, u));
        if (!w) return std::nullopt;
        for (std::size_t i = 0; i < s.k_dim; ++i) r(i, u) = (*w)[i];
    }
    return r;
}

/// Runs the full axiom suite: pairing symmetry and nondegeneracy, the Leibniz
/// identity of the bracket, and EC-1..EC-5. EC-2 is quadratic in X, so basis
/// vectors plus pairwise sums of basis vectors are polarization-complete.
inline AxiomReport verify_axioms(const ECourantStructure& s) {
    AxiomReport rep;
    const std::size_t k = s.k_dim, e = s.e_dim;

    for (std::size_t x = 0; x < k && rep.symmetry.pass; ++x)
        for (std::size_t y = 0; y < k && rep.symmetry.pass; ++y)
            for (std::size_t f = 0; f < e; ++f)
                if (s.pairing.at({x, y, f}) != s.pairing.at({y, x, f})) {
                    rep.symmetry = {false, true, {x, y, f}};
                    break;
                }

    if (rank_checked(pairing_flat(s)) != k) rep.nondegeneracy = {false, true, {}};

    {
        const auto lr = leibniz::check_leibniz(s.algebra());
        if (!lr.ok()) rep.leibniz_identity = {false, true, lr.violations.front().where};
    }

    std::vector<Matrix> rho_ops(k);
    for (std::size_t x = 0; x < k; ++x) rho_ops[x] = s.anchor_op(basis_vector(k, x));

    for (std::size_t x = 0; x < k && rep.ec1.pass; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            const Matrix lhs = s.anchor_op(s.algebra().bracket_basis(x, y));
            if (lhs != rho_ops[x] * rho_ops[y] - rho_ops[y] * rho_ops[x]) {
                rep.ec1 = {false, true, {x, y}};
                break;
            }
        }

    for (std::size_t x = 0; x < k && rep.ec3.pass; ++x)
        for (std::size_t y = 0; y < k && rep.ec3.pass; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                const auto bxy = s.algebra().bracket_basis(x, y);
                const auto bxz = s.algebra().bracket_basis(x, z);
                auto lhs = rho_ops[x].apply(s.pair(basis_vector(k, y), basis_vector(k, z)));
                const auto r1 = s.pair(bxy, basis_vector(k, z));
                const auto r2 = s.pair(basis_vector(k, y), bxz);
                for (std::size_t f = 0; f < e; ++f) lhs[f] -= r1[f] + r2[f];
                if (!all_zero(lhs)) {
                    rep.ec3 = {false, true, {x, y, z}};
                    break;
                }
            }

    std::optional<Matrix> rstar;
    if (rep.nondegeneracy.pass) rstar = rho_star_matrix(s);
    if (!rstar) {
        // EC-2 and EC-5 quantify over rho_star; without it they cannot hold.
        rep.ec4 = {false, true, {}};
        rep.ec2.evaluated = rep.ec5.evaluated = false;
        rep.ec2.pass = rep.ec5.pass = false;
        return rep;
    }

    auto ec2_at = [&](const std::vector<Rational>& x) {
        auto lhs = s.brk(x, x);
        const auto rhs = rstar->apply(s.pair(x, x));
        for (std::size_t i = 0; i < k; ++i) lhs[i] -= rhs[i];
        return all_zero(lhs);
    };
    for (std::size_t i = 0; i < k && rep.ec2.pass; ++i) {
        if (!ec2_at(basis_vector(k, i))) {
            rep.ec2 = {false, true, {i}};
            break;
        }
        for (std::size_t j = i + 1; j < k; ++j) {
            auto x = basis_vector(k, i);
            x[j] = 1;
            if (!ec2_at(x)) {
                rep.ec2 = {false, true, {i, j}};
                break;
            }
        }
    }

    for (std::size_t u = 0; u < e && rep.ec5.pass; ++u) {
        std::vector<Rational> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = (*rstar)(i, u);
        if (!s.anchor_op(w).is_zero()) rep.ec5 = {false, true, {u}};
    }

    return rep;
}

/// The omni-Lie algebra gl(V) (+) V with the standard pairing
/// <A+u, B+v> = (Av + Bu)/2, hemisemidirect bracket [A+u, B+v] = [A,B] + Av,
/// and anchor the projection onto gl(V).
inline ECourantStructure omni(std::size_t n) {
    if (n == 0) throw std::invalid_argument("omni: n must be at least 1");
    const PointFiber pf(n);
    const std::size_t g = pf.gl_dim(), k = g + n;
    const Tensor comm = pf.commutator();
    const Tensor act = pf.standard_action();
    Tensor pairing({k, k, n}), bracket({k, k, k}), anchor({k, n, n});
    const Rational h = half();
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t f = 0; f < n; ++f) {
                const Rational& c = act.at({a, u, f});
                if (c.is_zero()) continue;
                pairing.at({a, g + u, f}) = h * c;
                pairing.at({g + u, a, f}) = h * c;
                bracket.at({a, g + u, g + f}) = c;
                anchor.at({a, u, f}) = c;
            }
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c) bracket.at({a, b, c}) = comm.at({a, b, c});
    return {k, n, std::move(pairing), std::move(bracket), std::move(anchor)};
}

struct HemisemidirectResult {
    std::optional<ECourantStructure> structure;
    std::string error;                  // "NotLie" | "NotRepresentation" | "NotFaithful" | "DegenerateRep"
    std::vector<Rational> witness;      // certificate vector where applicable
};

/// g (+) V with bracket [A+u, B+v] = [A,B] + Av for a faithful nondegenerate
/// Lie-algebra action of g on V. Rejections carry a witness: a nonzero kernel
/// element of the action map (NotFaithful) or a vector killed by every
/// operator (DegenerateRep).
inline HemisemidirectResult hemisemidirect(const leibniz::LeibnizAlgebra& g, const Tensor& action) {
    HemisemidirectResult res;
    const std::size_t gd = g.dim;
    if (action.shape().size() != 3 || action.shape()[0] != gd ||
        action.shape()[1] != action.shape()[2])
        throw std::invalid_argument("hemisemidirect: action shape mismatch");
    const std::size_t n = action.shape()[1];

    if (!leibniz::is_lie(g)) {
        res.error = "NotLie";
        return res;
    }
    auto op = [&](std::size_t a) {
        Matrix m(n, n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) m(v, u) = action.at({a, u, v});
        return m;
    };
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t b = 0; b < gd; ++b) {
            Matrix lhs(n, n);
            for (std::size_t t = 0; t < gd; ++t) {
                const Rational& c = g.bracket.at({a, b, t});
                if (!c.is_zero()) {
                    const Matrix mt = op(t);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) lhs(i, j) += c * mt(i, j);
                }
            }
            if (lhs != op(a) * op(b) - op(b) * op(a)) {
                res.error = "NotRepresentation";
                return res;
            }
        }
    // faithful: A |-> action(A) has trivial kernel
    Matrix fm(n * n, gd);
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) fm(u * n + v, a) = action.at({a, u, v});
    {
        const Matrix ker = kernel_basis(fm);
        if (ker.rows() > 0) {
            res.error = "NotFaithful";
            res.witness = ker.row(0);
            return res;
        }
    }
    // nondegenerate: no nonzero v killed by the whole algebra
    Matrix dm(gd * n, n);
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) dm(a * n + v, u) = action.at({a, u, v});
    {
        const Matrix ker = kernel_basis(dm);
        if (ker.rows() > 0) {
            res.error = "DegenerateRep";
            res.witness = ker.row(0);
            return res;
        }
    }

    const std::size_t k = gd + n;
    Tensor pairing({k, k, n}), bracket({k, k, k}), anchor({k, n, n});
    const Rational h = half();
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t f = 0; f < n; ++f) {
                const Rational& c = action.at({a, u, f});
                if (c.is_zero()) continue;
                pairing.at({a, gd + u, f}) = h * c;
                pairing.at({gd + u, a, f}) = h * c;
                bracket.at({a, gd + u, gd + f}) = c;
                anchor.at({a, u, f}) = c;
            }
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t b = 0; b < gd; ++b)
            for (std::size_t c = 0; c < gd; ++c) bracket.at({a, b, c}) = g.bracket.at({a, b, c});
    res.structure = ECourantStructure(k, n, std::move(pairing), std::move(bracket), std::move(anchor));
    return res;
}

struct AutomorphismReport {
    AxiomStatus orthogonal, bracket_preserving, anchor_compatible;
    [[nodiscard]] bool pass() const {
        return orthogonal.pass && bracket_preserving.pass && anchor_compatible.pass;
    }
};

/// Checks the three automorphism conditions of (F, Phi) on all basis pairs:
/// orthogonality <Fx,Fy> = Phi<x,y>, bracket preservation, and
/// rho o F = Ad_Phi o rho. Phi must be invertible.
inline AutomorphismReport check_automorphism(const ECourantStructure& s, const Matrix& f,
                                             const Matrix& phi) {
    if (f.rows() != s.k_dim || f.cols() != s.k_dim || phi.rows() != s.e_dim || phi.cols() != s.e_dim)
        throw std::invalid_argument("check_automorphism: dimension mismatch");
    const auto phi_inv = inverse(phi);
    if (!phi_inv) throw std::invalid_argument("check_automorphism: Phi is singular");

    AutomorphismReport rep;
    const std::size_t k = s.k_dim;
    std::vector<std::vector<Rational>> fcol(k);
    for (std::size_t x = 0; x < k; ++x) {
        fcol[x].resize(k);
        for (std::size_t i = 0; i < k; ++i) fcol[x][i] = f(i, x);
    }
    for (std::size_t x = 0; x < k && rep.orthogonal.pass; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            auto lhs = s.pair(fcol[x], fcol[y]);
            const auto rhs = phi.apply(s.pair(basis_vector(k, x), basis_vector(k, y)));
            for (std::size_t e2 = 0; e2 < s.e_dim; ++e2) lhs[e2] -= rhs[e2];
            if (!all_zero(lhs)) {
                rep.orthogonal = {false, true, {x, y}};
                break;
            }
        }
    for (std::size_t x = 0; x < k && rep.bracket_preserving.pass; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            auto lhs = s.brk(fcol[x], fcol[y]);
            const auto rhs = f.apply(s.algebra().bracket_basis(x, y));
            for (std::size_t i = 0; i < k; ++i) lhs[i] -= rhs[i];
            if (!all_zero(lhs)) {
                rep.bracket_preserving = {false, true, {x, y}};
                break;
            }
        }
    for (std::size_t x = 0; x < k; ++x) {
        const Matrix lhs = s.anchor_op(fcol[x]);
        const Matrix rhs = phi * s.anchor_op(basis_vector(k, x)) * (*phi_inv);
        if (lhs != rhs) {
            rep.anchor_compatible = {false, true, {x}};
            break;
        }
    }
    return rep;
}

/// The induced automorphism Ad_Phi (+) Phi of omni(n), as a K-matrix.
inline Matrix induced_omni_automorphism(const PointFiber& pf, const Matrix& phi) {
    const auto phi_inv = inverse(phi);
    if (!phi_inv) throw std::invalid_argument("induced_omni_automorphism: Phi is singular");
    const std::size_t g = pf.gl_dim(), n = pf.n(), k = g + n;
    Matrix f(k, k);
    for (std::size_t a = 0; a < g; ++a) {
        const Matrix ea = pf.to_matrix(basis_vector(g, a));
        const Matrix ad = phi * ea * (*phi_inv);
        const auto coords = pf.to_coords(ad);
        for (std::size_t b = 0; b < g; ++b) f(b, a) = coords[b];
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) f(g + v, g + u) = phi(v, u);
    return f;
}

/// {Z : [Z, Y] = 0 for every Y}, the kernel of ad. For omni(n) this is the
/// image of rho_star, i.e. the jet part {0} (+) V.
inline Subspace left_center(const ECourantStructure& s) {
    Matrix m(s.k_dim * s.k_dim, s.k_dim);
    for (std::size_t z = 0; z < s.k_dim; ++z)
        for (std::size_t y = 0; y < s.k_dim; ++y)
            for (std::size_t c = 0; c < s.k_dim; ++c)
                m(y * s.k_dim + c, z) = s.bracket.at({z, y, c});
    return Subspace::kernel_of(m);
}

}  // namespace courantkit::ecourant

#endif

#ifndef COURANTKIT_LEIBNIZ_HPP
#define COURANTKIT_LEIBNIZ_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "courantkit/matrix.hpp"
#include "courantkit/point_fiber.hpp"
#include "courantkit/tensor.hpp"

namespace courantkit::leibniz {

/// Finite-dimensional Leibniz algebra given by structure constants:
/// bracket[i][j][k] is the e_k coefficient of [e_i, e_j]. The bracket need
/// not be skew; validity means the left Leibniz identity
/// [g1,[g2,g3]] = [[g1,g2],g3] + [g2,[g1,g3]] holds on all basis triples.
struct LeibnizAlgebra {
    std::size_t dim = 0;
    Tensor bracket;

    LeibnizAlgebra() = default;
    LeibnizAlgebra(std::size_t d, Tensor b) : dim(d), bracket(std::move(b)) {
        if (bracket.shape() != std::vector<std::size_t>{dim, dim, dim})
            throw std::invalid_argument("LeibnizAlgebra: bracket shape mismatch");
    }

    static LeibnizAlgebra abelian(std::size_t d) { return {d, Tensor({d, d, d})}; }

    [[nodiscard]] std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const {
        std::vector<Rational> out(dim);
        for (std::size_t k = 0; k < dim; ++k) out[k] = bracket.at({i, j, k});
        return out;
    }

    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
        std::vector<Rational> out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                const Rational c = u[i] * v[j];
                for (std::size_t k = 0; k < dim; ++k) out[k] += c * bracket.at({i, j, k});
            }
        }
        return out;
    }
};

/// Representation (bimodule) of a Leibniz algebra: left action g (x) V -> V
/// and right action V (x) g -> V.
struct LeibnizRep {
    std::size_t module_dim = 0;
    Tensor left;   // shape {dim g, m, m}: left[a][w][v] = e_v coeff of [e_a, e_w]
    Tensor right;  // shape {m, dim g, m}: right[w][a][v] = e_v coeff of [e_w, e_a]

    static LeibnizRep trivial(std::size_t alg_dim, std::size_t m) {
        LeibnizRep r;
        r.module_dim = m;
        r.left = Tensor({alg_dim, m, m});
        r.right = Tensor({m, alg_dim, m});
        return r;
    }

    [[nodiscard]] Matrix left_op(std::size_t a) const {
        Matrix m(module_dim, module_dim);
        for (std::size_t v = 0; v < module_dim; ++v)
            for (std::size_t w = 0; w < module_dim; ++w) m(v, w) = left.at({a, w, v});
        return m;
    }

    [[nodiscard]] Matrix right_op(std::size_t a) const {
        Matrix m(module_dim, module_dim);
        for (std::size_t v = 0; v < module_dim; ++v)
            for (std::size_t w = 0; w < module_dim; ++w) m(v, w) = right.at({w, a, v});
        return m;
    }
};

struct Violation {
    std::string what;
    std::vector<std::size_t> where;
};

struct CheckReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Leibniz residual [g1,[g2,g3]] - [[g1,g2],g3] - [g2,[g1,g3]] on coordinate
/// vectors. This doubles as the Jacobiator oracle for skew brackets.
inline std::vector<Rational> leibniz_residual(const LeibnizAlgebra& alg,
                                              const std::vector<Rational>& g1,
                                              const std::vector<Rational>& g2,
                                              const std::vector<Rational>& g3) {
    auto r = alg.apply(g1, alg.apply(g2, g3));
    const auto t2 = alg.apply(alg.apply(g1, g2), g3);
    const auto t3 = alg.apply(g2, alg.apply(g1, g3));
    for (std::size_t k = 0; k < alg.dim; ++k) r[k] -= t2[k] + t3[k];
    return r;
}

inline std::vector<Rational> basis_vector(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim);
    v[i] = 1;
    return v;
}

inline bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline CheckReport check_leibniz(const LeibnizAlgebra& alg) {
    CheckReport rep;
    for (std::size_t a = 0; a < alg.dim; ++a)
        for (std::size_t b = 0; b < alg.dim; ++b)
            for (std::size_t c = 0; c < alg.dim; ++c) {
                const auto res = leibniz_residual(alg, basis_vector(alg.dim, a),
                                                  basis_vector(alg.dim, b), basis_vector(alg.dim, c));
                if (!all_zero(res)) rep.violations.push_back({"leibniz identity", {a, b, c}});
            }
    return rep;
}

inline bool is_skew(const Tensor& bracket) {
    const std::size_t n = bracket.shape()[0];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (bracket.at({i, j, k}) != -bracket.at({j, i, k})) return false;
    return true;
}

/// Skew bracket satisfying Jacobi (checked via the Leibniz residual, which is
/// equivalent for skew brackets).
inline bool is_lie(const LeibnizAlgebra& alg) {
    return is_skew(alg.bracket) && check_leibniz(alg).ok();
}

/// The three representation axioms on all basis pairs:
///   l_{[g1,g2]} = [l_{g1}, l_{g2}]
///   r_{[g1,g2]} = [l_{g1}, r_{g2}]
///   r_{g2} l_{g1} = -r_{g2} r_{g1}
inline CheckReport check_rep(const LeibnizAlgebra& alg, const LeibnizRep& rep) {
    CheckReport out;
    std::vector<Matrix> l(alg.dim), r(alg.dim);
    for (std::size_t a = 0; a < alg.dim; ++a) {
        l[a] = rep.left_op(a);
        r[a] = rep.right_op(a);
    }
    auto op_of_bracket = [&](const std::vector<Matrix>& ops, std::size_t a, std::size_t b) {
        Matrix m(rep.module_dim, rep.module_dim);
        for (std::size_t t = 0; t < alg.dim; ++t) {
            const Rational& c = alg.bracket.at({a, b, t});
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < rep.module_dim; ++i)
                for (std::size_t j = 0; j < rep.module_dim; ++j) m(i, j) += c * ops[t](i, j);
        }
        return m;
    };
    for (std::size_t a = 0; a < alg.dim; ++a)
        for (std::size_t b = 0; b < alg.dim; ++b) {
            if (op_of_bracket(l, a, b) != l[a] * l[b] - l[b] * l[a])
                out.violations.push_back({"l_[g1,g2] = [l_g1, l_g2]", {a, b}});
            if (op_of_bracket(r, a, b) != l[a] * r[b] - r[b] * l[a])
                out.violations.push_back({"r_[g1,g2] = [l_g1, r_g2]", {a, b}});
            if (r[b] * l[a] != Matrix(rep.module_dim, rep.module_dim) - r[b] * r[a])
                out.violations.push_back({"r_g2 l_g1 = -r_g2 r_g1", {a, b}});
        }
    return out;
}

/// Tensor-power cochain: degree k map g^{(x)k} -> V, stored dense over all
/// index tuples (Leibniz cohomology is not alternating). Degree 0 is an
/// element of V.
struct Cochain {
    std::size_t degree = 0;
    std::size_t alg_dim = 0;
    std::size_t module_dim = 0;
    Tensor value;

    Cochain() = default;
    Cochain(std::size_t k, std::size_t g, std::size_t m) : degree(k), alg_dim(g), module_dim(m) {
        std::vector<std::size_t> shape(k, g);
        shape.push_back(m);
        value = Tensor(shape);
    }
    Cochain(std::size_t k, std::size_t g, std::size_t m, Tensor v)
        : degree(k), alg_dim(g), module_dim(m), value(std::move(v)) {
        std::vector<std::size_t> shape(k, g);
        shape.push_back(m);
        if (value.shape() != shape) throw std::invalid_argument("Cochain: shape mismatch");
    }

    [[nodiscard]] std::vector<Rational> eval(const std::vector<std::size_t>& args) const {
        std::vector<std::size_t> idx = args;
        idx.push_back(0);
        std::vector<Rational> out(module_dim);
        for (std::size_t v = 0; v < module_dim; ++v) {
            idx.back() = v;
            out[v] = value.at(idx);
        }
        return out;
    }
};

/// The Leibniz coboundary
///   (dc)(g_1..g_{k+1}) = sum_{i<=k} (-1)^{i+1} [g_i, c(..g_i omitted..)]
///                      + (-1)^{k+1} [c(g_1..g_k), g_{k+1}]
///                      + sum_{i<j} (-1)^i c(g_1,..,^g_i,..,[g_i,g_j],..,g_{k+1})
/// with 1-based indices as displayed; the bracket insertion replaces g_j.
inline Cochain coboundary(const LeibnizAlgebra& alg, const LeibnizRep& rep, const Cochain& c) {
    if (c.alg_dim != alg.dim || c.module_dim != rep.module_dim)
        throw std::invalid_argument("coboundary: cochain does not match algebra/representation");
    const std::size_t k = c.degree, g = alg.dim, m = rep.module_dim;
    Cochain out(k + 1, g, m);
    std::vector<std::size_t> tuple_shape(k + 1, g);
    for_each_index(tuple_shape, [&](const std::vector<std::size_t>& tup) {
        std::vector<Rational> acc(m);
        std::vector<std::size_t> rest;
        rest.reserve(k);
        // left-action terms
        for (std::size_t i = 0; i < k; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;
            rest.clear();
            for (std::size_t s = 0; s <= k; ++s)
                if (s != i) rest.push_back(tup[s]);
            const auto cv = c.eval(rest);
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t w = 0; w < m; ++w) {
                    const Rational& lc = rep.left.at({tup[i], w, v});
                    if (!lc.is_zero()) acc[v] += Rational(sign) * lc * cv[w];
                }
        }
        // right-action term
        {
            const int sign = k % 2 == 0 ? -1 : 1;  // (-1)^{k+1}
            rest.assign(tup.begin(), tup.end() - 1);
            const auto cv = c.eval(rest);
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t w = 0; w < m; ++w) {
                    const Rational& rc = rep.right.at({w, tup[k], v});
                    if (!rc.is_zero()) acc[v] += Rational(sign) * rc * cv[w];
                }
        }
        // bracket-substitution terms
        for (std::size_t i = 0; i + 1 <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                const int sign = i % 2 == 0 ? -1 : 1;  // (-1)^i with 1-based i
                for (std::size_t t = 0; t < g; ++t) {
                    const Rational& bc = alg.bracket.at({tup[i], tup[j], t});
                    if (bc.is_zero()) continue;
                    rest.clear();
                    for (std::size_t s = 0; s <= k; ++s) {
                        if (s == i) continue;
                        rest.push_back(s == j ? t : tup[s]);
                    }
                    const auto cv = c.eval(rest);
                    for (std::size_t v = 0; v < m; ++v) acc[v] += Rational(sign) * bc * cv[v];
                }
            }
        std::vector<std::size_t> idx = tup;
        idx.push_back(0);
        for (std::size_t v = 0; v < m; ++v) {
            idx.back() = v;
            out.value.at(idx) = acc[v];
        }
    });
    return out;
}

inline std::size_t pow_sz(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

/// Matrix of the coboundary from degree k to k+1 in the dense tuple basis:
/// matrix * vectorized(c) = vectorized(coboundary(c)). Columns are assembled
/// independently of the formula evaluator above.
inline Matrix coboundary_matrix(const LeibnizAlgebra& alg, const LeibnizRep& rep, std::size_t k) {
    const std::size_t g = alg.dim, m = rep.module_dim;
    const std::size_t rows = m * pow_sz(g, k + 1), cols = m * pow_sz(g, k);
    Matrix mat(rows, cols);
    auto flat = [&](const std::vector<std::size_t>& args, std::size_t v) {
        std::size_t idx = 0;
        for (auto a : args) idx = idx * g + a;
        return idx * m + v;
    };
    std::vector<std::size_t> tuple_shape(k + 1, g);
    std::vector<std::size_t> rest;
    rest.reserve(k);
    for_each_index(tuple_shape, [&](const std::vector<std::size_t>& tup) {
        for (std::size_t i = 0; i < k; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;
            rest.clear();
            for (std::size_t s = 0; s <= k; ++s)
                if (s != i) rest.push_back(tup[s]);
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t w = 0; w < m; ++w) {
                    const Rational& lc = rep.left.at({tup[i], w, v});
                    if (!lc.is_zero()) mat(flat(tup, v), flat(rest, w)) += Rational(sign) * lc;
                }
        }
        {
            const int sign = k % 2 == 0 ? -1 : 1;
            rest.assign(tup.begin(), tup.end() - 1);
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t w = 0; w < m; ++w) {
                    const Rational& rc = rep.right.at({w, tup[k], v});
                    if (!rc.is_zero()) mat(flat(tup, v), flat(rest, w)) += Rational(sign) * rc;
                }
        }
        for (std::size_t i = 0; i + 1 <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                const int sign = i % 2 == 0 ? -1 : 1;
                for (std::size_t t = 0; t < g; ++t) {
                    const Rational& bc = alg.bracket.at({tup[i], tup[j], t});
                    if (bc.is_zero()) continue;
                    rest.clear();
                    for (std::size_t s = 0; s <= k; ++s) {
                        if (s == i) continue;
                        rest.push_back(s == j ? t : tup[s]);
                    }
                    for (std::size_t v = 0; v < m; ++v)
                        mat(flat(tup, v), flat(rest, v)) += Rational(sign) * bc;
                }
            }
    });
    return mat;
}

/// dim HL^k = dim ker(d_k) - rank(d_{k-1}); every rank is computed by both
/// elimination backends, which must agree.
inline std::size_t cohomology_dim(const LeibnizAlgebra& alg, const LeibnizRep& rep, std::size_t k) {
    const Matrix dk = coboundary_matrix(alg, rep, k);
    const std::size_t ker = dk.cols() - rank_checked(dk);
    std::size_t im = 0;
    if (k > 0) im = rank_checked(coboundary_matrix(alg, rep, k - 1));
    return ker - im;
}

/// The canonical gl(V)-modules of the exact-structure classification.
/// Vector-type coefficients: [A, u] = A u and [v, B] = -B v.
inline LeibnizRep vector_module(const PointFiber& pf) {
    LeibnizRep r;
    r.module_dim = pf.n();
    r.left = pf.standard_action();
    r.right = Tensor({pf.n(), pf.gl_dim(), pf.n()});
    for (std::size_t a = 0; a < pf.gl_dim(); ++a)
        for (std::size_t w = 0; w < pf.n(); ++w)
            for (std::size_t v = 0; v < pf.n(); ++v)
                r.right.at({w, a, v}) = -r.left.at({a, w, v});
    return r;
}

/// Jet-type coefficients: [A, u] = L_A u = A u, and the right action
/// [u, B] = -L_B u + d<u, B> evaluated through the point dictionary.
/// At a point the two terms cancel; the formula is kept, not the zero.
inline LeibnizRep jet_module(const PointFiber& pf) {
    LeibnizRep r;
    r.module_dim = pf.n();
    r.left = pf.standard_action();
    r.right = Tensor({pf.n(), pf.gl_dim(), pf.n()});
    const Tensor& act = r.left;
    for (std::size_t a = 0; a < pf.gl_dim(); ++a)
        for (std::size_t w = 0; w < pf.n(); ++w)
            for (std::size_t v = 0; v < pf.n(); ++v) {
                const Rational lie_term = -act.at({a, w, v});   // -L_B u
                const Rational jet_term = act.at({a, w, v});    // d<u,B> with d = id
                r.right.at({w, a, v}) = lie_term + jet_term;
            }
    return r;
}

inline LeibnizAlgebra gl_algebra(const PointFiber& pf) {
    return {pf.gl_dim(), pf.commutator()};
}

/// A 2-cochain Theta with jet-type values, regarded as a 3-cochain with
/// vector-type values: hat(Theta)(d, r, t) = <Theta(d, r), t> = t  Theta(d, r).
inline Cochain hat(const PointFiber& pf, const Cochain& theta) {
    if (theta.degree != 2 || theta.alg_dim != pf.gl_dim() || theta.module_dim != pf.n())
        throw std::invalid_argument("hat: expects a 2-cochain on gl(V) with jet-type values");
    Cochain out(3, pf.gl_dim(), pf.n());
    for (std::size_t a = 0; a < pf.gl_dim(); ++a)
        for (std::size_t b = 0; b < pf.gl_dim(); ++b) {
            const auto tv = theta.eval({a, b});
            for (std::size_t c = 0; c < pf.gl_dim(); ++c) {
                // <v, E_c> = E_c v
                const std::size_t i = pf.unit_row(c), j = pf.unit_col(c);
                out.value.at({a, b, c, i}) += tv[j];
            }
        }
    return out;
}

/// Matrix of hat on vectorized cochains (injective, so a bijection onto its
/// image); used for the closedness lemma at subspace level.
inline Matrix hat_matrix(const PointFiber& pf) {
    const std::size_t g = pf.gl_dim(), m = pf.n();
    Matrix mat(m * g * g * g, m * g * g);
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c) {
                const std::size_t i = pf.unit_row(c), j = pf.unit_col(c);
                mat(((a * g + b) * g + c) * m + i, (a * g + b) * m + j) += 1;
            }
    return mat;
}

}  // namespace courantkit::leibniz

#endif

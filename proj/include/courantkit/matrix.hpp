#ifndef COURANTKIT_MATRIX_HPP
#define COURANTKIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "courantkit/rational.hpp"

namespace courantkit {

/// Dense row-major matrix of exact rationals.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<Rational>& entries() const { return e_; }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    [[nodiscard]] std::vector<Rational> row(std::size_t i) const {
        return {e_.begin() + static_cast<long>(i * cols_), e_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix multiply: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix add: dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix subtract: dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// a * v for a column vector given as a flat sequence.
    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix apply: dimension mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form via Gauss-Jordan elimination.
/// Deterministic: the pivot in each column is the first nonzero entry at or
/// below the current row, no magnitude-based pivoting.
inline RrefResult rref(Matrix m) {
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

/// Rank by fraction-free Bareiss elimination over the integers, the
/// independent cross-check for every Gaussian rank in the artifact. Rows are
/// scaled by their denominator lcm first (rank-preserving), then eliminated
/// with exact integer division only.
inline std::size_t rank_bareiss(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class d = m(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Both elimination strategies must agree; throws if they ever disagree.
inline std::size_t rank_checked(const Matrix& m) {
    const std::size_t g = rref(m).rank;
    const std::size_t b = rank_bareiss(m);
    if (g != b) throw std::logic_error("rank mismatch between Gauss and Bareiss backends");
    return g;
}

/// Basis of the solution space of m x = 0, one row per kernel vector,
/// in the canonical free-variable parametrization of the RREF.
inline Matrix kernel_basis(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(free_cols.size(), m.cols());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        const std::size_t f = free_cols[fi];
        k(fi, f) = 1;
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi) k(fi, rr.pivots[pi]) = -rr.m(pi, f);
    }
    return k;
}

struct LinearSolution {
    /// One particular solution per right-hand-side column (cols(a) x cols(b));
    /// free variables are zero, so the representative is canonical.
    Matrix particular;
    /// Rows span all homogeneous solutions of a x = 0.
    Matrix kernel;
};

/// Exact solve of a x = b (b may have several columns). On inconsistency
/// returns nullopt; the rank certificate rank(a) < rank([a|b]) is what failed.
inline std::optional<LinearSolution> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    const RrefResult rr = rref(aug);
    for (auto c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular = Matrix(a.cols(), b.cols());
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            sol.particular(rr.pivots[pi], j) = rr.m(pi, a.cols() + j);
    sol.kernel = kernel_basis(a);
    return sol;
}

/// Solves for the single-column case and returns the flat solution vector.
inline std::optional<std::vector<Rational>> solve_vector(const Matrix& a, const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_vector: dimension mismatch");
    Matrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    auto sol = solve(a, bm);
    if (!sol) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = sol->particular(i, 0);
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    auto sol = solve(m, Matrix::identity(m.rows()));
    if (!sol || rref(m).rank != m.rows()) return std::nullopt;
    return sol->particular;
}

}  // namespace courantkit

#endif

#ifndef COURANTKIT_SUBSPACE_HPP
#define COURANTKIT_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "courantkit/matrix.hpp"

namespace courantkit {

/// Linear subspace of Q^ambient, canonicalized to the unique RREF basis at
/// construction so that equality is entrywise basis equality. Two spans of
/// the same space always produce identical Subspace values.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_rows(const Matrix& rows) {
        Subspace s(rows.cols());
        const RrefResult rr = rref(rows);
        Matrix b(rr.rank, rows.cols());
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = rr.m(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace from_vectors(std::size_t ambient, const std::vector<std::vector<Rational>>& vecs) {
        Matrix m(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].size() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vecs[i][j];
        }
        return from_rows(m);
    }

    static Subspace full(std::size_t ambient) { return from_rows(Matrix::identity(ambient)); }

    /// Solution space of m x = 0.
    static Subspace kernel_of(const Matrix& m) { return from_rows(kernel_basis(m)); }

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] std::vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }

    [[nodiscard]] bool contains(const std::vector<Rational>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace contains: ambient mismatch");
        // Reduce v against the RREF basis; membership iff the residual is zero.
        std::vector<Rational> w = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0;
            while (p < ambient_ && basis_(i, p).is_zero()) ++p;
            if (p == ambient_) continue;
            if (w[p].is_zero()) continue;
            const Rational f = w[p];
            for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_(i, j);
        }
        for (const auto& x : w)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Coordinates of v in the stored basis, if v lies in the subspace.
    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
        return solve_vector(basis_.transpose(), v);
    }

    [[nodiscard]] bool contains(const Subspace& other) const {
        check_ambient(other);
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    [[nodiscard]] Subspace sum(const Subspace& other) const {
        check_ambient(other);
        Matrix st(dim() + other.dim(), ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) st(i, j) = basis_(i, j);
        for (std::size_t i = 0; i < other.dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) st(dim() + i, j) = other.basis_(i, j);
        return from_rows(st);
    }

    [[nodiscard]] Subspace intersect(const Subspace& other) const {
        check_ambient(other);
        // x in U cap W iff x = sum a_i u_i = sum b_j w_j; solve for (a,-b) in
        // the kernel of [U^T | W^T] and map the a-part back through U.
        Matrix sys(ambient_, dim() + other.dim());
        for (std::size_t j = 0; j < ambient_; ++j) {
            for (std::size_t i = 0; i < dim(); ++i) sys(j, i) = basis_(i, j);
            for (std::size_t i = 0; i < other.dim(); ++i) sys(j, dim() + i) = other.basis_(i, j);
        }
        const Matrix k = kernel_basis(sys);
        Matrix vecs(k.rows(), ambient_);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < ambient_; ++j) vecs(r, j) += k(r, i) * basis_(i, j);
        return from_rows(vecs);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    void check_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    }

    std::size_t ambient_;
    Matrix basis_;
};

}  // namespace courantkit

#endif

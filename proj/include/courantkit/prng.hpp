#ifndef COURANTKIT_PRNG_HPP
#define COURANTKIT_PRNG_HPP

#include <cstdint>
#include <vector>

#include "courantkit/matrix.hpp"
#include "courantkit/tensor.hpp"

namespace courantkit {

/// splitmix64: the documented 64-bit mixing generator driving every random
/// sample in the artifact. The seed fully determines all outputs, so reports
/// are byte-reproducible.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Small exact value: numerator in [-9, 9], denominator in {1, 2, 3}.
    Rational rational() {
        const long num = static_cast<long>(below(19)) - 9;
        const long den = static_cast<long>(below(3)) + 1;
        return {num, den};
    }

    Tensor tensor(const std::vector<std::size_t>& shape) {
        Tensor t(shape);
        for (auto& x : t.entries()) x = rational();
        return t;
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }

    std::vector<Rational> vector(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    /// Invertible matrix by rejection sampling; terminates almost surely.
    Matrix invertible_matrix(std::size_t n) {
        for (;;) {
            Matrix m = matrix(n, n);
            if (rref(m).rank == n) return m;
        }
    }

    /// Random skew bilinear map V (x) V -> V (shape n,n,n).
    Tensor skew_bracket(std::size_t n) {
        Tensor t({n, n, n});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational v = rational();
                    t.at({i, j, k}) = v;
                    t.at({j, i, k}) = -v;
                }
        return t;
    }

  private:
    std::uint64_t state_;
};

}  // namespace courantkit

#endif

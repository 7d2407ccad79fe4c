#ifndef COURANTKIT_TENSOR_HPP
#define COURANTKIT_TENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "courantkit/rational.hpp"

namespace courantkit {

/// Dense multi-index array of rationals encoding a multilinear map between
/// based vector spaces. By convention the last slot is the codomain basis
/// index; the layout is row-major (last index fastest).
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), e_(size_of(shape_)) {}
    Tensor(std::vector<std::size_t> shape, std::vector<Rational> entries)
        : shape_(std::move(shape)), e_(std::move(entries)) {
        if (e_.size() != size_of(shape_)) throw std::invalid_argument("Tensor: entry count mismatch");
    }

    [[nodiscard]] const std::vector<std::size_t>& shape() const { return shape_; }
    [[nodiscard]] std::size_t arity() const { return shape_.size(); }
    [[nodiscard]] std::size_t size() const { return e_.size(); }
    [[nodiscard]] const std::vector<Rational>& entries() const { return e_; }
    [[nodiscard]] std::vector<Rational>& entries() { return e_; }

    [[nodiscard]] std::size_t offset(const std::vector<std::size_t>& idx) const {
        std::size_t o = 0;
        for (std::size_t s = 0; s < shape_.size(); ++s) o = o * shape_[s] + idx[s];
        return o;
    }

    Rational& at(const std::vector<std::size_t>& idx) { return e_[offset(idx)]; }
    const Rational& at(const std::vector<std::size_t>& idx) const { return e_[offset(idx)]; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.shape_ == b.shape_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw std::invalid_argument("Tensor add: shape mismatch");
        Tensor c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw std::invalid_argument("Tensor subtract: shape mismatch");
        Tensor c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
        return c;
    }

    friend Tensor operator*(const Rational& s, Tensor t) {
        for (auto& x : t.e_) x *= s;
        return t;
    }

    static std::size_t size_of(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (auto s : shape) n *= s;
        return n;
    }

  private:
    std::vector<std::size_t> shape_;
    std::vector<Rational> e_;
};

/// Walks all multi-indices of a shape in row-major order.
template <typename F>
void for_each_index(const std::vector<std::size_t>& shape, F&& f) {
    std::vector<std::size_t> idx(shape.size(), 0);
    if (Tensor::size_of(shape) == 0) return;
    for (;;) {
        f(idx);
        std::size_t s = shape.size();
        while (s > 0) {
            --s;
            if (++idx[s] < shape[s]) break;
            idx[s] = 0;
            if (s == 0) return;
        }
        if (shape.empty()) return;
    }
}

/// Contracts one slot with a coordinate vector; reduces arity by one.
inline Tensor tensor_contract(const Tensor& t, std::size_t slot, const std::vector<Rational>& v) {
    if (slot >= t.arity()) throw std::invalid_argument("tensor_contract: slot out of range");
    if (v.size() != t.shape()[slot]) throw std::invalid_argument("tensor_contract: shape mismatch");
    std::vector<std::size_t> out_shape;
    for (std::size_t s = 0; s < t.arity(); ++s)
        if (s != slot) out_shape.push_back(t.shape()[s]);
    Tensor out(out_shape);
    std::vector<std::size_t> full(t.arity());
    for_each_index(out_shape, [&](const std::vector<std::size_t>& idx) {
        std::size_t k = 0;
        for (std::size_t s = 0; s < t.arity(); ++s)
            if (s != slot) full[s] = idx[k++];
        Rational acc;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            full[slot] = i;
            acc += v[i] * t.at(full);
        }
        out.at(idx) = acc;
    });
    return out;
}

namespace detail {
inline void permutations_with_sign(std::size_t k,
                                   std::vector<std::pair<std::vector<std::size_t>, int>>& out) {
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    // Generate in lexicographic order, computing each sign by inversion count.
    do {
        int inv = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (p[i] > p[j]) ++inv;
        out.emplace_back(p, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
}
}  // namespace detail

/// Antisymmetrizes over the given slots (equal dimensions required):
/// the signed average over all permutations of those slots. Idempotent, and
/// annihilates tensors symmetric in any two of the slots.
inline Tensor antisymmetrize(const Tensor& t, const std::vector<std::size_t>& slots) {
    if (slots.size() < 2) return t;
    for (auto s : slots) {
        if (s >= t.arity()) throw std::invalid_argument("antisymmetrize: slot out of range");
        if (t.shape()[s] != t.shape()[slots[0]])
            throw std::invalid_argument("antisymmetrize: slot dimensions differ");
    }
    std::vector<std::pair<std::vector<std::size_t>, int>> perms;
    detail::permutations_with_sign(slots.size(), perms);
    Rational norm(1, static_cast<long>(perms.size()));
    Tensor out(t.shape());
    std::vector<std::size_t> src(t.arity());
    for_each_index(t.shape(), [&](const std::vector<std::size_t>& idx) {
        Rational acc;
        for (const auto& [p, sign] : perms) {
            src = idx;
            for (std::size_t s = 0; s < slots.size(); ++s) src[slots[s]] = idx[slots[p[s]]];
            acc += Rational(sign) * t.at(src);
        }
        out.at(idx) = norm * acc;
    });
    return out;
}

/// Antisymmetrizes over all slots except the last (codomain) one.
inline Tensor antisymmetrize_domain(const Tensor& t) {
    if (t.arity() < 3) return t;
    std::vector<std::size_t> slots(t.arity() - 1);
    std::iota(slots.begin(), slots.end(), 0);
    return antisymmetrize(t, slots);
}

inline bool is_alternating(const Tensor& t) { return antisymmetrize_domain(t) == t; }

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
/// This ordering is the global wedge-basis convention; every module indexes
/// wedge coordinates through it.
inline std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        out.push_back(idx);
        std::size_t s = k;
        while (s > 0) {
            --s;
            if (idx[s] + (k - s) < n) {
                ++idx[s];
                for (std::size_t j = s + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (s == 0) return out;
        }
        if (k == 0) return out;
    }
}

/// Position of a strictly increasing tuple in the lexicographic wedge order.
inline std::size_t wedge_rank(std::size_t n, const std::vector<std::size_t>& tuple) {
    const std::size_t k = tuple.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    auto choose = [](std::size_t a, std::size_t b) -> std::size_t {
        if (b > a) return 0;
        std::size_t r = 1;
        for (std::size_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t v = prev; v < tuple[s]; ++v) rank += choose(n - v - 1, k - s - 1);
        prev = tuple[s] + 1;
    }
    return rank;
}

/// Sorts an arbitrary tuple into increasing order; returns the permutation
/// sign, or 0 if two entries coincide.
inline int sort_tuple(std::vector<std::size_t>& tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace courantkit

#endif

#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace prefkernel {

inline int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }

/// Packed bit rows over a fixed column count. Backing store for relation
/// matrices and comparability graphs.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * words_per_row_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_per_row_; }

    bool get(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v = true) {
        std::uint64_t& w = row_mut(i)[j >> 6];
        std::uint64_t bit = std::uint64_t(1) << (j & 63);
        if (v) w |= bit; else w &= ~bit;
    }

    const std::uint64_t* row(int i) const { return data_.data() + std::size_t(i) * words_per_row_; }
    std::uint64_t* row_mut(int i) { return data_.data() + std::size_t(i) * words_per_row_; }

    /// row(sub) subset of row(sup)?
    bool row_subset(int sub, int sup) const {
        const std::uint64_t* a = row(sub);
        const std::uint64_t* b = row(sup);
        for (int w = 0; w < words_per_row_; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : data_) c += popcount64(w);
        return c;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Dynamic bitset over vertex positions, used by the clique enumerator.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : w_) c += popcount64(w);
        return c;
    }
    void fill_first(int k) {  // set positions [0, k)
        for (int i = 0; i < k; ++i) set(i);
    }

    /// Smallest set position >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int pos = (wi << 6) + __builtin_ctzll(w);
                return pos < n_ ? pos : -1;
            }
            if (++wi >= int(w_.size())) return -1;
            w = w_[wi];
        }
    }

    int intersect_count(const std::uint64_t* other) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += popcount64(w_[i] & other[i]);
        return c;
    }
    void intersect_into(const std::uint64_t* other, Bits& out) const {
        out.n_ = n_;
        out.w_.resize(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i] & other[i];
    }
    /// this &= ~{v}; plus subtraction of another set
    void subtract(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    const std::uint64_t* words() const { return w_.data(); }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace prefkernel

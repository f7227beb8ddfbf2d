#pragma once
#include <cstdint>
#include <cstddef>
#include <vector>
#include <stdexcept>

namespace af {

struct af_error : std::runtime_error {
    std::string code;
    af_error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

/* Dense bit-packed vector over GF(2). */
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const F2Vector& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }
    bool operator==(const F2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/* Row-major bit-packed matrix.  rows() x cols(), acting on column vectors. */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c)
        : r_(r), c_(c), stride_((c + 63) / 64), w_(r * stride_, 0) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * stride_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t m = uint64_t(1) << (j & 63);
        uint64_t& word = w_[i * stride_ + (j >> 6)];
        if (v) word |= m; else word &= ~m;
    }
    void flip(std::size_t i, std::size_t j) {
        w_[i * stride_ + (j >> 6)] ^= uint64_t(1) << (j & 63);
    }

    void xor_row(std::size_t dst, std::size_t src) {
        uint64_t* d = &w_[dst * stride_];
        const uint64_t* s = &w_[src * stride_];
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < stride_; ++k)
            std::swap(w_[a * stride_ + k], w_[b * stride_ + k]);
    }
    bool row_is_zero(std::size_t i) const {
        for (std::size_t k = 0; k < stride_; ++k)
            if (w_[i * stride_ + k]) return false;
        return true;
    }

    F2Vector row(std::size_t i) const {
        F2Vector v(c_);
        for (std::size_t k = 0; k < stride_; ++k) v.words()[k] = w_[i * stride_ + k];
        return v;
    }
    void set_row(std::size_t i, const F2Vector& v) {
        for (std::size_t k = 0; k < stride_; ++k) w_[i * stride_ + k] = v.words()[k];
    }

    F2Vector apply(const F2Vector& v) const;     // M * v
    F2Matrix multiply(const F2Matrix& o) const;  // M * o
    F2Matrix transposed() const;
    bool is_zero() const;

private:
    std::size_t r_ = 0, c_ = 0, stride_ = 0;
    std::vector<uint64_t> w_;
};

std::size_t rank(F2Matrix M);
std::vector<F2Vector> kernel_basis(const F2Matrix& M);

/* dim ker(d_out) - rank(d_in) for a composable pair; throws CompositionNotZero. */
std::size_t homology_dimension(const F2Matrix& d_in, const F2Matrix& d_out);

/* Incremental echelon basis of a subspace; add() returns false when the
   vector was already in the span.  Pivots are lowest set bit positions
   unless a custom column order is installed. */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
    bool add(F2Vector v);
    /* reduce v against the stored basis; leaves the canonical coset rep */
    void reduce(F2Vector& v) const;
    std::size_t size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<F2Vector>& rows() const { return rows_; }
    bool contains(F2Vector v) const { reduce(v); return v.is_zero(); }

private:
    std::size_t dim_;
    std::vector<F2Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/* Solve M x = b; returns empty optional-style flag via bool.  Any solution. */
bool solve(const F2Matrix& M, const F2Vector& b, F2Vector& x_out);

} // namespace af

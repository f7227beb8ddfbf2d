#include "ainfty/f2.hpp"

#include <bit>

namespace af {

F2Vector F2Matrix::apply(const F2Vector& v) const {
    F2Vector out(r_);
    for (std::size_t i = 0; i < r_; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = &w_[i * stride_];
        for (std::size_t k = 0; k < stride_; ++k) acc ^= row[k] & v.words()[k];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

F2Matrix F2Matrix::multiply(const F2Matrix& o) const {
    F2Matrix out(r_, o.cols());
    /* row i of out = XOR of rows of o selected by row i of this */
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(i, j))
                for (std::size_t k = 0; k < out.stride_; ++k)
                    out.w_[i * out.stride_ + k] ^= o.w_[j * o.stride_ + k];
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix out(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

bool F2Matrix::is_zero() const {
    for (uint64_t x : w_) if (x) return false;
    return true;
}

std::size_t rank(F2Matrix M) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < M.cols() && r < M.rows(); ++col) {
        std::size_t piv = r;
        while (piv < M.rows() && !M.get(piv, col)) ++piv;
        if (piv == M.rows()) continue;
        M.swap_rows(r, piv);
        for (std::size_t i = 0; i < M.rows(); ++i)
            if (i != r && M.get(i, col)) M.xor_row(i, r);
        ++r;
    }
    return r;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& M) {
    std::size_t rows = M.rows(), cols = M.cols();
    F2Matrix R = M;
    std::vector<std::ptrdiff_t> pivot_row_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && !R.get(piv, col)) ++piv;
        if (piv == rows) continue;
        R.swap_rows(r, piv);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && R.get(i, col)) R.xor_row(i, r);
        pivot_row_of_col[col] = (std::ptrdiff_t)r;
        ++r;
    }
    std::vector<F2Vector> out;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        F2Vector v(cols);
        v.set(free_col, true);
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_row_of_col[col] >= 0 &&
                R.get((std::size_t)pivot_row_of_col[col], free_col))
                v.set(col, true);
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t homology_dimension(const F2Matrix& d_in, const F2Matrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw af_error("CompositionNotZero", "dimension mismatch between d_in and d_out");
    if (!d_out.multiply(d_in).is_zero())
        throw af_error("CompositionNotZero", "d_out * d_in != 0");
    std::size_t zk = d_out.cols() - rank(d_out);
    std::size_t bk = rank(d_in);
    return zk - bk;
}

bool EchelonBasis::add(F2Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v.xor_with(rows_[i]);
    if (v.is_zero()) return false;
    std::size_t p = 0;
    while (!v.get(p)) ++p;
    /* back-substitute so stored rows stay fully reduced */
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i].xor_with(v);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

void EchelonBasis::reduce(F2Vector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v.xor_with(rows_[i]);
}

bool solve(const F2Matrix& M, const F2Vector& b, F2Vector& x_out) {
    std::size_t rows = M.rows(), cols = M.cols();
    F2Matrix R = M;
    F2Vector rhs = b;
    std::vector<std::ptrdiff_t> pivot_col_of_row(rows, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && !R.get(piv, col)) ++piv;
        if (piv == rows) continue;
        R.swap_rows(r, piv);
        { bool t = rhs.get(r); rhs.set(r, rhs.get(piv)); rhs.set(piv, t); }
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && R.get(i, col)) {
                R.xor_row(i, r);
                if (rhs.get(r)) rhs.flip(i);
            }
        pivot_col_of_row[r] = (std::ptrdiff_t)col;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs.get(i)) return false;
    x_out = F2Vector(cols);
    for (std::size_t i = 0; i < r; ++i)
        if (rhs.get(i)) x_out.set((std::size_t)pivot_col_of_row[i], true);
    return true;
}

} // namespace af

#pragma once

#include <vector>

#include "grafotop/rational.hpp"

namespace grafotop {

/// Dense integer matrix. Sizes here stay small (clique counts at desk
/// scale), so simplicity wins over sparse machinery.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw internal_error("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const Integer& v = at(r, k);
                if (v == 0)
                    continue;
                for (int c = 0; c < o.cols_; ++c)
                    p.at(r, c) += v * o.at(k, c);
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw internal_error("matrix sum shape mismatch");
        IntMatrix s(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            s.data_[i] = data_[i] + o.data_[i];
        return s;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0)
                return false;
        return true;
    }

    Integer trace() const {
        Integer t = 0;
        for (int i = 0; i < std::min(rows_, cols_); ++i)
            t += at(i, i);
        return t;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
inline int rank_bareiss(IntMatrix m) {
    int rank = 0;
    Integer prev = 1;
    int rows = m.rows(), cols = m.cols();
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (m.at(r, pc) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != pr)
            for (int c = 0; c < cols; ++c)
                std::swap(m.at(pivot, c), m.at(pr, c));
        const Integer piv = m.at(pr, pc);
        for (int r = pr + 1; r < rows; ++r) {
            const Integer head = m.at(r, pc);
            for (int c = pc; c < cols; ++c)
                m.at(r, c) = (piv * m.at(r, c) - head * m.at(pr, c)) / prev;
        }
        prev = piv;
        ++rank;
        ++pr;
    }
    return rank;
}

inline int nullity(const IntMatrix& m) { return m.cols() - rank_bareiss(m); }

/// Basis of the integer kernel of m, as columns (exact, via rational
/// elimination then clearing denominators).
inline std::vector<std::vector<Rational>> kernel_basis(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a[r][c] = Rational(m.at(r, c));
    std::vector<int> pivot_col;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][pc] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[pivot], a[pr]);
        Rational inv = a[pr][pc];
        for (int c = 0; c < cols; ++c)
            a[pr][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc] == 0)
                continue;
            Rational f = a[r][pc];
            for (int c = 0; c < cols; ++c)
                a[r][c] -= f * a[pr][c];
        }
        pivot_col.push_back(pc);
        ++pr;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace grafotop

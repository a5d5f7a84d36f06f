#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gia {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers, row-major. Degenerate
/// shapes (zero rows or columns) are first-class values.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
    }

    IntMatrix(int rows, int cols, std::vector<BigInt> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() !=
            static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const BigInt& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> entries_;
};

/// Smith normal form u·a·v = diag(d): u, v unimodular, d a nonnegative
/// divisibility chain with zeros trailing.
struct SmithForm {
    std::vector<BigInt> d;
    IntMatrix u;
    IntMatrix v;

    int rank() const {
        int r = 0;
        for (const BigInt& x : d)
            if (x != 0) ++r;
        return r;
    }
};

/// Diagonalizes by unimodular row/column operations, exact arithmetic
/// throughout. Pivot choice: smallest nonzero absolute value of the working
/// submatrix, shrunk by remainder steps until it divides everything.
inline SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    const int m = a.rows();
    const int n = a.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto add_row = [&](int dst, int src, const BigInt& q) {  // row_dst += q * row_src
        for (int c = 0; c < n; ++c) a.at(dst, c) += q * a.at(src, c);
        for (int c = 0; c < m; ++c) u.at(dst, c) += q * u.at(src, c);
    };
    auto add_col = [&](int dst, int src, const BigInt& q) {  // col_dst += q * col_src
        for (int r = 0; r < m; ++r) a.at(r, dst) += q * a.at(r, src);
        for (int r = 0; r < n; ++r) v.at(r, dst) += q * v.at(r, src);
    };

    const int lim = std::min(m, n);
    int t = 0;
    while (t < lim) {
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            if (a.at(i, t) == 0) continue;
            BigInt q = a.at(i, t) / a.at(t, t);
            add_row(i, t, -q);
            if (a.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < n; ++j) {
            if (a.at(t, j) == 0) continue;
            BigInt q = a.at(t, j) / a.at(t, t);
            add_col(j, t, -q);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // remainders shrank the pivot candidates

        int bad_i = -1;
        for (int i = t + 1; i < m && bad_i < 0; ++i)
            for (int j = t + 1; j < n; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    bad_i = i;
                    break;
                }
        if (bad_i >= 0) {
            add_row(t, bad_i, 1);  // pull the offending row up, then re-reduce
            continue;
        }

        if (a.at(t, t) < 0) {
            for (int c = 0; c < n; ++c) a.at(t, c) = -a.at(t, c);
            for (int c = 0; c < m; ++c) u.at(t, c) = -u.at(t, c);
        }
        ++t;
    }

    SmithForm out;
    out.d.reserve(static_cast<std::size_t>(lim));
    for (int k = 0; k < lim; ++k) out.d.push_back(a.at(k, k));
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

}  // namespace gia

#pragma once

#include <vector>

#include "polydyn/errors.hpp"

namespace polydyn {

/// Minimal row-major dense matrix, just enough for Jacobians, linear parts,
/// and eigenbasis bookkeeping.
template <class T>
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {
        if (rows < 1 || cols < 1) throw DimensionError("matrix must be at least 1x1");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const T& at(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

}  // namespace polydyn

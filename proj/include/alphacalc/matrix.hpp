#pragma once

#include <initializer_list>
#include <vector>

#include "alphacalc/errors.hpp"
#include "alphacalc/numeric.hpp"

namespace alphacalc {

using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// Dense row-major matrix over an exact scalar type.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
    Mat(int r, int c, std::initializer_list<T> values) : Mat(r, c) {
        if (static_cast<int>(values.size()) != r * c)
            throw ValidationError("matrix initializer size mismatch");
        std::copy(values.begin(), values.end(), data.begin());
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    T& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    std::vector<T> row(int r) const {
        return std::vector<T>(data.begin() + static_cast<size_t>(r) * cols,
                              data.begin() + static_cast<size_t>(r + 1) * cols);
    }
    std::vector<T> col(int c) const {
        std::vector<T> out(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) out[i] = at(i, c);
        return out;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

using IntMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols != b.rows) throw ValidationError("matrix product dimension mismatch");
    Mat<T> out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const T& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

template <class T>
std::vector<T> mul(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw ValidationError("matrix-vector dimension mismatch");
    std::vector<T> out(static_cast<size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        T acc(0);
        for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
    Mat<T> out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMat a);

}  // namespace alphacalc

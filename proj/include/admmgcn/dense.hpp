#pragma once

#include <initializer_list>
#include <vector>

#include "admmgcn/common.hpp"

namespace admmgcn {

// Row-major dense matrix, double precision.
struct DenseMatrix {
    i64 rows = 0;
    i64 cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(i64 r, i64 c, double fill = 0.0) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), fill) {}
    DenseMatrix(std::initializer_list<std::initializer_list<double>> init);

    double& at(i64 i, i64 j) { return data[static_cast<std::size_t>(i * cols + j)]; }
    double at(i64 i, i64 j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
    double* row_ptr(i64 i) { return data.data() + i * cols; }
    const double* row_ptr(i64 i) const { return data.data() + i * cols; }
    i64 size() const { return rows * cols; }

    bool same_shape(const DenseMatrix& o) const { return rows == o.rows && cols == o.cols; }
    bool all_finite() const;
};

bool operator==(const DenseMatrix& a, const DenseMatrix& b);

// c = a * b
DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b);
// c = a^T * b
DenseMatrix gemm_tn(const DenseMatrix& a, const DenseMatrix& b);
// c = a * b^T
DenseMatrix gemm_nt(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double s);
void add_in_place(DenseMatrix& a, const DenseMatrix& b);
void axpy(DenseMatrix& y, double alpha, const DenseMatrix& x); // y += alpha*x

double frob_inner(const DenseMatrix& a, const DenseMatrix& b);
double frob_norm2(const DenseMatrix& a); // squared Frobenius norm
double frob_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Relative Frobenius distance, denominator floored at 1 for near-zero references.
double rel_frob_dist(const DenseMatrix& a, const DenseMatrix& ref);

} // namespace admmgcn

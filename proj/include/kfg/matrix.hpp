#pragma once

#include <vector>

#include "kfg/scalar.hpp"

namespace kfg {

/// Dense matrix of exact scalars. Row-major storage.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    /// c * I test; returns the scalar c if the matrix is scalar.
    std::optional<Scalar> as_scalar_multiple_of_identity() const;

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& c, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Flattened row-major copy of the entries.
    const std::vector<Scalar>& data() const { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// Rank by fraction-free-ish Gaussian elimination (exact).
int rank(Mat m);

/// Basis of the right nullspace { v : m v = 0 }, each vector of length cols.
std::vector<std::vector<Scalar>> nullspace(Mat m);

/// Inverse if square and nonsingular.
std::optional<Mat> inverse(Mat m);

/// Solves m x = rhs when consistent (any one solution).
std::optional<std::vector<Scalar>> solve(Mat m, std::vector<Scalar> rhs);

}  // namespace kfg

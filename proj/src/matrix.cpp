#include "kfg/matrix.hpp"

namespace kfg {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Scalar> Mat::as_scalar_multiple_of_identity() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    Scalar c = at(0, 0);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k)
            if (at(r, k) != (r == k ? c : Scalar::zero())) return std::nullopt;
    return c;
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix shape mismatch");
    Mat out(a.rows_, a.cols_);
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw error("matrix shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& v = a.at(r, k);
            if (v.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                const Scalar& w = b.at(k, c);
                if (!w.is_zero()) out.at(r, c) += v * w;
            }
        }
    return out;
}

Mat operator*(const Scalar& c, const Mat& a) {
    Mat out(a.rows_, a.cols_);
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = c * a.a_[i];
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            const Scalar& v = a.at(ar, ac);
            if (v.is_zero()) continue;
            for (int br = 0; br < b.rows(); ++br)
                for (int bc = 0; bc < b.cols(); ++bc)
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
        }
    return out;
}

namespace {

// Row-echelon elimination in place; returns pivot columns.
std::vector<int> echelon(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<Scalar>> nullspace(Mat m) {
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> inverse(Mat m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Scalar(1);
    }
    auto pivots = echelon(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        return std::nullopt;
    Mat out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

std::optional<std::vector<Scalar>> solve(Mat m, std::vector<Scalar> rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw error("solve: rhs size mismatch");
    int n = m.cols();
    Mat aug(m.rows(), n + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = rhs[size_t(r)];
    }
    auto pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(static_cast<size_t>(n));
    for (size_t r = 0; r < pivots.size(); ++r) x[size_t(pivots[r])] = aug.at(int(r), n);
    return x;
}

}  // namespace kfg

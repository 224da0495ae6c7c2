#include "cs/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cs {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("Matrix: ragged rows");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Scalar Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Scalar s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

Matrix Matrix::pow(std::size_t k) const {
    if (!is_square()) throw std::invalid_argument("pow: matrix not square");
    Matrix acc = Matrix::identity(rows_);
    for (std::size_t i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Scalar& c, Matrix a) {
    for (auto& x : a.e_) x *= c;
    return a;
}

Scalar det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Matrix w = m;
    bool negate = false;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w(piv, k).is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    Scalar d = w(n - 1, n - 1);
    return negate ? -d : d;
}

namespace {

// Row echelon reduction; returns pivot columns. When `reduced` is set the
// result is the RREF (unit pivots, zeros above and below).
std::vector<std::size_t> echelon(Matrix& w, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t piv = r;
        while (piv < w.rows() && w(piv, c).is_zero()) ++piv;
        if (piv == w.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < w.cols(); ++j) std::swap(w(r, j), w(piv, j));
        if (reduced) {
            Scalar inv = Scalar(1) / w(r, c);
            for (std::size_t j = c; j < w.cols(); ++j) w(r, j) *= inv;
        }
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r || w(i, c).is_zero()) continue;
            if (!reduced && i < r) continue;
            Scalar f = w(i, c) / w(r, c);
            for (std::size_t j = c; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return echelon(w, false).size();
}

std::vector<Vector> null_space(const Matrix& m) {
    Matrix w = m;
    std::vector<std::size_t> pivots = echelon(w, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> charpoly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix not square");
    std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[0] = Scalar(1);
    Matrix w = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        w = m * w;
        c[k] = -w.trace() / Scalar(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) w(i, i) += c[k];
    }
    return c;
}

Matrix solve(const Matrix& a, const Matrix& rhs) {
    if (!a.is_square()) throw std::invalid_argument("solve: matrix not square");
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix w = hstack(a, rhs);
    std::vector<std::size_t> pivots = echelon(w, true);
    if (pivots.size() != a.rows() || (!pivots.empty() && pivots.back() >= a.cols()))
        throw std::domain_error("solve: singular matrix");
    Matrix x(a.cols(), rhs.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = w(i, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != nrows) throw std::invalid_argument("columns_matrix: length mismatch");
        for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace cs

#include "sumnet/matrix.hpp"

#include <sstream>

namespace sumnet {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldMismatch("matrix operands belong to different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::zero(FieldPtr field, std::size_t rows, std::size_t cols) {
    return Matrix(std::move(field), rows, cols);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.field_->one());
    return m;
}

Matrix Matrix::scalar(FieldPtr field, std::size_t n, FqElem value) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, value);
    return m;
}

Matrix Matrix::from_element(FieldPtr field, FqElem value) {
    Matrix m(std::move(field), 1, 1);
    m.set(0, 0, value);
    return m;
}

bool Matrix::is_zero() const {
    for (FqElem v : data_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? field_->one() : field_->zero())) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix add: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " vs " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix r(a.field_, a.rows_, a.cols_);
    const Fq& f = *a.field_;
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = f.add(a.data_[i], b.data_[i]);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix subtract: shape mismatch");
    Matrix r(a.field_, a.rows_, a.cols_);
    const Fq& f = *a.field_;
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = f.sub(a.data_[i], b.data_[i]);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix multiply: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix r(a.field_, a.rows_, b.cols_);
    const Fq& f = *a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FqElem aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const FqElem bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.data_[i * r.cols_ + j] = f.add(r.data_[i * r.cols_ + j], f.mul(aik, bkj));
            }
        }
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::scaled(FqElem c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->mul(c, data_[i]);
    return r;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = rows_;
    const Fq& f = *field_;
    Matrix work = *this;
    Matrix inv = Matrix::identity(field_, n);
    for (std::size_t col = 0; col < n; ++col) {
        // any nonzero pivot works over an exact field
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.data_[pivot * n + j], work.data_[col * n + j]);
                std::swap(inv.data_[pivot * n + j], inv.data_[col * n + j]);
            }
        }
        const FqElem scale = f.inv(work.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work.data_[col * n + j] = f.mul(scale, work.data_[col * n + j]);
            inv.data_[col * n + j] = f.mul(scale, inv.data_[col * n + j]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const FqElem factor = work.at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.data_[r * n + j] = f.sub(work.data_[r * n + j], f.mul(factor, work.data_[col * n + j]));
                inv.data_[r * n + j] = f.sub(inv.data_[r * n + j], f.mul(factor, inv.data_[col * n + j]));
            }
        }
    }
    return inv;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << field_->render(at(r, c));
        }
        os << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Matrix lift_to_matrix(const FieldPtr& ext, FqElem a, const FieldPtr& base) {
    if (base->degree() != 1 || ext->characteristic() != base->characteristic())
        throw FieldMismatch("lift requires GF(p^N) over its prime subfield GF(p)");
    const std::uint32_t n = ext->degree();
    Matrix m(base, n, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        // w^j is the packed value p^j; column j = coordinates of a * w^j
        FqElem wj = 1;
        for (std::uint32_t t = 0; t < j; ++t) wj *= ext->characteristic();
        const auto col = ext->coeffs(ext->mul(a, wj));
        for (std::uint32_t i = 0; i < n; ++i) m.set(i, j, col[i]);
    }
    return m;
}

}  // namespace sumnet

#ifndef SUMNET_MATRIX_HPP
#define SUMNET_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sumnet/field.hpp"

namespace sumnet {

/// Dense matrix over GF(p^k), row-major, value semantics. All arithmetic is
/// exact; inversion is Gauss-Jordan elimination with any-nonzero pivoting.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled

    static Matrix zero(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldPtr field, std::size_t n);
    /// Diagonal matrix with a constant diagonal value.
    static Matrix scalar(FieldPtr field, std::size_t n, FqElem value);
    /// 1x1 convenience wrapper.
    static Matrix from_element(FieldPtr field, FqElem value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FqElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FqElem v) { data_[r * cols_ + c] = v; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix inverse() const;  // throws SingularMatrix / DimensionMismatch

    std::string to_string() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix scaled(FqElem c) const;  // c * M

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<FqElem> data_;
};

/// Matrix of the multiplication map x -> a*x on GF(p^N), viewed as an
/// N-dimensional space over GF(p) in the polynomial basis {1, w, ..., w^{N-1}}
/// with column-vector convention: column j holds the coordinates of a*w^j.
/// The map a -> lift_to_matrix(a) is an injective ring homomorphism.
Matrix lift_to_matrix(const FieldPtr& ext, FqElem a, const FieldPtr& base);

}  // namespace sumnet

#endif

#ifndef GBPA_LINALG_HPP
#define GBPA_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gbpa/field.hpp"

namespace gbpa {

// Dense exact matrix. Row vectors are the working convention throughout the
// toolkit: a linear map V -> W is a (dim V x dim W) matrix acting on the
// right of a row vector.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field = FieldSpec())
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n, FieldSpec field = FieldSpec());
    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                            FieldSpec field = FieldSpec());
    static Matrix row_vector(std::vector<Scalar> entries, FieldSpec field = FieldSpec());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Scalar>& v);
    void append_row(const std::vector<Scalar>& v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;

    // v * this for a row vector v of length rows().
    std::vector<Scalar> apply_row(const std::vector<Scalar>& v) const;
    // this * v for a column vector v of length cols().
    std::vector<Scalar> apply_col(const std::vector<Scalar>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Unique reduced row-echelon form with deterministic pivoting (leftmost
// nonzero column, first nonzero row). Zero rows are dropped.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Rows of the result form a basis of { v : m * v^T = 0 }.
Matrix kernel_basis(const Matrix& m);

struct QuotientBasis {
    // Ambient coordinates that remain free modulo the span.
    std::vector<std::size_t> free_coords;
    // (free_coords.size() x ambient_dim); maps an ambient column vector to
    // its coordinates on free_coords modulo the span. Annihilates exactly
    // the row span of span_rows.
    Matrix reduce;
};

QuotientBasis quotient_basis(const Matrix& span_rows, std::size_t ambient_dim);

// Incrementally maintained row space kept in reduced echelon form.
class RowSpan {
public:
    RowSpan(std::size_t ambient_dim, FieldSpec field = FieldSpec())
        : ambient_(ambient_dim), field_(field) {}

    // Returns true when v was independent of the current span.
    bool add(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    // Rows in pivot order; this is the rref of everything added.
    Matrix rows() const;

private:
    void eliminate(std::vector<Scalar>& v) const;
    std::size_t ambient_;
    FieldSpec field_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_; // (pivot, row)
};

// Inverse of a square matrix; throws Error when singular.
Matrix inverse(const Matrix& m);

// Coordinates of v in the row space of `basis_rows` (rows assumed
// independent). Throws Error if v is outside the span.
std::vector<Scalar> coords_in_rowspace(const Matrix& basis_rows, const std::vector<Scalar>& v);

bool in_rowspace(const Matrix& basis_rows, const std::vector<Scalar>& v);

} // namespace gbpa

#endif

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zorbit {

struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Q when characteristic() == 0, otherwise GF(p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;
    bool operator==(const Field&) const = default;

private:
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(const mpq_class& q) : q_(q) {}
    Scalar(long v, Field f);
    // Reduces a rational into f; throws if the denominator vanishes mod p.
    static Scalar convert(const mpq_class& q, Field f);

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
    const mpq_class& rational() const;
    std::uint64_t residue() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void same_field(const Scalar& o) const;

    std::uint64_t p_ = 0;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f = Field::rationals());
    static Matrix identity(std::size_t n, Field f = Field::rationals());
    static Matrix from_ints(const std::vector<std::vector<long>>& rows, Field f = Field::rationals());
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix column(const std::vector<Scalar>& v, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& s);
    void set(std::size_t i, std::size_t j, long v) { data_[i * cols_ + j] = Scalar(v, field_); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    bool is_zero() const;
    bool is_identity() const;
    bool is_upper_triangular() const;

    std::vector<Scalar> flatten() const { return data_; }
    static Matrix unflatten(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols, Field f);

    std::size_t rank() const;
    Scalar det() const;
    Matrix inverse() const;
    Matrix power(unsigned k) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

Matrix block_diag(const std::vector<Matrix>& blocks);

struct Rref {
    Matrix form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form; the pivot in each column is the first nonzero entry below the current row.
Rref rref(const Matrix& m);

// Linear subspace of rows x cols matrices, held as a reduced echelon basis of flattened vectors.
class MatSpace {
public:
    MatSpace() = default;
    MatSpace(std::size_t rows, std::size_t cols, Field f = Field::rationals());
    static MatSpace span(std::size_t rows, std::size_t cols, Field f, const std::vector<Matrix>& gens);
    static MatSpace full(std::size_t rows, std::size_t cols, Field f = Field::rationals());
    // Solutions X of eqs * vec(X) = 0, eqs having rows*cols columns.
    static MatSpace solve(std::size_t rows, std::size_t cols, const Matrix& eqs);

    std::size_t dim() const { return echelon_.rows(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    std::vector<Matrix> basis() const;

    bool contains(const Matrix& x) const;
    bool contains(const MatSpace& s) const;
    MatSpace sum(const MatSpace& s) const;
    MatSpace intersect(const MatSpace& s) const;
    MatSpace map(const std::function<Matrix(const Matrix&)>& f, std::size_t rows, std::size_t cols) const;
    // Elements of the subspace vanishing at every (i, j) with zero_at(i, j).
    MatSpace with_zeros(const std::function<bool(std::size_t, std::size_t)>& zero_at) const;
    bool operator==(const MatSpace& s) const;

private:
    void check_compatible(const MatSpace& s) const;
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    Matrix echelon_;
    std::vector<std::size_t> pivots_;
};

// Null space of m, as column vectors.
MatSpace nullspace(const Matrix& m);

}  // namespace zorbit

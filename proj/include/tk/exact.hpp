#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring. Zero-sized dimensions are allowed.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (sgn(v) != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Product a*b. Rows are distributed over OpenMP threads when the product is large.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Single-threaded textbook triple loop; kept as the reference for multiply().
IntMatrix multiply_reference(const IntMatrix& a, const IntMatrix& b);

/// Submatrix with the given row and column indices, in the order supplied.
IntMatrix submatrix(const IntMatrix& m, std::span<const int> rows, std::span<const int> cols);

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form, computed in place. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Outcome of an exact solve of A v = b.
struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> values;  ///< free variables set to 0
    std::vector<bool> determined;  ///< variable fixed across the whole solution set
};

LinearSolution solve(const RatMatrix& a, std::span<const Rational> b);

/// Exact incremental consistency check for systems in a few unknowns.
///
/// Rows are added one at a time and kept in reduced echelon form, so the
/// first row that contradicts the earlier ones is identified exactly.
class IncrementalSystem {
public:
    explicit IncrementalSystem(std::size_t unknowns) : n_(unknowns) {}

    /// Returns false (and leaves the system unchanged) if the row is inconsistent.
    bool add(std::span<const Rational> coeffs, const Rational& rhs);

    std::size_t unknowns() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    /// Canonical point of the solution set: free variables 0.
    LinearSolution solution() const;

    /// True if every solution satisfies v[var] == value.
    bool forces(std::size_t var, const Rational& value) const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rational> coeffs;
        Rational rhs;
    };
    std::size_t n_;
    std::vector<Row> rows_;
};

std::string to_string(const Rational& q);

}  // namespace tk

#pragma once

#include "symp/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace symp {

using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long long> xs);
bool is_zero(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
// a += c*b
void axpy(IntVector& a, const Integer& c, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);
std::vector<std::string> to_strings(const IntVector& v);

// Dense row-major matrix with exact entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    std::vector<IntVector> row_list() const;
    void set_row(std::size_t i, const IntVector& v);
    void append_row(const IntVector& v);
    IntegerMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntegerMatrix& m);
// Matrix times column vector.
IntVector matvec(const IntegerMatrix& m, const IntVector& v);

// Incremental row-style Hermite reduction. Vectors may carry `aug` extra
// trailing coordinates that ride along but never hold pivots; inserted
// vectors whose leading part reduces to zero are kept in kernel_rows().
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t cols, std::size_t aug = 0) : cols_(cols), aug_(aug), pivot_row_(cols, -1) {}

    void insert(IntVector v);
    // Reduce entries above pivots and sort rows by pivot; rows() is then the HNF.
    void finalize();

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<IntVector>& rows() const { return rows_; }
    const std::vector<IntVector>& kernel_rows() const { return kernel_; }
    std::vector<std::size_t> pivots() const;

private:
    void reduce_above(std::size_t i, std::size_t j);

    std::size_t cols_, aug_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivot_of_;
    std::vector<long> pivot_row_;
    std::vector<IntVector> kernel_;
};

struct HermiteResult {
    IntegerMatrix hnf;        // same shape as the input; zero rows at the bottom
    IntegerMatrix transform;  // unimodular, transform * m == hnf
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

HermiteResult hermite_normal_form(const IntegerMatrix& m);
// Row HNF without the transform; returns only the nonzero rows.
IntegerMatrix hnf_rows(const IntegerMatrix& m);

// Integer basis of {x : x * m == 0}.
std::vector<IntVector> left_kernel(const IntegerMatrix& m);

// Rank over Q.
std::size_t rational_rank(const IntegerMatrix& m);

// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntegerMatrix& m);

}  // namespace symp

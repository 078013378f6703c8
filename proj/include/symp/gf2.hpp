#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace symp {

class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true) {
        if (b)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    GF2Vector& operator^=(const GF2Vector& o);
    friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }
    bool is_zero() const;
    std::size_t popcount() const;
    // First set bit, or size() when zero.
    std::size_t leading() const;

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Rows over GF(2).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, GF2Vector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    GF2Vector& row(std::size_t i) { return rows_[i]; }
    const GF2Vector& row(std::size_t i) const { return rows_[i]; }
    void append_row(const GF2Vector& v);

private:
    std::size_t cols_ = 0;
    std::vector<GF2Vector> rows_;
};

std::size_t gf2_rank(const GF2Matrix& m);
// x with x*m == target (combination of rows), if one exists.
std::optional<GF2Vector> gf2_solve(const GF2Matrix& m, const GF2Vector& target);
// Basis of {x : x*m == 0}.
std::vector<GF2Vector> gf2_left_kernel(const GF2Matrix& m);

}  // namespace symp

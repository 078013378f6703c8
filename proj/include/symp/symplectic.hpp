#pragma once

#include "symp/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symp {

// Element of H = Z^{2g} in the basis a_1..a_g, b_1..b_g.
using HVector = std::vector<std::int64_t>;

// Overflow-checked int64 helpers for the small-coefficient tensor code.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct ContextError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Lagrangian { A, B };

class SymplecticContext {
public:
    explicit SymplecticContext(int genus);

    int genus() const { return g_; }
    int dim() const { return 2 * g_; }

    HVector zero() const { return HVector(dim(), 0); }
    HVector basis(int p) const;
    HVector a(int i) const { return basis(i - 1); }  // 1-based, as in a_1..a_g
    HVector b(int i) const { return basis(g_ + i - 1); }
    bool in_A(int p) const { return p < g_; }
    std::string label(int p) const;

    // omega(a_i, b_j) = delta_ij
    std::int64_t omega(const HVector& u, const HVector& v) const;
    std::int64_t omega_basis(int p, int q) const;
    IntegerMatrix gram() const;  // J = [[0, I], [-I, 0]]

    bool is_symplectic(const IntegerMatrix& m) const;
    // a_i -> -b_i, b_i -> a_i
    IntegerMatrix iota() const;
    // diag(P, P^{-T}) for P in GL(g, Z)
    IntegerMatrix gl_embed(const IntegerMatrix& p) const;

    void check(const HVector& v) const;

private:
    int g_;
};

HVector operator+(const HVector& u, const HVector& v);
HVector operator-(const HVector& u, const HVector& v);
HVector operator-(const HVector& u);
HVector operator*(std::int64_t c, const HVector& u);

// Column convention: M * v.
HVector act(const IntegerMatrix& m, const HVector& v);

// Inverse of a unimodular integer matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

}  // namespace symp

#pragma once

#include "symp/symplectic.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace symp {

constexpr int kMaxDegree = 4;

struct UnsupportedDegree : std::invalid_argument {
    UnsupportedDegree() : std::invalid_argument("degree above the supported range") {}
};

// Homogeneous element of T_k over `letters` generators. Words are packed
// base-`letters` with the first letter most significant, so numeric order of
// the packed index is lexicographic order of the word.
class Tensor {
public:
    Tensor() = default;
    Tensor(int letters, int degree);
    static Tensor letter(int letters, int x);
    static Tensor from_vector(const HVector& v);

    int letters() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return c_.size(); }
    std::int64_t operator[](std::size_t w) const { return c_[w]; }
    std::int64_t& operator[](std::size_t w) { return c_[w]; }
    const std::vector<std::int64_t>& data() const { return c_; }
    bool is_zero() const;

    std::vector<int> word(std::size_t w) const;
    std::size_t pack(const std::vector<int>& word) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& add_scaled(std::int64_t c, const Tensor& o);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    int n_ = 0, k_ = 0;
    std::vector<std::int64_t> c_;
};

Tensor tensor_product(const Tensor& x, const Tensor& y);
Tensor commutator(const Tensor& x, const Tensor& y);

struct LyndonWord {
    std::vector<int> letters;
    std::size_t packed = 0;
    // Standard factorization w = uv; degree-1 words have split 0.
    std::size_t split = 0;
    // Expansion of the standard bracketing: (packed word, coefficient), sorted.
    std::vector<std::pair<std::size_t, std::int64_t>> expansion;
};

class LyndonBasis {
public:
    LyndonBasis(int letters, int degree);

    int letters() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return words_.size(); }
    const LyndonWord& operator[](std::size_t i) const { return words_[i]; }
    // Position of a packed word in the basis, or -1.
    long find(std::size_t packed) const { return lookup_[packed]; }

private:
    int n_, k_;
    std::vector<LyndonWord> words_;
    std::vector<long> lookup_;
};

// Witt formula for the rank of L_k on n generators.
std::size_t witt_dimension(int letters, int degree);

struct LieElement {
    int degree = 0;
    std::vector<std::int64_t> coeffs;  // over the Lyndon basis of that degree

    bool is_zero() const;
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

// Free Lie ring on `letters` generators, degrees 1..4. The letter order
// a_1 < ... < a_g < b_1 < ... < b_g is the basis order of H.
class FreeLie {
public:
    explicit FreeLie(int letters);

    int letters() const { return n_; }
    const LyndonBasis& basis(int degree) const;
    std::size_t dim(int degree) const { return basis(degree).size(); }

    LieElement zero(int degree) const;
    LieElement generator(const HVector& v) const;
    LieElement basis_element(int degree, std::size_t i) const;

    Tensor lie_to_tensor(const LieElement& x) const;
    // Throws std::invalid_argument when t is not a Lie element.
    LieElement tensor_to_lie(const Tensor& t) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;

    LieElement add(const LieElement& x, const LieElement& y, std::int64_t c = 1) const;

private:
    int n_;
    std::vector<std::unique_ptr<LyndonBasis>> bases_;
};

// H (x) L_k coordinates: index h * dim(L_k) + j.
struct DerivationElement {
    int lie_degree = 0;  // k+1 for an element of H (x) L_{k+1}
    std::vector<std::int64_t> coeffs;

    bool is_zero() const;
    friend bool operator==(const DerivationElement&, const DerivationElement&) = default;
};

class FreeLieContext {
public:
    explicit FreeLieContext(int genus);

    const SymplecticContext& symplectic() const { return sp_; }
    const FreeLie& lie() const { return lie_; }
    // Free Lie ring on H' = H/A (letters b'_1..b'_g), identical for H/B.
    const FreeLie& quotient_lie() const { return qlie_; }
    int genus() const { return sp_.genus(); }

    DerivationElement zero_derivation(int lie_degree) const;
    // h (x) xi with xi given as a tensor (must be a Lie element).
    DerivationElement derivation_term(const HVector& h, const Tensor& xi) const;
    DerivationElement add(const DerivationElement& x, const DerivationElement& y, std::int64_t c = 1) const;
    // Sum over h of h (x) lie_to_tensor(coefficient), degree 1 + lie_degree.
    Tensor derivation_to_tensor(const DerivationElement& d) const;

    // Matrix of H (x) L_{k+1} -> L_{k+2}, h (x) xi -> [h, xi]; rows index L_{k+2}.
    IntegerMatrix bracket_matrix(int k) const;

    // Coordinates of h in H/L (g coordinates).
    HVector project_vector(const HVector& v, Lagrangian l) const;
    LieElement project_lie(const LieElement& x, Lagrangian l) const;
    Tensor project_tensor(const Tensor& t, Lagrangian l) const;
    // Induced map H (x) L_k(H) -> H_q (x) L_k(H_q), as coordinates.
    DerivationElement project_derivation(const DerivationElement& d, Lagrangian l) const;
    IntegerMatrix projection_matrix(int lie_degree, Lagrangian l) const;

private:
    SymplecticContext sp_;
    FreeLie lie_;
    FreeLie qlie_;
};

IntVector to_int_vector(const std::vector<std::int64_t>& v);

}  // namespace symp

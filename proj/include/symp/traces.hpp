#pragma once

#include "symp/derivations.hpp"
#include "symp/gf2.hpp"

namespace symp {

struct FiltrationError : std::invalid_argument {
    FiltrationError() : std::invalid_argument("element is not in the filtration level F0") {}
};

struct NotInDprime2 : std::invalid_argument {
    NotInDprime2() : std::invalid_argument("element is not in D'2(H)") {}
};

// Basis e_p e_q (p <= q) of S² over n letters, and e_p ∧ e_q (p < q) of Λ².
std::size_t sym2_dim(int n);
std::size_t ext2_dim(int n);
std::size_t sym2_index(int n, int p, int q);
std::size_t ext2_index(int n, int p, int q);
std::pair<int, int> sym2_pair(int n, std::size_t idx);
std::pair<int, int> ext2_pair(int n, std::size_t idx);

// Products of vectors reduced mod 2.
GF2Vector sym2_product(const HVector& x, const HVector& y);
GF2Vector ext2_product(const HVector& x, const HVector& y);

// omega mod 2 as a functional on S²(H/2H) or Λ²(H/2H).
GF2Vector sym2_omega(const SymplecticContext& sp);
GF2Vector ext2_omega(const SymplecticContext& sp);
std::size_t sym2_omega_kernel_dim(const SymplecticContext& sp);
std::size_t ext2_omega_kernel_dim(const SymplecticContext& sp);

// Generator formulas, valid for arbitrary colors.
GF2Vector tr_sym(const SymplecticContext& sp, const Tree2& t);
GF2Vector tr_as(const SymplecticContext& sp, const Generator& g);
GF2Vector tr_as(const SymplecticContext& sp, const Combination& c);
GF2Vector tr_sym(const SymplecticContext& sp, const Combination& c);  // trees only

// Contraction of the first two tensor slots by omega_S = [[0,0],[0,S]];
// result in T2(H), index x * 2g + y.
IntVector tr_omegaS(const FreeLieContext& ctx, const DerivationElement& v, const IntegerMatrix& s);

// Trace operators on the coordinates of a D2Space.
class Traces {
public:
    explicit Traces(const D2Space& d);

    const D2Space& space() const { return d_; }

    GF2Vector tr_as(const IntVector& coords) const;
    GF2Vector tr_as(const DerivationElement& v) const;
    // Throws NotInDprime2 outside D'2.
    GF2Vector tr_sym(const IntVector& coords) const;
    GF2Vector tr_sym(const DerivationElement& v) const;

    // Values in S²(H/A) over b'_i b'_j (resp. S²(H/B) over a'_i a'_j); throw FiltrationError outside F0.
    IntVector tr_A(const IntVector& coords) const;
    IntVector tr_A(const DerivationElement& v) const;
    IntVector tr_B(const IntVector& coords) const;
    IntVector tr_B(const DerivationElement& v) const;

    // Rows indexed by the D2 basis.
    const GF2Matrix& tr_as_matrix() const { return as_; }
    const IntegerMatrix& tr_A_matrix() const { return a_; }
    const IntegerMatrix& tr_B_matrix() const { return b_; }

    const IntegerLattice& filtration0(Lagrangian lag) const { return lag == Lagrangian::A ? f0a_ : f0b_; }

    IntegerLattice ker_tr_as() const;
    IntegerLattice ker_tr_sym() const;  // inside D'2
    IntegerLattice ker_tr_A() const;    // inside F0
    IntegerLattice ker_tr_B() const;    // inside F0 for B
    IntegerLattice ker_A_as() const;    // Ker Tr^A ∩ Ker Tr^as
    IntegerLattice ker_A_B_as() const;  // Ker Tr^A ∩ Ker Tr^B ∩ Ker Tr^as

    std::size_t tr_as_image_rank() const;
    std::size_t tr_sym_image_rank() const;

private:
    IntVector lagrangian_trace(const DerivationElement& v, Lagrangian lag) const;

    const D2Space& d_;
    GF2Matrix as_;
    IntegerMatrix a_, b_;
    IntegerLattice f0a_, f0b_;
};

// Sublattice {x in dom : f(x) = 0 mod 2} for f given on the basis of Z^r by rows of m.
IntegerLattice mod2_kernel(const IntegerLattice& dom, const GF2Matrix& m);
// Sublattice {x in dom : x * m = 0}.
IntegerLattice integer_kernel(const IntegerLattice& dom, const IntegerMatrix& m);
GF2Vector gf2_image(const IntVector& x, const GF2Matrix& m);

}  // namespace symp

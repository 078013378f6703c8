#pragma once

#include "symp/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace symp {

struct NotSublattice : std::runtime_error {
    NotSublattice() : std::runtime_error("not a sublattice") {}
};

// [L1 : L2]; infinite when the ranks differ.
struct LatticeIndex {
    bool infinite = false;
    Integer value;

    static LatticeIndex infinity() { return {true, Integer(0)}; }
    bool is_one() const { return !infinite && value == Integer(1); }
    friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

// Subgroup of Z^n stored by its row Hermite normal form.
class IntegerLattice {
public:
    IntegerLattice() = default;
    explicit IntegerLattice(std::size_t n) : n_(n) {}
    static IntegerLattice from_generators(std::size_t n, const std::vector<IntVector>& gens);
    static IntegerLattice from_matrix(const IntegerMatrix& m);
    static IntegerLattice full(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    IntegerMatrix basis_matrix() const { return IntegerMatrix::from_rows(basis_, n_); }

    bool contains(const IntVector& v) const;
    // Coefficients over basis() when v lies in the lattice.
    std::optional<IntVector> coefficients(const IntVector& v) const;
    bool contains(const IntegerLattice& sub) const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    std::size_t n_ = 0;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivots_;
};

// Throws NotSublattice when l2 is not contained in l1.
LatticeIndex index(const IntegerLattice& l1, const IntegerLattice& l2);
IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice intersection(const IntegerLattice& a, const IntegerLattice& b);
// Image of a lattice under x -> x*m.
IntegerLattice image(const IntegerLattice& l, const IntegerMatrix& m);

// Full integer kernel {v : v * m^T == 0}; saturated by construction.
IntegerLattice kernel_lattice(const IntegerMatrix& m);
// Same, as a list of basis vectors (not Hermite-reduced).
std::vector<IntVector> kernel_basis(const IntegerMatrix& m);

}  // namespace symp

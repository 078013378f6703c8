#pragma once

#include "symp/lattice.hpp"
#include "symp/trees.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace symp {

struct ConsistencyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInD2 : std::invalid_argument {
    NotInD2() : std::invalid_argument("element is not in D2(H)") {}
};

// Basis element of D2(H) in the coordinates coming from
// (Λ²H ⊗ Λ²H)^{S2} / Λ⁴H: either x_α ⊙ x_α or the tree (x_α | x_β), α < β,
// with x_α = e_p ∧ e_q. For p<q<r<s the tree (pr|qs) is dropped, being
// (pq|rs) + (ps|qr).
struct D2BasisElement {
    bool odot = false;
    int alpha = 0, beta = 0;
    Generator gen;
};

// Rank of (Λ²H⊗Λ²H)^{S2}/Λ⁴H from the relation matrix.
std::size_t morita_rank(int genus);

class D2Space {
public:
    explicit D2Space(int genus);

    const FreeLieContext& ctx() const { return *ctx_; }
    const SymplecticContext& sp() const { return ctx_->symplectic(); }
    int genus() const { return sp().genus(); }
    std::size_t rank() const { return basis_.size(); }
    std::size_t ambient_dim() const { return basis_ambient_.cols(); }

    std::size_t pair_count() const { return pairs_.size(); }
    std::pair<int, int> pair(std::size_t alpha) const { return pairs_[alpha]; }
    int pair_index(int p, int q) const;

    const std::vector<D2BasisElement>& basis() const { return basis_; }
    long odot_coordinate(int alpha) const { return odot_index_[alpha]; }

    // Symbolic coordinates; no solving involved.
    IntVector coords(const Generator& g) const;
    IntVector coords(const Combination& c) const;
    IntVector coords(const Tree1& s, const Tree1& t) const;  // of the contraction bracket

    const IntegerMatrix& basis_ambient() const { return basis_ambient_; }
    DerivationElement to_ambient(const IntVector& c) const;
    // Coordinates of an ambient element; nullopt when it is not in D2(H).
    std::optional<IntVector> from_ambient(const DerivationElement& d) const;

    // Kernel of the bracket H⊗L3 -> L4, in ambient coordinates.
    const IntegerLattice& bracket_kernel() const { return kernel_; }

    // All trees over basis colors up to AS and pair swap, then all x_α ⊙ x_α.
    const std::vector<Generator>& generators() const { return generators_; }
    std::vector<Integer> express_in_generators(const DerivationElement& d) const;

    IntegerLattice full() const { return IntegerLattice::full(rank()); }
    IntegerLattice lattice(const std::vector<IntVector>& coord_vectors) const;
    IntegerLattice dprime2() const;
    // Span of generators with at least l+1 leaves in the given Lagrangian.
    IntegerLattice filtration(int l, Lagrangian lag = Lagrangian::A) const;
    // Kernel of D2(H) -> H_q ⊗ L3(H_q) for H_q = H/A or H/B.
    IntegerLattice ker_projection(Lagrangian lag) const;

    // Row-convention matrix: coords(v) * action_matrix(M) = coords(M·v).
    IntegerMatrix action_matrix(const IntegerMatrix& m) const;
    DerivationElement apply_homology_action(const IntegerMatrix& m, const DerivationElement& v) const;

private:
    void tree_basis_coords(int alpha, int beta, IntVector& out, const Integer& c) const;
    std::vector<Integer> wedge(const HVector& u, const HVector& v) const;

    std::unique_ptr<FreeLieContext> ctx_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_of_;
    std::vector<D2BasisElement> basis_;
    std::vector<long> odot_index_;
    std::vector<long> tree_index_;  // alpha * m + beta, -1 if dropped
    std::vector<Generator> generators_;
    IntegerMatrix basis_ambient_;
    IntegerLattice kernel_;

    mutable std::once_flag solver_once_;
    mutable std::unique_ptr<HermiteResult> solver_;
};

}  // namespace symp

#pragma once

#include "symp/derivations.hpp"

#include <string>

namespace symp {

struct CatalogEntry {
    std::string name;
    std::string provenance;
    Combination value;
    IntVector coords;  // in the D2Space basis
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    bool partial = false;  // some families need more handles than the genus has
    int color_terms = 0;   // Johnson catalog: largest number of terms in a color
};

// sum u_i ⊙ v_i + sum_{i<j} (u_i, v_i | u_j, v_j); throws ContextError unless
// omega(u_i, v_j) = delta_ij and omega(u_i, u_j) = omega(v_i, v_j) = 0.
Combination bscc_image(const SymplecticContext& sp, const std::vector<std::pair<HVector, HVector>>& pairs);

class Traces;

// Images of genus 1 and genus 2 bounding curves whose symplectic pairs are colored
// by vectors with at most max_terms entries ±1.
Catalog johnson_catalog(const D2Space& d, int max_terms);
// Two-term colors, enlarged to three-term colors when they do not span Ker(Tr^as).
Catalog johnson_catalog(const Traces& t);

// Images of meridian-bounding twists and of commutators in the Torelli handlebody group.
Catalog realizable_catalog_A(const D2Space& d);

struct GoeritzCatalogs {
    std::vector<Tree1> tau1;
    Catalog tau2;
};
GoeritzCatalogs goeritz_catalogs(const D2Space& d);

IntegerLattice catalog_lattice(const D2Space& d, const Catalog& c);
// Closure of a lattice under row-convention matrices (each invertible over Z).
IntegerLattice orbit_closure(IntegerLattice l, const std::vector<IntegerMatrix>& gens);

// Generators of GL(g, Z): a transposition, the g-cycle, a sign change, a transvection.
std::vector<IntegerMatrix> gl_generators(int g);

// Λ³H in the basis e_p∧e_q∧e_r, p<q<r.
std::size_t ext3_dim(int n);
IntVector ext3_coords(const SymplecticContext& sp, const Tree1& t);
IntegerMatrix ext3_action(const SymplecticContext& sp, const IntegerMatrix& m);
// Span of basis wedges with at least one leaf in A and one in B.
IntegerLattice a_wedge_b_wedge_h(const SymplecticContext& sp);
// Z-span of the GL(g, Z) and iota orbit of the given trees in Λ³H.
IntegerLattice tau1_orbit_lattice(const SymplecticContext& sp, const std::vector<Tree1>& seeds);

}  // namespace symp

#pragma once

#include "symp/free_lie.hpp"

#include <string>
#include <variant>
#include <vector>

namespace symp {

// Degree-1 tree: three leaves in cyclic order around the node.
struct Tree1 {
    HVector u, v, w;
    const HVector& leaf(int i) const { return i == 0 ? u : (i == 1 ? v : w); }
};

// Degree-2 H-shaped tree (a,b | c,d).
struct Tree2 {
    HVector a, b, c, d;
};

// Symmetric half a ⊙ b, with 2(a ⊙ b) = (a,b | a,b).
struct SymHalf {
    HVector a, b;
};

using Generator = std::variant<Tree2, SymHalf>;

struct Term {
    std::int64_t coeff = 1;
    Generator gen;
};

// Formal integer combination of degree-2 generators.
using Combination = std::vector<Term>;

Combination operator+(Combination x, const Combination& y);
Combination operator-(Combination x, const Combination& y);
Combination operator*(std::int64_t c, Combination x);
Combination single(const Generator& g, std::int64_t c = 1);

// eta1(a,b,c) = a⊗[c,b] + b⊗[a,c] + c⊗[b,a]
DerivationElement eta1(const FreeLieContext& ctx, const Tree1& t);
// eta2(a,b|c,d) = a⊗[b,[c,d]] + b⊗[[c,d],a] + c⊗[d,[a,b]] + d⊗[[a,b],c]
DerivationElement eta2(const FreeLieContext& ctx, const Tree2& t);
// a⊙b -> a⊗[b,[a,b]] + b⊗[[a,b],a]
DerivationElement expand_symhalf(const FreeLieContext& ctx, const SymHalf& s);
DerivationElement expand(const FreeLieContext& ctx, const Generator& g);
DerivationElement expand(const FreeLieContext& ctx, const Combination& c);

// The nine contractions: coefficient omega(s_i, t_j) on (s_{i+1}, s_{i+2} | t_{j+1}, t_{j+2}).
std::vector<std::pair<std::int64_t, Tree2>> tree_bracket(const SymplecticContext& sp, const Tree1& s, const Tree1& t);
Combination tree_bracket_combination(const SymplecticContext& sp, const Tree1& s, const Tree1& t);

// A derivation h⊗ξ acts on H by x -> omega(h, x) ξ; bracket d1∘d2 − d2∘d1.
DerivationElement derivation_bracket(const FreeLieContext& ctx, const DerivationElement& d1,
                                     const DerivationElement& d2);

// Degree-wise extension of M to H⊗L_k (column convention on H).
DerivationElement apply_matrix(const FreeLieContext& ctx, const IntegerMatrix& m, const DerivationElement& d);
Tensor apply_matrix(const IntegerMatrix& m, const Tensor& t);
DerivationElement tensor_to_derivation(const FreeLieContext& ctx, const Tensor& t);

Tree1 act(const IntegerMatrix& m, const Tree1& t);
Tree2 act(const IntegerMatrix& m, const Tree2& t);
Generator act(const IntegerMatrix& m, const Generator& g);
Combination act(const IntegerMatrix& m, const Combination& c);

// Leaf counts (in A, in B) for a basis-colored generator; a⊙b counts as (a,b|a,b).
std::pair<int, int> classify_type(const SymplecticContext& sp, const Generator& g);

std::string describe(const SymplecticContext& sp, const HVector& v);
std::string describe(const SymplecticContext& sp, const Generator& g);

}  // namespace symp

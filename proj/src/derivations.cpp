#include "symp/derivations.hpp"

#include <algorithm>

namespace symp {

namespace {

std::vector<std::pair<int, int>> wedge_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) out.emplace_back(p, q);
    return out;
}

IntVector ambient_vector(const DerivationElement& d) { return to_int_vector(d.coeffs); }

}  // namespace

std::size_t morita_rank(int genus) {
    const int n = 2 * genus;
    auto pairs = wedge_pairs(n);
    const std::size_t m = pairs.size();
    std::vector<std::vector<long>> pos(m, std::vector<long>(m, -1));
    std::size_t dim = 0;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x; y < m; ++y) pos[x][y] = pos[y][x] = static_cast<long>(dim++);
    auto idx = [&](int p, int q) {
        for (std::size_t x = 0; x < m; ++x)
            if (pairs[x] == std::make_pair(p, q)) return x;
        throw std::logic_error("pair");
    };
    // p∧q∧r∧s -> (pq)(rs) − (pr)(qs) + (ps)(qr) in S²(Λ²H)
    IntegerMatrix rel(0, dim);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    IntVector v(dim);
                    v[pos[idx(p, q)][idx(r, s)]] += 1;
                    v[pos[idx(p, r)][idx(q, s)]] -= 1;
                    v[pos[idx(p, s)][idx(q, r)]] += 1;
                    rel.append_row(v);
                }
    return dim - (rel.rows() ? rational_rank(rel) : 0);
}

int D2Space::pair_index(int p, int q) const {
    if (p == q) return -1;
    const int n = sp().dim();
    return pair_of_[p * n + q];
}

std::vector<Integer> D2Space::wedge(const HVector& u, const HVector& v) const {
    std::vector<Integer> w(pairs_.size());
    for (std::size_t x = 0; x < pairs_.size(); ++x) {
        auto [p, q] = pairs_[x];
        Integer c = Integer(u[p]) * Integer(v[q]);
        c.submul(Integer(u[q]), Integer(v[p]));
        w[x] = std::move(c);
    }
    return w;
}

void D2Space::tree_basis_coords(int alpha, int beta, IntVector& out, const Integer& c) const {
    const int m = static_cast<int>(pairs_.size());
    if (alpha == beta) {
        out[odot_index_[alpha]].addmul(Integer(2), c);
        return;
    }
    if (alpha > beta) std::swap(alpha, beta);
    long t = tree_index_[alpha * m + beta];
    if (t >= 0) {
        out[t] += c;
        return;
    }
    // dropped (pr|qs) with p<q<r<s: rewrite as (pq|rs) + (ps|qr)
    auto [x0, x1] = pairs_[alpha];
    auto [y0, y1] = pairs_[beta];
    int s[4] = {x0, x1, y0, y1};
    std::sort(s, s + 4);
    auto put = [&](int a, int b, int c2, int d) {
        int u = pair_of_[a * sp().dim() + b], v = pair_of_[c2 * sp().dim() + d];
        if (u > v) std::swap(u, v);
        out[tree_index_[u * m + v]] += c;
    };
    put(s[0], s[1], s[2], s[3]);
    put(s[0], s[3], s[1], s[2]);
}

D2Space::D2Space(int genus) : ctx_(std::make_unique<FreeLieContext>(genus)) {
    if (genus < 2) throw ContextError("D2Space needs genus >= 2");
    const int n = sp().dim();
    pairs_ = wedge_pairs(n);
    const int m = static_cast<int>(pairs_.size());
    pair_of_.assign(n * n, -1);
    for (int x = 0; x < m; ++x) pair_of_[pairs_[x].first * n + pairs_[x].second] = x;

    odot_index_.assign(m, -1);
    tree_index_.assign(m * m, -1);
    for (int x = 0; x < m; ++x) {
        odot_index_[x] = static_cast<long>(basis_.size());
        basis_.push_back({true, x, x, SymHalf{sp().basis(pairs_[x].first), sp().basis(pairs_[x].second)}});
    }
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            auto [p, q] = pairs_[x];
            auto [r, s] = pairs_[y];
            bool dropped = p < r && r < q && q < s;
            Tree2 t{sp().basis(p), sp().basis(q), sp().basis(r), sp().basis(s)};
            generators_.push_back(t);
            if (dropped) continue;
            tree_index_[x * m + y] = static_cast<long>(basis_.size());
            basis_.push_back({false, x, y, t});
        }
    for (int x = 0; x < m; ++x) {
        auto [p, q] = pairs_[x];
        generators_.push_back(Tree2{sp().basis(p), sp().basis(q), sp().basis(p), sp().basis(q)});
    }
    for (int x = 0; x < m; ++x) generators_.push_back(basis_[odot_index_[x]].gen);

    const std::size_t amb = n * ctx_->lie().dim(3);
    basis_ambient_ = IntegerMatrix(basis_.size(), amb);
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_ambient_.set_row(i, ambient_vector(expand(*ctx_, basis_[i].gen)));

    kernel_ = kernel_lattice(ctx_->bracket_matrix(2));
    if (kernel_.rank() != basis_.size() || !(IntegerLattice::from_matrix(basis_ambient_) == kernel_))
        throw ConsistencyFailure("generator span differs from the bracket kernel");
    for (const auto& g : generators_)
        if (to_ambient(coords(g)) != expand(*ctx_, g))
            throw ConsistencyFailure("symbolic coordinates disagree with the expansion of " + describe(sp(), g));
}

IntVector D2Space::coords(const Generator& g) const {
    IntVector out(rank());
    if (const auto* t = std::get_if<Tree2>(&g)) {
        auto w1 = wedge(t->a, t->b), w2 = wedge(t->c, t->d);
        for (std::size_t x = 0; x < w1.size(); ++x) {
            if (w1[x].is_zero()) continue;
            for (std::size_t y = 0; y < w2.size(); ++y)
                if (!w2[y].is_zero()) tree_basis_coords(static_cast<int>(x), static_cast<int>(y), out, w1[x] * w2[y]);
        }
        return out;
    }
    const auto& s = std::get<SymHalf>(g);
    auto c = wedge(s.a, s.b);
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (c[x].is_zero()) continue;
        out[odot_index_[x]].addmul(c[x], c[x]);
        for (std::size_t y = x + 1; y < c.size(); ++y)
            if (!c[y].is_zero()) tree_basis_coords(static_cast<int>(x), static_cast<int>(y), out, c[x] * c[y]);
    }
    return out;
}

IntVector D2Space::coords(const Combination& c) const {
    IntVector out(rank());
    for (const auto& t : c)
        if (t.coeff) axpy(out, Integer(t.coeff), coords(t.gen));
    return out;
}

IntVector D2Space::coords(const Tree1& s, const Tree1& t) const {
    return coords(tree_bracket_combination(sp(), s, t));
}

DerivationElement D2Space::to_ambient(const IntVector& c) const {
    if (c.size() != rank()) throw std::invalid_argument("coordinate vector length mismatch");
    IntVector v = c * basis_ambient_;
    DerivationElement d{3, std::vector<std::int64_t>(v.size())};
    for (std::size_t i = 0; i < v.size(); ++i) d.coeffs[i] = v[i].to_int64();
    return d;
}

std::optional<IntVector> D2Space::from_ambient(const DerivationElement& d) const {
    if (d.lie_degree != 3 || d.coeffs.size() != ambient_dim()) throw std::invalid_argument("not an element of H⊗L3");
    std::call_once(solver_once_, [&] { solver_ = std::make_unique<HermiteResult>(hermite_normal_form(basis_ambient_)); });
    const auto& h = *solver_;
    IntVector v = ambient_vector(d);
    IntVector y(h.rank);
    for (std::size_t k = 0; k < h.rank; ++k) {
        std::size_t p = h.pivots[k];
        if (v[p].is_zero()) continue;
        if (!divides(h.hnf(k, p), v[p])) return std::nullopt;
        Integer q = v[p] / h.hnf(k, p);
        for (std::size_t j = p; j < v.size(); ++j)
            if (!h.hnf(k, j).is_zero()) v[j].submul(q, h.hnf(k, j));
        y[k] = std::move(q);
    }
    if (!is_zero(v)) return std::nullopt;
    IntVector c(rank());
    for (std::size_t k = 0; k < h.rank; ++k)
        if (!y[k].is_zero())
            for (std::size_t j = 0; j < rank(); ++j)
                if (!h.transform(k, j).is_zero()) c[j].addmul(y[k], h.transform(k, j));
    return c;
}

std::vector<Integer> D2Space::express_in_generators(const DerivationElement& d) const {
    auto c = from_ambient(d);
    if (!c) throw NotInD2();
    // basis elements are generators: ⊙_α sits at the tail, trees among the pair list
    std::vector<Integer> out(generators_.size());
    const int m = static_cast<int>(pairs_.size());
    std::vector<long> gen_of_tree(m * m, -1);
    std::size_t gi = 0;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) gen_of_tree[x * m + y] = static_cast<long>(gi++);
    const std::size_t odot_base = generators_.size() - m;
    for (std::size_t i = 0; i < rank(); ++i) {
        if ((*c)[i].is_zero()) continue;
        const auto& b = basis_[i];
        out[b.odot ? odot_base + b.alpha : gen_of_tree[b.alpha * m + b.beta]] = (*c)[i];
    }
    return out;
}

IntegerLattice D2Space::lattice(const std::vector<IntVector>& coord_vectors) const {
    return IntegerLattice::from_generators(rank(), coord_vectors);
}

IntegerLattice D2Space::dprime2() const {
    std::vector<IntVector> gens;
    for (const auto& g : generators_)
        if (std::holds_alternative<Tree2>(g)) gens.push_back(coords(g));
    return lattice(gens);
}

IntegerLattice D2Space::filtration(int l, Lagrangian lag) const {
    if (l < -1 || l > 3) throw std::invalid_argument("filtration level out of range");
    std::vector<IntVector> gens;
    for (const auto& g : generators_) {
        auto [na, nb] = classify_type(sp(), g);
        if ((lag == Lagrangian::A ? na : nb) >= l + 1) gens.push_back(coords(g));
    }
    return lattice(gens);
}

IntegerLattice D2Space::ker_projection(Lagrangian lag) const {
    IntegerMatrix p = basis_ambient_ * ctx_->projection_matrix(3, lag);
    return kernel_lattice(p.transpose());
}

IntegerMatrix D2Space::action_matrix(const IntegerMatrix& m) const {
    if (!sp().is_symplectic(m)) throw ContextError("matrix is not symplectic");
    IntegerMatrix out(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i) out.set_row(i, coords(act(m, basis_[i].gen)));
    return out;
}

DerivationElement D2Space::apply_homology_action(const IntegerMatrix& m, const DerivationElement& v) const {
    if (!sp().is_symplectic(m)) throw ContextError("matrix is not symplectic");
    return apply_matrix(*ctx_, m, v);
}

}  // namespace symp

#include "symp/traces.hpp"

namespace symp {

std::size_t sym2_dim(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
std::size_t ext2_dim(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::size_t sym2_index(int n, int p, int q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * n - static_cast<std::size_t>(p) * (p - 1) / 2 + (q - p);
}

std::size_t ext2_index(int n, int p, int q) {
    if (p >= q) throw std::invalid_argument("ext2_index needs p < q");
    return static_cast<std::size_t>(p) * (2 * n - p - 1) / 2 + (q - p - 1);
}

std::pair<int, int> sym2_pair(int n, std::size_t idx) {
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q)
            if (sym2_index(n, p, q) == idx) return {p, q};
    throw std::out_of_range("sym2_pair");
}

std::pair<int, int> ext2_pair(int n, std::size_t idx) {
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (ext2_index(n, p, q) == idx) return {p, q};
    throw std::out_of_range("ext2_pair");
}

GF2Vector sym2_product(const HVector& x, const HVector& y) {
    const int n = static_cast<int>(x.size());
    GF2Vector out(sym2_dim(n));
    for (int p = 0; p < n; ++p) {
        if (!(x[p] & 1)) continue;
        for (int q = 0; q < n; ++q)
            if (y[q] & 1) out.flip(sym2_index(n, p, q));
    }
    return out;
}

GF2Vector ext2_product(const HVector& x, const HVector& y) {
    const int n = static_cast<int>(x.size());
    GF2Vector out(ext2_dim(n));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if ((x[p] * y[q] - x[q] * y[p]) & 1) out.flip(ext2_index(n, p, q));
    return out;
}

GF2Vector sym2_omega(const SymplecticContext& sp) {
    const int n = sp.dim();
    GF2Vector w(sym2_dim(n));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (sp.omega_basis(p, q) & 1) w.set(sym2_index(n, p, q));
    return w;
}

GF2Vector ext2_omega(const SymplecticContext& sp) {
    const int n = sp.dim();
    GF2Vector w(ext2_dim(n));
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (sp.omega_basis(p, q) & 1) w.set(ext2_index(n, p, q));
    return w;
}

namespace {

// Kernel dimension of a nonzero functional.
std::size_t functional_kernel_dim(const GF2Vector& w) { return w.size() - (w.is_zero() ? 0 : 1); }

bool odd(std::int64_t x) { return x & 1; }

template <class Product>
GF2Vector tree_trace(const SymplecticContext& sp, const Tree2& t, Product prod, std::size_t dim) {
    GF2Vector out(dim);
    if (odd(sp.omega(t.a, t.d))) out ^= prod(t.b, t.c);
    if (odd(sp.omega(t.a, t.c))) out ^= prod(t.b, t.d);
    if (odd(sp.omega(t.b, t.d))) out ^= prod(t.a, t.c);
    if (odd(sp.omega(t.b, t.c))) out ^= prod(t.a, t.d);
    return out;
}

}  // namespace

std::size_t sym2_omega_kernel_dim(const SymplecticContext& sp) { return functional_kernel_dim(sym2_omega(sp)); }
std::size_t ext2_omega_kernel_dim(const SymplecticContext& sp) { return functional_kernel_dim(ext2_omega(sp)); }

GF2Vector tr_sym(const SymplecticContext& sp, const Tree2& t) {
    return tree_trace(sp, t, sym2_product, sym2_dim(sp.dim()));
}

GF2Vector tr_as(const SymplecticContext& sp, const Generator& g) {
    if (const auto* t = std::get_if<Tree2>(&g)) return tree_trace(sp, *t, ext2_product, ext2_dim(sp.dim()));
    const auto& s = std::get<SymHalf>(g);
    if (odd(sp.omega(s.a, s.b))) return GF2Vector(ext2_dim(sp.dim()));
    return ext2_product(s.a, s.b);
}

GF2Vector tr_as(const SymplecticContext& sp, const Combination& c) {
    GF2Vector out(ext2_dim(sp.dim()));
    for (const auto& t : c)
        if (odd(t.coeff)) out ^= tr_as(sp, t.gen);
    return out;
}

GF2Vector tr_sym(const SymplecticContext& sp, const Combination& c) {
    GF2Vector out(sym2_dim(sp.dim()));
    for (const auto& t : c) {
        const auto* tree = std::get_if<Tree2>(&t.gen);
        if (!tree) throw NotInDprime2();
        if (odd(t.coeff)) out ^= tr_sym(sp, *tree);
    }
    return out;
}

IntVector tr_omegaS(const FreeLieContext& ctx, const DerivationElement& v, const IntegerMatrix& s) {
    const auto& sp = ctx.symplectic();
    const int g = sp.genus(), n = sp.dim();
    if (s.rows() != static_cast<std::size_t>(g) || s.cols() != static_cast<std::size_t>(g) || !(s == s.transpose()))
        throw std::invalid_argument("S must be a symmetric g x g matrix");
    if (v.lie_degree != 3) throw std::invalid_argument("tr_omegaS expects an element of H⊗L3");
    const std::size_t dl = ctx.lie().dim(3);
    IntVector out(static_cast<std::size_t>(n) * n);
    for (int h = g; h < n; ++h) {
        LieElement xi{3, std::vector<std::int64_t>(v.coeffs.begin() + h * dl, v.coeffs.begin() + (h + 1) * dl)};
        if (xi.is_zero()) continue;
        Tensor t = ctx.lie().lie_to_tensor(xi);
        for (std::size_t w = 0; w < t.size(); ++w) {
            if (!t[w]) continue;
            auto word = t.word(w);
            if (word[0] < g) continue;
            const Integer& c = s(h - g, word[0] - g);
            if (!c.is_zero()) out[word[1] * n + word[2]].addmul(c, Integer(t[w]));
        }
    }
    return out;
}

GF2Vector gf2_image(const IntVector& x, const GF2Matrix& m) {
    GF2Vector out(m.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].is_odd()) out ^= m.row(i);
    return out;
}

IntegerLattice mod2_kernel(const IntegerLattice& dom, const GF2Matrix& m) {
    GF2Matrix images(0, m.cols());
    for (const auto& b : dom.basis()) images.append_row(gf2_image(b, m));
    std::vector<IntVector> gens;
    for (const auto& x : gf2_left_kernel(images)) {
        IntVector v(dom.ambient_dim());
        for (std::size_t i = 0; i < dom.rank(); ++i)
            if (x.get(i)) v = add(v, dom.basis()[i]);
        gens.push_back(std::move(v));
    }
    for (const auto& b : dom.basis()) gens.push_back(scale(Integer(2), b));
    return IntegerLattice::from_generators(dom.ambient_dim(), gens);
}

IntegerLattice integer_kernel(const IntegerLattice& dom, const IntegerMatrix& m) {
    if (dom.rank() == 0) return dom;
    IntegerMatrix b = dom.basis_matrix();
    IntegerMatrix p = b * m;
    std::vector<IntVector> gens;
    for (const auto& y : kernel_basis(p.transpose())) gens.push_back(y * b);
    return IntegerLattice::from_generators(dom.ambient_dim(), gens);
}

Traces::Traces(const D2Space& d) : d_(d) {
    const auto& sp = d.sp();
    const int g = sp.genus();
    as_ = GF2Matrix(0, ext2_dim(sp.dim()));
    a_ = IntegerMatrix(d.rank(), sym2_dim(g));
    b_ = IntegerMatrix(d.rank(), sym2_dim(g));
    for (std::size_t i = 0; i < d.rank(); ++i) {
        const auto& e = d.basis()[i];
        as_.append_row(symp::tr_as(sp, e.gen));
        DerivationElement amb = d.to_ambient([&] {
            IntVector c(d.rank());
            c[i] = 1;
            return c;
        }());
        a_.set_row(i, lagrangian_trace(amb, Lagrangian::A));
        b_.set_row(i, lagrangian_trace(amb, Lagrangian::B));
    }
    f0a_ = d.filtration(0, Lagrangian::A);
    f0b_ = d.filtration(0, Lagrangian::B);
}

IntVector Traces::lagrangian_trace(const DerivationElement& v, Lagrangian lag) const {
    // Keep h in the Lagrangian, project the Lie part to H/lag, pair h with the first letter.
    const auto& ctx = d_.ctx();
    const auto& sp = d_.sp();
    const int g = sp.genus();
    const std::size_t dl = ctx.lie().dim(3);
    const int h0 = lag == Lagrangian::A ? 0 : g;
    IntVector out(sym2_dim(g));
    for (int i = 0; i < g; ++i) {
        const int h = h0 + i;
        LieElement xi{3, std::vector<std::int64_t>(v.coeffs.begin() + h * dl, v.coeffs.begin() + (h + 1) * dl)};
        if (xi.is_zero()) continue;
        Tensor t = ctx.project_tensor(ctx.lie().lie_to_tensor(xi), lag);
        // ω'(a_i, b'_j) = δ_ij; ω''(b_i, a'_j) = ω(b_i, a_j) = −δ_ij
        const std::int64_t pairing = lag == Lagrangian::A ? 1 : -1;
        for (std::size_t w = 0; w < t.size(); ++w) {
            if (!t[w]) continue;
            auto word = t.word(w);
            if (word[0] != i) continue;
            out[sym2_index(g, word[1], word[2])] += Integer(pairing * t[w]);
        }
    }
    return out;
}

GF2Vector Traces::tr_as(const IntVector& coords) const { return gf2_image(coords, as_); }

GF2Vector Traces::tr_as(const DerivationElement& v) const {
    auto c = d_.from_ambient(v);
    if (!c) throw NotInD2();
    return tr_as(*c);
}

GF2Vector Traces::tr_sym(const IntVector& coords) const {
    const auto& sp = d_.sp();
    GF2Vector out(sym2_dim(sp.dim()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        const auto& e = d_.basis()[i];
        if (e.odot) {
            // c ⊙ with c even is (c/2)·(x,y|x,y), whose trace vanishes
            if (coords[i].is_odd()) throw NotInDprime2();
            continue;
        }
        if (coords[i].is_odd()) out ^= symp::tr_sym(sp, std::get<Tree2>(e.gen));
    }
    return out;
}

GF2Vector Traces::tr_sym(const DerivationElement& v) const {
    auto c = d_.from_ambient(v);
    if (!c) throw NotInD2();
    return tr_sym(*c);
}

IntVector Traces::tr_A(const IntVector& coords) const {
    if (!f0a_.contains(coords)) throw FiltrationError();
    return coords * a_;
}

IntVector Traces::tr_A(const DerivationElement& v) const {
    auto c = d_.from_ambient(v);
    if (!c) throw NotInD2();
    if (!f0a_.contains(*c)) throw FiltrationError();
    return lagrangian_trace(v, Lagrangian::A);
}

IntVector Traces::tr_B(const IntVector& coords) const {
    if (!f0b_.contains(coords)) throw FiltrationError();
    return coords * b_;
}

IntVector Traces::tr_B(const DerivationElement& v) const {
    auto c = d_.from_ambient(v);
    if (!c) throw NotInD2();
    if (!f0b_.contains(*c)) throw FiltrationError();
    return lagrangian_trace(v, Lagrangian::B);
}

IntegerLattice Traces::ker_tr_as() const { return mod2_kernel(d_.full(), as_); }

IntegerLattice Traces::ker_tr_sym() const {
    const auto& sp = d_.sp();
    GF2Matrix m(0, sym2_dim(sp.dim()));
    for (const auto& e : d_.basis())
        m.append_row(e.odot ? GF2Vector(sym2_dim(sp.dim())) : symp::tr_sym(sp, std::get<Tree2>(e.gen)));
    return mod2_kernel(d_.dprime2(), m);
}

IntegerLattice Traces::ker_tr_A() const { return integer_kernel(f0a_, a_); }
IntegerLattice Traces::ker_tr_B() const { return integer_kernel(f0b_, b_); }
IntegerLattice Traces::ker_A_as() const { return mod2_kernel(ker_tr_A(), as_); }

IntegerLattice Traces::ker_A_B_as() const {
    return mod2_kernel(intersection(ker_tr_A(), ker_tr_B()), as_);
}

std::size_t Traces::tr_as_image_rank() const { return gf2_rank(as_); }

std::size_t Traces::tr_sym_image_rank() const {
    const auto& sp = d_.sp();
    GF2Matrix m(0, sym2_dim(sp.dim()));
    for (const auto& g : d_.generators())
        if (const auto* t = std::get_if<Tree2>(&g)) m.append_row(symp::tr_sym(sp, *t));
    return gf2_rank(m);
}

}  // namespace symp

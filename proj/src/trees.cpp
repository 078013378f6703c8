#include "symp/trees.hpp"

#include <sstream>

namespace symp {

Combination operator+(Combination x, const Combination& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

Combination operator-(Combination x, const Combination& y) {
    for (const auto& t : y) x.push_back({-t.coeff, t.gen});
    return x;
}

Combination operator*(std::int64_t c, Combination x) {
    for (auto& t : x) t.coeff = checked_mul(c, t.coeff);
    return x;
}

Combination single(const Generator& g, std::int64_t c) { return {Term{c, g}}; }

namespace {

Tensor vec(const HVector& v) { return Tensor::from_vector(v); }

}  // namespace

DerivationElement eta1(const FreeLieContext& ctx, const Tree1& t) {
    DerivationElement d = ctx.derivation_term(t.u, commutator(vec(t.w), vec(t.v)));
    d = ctx.add(d, ctx.derivation_term(t.v, commutator(vec(t.u), vec(t.w))));
    return ctx.add(d, ctx.derivation_term(t.w, commutator(vec(t.v), vec(t.u))));
}

DerivationElement eta2(const FreeLieContext& ctx, const Tree2& t) {
    Tensor A = vec(t.a), B = vec(t.b), C = vec(t.c), D = vec(t.d);
    Tensor cd = commutator(C, D), ab = commutator(A, B);
    DerivationElement r = ctx.derivation_term(t.a, commutator(B, cd));
    r = ctx.add(r, ctx.derivation_term(t.b, commutator(cd, A)));
    r = ctx.add(r, ctx.derivation_term(t.c, commutator(D, ab)));
    return ctx.add(r, ctx.derivation_term(t.d, commutator(ab, C)));
}

DerivationElement expand_symhalf(const FreeLieContext& ctx, const SymHalf& s) {
    Tensor A = vec(s.a), B = vec(s.b);
    Tensor ab = commutator(A, B);
    DerivationElement r = ctx.derivation_term(s.a, commutator(B, ab));
    return ctx.add(r, ctx.derivation_term(s.b, commutator(ab, A)));
}

DerivationElement expand(const FreeLieContext& ctx, const Generator& g) {
    if (const auto* t = std::get_if<Tree2>(&g)) return eta2(ctx, *t);
    return expand_symhalf(ctx, std::get<SymHalf>(g));
}

DerivationElement expand(const FreeLieContext& ctx, const Combination& c) {
    DerivationElement r = ctx.zero_derivation(3);
    for (const auto& t : c)
        if (t.coeff) r = ctx.add(r, expand(ctx, t.gen), t.coeff);
    return r;
}

std::vector<std::pair<std::int64_t, Tree2>> tree_bracket(const SymplecticContext& sp, const Tree1& s, const Tree1& t) {
    std::vector<std::pair<std::int64_t, Tree2>> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.emplace_back(sp.omega(s.leaf(i), t.leaf(j)),
                             Tree2{s.leaf((i + 1) % 3), s.leaf((i + 2) % 3), t.leaf((j + 1) % 3), t.leaf((j + 2) % 3)});
    return out;
}

Combination tree_bracket_combination(const SymplecticContext& sp, const Tree1& s, const Tree1& t) {
    Combination c;
    for (auto& [w, tree] : tree_bracket(sp, s, t))
        if (w) c.push_back({w, tree});
    return c;
}

namespace {

// Image D(e_x) of every basis letter, as tensors of degree lie_degree.
std::vector<Tensor> action_table(const FreeLieContext& ctx, const DerivationElement& d) {
    const auto& sp = ctx.symplectic();
    const std::size_t m = ctx.lie().dim(d.lie_degree);
    std::vector<Tensor> img(sp.dim(), Tensor(sp.dim(), d.lie_degree));
    for (int h = 0; h < sp.dim(); ++h) {
        LieElement xi{d.lie_degree, std::vector<std::int64_t>(d.coeffs.begin() + h * m, d.coeffs.begin() + (h + 1) * m)};
        if (xi.is_zero()) continue;
        Tensor t = ctx.lie().lie_to_tensor(xi);
        for (int x = 0; x < sp.dim(); ++x)
            if (std::int64_t w = sp.omega_basis(h, x)) img[x].add_scaled(w, t);
    }
    return img;
}

Tensor apply_derivation(const std::vector<Tensor>& img, const Tensor& t) {
    const int n = t.letters();
    const int k = t.degree(), e = img[0].degree();
    Tensor out(n, k + e - 1);
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (!t[w]) continue;
        std::vector<int> word = t.word(w);
        for (int pos = 0; pos < k; ++pos) {
            const Tensor& im = img[word[pos]];
            std::size_t prefix = 0, suffix = 0, suffix_scale = 1;
            for (int i = 0; i < pos; ++i) prefix = prefix * n + word[i];
            for (int i = pos + 1; i < k; ++i) {
                suffix = suffix * n + word[i];
                suffix_scale *= n;
            }
            for (std::size_t u = 0; u < im.size(); ++u) {
                if (!im[u]) continue;
                std::size_t idx = (prefix * im.size() + u) * suffix_scale + suffix;
                out[idx] = checked_add(out[idx], checked_mul(t[w], im[u]));
            }
        }
    }
    return out;
}

}  // namespace

DerivationElement derivation_bracket(const FreeLieContext& ctx, const DerivationElement& d1,
                                     const DerivationElement& d2) {
    const auto& sp = ctx.symplectic();
    auto i1 = action_table(ctx, d1), i2 = action_table(ctx, d2);
    const int deg = d1.lie_degree + d2.lie_degree - 1;
    std::vector<Tensor> img(sp.dim());
    for (int x = 0; x < sp.dim(); ++x) img[x] = apply_derivation(i1, i2[x]) - apply_derivation(i2, i1[x]);
    // D = sum_i a_i ⊗ D(b_i) − b_i ⊗ D(a_i)
    DerivationElement r = ctx.zero_derivation(deg);
    const int g = sp.genus();
    for (int i = 0; i < g; ++i) {
        r = ctx.add(r, ctx.derivation_term(sp.basis(i), img[g + i]));
        r = ctx.add(r, ctx.derivation_term(sp.basis(g + i), img[i]), -1);
    }
    return r;
}

Tensor apply_matrix(const IntegerMatrix& m, const Tensor& t) {
    const int n = t.letters();
    std::vector<std::vector<std::pair<int, std::int64_t>>> col(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!m(y, x).is_zero()) col[x].emplace_back(y, m(y, x).to_int64());
    Tensor out(n, t.degree());
    for (std::size_t w = 0; w < t.size(); ++w) {
        if (!t[w]) continue;
        std::vector<std::pair<std::size_t, std::int64_t>> acc{{0, t[w]}};
        for (int x : t.word(w)) {
            std::vector<std::pair<std::size_t, std::int64_t>> next;
            for (auto [idx, c] : acc)
                for (auto [y, e] : col[x]) next.emplace_back(idx * n + y, checked_mul(c, e));
            acc = std::move(next);
        }
        for (auto [idx, c] : acc) out[idx] = checked_add(out[idx], c);
    }
    return out;
}

DerivationElement tensor_to_derivation(const FreeLieContext& ctx, const Tensor& t) {
    const auto& sp = ctx.symplectic();
    const int k = t.degree() - 1;
    DerivationElement r = ctx.zero_derivation(k);
    Tensor sub(sp.dim(), k);
    const std::size_t block = sub.size();
    for (int p = 0; p < sp.dim(); ++p) {
        for (std::size_t u = 0; u < block; ++u) sub[u] = t[p * block + u];
        if (sub.is_zero()) continue;
        r = ctx.add(r, ctx.derivation_term(sp.basis(p), sub));
    }
    return r;
}

DerivationElement apply_matrix(const FreeLieContext& ctx, const IntegerMatrix& m, const DerivationElement& d) {
    return tensor_to_derivation(ctx, apply_matrix(m, ctx.derivation_to_tensor(d)));
}

Tree1 act(const IntegerMatrix& m, const Tree1& t) { return {act(m, t.u), act(m, t.v), act(m, t.w)}; }

Tree2 act(const IntegerMatrix& m, const Tree2& t) { return {act(m, t.a), act(m, t.b), act(m, t.c), act(m, t.d)}; }

Generator act(const IntegerMatrix& m, const Generator& g) {
    if (const auto* t = std::get_if<Tree2>(&g)) return act(m, *t);
    const auto& s = std::get<SymHalf>(g);
    return SymHalf{act(m, s.a), act(m, s.b)};
}

Combination act(const IntegerMatrix& m, const Combination& c) {
    Combination r;
    for (const auto& t : c) r.push_back({t.coeff, act(m, t.gen)});
    return r;
}

namespace {

int basis_letter(const HVector& v) {
    int p = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
            if (p >= 0 || (v[i] != 1 && v[i] != -1)) return -1;
            p = static_cast<int>(i);
        }
    return p;
}

}  // namespace

std::pair<int, int> classify_type(const SymplecticContext& sp, const Generator& g) {
    std::vector<HVector> leaves;
    if (const auto* t = std::get_if<Tree2>(&g))
        leaves = {t->a, t->b, t->c, t->d};
    else {
        const auto& s = std::get<SymHalf>(g);
        leaves = {s.a, s.b, s.a, s.b};
    }
    int na = 0, nb = 0;
    for (const auto& v : leaves) {
        int p = basis_letter(v);
        if (p < 0) throw std::invalid_argument("classify_type needs basis-colored leaves");
        (sp.in_A(p) ? na : nb)++;
    }
    return {na, nb};
}

std::string describe(const SymplecticContext& sp, const HVector& v) {
    std::ostringstream os;
    bool first = true;
    for (int p = 0; p < sp.dim(); ++p) {
        if (!v[p]) continue;
        if (v[p] < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (v[p] != 1 && v[p] != -1) os << (v[p] < 0 ? -v[p] : v[p]);
        os << sp.label(p);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string describe(const SymplecticContext& sp, const Generator& g) {
    if (const auto* t = std::get_if<Tree2>(&g))
        return "tree(" + describe(sp, t->a) + "," + describe(sp, t->b) + "|" + describe(sp, t->c) + "," +
               describe(sp, t->d) + ")";
    const auto& s = std::get<SymHalf>(g);
    return describe(sp, s.a) + "⊙" + describe(sp, s.b);
}

}  // namespace symp

#include "symp/catalogs.hpp"

#include "symp/traces.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <sstream>

namespace symp {

namespace {

// Builds entries over 1-based handle indices, dropping zero and repeated values.
class Builder {
public:
    explicit Builder(const D2Space& d) : d_(d), sp_(d.sp()), g_(d.genus()) {}

    HVector a(int i) const { return sp_.a(i); }
    HVector b(int i) const { return sp_.b(i); }

    // Smallest handle index outside the given set, 0 if none.
    int aux(std::initializer_list<int> used) const {
        for (int m = 1; m <= g_; ++m)
            if (std::find(used.begin(), used.end(), m) == used.end()) return m;
        return 0;
    }

    void add(std::string name, std::string provenance, Combination value) {
        IntVector c = d_.coords(value);
        if (is_zero(c) || !seen_.insert(to_strings(c)).second) return;
        out_.entries.push_back({std::move(name), std::move(provenance), std::move(value), std::move(c)});
    }

    void bracket(std::int64_t sign, const Tree1& s, const Tree1& t, std::string provenance) {
        std::ostringstream os;
        os << "bracket[" << (sign < 0 ? "-" : "") << tree_name(s) << "," << tree_name(t) << "]";
        add(os.str(), std::move(provenance), sign * tree_bracket_combination(sp_, s, t));
    }

    void bscc(const std::vector<std::pair<HVector, HVector>>& pairs, std::string provenance) {
        std::ostringstream os;
        os << "bscc";
        for (const auto& [u, v] : pairs) os << "(" << describe(sp_, u) << "," << describe(sp_, v) << ")";
        add(os.str(), std::move(provenance), bscc_image(sp_, pairs));
    }

    void skip() { out_.partial = true; }
    Catalog take() { return std::move(out_); }
    int genus() const { return g_; }
    const SymplecticContext& sp() const { return sp_; }

private:
    std::string tree_name(const Tree1& t) const {
        return "(" + describe(sp_, t.u) + "," + describe(sp_, t.v) + "," + describe(sp_, t.w) + ")";
    }

    const D2Space& d_;
    const SymplecticContext& sp_;
    int g_;
    Catalog out_;
    std::set<std::vector<std::string>> seen_;
};

HVector unit(int n, int p, std::int64_t c = 1) {
    HVector v(n, 0);
    v[p] = c;
    return v;
}

// Type 1 entries: commutators of trees with leaves in A and B.
void type1_brackets(Builder& r) {
    const int g = r.genus();
    auto a = [&](int i) { return r.a(i); };
    auto b = [&](int i) { return r.b(i); };
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (i == j || i == k || i == l) continue;
                    int m = r.aux({j});
                    r.bracket(-1, {a(i), b(j), b(m)}, {b(l), a(m), b(k)}, "type 1 tree (a_i,b_j|b_k,b_l)");
                }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int l = 1; l <= g; ++l) {
                if (i == k || i == l) continue;
                int m = r.aux({i});
                if (!m) { r.skip(); continue; }
                r.bracket(-1, {a(i), b(i), b(m)}, {b(l), a(m), b(k)}, "type 1 tree (a_i,b_i|b_k,b_l)");
            }
    for (int i = 1; i <= g; ++i)
        for (int ip = 1; ip <= g; ++ip)
            for (int j = 1; j <= g; ++j)
                for (int k = 1; k <= g; ++k) {
                    if (i == ip || i == j || i == k || ip == j || ip == k) continue;
                    r.bracket(-1, {a(i), b(j), b(ip)}, {b(i), a(ip), b(k)}, "differences of type 1 trees (a_i,b_j|b_k,b_i)");
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k) {
                if (j == k) continue;
                int l = r.aux({i, j, k});
                if (!l) { r.skip(); continue; }
                r.bracket(-1, {a(i), b(j), b(l)}, {b(i), a(l), b(k)}, "differences of type 1 trees with a contraction");
            }
}

// Type 2 entries.
void type2(Builder& r) {
    const int g = r.genus();
    auto a = [&](int i) { return r.a(i); };
    auto b = [&](int i) { return r.b(i); };
    for (int i = 1; i <= g; ++i) r.bscc({{a(i), b(i)}}, "twist along a meridian-bounding genus 1 curve");
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            r.bscc({{a(i), b(i)}, {a(j), b(j)}}, "twist along the banded genus 2 curve");
    for (int j = 1; j <= g; ++j)
        for (int l = 1; l <= g; ++l)
            if (j != l) r.bscc({{a(j) - a(l), b(j)}}, "twist along the boundary of a neighborhood of a_j#a_l^-1 and b_j");

    // trees (a_i,b_j|b_k,a_l) without contraction
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (j == l || k == i) continue;
                    std::set<int> idx{i, j, k, l};
                    if (idx.size() == 4) {
                        r.bracket(1, {a(i), b(j), a(l)}, {a(l), b(l), b(k)}, "type 2 tree without contraction");
                        continue;
                    }
                    int m = r.aux({i, j, k, l});
                    if (!m) { r.skip(); continue; }
                    r.bracket(1, {a(i), b(j), a(m)}, {a(l), b(m), b(k)}, "type 2 tree without contraction");
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            if (i == j) continue;
            int m = r.aux({i, j});
            if (!m) { r.skip(); continue; }
            r.bracket(1, {a(i), b(j), a(m)}, {b(m), a(i), b(j)}, "twice a symmetric half (a_i,b_j|a_i,b_j)/2");
        }
    for (int i = 1; i <= g; ++i)
        for (int ip = 1; ip <= g; ++ip)
            for (int j = 1; j <= g; ++j)
                for (int l = 1; l <= g; ++l) {
                    if (i == ip || l == j) continue;
                    r.bracket(1, {a(i), b(j), a(ip)}, {a(l), b(ip), b(i)}, "sum of type 2 trees with one contraction");
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l) {
                if (l == j) continue;
                int s = r.aux({i, j, l});
                if (!s) { r.skip(); continue; }
                const char* prov = "twice a type 2 tree with one contraction";
                r.bracket(1, {a(i), b(j), a(s)}, {a(l), b(s), b(i)}, prov);
                r.bracket(1, {a(i), b(j), b(s)}, {a(l), a(s), b(i)}, prov);
                r.bracket(1, {a(s), b(s), a(i)}, {a(l), b(i), b(j)}, prov);
            }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l) {
                if (i == j || l == j) continue;
                r.bracket(-1, {a(i), b(j), a(j)}, {a(l), b(j), b(i)}, "symmetric half minus a type 2 tree");
            }
    for (int p = 1; p <= g; ++p)
        for (int q = 1; q <= g; ++q)
            for (int s = 1; s <= g; ++s) {
                if (p == q || q == s || p == s) continue;
                r.bracket(1, {a(p), b(q), a(s)}, {a(q), b(s), b(p)}, "type 2 trees with two contractions");
            }
}

// Type 3 and 4 entries.
void type34(Builder& r) {
    const int g = r.genus();
    auto a = [&](int i) { return r.a(i); };
    auto b = [&](int i) { return r.b(i); };
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (i == j || k == l) continue;
                    int s = r.aux({i, j});
                    if (!s) { r.skip(); continue; }
                    r.bracket(1, {a(i), a(j), a(s)}, {b(s), a(k), a(l)}, "type 4 tree");
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (i == j || k == i || k == j || k == l) continue;
                    int s = r.aux({i, j, k});
                    if (!s) { r.skip(); continue; }
                    r.bracket(1, {a(i), a(j), a(s)}, {b(s), b(k), a(l)}, "type 3 tree without contraction");
                }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int kp = 1; kp <= g; ++kp)
                for (int l = 1; l <= g; ++l) {
                    if (i == k || i == kp || i == l || k == kp) continue;
                    r.bracket(1, {a(i), a(k), a(kp)}, {a(l), b(kp), b(k)}, "sum of type 3 trees with a contraction");
                    r.bracket(-1, {a(i), a(k), b(kp)}, {a(l), a(kp), b(k)}, "difference of type 3 trees with a contraction");
                }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int m = 1; m <= g; ++m) {
                if (i == k || m == k) continue;
                r.bracket(1, {a(k), b(k), a(i)}, {a(i), b(i), a(m)}, "difference of type 3 trees with a contraction");
                int s = r.aux({i, k, m});
                if (!s) { r.skip(); continue; }
                const char* prov = "twice a type 3 tree with a contraction";
                r.bracket(1, {a(i), a(k), a(s)}, {a(m), b(s), b(k)}, prov);
                r.bracket(1, {a(i), a(k), b(s)}, {a(m), a(s), b(k)}, prov);
                r.bracket(1, {a(s), b(s), a(k)}, {a(i), b(k), a(m)}, prov);
            }
    for (int i = 1; i <= g; ++i)
        for (int l = 1; l <= g; ++l) {
            if (i == l) continue;
            r.bscc({{a(l), a(i) + b(l)}}, "twist along the boundary of a neighborhood of a_l and a_i#b_l");
            r.bscc({{a(i) - b(l), a(l)}}, "twist along the boundary of a neighborhood of a_l and a_i#b_l^-1");
            r.bscc({{a(i) + a(l), b(l) + a(i)}}, "twist along the boundary of a neighborhood of a_i#a_l and b_l#a_i");
            r.bscc({{a(l), b(l) + a(i)}}, "twist along the boundary of a neighborhood of a_l and b_l#a_i");
        }
}

}  // namespace

Combination bscc_image(const SymplecticContext& sp, const std::vector<std::pair<HVector, HVector>>& pairs) {
    const std::size_t h = pairs.size();
    for (std::size_t i = 0; i < h; ++i) {
        sp.check(pairs[i].first);
        sp.check(pairs[i].second);
        for (std::size_t j = 0; j < h; ++j) {
            bool ok = sp.omega(pairs[i].first, pairs[j].second) == (i == j ? 1 : 0) &&
                      sp.omega(pairs[i].first, pairs[j].first) == 0 && sp.omega(pairs[i].second, pairs[j].second) == 0;
            if (!ok) throw ContextError("bscc_image: the pairs are not a symplectic family");
        }
    }
    Combination out;
    for (const auto& [u, v] : pairs) out.push_back({1, SymHalf{u, v}});
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j)
            out.push_back({1, Tree2{pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second}});
    return out;
}

Catalog johnson_catalog(const D2Space& d, int max_terms) {
    const auto& sp = d.sp();
    const int n = sp.dim();
    Builder r(d);
    // vectors with at most max_terms entries ±1, the first one +1
    std::vector<HVector> colors;
    for (int p = 0; p < n; ++p) colors.push_back(unit(n, p));
    for (int terms = 2; terms <= max_terms; ++terms) {
        std::vector<HVector> next;
        for (const auto& c : colors) {
            int last = n - 1;
            while (!c[last]) --last;
            if (std::count_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; }) != terms - 1) continue;
            for (int q = last + 1; q < n; ++q) {
                next.push_back(c + unit(n, q));
                next.push_back(c - unit(n, q));
            }
        }
        colors.insert(colors.end(), next.begin(), next.end());
    }
    for (const auto& u : colors)
        for (const auto& v : colors)
            for (std::int64_t s : {1, -1})
                if (sp.omega(u, s * v) == 1) r.bscc({{u, s * v}}, "genus 1 bounding curve");
    const int g = sp.genus();
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            r.bscc({{sp.a(i), sp.b(i)}, {sp.a(j), sp.b(j)}}, "genus 2 bounding curve");
    // genus 2 trees over symplectic pairs of colors
    std::vector<std::pair<HVector, HVector>> pairs;
    for (const auto& u : colors)
        for (const auto& v : colors)
            for (std::int64_t s : {1, -1})
                if (sp.omega(u, s * v) == 1) pairs.push_back({u, s * v});
    for (std::size_t x = 0; x < pairs.size(); ++x)
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
            const auto& [u1, v1] = pairs[x];
            const auto& [u2, v2] = pairs[y];
            if (sp.omega(u1, u2) || sp.omega(u1, v2) || sp.omega(v1, u2) || sp.omega(v1, v2)) continue;
            r.bscc({pairs[x], pairs[y]}, "genus 2 bounding curve");
        }
    Catalog out = r.take();
    out.color_terms = max_terms;
    return out;
}

Catalog johnson_catalog(const Traces& t) {
    const IntegerLattice target = t.ker_tr_as();
    Catalog c = johnson_catalog(t.space(), 2);
    if (catalog_lattice(t.space(), c) == target) return c;
    return johnson_catalog(t.space(), 3);
}

Catalog realizable_catalog_A(const D2Space& d) {
    Builder r(d);
    type1_brackets(r);
    type2(r);
    type34(r);
    return r.take();
}

GoeritzCatalogs goeritz_catalogs(const D2Space& d) {
    const auto& sp = d.sp();
    const int g = sp.genus();
    GoeritzCatalogs out;
    out.tau1.push_back({sp.a(1), sp.b(1), sp.b(2)});

    Builder r(d);
    auto a = [&](int i) { return sp.a(i); };
    auto b = [&](int i) { return sp.b(i); };
    r.bscc({{a(1), b(1)}}, "twist along the curve [a_1,b_1^-1]");
    r.bscc({{a(1), b(1)}, {a(2), b(2)}}, "twist along the curve [a_2,b_2^-1][a_1,b_1^-1]");
    for (int i = 1; i <= g; ++i) r.bscc({{a(i), b(i)}}, "GL(g,Z) image of the twist along [a_1,b_1^-1]");
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            r.bscc({{a(i), b(i)}, {a(j), b(j)}}, "GL(g,Z) image of the twist along [a_2,b_2^-1][a_1,b_1^-1]");

    // Mixed commutators and their iota images.
    Builder a_side(d);
    type1_brackets(a_side);
    Catalog type1 = a_side.take();
    IntegerMatrix iota = sp.iota();
    for (const auto& e : type1.entries) {
        r.add(e.name, "commutator of Goeritz elements: " + e.provenance, e.value);
        r.add("iota " + e.name, "iota image of a commutator of Goeritz elements", act(iota, e.value));
    }
    if (type1.partial) r.skip();

    // Type 2 trees without contraction.
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (j == l || k == i) continue;
                    std::set<int> idx{i, j, k, l};
                    if (idx.size() == 4) {
                        r.bracket(1, {a(i), b(j), a(l)}, {a(l), b(l), b(k)}, "type 2 tree without contraction");
                        continue;
                    }
                    int m = r.aux({i, j, k, l});
                    if (!m) { r.skip(); continue; }
                    r.bracket(1, {a(i), b(j), a(m)}, {a(l), b(m), b(k)}, "type 2 tree without contraction");
                }
    // Mixed commutators from the type 2 computation.
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            if (i == j) continue;
            int m = r.aux({i, j});
            if (!m) { r.skip(); continue; }
            r.bracket(1, {a(i), b(j), a(m)}, {b(m), a(i), b(j)}, "twice a symmetric half (a_i,b_j|a_i,b_j)/2");
        }
    for (int i = 1; i <= g; ++i)
        for (int ip = 1; ip <= g; ++ip)
            for (int j = 1; j <= g; ++j)
                for (int l = 1; l <= g; ++l) {
                    if (i == ip || l == j) continue;
                    r.bracket(1, {a(i), b(j), a(ip)}, {a(l), b(ip), b(i)}, "sum of type 2 trees with one contraction");
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l) {
                if (l == j) continue;
                int s = r.aux({i, j, l});
                if (!s) { r.skip(); continue; }
                const char* prov = "twice a type 2 tree with one contraction";
                r.bracket(1, {a(i), b(j), a(s)}, {a(l), b(s), b(i)}, prov);
                r.bracket(1, {a(i), b(j), b(s)}, {a(l), a(s), b(i)}, prov);
                r.bracket(1, {a(s), b(s), a(i)}, {a(l), b(i), b(j)}, prov);
            }
    for (int p = 1; p <= g; ++p)
        for (int q = 1; q <= g; ++q)
            for (int s = 1; s <= g; ++s) {
                if (p == q || q == s || p == s) continue;
                r.bracket(1, {a(p), b(q), a(s)}, {a(q), b(s), b(p)}, "type 2 trees with two contractions");
            }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l) {
                if (i == j || l == j) continue;
                r.bracket(-1, {a(i), b(j), a(j)}, {a(l), b(j), b(i)}, "symmetric half minus a type 2 tree");
            }

    // GL(g, Z) and iota images of the genus 1 Goeritz twist: (6_{j,l} - 5_{j,j,l,j}) and (6_{l,j} - 5_{j,j,j,l}).
    for (int j = 1; j <= g; ++j)
        for (int l = 1; l <= g; ++l) {
            if (j == l) continue;
            IntegerMatrix p = IntegerMatrix::identity(g);
            p(j - 1, l - 1) = -1;  // a_l -> a_l - a_j, b_j -> b_j + b_l
            IntegerMatrix m = sp.gl_embed(p);
            Combination six = bscc_image(sp, {{a(j), b(j)}});
            Combination diff = act(m, six) - six;
            std::ostringstream os, is;
            os << "gl(a" << l << "->a" << l << "-a" << j << ",b" << j << "->b" << j << "+b" << l << ")(6_" << j << ","
               << j << ")-6_" << j << "," << j;
            is << "iota " << os.str();
            r.add(os.str(), "GL(g,Z) image of a Goeritz twist", diff);
            r.add(is.str(), "iota image of the GL(g,Z) image of a Goeritz twist", act(iota, diff));
        }
    out.tau2 = r.take();
    return out;
}

IntegerLattice catalog_lattice(const D2Space& d, const Catalog& c) {
    std::vector<IntVector> v;
    v.reserve(c.entries.size());
    for (const auto& e : c.entries) v.push_back(e.coords);
    return IntegerLattice::from_generators(d.rank(), v);
}

IntegerLattice orbit_closure(IntegerLattice l, const std::vector<IntegerMatrix>& gens) {
    for (;;) {
        std::vector<IntVector> v = l.basis();
        for (const auto& m : gens)
            for (const auto& x : l.basis()) v.push_back(x * m);
        IntegerLattice next = IntegerLattice::from_generators(l.ambient_dim(), v);
        if (next == l) return l;
        l = std::move(next);
    }
}

std::vector<IntegerMatrix> gl_generators(int g) {
    std::vector<IntegerMatrix> out;
    IntegerMatrix swap = IntegerMatrix::identity(g);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    out.push_back(swap);
    IntegerMatrix cycle(g, g);
    for (int i = 0; i < g; ++i) cycle((i + 1) % g, i) = 1;
    out.push_back(cycle);
    IntegerMatrix sign = IntegerMatrix::identity(g);
    sign(0, 0) = -1;
    out.push_back(sign);
    IntegerMatrix tv = IntegerMatrix::identity(g);
    tv(0, 1) = 1;
    out.push_back(tv);
    return out;
}

std::size_t ext3_dim(int n) { return static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6; }

namespace {

std::size_t ext3_index(int n, int p, int q, int r) {
    std::size_t idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (x == p && y == q && z == r) return idx;
                ++idx;
            }
    throw std::out_of_range("ext3_index");
}

}  // namespace

IntVector ext3_coords(const SymplecticContext& sp, const Tree1& t) {
    const int n = sp.dim();
    sp.check(t.u);
    sp.check(t.v);
    sp.check(t.w);
    IntVector out(ext3_dim(n));
    for (int p = 0; p < n; ++p) {
        if (!t.u[p]) continue;
        for (int q = 0; q < n; ++q) {
            if (!t.v[q] || q == p) continue;
            for (int s = 0; s < n; ++s) {
                if (!t.w[s] || s == p || s == q) continue;
                int idx[3] = {p, q, s};
                int sign = 1;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j + 1 < 3 - i; ++j)
                        if (idx[j] > idx[j + 1]) {
                            std::swap(idx[j], idx[j + 1]);
                            sign = -sign;
                        }
                out[ext3_index(n, idx[0], idx[1], idx[2])] += Integer(sign * t.u[p] * t.v[q] * t.w[s]);
            }
        }
    }
    return out;
}

IntegerMatrix ext3_action(const SymplecticContext& sp, const IntegerMatrix& m) {
    const int n = sp.dim();
    auto col = [&](int p) {
        HVector c(n);
        for (int y = 0; y < n; ++y) c[y] = m(y, p).to_int64();
        return c;
    };
    IntegerMatrix out(ext3_dim(n), ext3_dim(n));
    std::size_t row = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) out.set_row(row++, ext3_coords(sp, {col(p), col(q), col(r)}));
    return out;
}

IntegerLattice a_wedge_b_wedge_h(const SymplecticContext& sp) {
    const int n = sp.dim(), g = sp.genus();
    std::vector<IntVector> v;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                int in_a = (p < g) + (q < g) + (r < g);
                if (in_a == 0 || in_a == 3) continue;
                v.push_back(ext3_coords(sp, {sp.basis(p), sp.basis(q), sp.basis(r)}));
            }
    return IntegerLattice::from_generators(ext3_dim(n), v);
}

IntegerLattice tau1_orbit_lattice(const SymplecticContext& sp, const std::vector<Tree1>& seeds) {
    std::vector<IntVector> v;
    for (const auto& t : seeds) v.push_back(ext3_coords(sp, t));
    std::vector<IntegerMatrix> gens;
    for (const auto& p : gl_generators(sp.genus())) gens.push_back(ext3_action(sp, sp.gl_embed(p)));
    gens.push_back(ext3_action(sp, sp.iota()));
    return orbit_closure(IntegerLattice::from_generators(ext3_dim(sp.dim()), v), gens);
}

}  // namespace symp

#include "symp/catalogs.hpp"
#include "symp/traces.hpp"

#include <catch_amalgamated.hpp>

#include <map>

using namespace symp;

namespace {

const D2Space& space(int g) {
    static std::map<int, std::unique_ptr<D2Space>> cache;
    auto& s = cache[g];
    if (!s) s = std::make_unique<D2Space>(g);
    return *s;
}

const Traces& traces(int g) {
    static std::map<int, std::unique_ptr<Traces>> cache;
    auto& t = cache[g];
    if (!t) t = std::make_unique<Traces>(space(g));
    return *t;
}

// The named families, 1-based indices.
struct Named {
    const SymplecticContext& sp;
    HVector a(int i) const { return sp.a(i); }
    HVector b(int i) const { return sp.b(i); }
    Combination tree(const HVector& w, const HVector& x, const HVector& y, const HVector& z) const {
        return single(Tree2{w, x, y, z});
    }
    Combination t1(int i, int j, int k, int l) const { return tree(a(i), b(j), b(k), b(l)); }
    Combination t2(int i, int j, int k) const { return tree(a(i), b(j), b(k), b(i)); }
    Combination t3(int i, int k, int l) const { return tree(a(i), b(i), b(k), b(l)); }
    Combination t4(int i, int k) const { return tree(a(i), b(i), b(k), b(i)); }
    Combination t5(int i, int j, int k, int l) const { return tree(a(i), b(j), b(k), a(l)); }
    Combination t6(int i, int j) const { return single(SymHalf{a(i), b(j)}); }
    Combination t7(int i, int j, int k, int l) const { return tree(a(i), a(j), b(k), a(l)); }
    Combination t8(int i, int j) const { return single(SymHalf{a(i), a(j)}); }
    Combination br(const Tree1& s, const Tree1& t) const { return tree_bracket_combination(sp, s, t); }
};

}  // namespace

TEST_CASE("bscc images") {
    const auto& d = space(3);
    const auto& sp = d.sp();
    Named n{sp};
    for (int i = 1; i <= 3; ++i) CHECK(d.coords(bscc_image(sp, {{sp.a(i), sp.b(i)}})) == d.coords(n.t6(i, i)));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(d.coords(bscc_image(sp, {{sp.a(i), sp.b(i)}, {sp.a(j), sp.b(j)}})) ==
                  d.coords(n.t6(i, i) - n.t5(i, i, j, j) + n.t6(j, j)));
    for (int i = 1; i <= 3; ++i)
        for (int l = 1; l <= 3; ++l) {
            if (i == l) continue;
            Combination half = single(SymHalf{sp.b(l), sp.a(l)});
            CHECK(d.coords(bscc_image(sp, {{sp.a(l), sp.a(i) + sp.b(l)}})) ==
                  d.coords(n.t8(i, l) + n.t7(i, l, l, l) + half));
            CHECK(d.coords(bscc_image(sp, {{sp.a(i) - sp.b(l), sp.a(l)}})) ==
                  d.coords(n.t8(i, l) - n.t7(i, l, l, l) + half));
        }
    CHECK_THROWS_AS(bscc_image(sp, {{sp.a(1), sp.b(1)}, {sp.a(2), -sp.b(2)}}), ContextError);
    CHECK_THROWS_AS(bscc_image(sp, {{sp.a(1), sp.b(2)}}), ContextError);
    CHECK_THROWS_AS(bscc_image(sp, {{sp.a(1), sp.b(1)}, {sp.a(2) + sp.b(1), sp.b(2)}}), ContextError);

    // always inside D2(H)
    Combination c = bscc_image(sp, {{sp.a(1) + sp.a(2), sp.b(1)}, {sp.a(3) + sp.b(2) - sp.b(1), sp.b(3)}});
    auto back = d.from_ambient(expand(d.ctx(), c));
    REQUIRE(back);
    CHECK(*back == d.coords(c));
}

TEST_CASE("classify_type on the named families") {
    SymplecticContext sp(4);
    Named n{sp};
    auto type = [&](const Combination& c) { return classify_type(sp, c.front().gen); };
    CHECK(type(n.t1(1, 2, 3, 4)) == std::pair{1, 3});
    CHECK(type(n.t4(1, 2)) == std::pair{1, 3});
    CHECK(type(n.t5(1, 2, 3, 4)) == std::pair{2, 2});
    CHECK(type(n.t6(1, 2)) == std::pair{2, 2});
    CHECK(type(n.t7(1, 2, 3, 4)) == std::pair{3, 1});
    CHECK(type(n.t8(1, 2)) == std::pair{4, 0});
}

TEST_CASE("type 1 realizations as commutators") {
    const auto& d = space(4);
    const auto& sp = d.sp();
    Named n{sp};
    auto a = [&](int i) { return sp.a(i); };
    auto b = [&](int i) { return sp.b(i); };
    auto eq = [&](const Combination& x, const Combination& y) { return d.coords(x) == d.coords(y); };
    const int g = 4;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (i == j || i == k || i == l) continue;
                    for (int m = 1; m <= g; ++m) {
                        if (m == j) continue;
                        CHECK(eq(-1 * n.br({a(i), b(j), b(m)}, {b(l), a(m), b(k)}), n.t1(i, j, k, l)));
                        CHECK(d.coords(n.t1(i, j, k, l)) == d.coords(Generator{Tree2{a(i), b(j), b(k), b(l)}}));
                    }
                }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int l = 1; l <= g; ++l) {
                if (i == k || i == l) continue;
                for (int m = 1; m <= g; ++m)
                    if (m != i) CHECK(eq(-1 * n.br({a(i), b(i), b(m)}, {b(l), a(m), b(k)}), n.t3(i, k, l)));
            }
    for (int i = 1; i <= g; ++i)
        for (int ip = 1; ip <= g; ++ip)
            for (int j = 1; j <= g; ++j)
                for (int k = 1; k <= g; ++k) {
                    if (i == ip || i == j || i == k || ip == j || ip == k) continue;
                    Combination x = -1 * n.br({a(i), b(j), b(ip)}, {b(i), a(ip), b(k)});
                    if (j == k) CHECK(eq(x, n.t2(i, j, j) - n.t2(ip, j, j)));
                    // the third display uses the same bracket plus a type 1 tree
                    CHECK(eq(n.t2(i, j, k) - n.t2(ip, j, k), x + n.tree(a(ip), b(ip), b(j), b(k))));
                }
    // the second display reads 2_{i,j,k} − 2_{i',k,j}; the bracket gives 2_{i,j,k} − 2_{i',j,k} − (a_i',b_i'|b_j,b_k)
    {
        Combination x = -1 * n.br({a(1), b(2), b(3)}, {b(1), a(3), b(4)});
        CHECK(eq(x, n.t2(1, 2, 4) - n.t2(3, 2, 4) - n.tree(a(3), b(3), b(2), b(4))));
    }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k) {
                if (i == j || i == k || j == k) continue;
                for (int l = 1; l <= g; ++l) {
                    if (l == i || l == j || l == k) continue;
                    CHECK(eq(n.t2(i, j, k) - n.t4(j, k),
                             -1 * n.br({a(i), b(j), b(l)}, {b(i), a(l), b(k)}) + n.br({a(j), b(j), b(l)}, {b(j), a(l), b(k)})));
                }
            }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k) {
            if (i == k) continue;
            for (int l = 1; l <= g; ++l) {
                if (l == i || l == k) continue;
                CHECK(eq(n.t4(i, k) - n.t4(k, i), -1 * n.br({a(i), b(i), b(l)}, {b(i), a(l), b(k)}) +
                                                      n.br({a(k), b(k), b(l)}, {b(k), a(l), b(i)}) +
                                                      n.tree(a(l), b(l), b(i), b(k))));
            }
        }
    for (int ip = 1; ip <= g; ++ip)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k) {
                if (ip == j || ip == k) continue;
                for (int l = 1; l <= g; ++l)
                    if (l != ip)
                        CHECK(eq(n.tree(a(ip), b(ip), b(j), b(k)), -1 * n.br({a(ip), b(ip), b(l)}, {b(k), a(l), b(j)})));
            }
}

TEST_CASE("type 2 realizations") {
    const auto& d = space(4);
    const auto& sp = d.sp();
    Named n{sp};
    auto a = [&](int i) { return sp.a(i); };
    auto b = [&](int i) { return sp.b(i); };
    auto eq = [&](const Combination& x, const Combination& y) { return d.coords(x) == d.coords(y); };
    const int g = 4;
    for (int i = 1; i <= g; ++i)
        for (int ip = 1; ip <= g; ++ip)
            for (int j = 1; j <= g; ++j)
                for (int l = 1; l <= g; ++l) {
                    if (i == ip || l == j || i == j || ip == j || i == l || ip == l) continue;
                    CHECK(eq(n.t5(i, j, i, l) + n.t5(ip, j, ip, l), n.br({a(i), b(j), a(ip)}, {a(l), b(ip), b(i)})));
                }
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = 1; l <= g; ++l) {
                if (l == j || i == j || i == l) continue;
                for (int r = 1; r <= g; ++r) {
                    if (r == i || r == j || r == l) continue;
                    CHECK(eq(2 * n.t5(i, j, i, l), n.br({a(i), b(j), a(r)}, {a(l), b(r), b(i)}) -
                                                       n.br({a(i), b(j), b(r)}, {a(l), a(r), b(i)}) -
                                                       n.br({a(r), b(r), a(i)}, {a(l), b(i), b(j)})));
                }
                CHECK(eq(n.t6(l, j) - n.t5(i, j, i, l),
                         n.t6(l, j) - n.br({a(i), b(j), a(j)}, {a(l), b(j), b(i)}) - n.tree(b(j), a(j), b(j), a(l))));
                CHECK(eq(bscc_image(sp, {{a(j) - a(l), b(j)}}),
                         n.t6(l, j) - n.tree(b(j), a(j), b(j), a(l)) + n.t6(j, j)));
            }
    for (int i = 2; i <= g; ++i)
        for (int j = 2; j <= g; ++j) {
            if (i == j) continue;
            CHECK(eq(n.br({a(1), b(i), a(j)}, {a(i), b(j), b(1)}),
                     n.t5(1, i, 1, i) + n.t5(i, j, i, j) - n.tree(a(j), a(1), b(j), b(1))));
            CHECK(eq(n.tree(a(j), a(1), b(j), b(1)), n.t5(j, 1, j, 1) - n.t5(j, j, 1, 1)));
        }
    // 2 6_{i,j} without contraction
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            if (i == j) continue;
            for (int r = 1; r <= g; ++r)
                if (r != i && r != j) CHECK(eq(2 * n.t6(i, j), n.br({a(i), b(j), a(r)}, {b(r), a(i), b(j)})));
        }
    // type 2 trees without contraction, both displayed forms
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int k = 1; k <= g; ++k)
                for (int l = 1; l <= g; ++l) {
                    if (j == l || k == i) continue;
                    if (i != j && i != l && j != k && k != l)
                        CHECK(eq(n.t5(i, j, k, l), n.br({a(i), b(j), a(l)}, {a(l), b(l), b(k)})));
                    for (int m = 1; m <= g; ++m)
                        if (m != i && m != j && m != k && m != l)
                            CHECK(eq(n.t5(i, j, k, l), n.br({a(i), b(j), a(m)}, {a(l), b(m), b(k)})));
                }
}

TEST_CASE("type 3 and 4 realizations") {
    const auto& d = space(4);
    const auto& sp = d.sp();
    Named n{sp};
    auto a = [&](int i) { return sp.a(i); };
    auto b = [&](int i) { return sp.b(i); };
    auto eq = [&](const Combination& x, const Combination& y) { return d.coords(x) == d.coords(y); };
    const int g = 4;
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int kp = 1; kp <= g; ++kp)
                for (int l = 1; l <= g; ++l) {
                    if (i == k || i == kp || i == l || k == kp || l == k || l == kp) continue;
                    CHECK(eq(n.t7(i, k, k, l) + n.t7(i, kp, kp, l), n.br({a(i), a(k), a(kp)}, {a(l), b(kp), b(k)})));
                    CHECK(eq(n.t7(i, k, k, l) - n.t7(l, kp, kp, i), -1 * n.br({a(i), a(k), b(kp)}, {a(l), a(kp), b(k)})));
                }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k)
            for (int m = 1; m <= g; ++m) {
                if (i == k || m == k || m == i) continue;
                CHECK(eq(n.t7(i, k, k, m) - n.t7(m, k, k, i), n.tree(a(k), b(k), a(m), a(i))));
                CHECK(eq(n.tree(a(k), b(k), a(m), a(i)), n.br({a(k), b(k), a(i)}, {a(i), b(i), a(m)})));
                for (int r = 1; r <= g; ++r) {
                    if (r == i || r == k || r == m) continue;
                    CHECK(eq(2 * n.t7(i, k, k, m), n.br({a(i), a(k), a(r)}, {a(m), b(r), b(k)}) -
                                                       n.br({a(i), a(k), b(r)}, {a(m), a(r), b(k)}) -
                                                       n.br({a(r), b(r), a(k)}, {a(i), b(k), a(m)})));
                }
            }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k) {
            if (i == k) continue;
            Combination lhs = bscc_image(sp, {{a(i) + a(k), b(k) + a(i)}}) - bscc_image(sp, {{a(k), b(k) + a(i)}});
            CHECK(eq(lhs, n.t6(i, k) - n.t5(i, k, k, k) + n.t7(i, k, k, i)));
            CHECK(eq(n.t5(i, k, k, k), n.t5(k, k, k, i)));
        }
}

TEST_CASE("Goeritz identities") {
    const auto& d = space(3);
    const auto& sp = d.sp();
    Named n{sp};
    auto eq = [&](const Combination& x, const Combination& y) { return d.coords(x) == d.coords(y); };
    IntegerMatrix p = IntegerMatrix::identity(3);
    p(0, 1) = -1;  // a_2 -> a_2 − a_1, b_1 -> b_1 + b_2
    IntegerMatrix m = sp.gl_embed(p);
    CHECK(act(m, sp.b(1)) == sp.b(1) + sp.b(2));
    CHECK(act(m, sp.a(2)) == sp.a(2) - sp.a(1));
    // 6_{1,2} is fixed; 6_{1,1} picks up 6_{1,2} − 5_{1,1,2,1}
    CHECK(eq(act(m, n.t6(1, 2)), n.t6(1, 2)));
    CHECK(eq(act(m, n.t6(1, 1)), n.t6(1, 1) + n.t6(1, 2) - n.t5(1, 1, 2, 1)));
    CHECK(eq(act(sp.iota(), n.t6(1, 2) - n.t5(1, 1, 2, 1)), n.t6(2, 1) - n.t5(1, 1, 1, 2)));

    Tree1 t{sp.a(1), sp.b(1), sp.b(2)}, tp{sp.a(1), sp.b(2), sp.b(3)};
    CHECK(ext3_coords(sp, tp) == sub(ext3_coords(sp, {sp.a(1), sp.b(1) + sp.b(2), sp.b(3)}), ext3_coords(sp, {sp.a(1), sp.b(1), sp.b(3)})));
    CHECK(goeritz_catalogs(d).tau1.size() == 1);
    CHECK(ext3_coords(sp, goeritz_catalogs(d).tau1.front()) == ext3_coords(sp, t));
}

TEST_CASE("tau1 Goeritz orbit is A∧B∧H") {
    for (int g : {2, 3}) {
        SymplecticContext sp(g);
        auto abh = a_wedge_b_wedge_h(sp);
        auto choose = [](int x, int k) {
            long r = 1;
            for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
            return static_cast<std::size_t>(r);
        };
        CHECK(abh.rank() == choose(2 * g, 3) - 2 * choose(g, 3));
        CHECK(tau1_orbit_lattice(sp, {{sp.a(1), sp.b(1), sp.b(2)}}) == abh);
    }
    SymplecticContext sp(3);
    CHECK(tau1_orbit_lattice(sp, {{sp.a(1), sp.a(2), sp.b(3)}}).rank() < ext3_dim(6));
    CHECK(ext3_coords(sp, {sp.a(1), sp.b(1), sp.a(1)}) == IntVector(ext3_dim(6)));
    CHECK(ext3_coords(sp, {sp.b(1), sp.a(1), sp.b(2)}) == scale(Integer(-1), ext3_coords(sp, {sp.a(1), sp.b(1), sp.b(2)})));
}

TEST_CASE("Johnson catalog spans Ker Tr^as") {
    for (int g : {2, 3}) {
        const auto& d = space(g);
        const auto& t = traces(g);
        const auto& sp = d.sp();
        Catalog c = johnson_catalog(t);
        IntegerLattice l = catalog_lattice(d, c);
        CHECK(l.contains(d.coords(single(SymHalf{sp.a(1), sp.b(1)}))));
        CHECK(l.contains(d.coords(single(Tree2{sp.a(1), sp.b(1), sp.a(2), sp.b(2)}))));
        for (const auto& e : c.entries) CHECK(t.tr_as(e.coords).is_zero());
        CHECK(l == t.ker_tr_as());
        CHECK(c.color_terms == (g == 2 ? 3 : 2));
    }
    // two-term colors fall short at genus 2
    const auto& d = space(2);
    CHECK(catalog_lattice(d, johnson_catalog(d, 2)).rank() < d.rank());
}

TEST_CASE("realizable and Goeritz catalogs lie in the trace kernels") {
    for (int g : {2, 3, 4}) {
        const auto& d = space(g);
        const auto& t = traces(g);
        Catalog r = realizable_catalog_A(d);
        CHECK(r.partial == (g < 4));
        IntegerLattice kr = t.ker_A_as();
        for (const auto& e : r.entries) {
            CHECK(t.tr_as(e.coords).is_zero());
            CHECK(is_zero(t.tr_A(e.coords)));
        }
        CHECK(kr.contains(catalog_lattice(d, r)));

        GoeritzCatalogs gc = goeritz_catalogs(d);
        IntegerLattice kg = t.ker_A_B_as();
        for (const auto& e : gc.tau2.entries) {
            CHECK(t.tr_as(e.coords).is_zero());
            CHECK(is_zero(t.tr_A(e.coords)));
            CHECK(is_zero(t.tr_B(e.coords)));
        }
        CHECK(kg.contains(catalog_lattice(d, gc.tau2)));
    }
}

TEST_CASE("orbit closure and GL generators") {
    auto gens = gl_generators(3);
    REQUIRE(gens.size() == 4);
    SymplecticContext sp(3);
    for (const auto& p : gens) CHECK(sp.is_symplectic(sp.gl_embed(p)));
    IntegerLattice l = IntegerLattice::from_generators(3, {make_vector({1, 0, 0})});
    CHECK(orbit_closure(l, gens) == IntegerLattice::full(3));
    IntegerLattice two = IntegerLattice::from_generators(3, {make_vector({2, 0, 0})});
    CHECK(orbit_closure(two, gens) == IntegerLattice::from_generators(3, {make_vector({2, 0, 0}), make_vector({0, 2, 0}), make_vector({0, 0, 2})}));
}

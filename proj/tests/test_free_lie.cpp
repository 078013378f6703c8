#include "symp/free_lie.hpp"
#include "symp/lattice.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace symp;

namespace {

LieElement random_lie(const FreeLie& L, int degree, std::mt19937_64& rng) {
    LieElement x = L.zero(degree);
    std::uniform_int_distribution<int> d(-2, 2);
    for (auto& c : x.coeffs) c = (rng() % 3 == 0) ? d(rng) : 0;
    return x;
}

// Lyndon words counted by brute force: primitive words that are minimal in their rotation class.
std::size_t brute_lyndon_count(int n, int k) {
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    std::size_t count = 0;
    Tensor shape(n, k);
    for (std::size_t w = 0; w < total; ++w) {
        auto word = shape.word(w);
        bool ok = true;
        for (int s = 1; s < k && ok; ++s) {
            std::vector<int> rot(word.begin() + s, word.end());
            rot.insert(rot.end(), word.begin(), word.begin() + s);
            if (!(word < rot)) ok = false;
        }
        count += ok;
    }
    return count;
}

}  // namespace

TEST_CASE("omega on basis vectors") {
    SymplecticContext sp(2);
    CHECK(sp.omega(sp.a(1), sp.b(1)) == 1);
    CHECK(sp.omega(sp.a(1), sp.a(2)) == 0);
    CHECK(sp.omega(sp.b(1), sp.a(1)) == -1);
    CHECK_THROWS_AS(sp.omega(sp.a(1), SymplecticContext(3).a(1)), ContextError);
    CHECK(sp.is_symplectic(sp.iota()));
    CHECK(sp.is_symplectic(sp.gram()));
}

TEST_CASE("Lyndon basis sizes match Witt and brute force") {
    for (int g = 2; g <= 5; ++g) {
        FreeLie L(2 * g);
        for (int k = 1; k <= 4; ++k) {
            CHECK(L.dim(k) == witt_dimension(2 * g, k));
            if (g <= 4) CHECK(L.dim(k) == brute_lyndon_count(2 * g, k));
        }
    }
    FreeLie L4(4), L6(6), L8(8);
    CHECK(L4.dim(3) == 20);
    CHECK(L6.dim(3) == 70);
    CHECK(L8.dim(3) == 168);
    CHECK(L4.dim(4) == 60);
    CHECK(L6.dim(4) == 315);
    CHECK(L8.dim(4) == 1008);
}

TEST_CASE("bracket examples") {
    FreeLieContext ctx(2);
    const auto& L = ctx.lie();
    const auto& sp = ctx.symplectic();
    auto a1 = L.generator(sp.a(1)), b1 = L.generator(sp.b(1)), a2 = L.generator(sp.a(2));
    CHECK(L.bracket(a1, a1).is_zero());
    auto ab = L.bracket(a1, b1);
    // word a1 b1 is Lyndon (a1 < b1), and [a1,b1] is its bracketing
    Tensor t = L.lie_to_tensor(ab);
    Tensor expect(4, 2);
    expect[expect.pack({0, 2})] = 1;
    expect[expect.pack({2, 0})] = -1;
    CHECK(t == expect);
    CHECK(ab.coeffs[L.basis(2).find(expect.pack({0, 2}))] == 1);

    auto x = L.bracket(ab, a2);
    Tensor ta = Tensor::letter(4, 0), tb = Tensor::letter(4, 2), ta2 = Tensor::letter(4, 1);
    CHECK(L.lie_to_tensor(x) == commutator(commutator(ta, tb), ta2));

    // degree 3: standard bracketing is [x,[y,z]] or [[x,y],z], expanded by hand
    for (std::size_t i = 0; i < L.dim(3); ++i) {
        const auto& w = L.basis(3)[i].letters;
        Tensor x = Tensor::letter(4, w[0]), y = Tensor::letter(4, w[1]), z = Tensor::letter(4, w[2]);
        auto xyz = [](const Tensor& p, const Tensor& q, const Tensor& r) { return tensor_product(tensor_product(p, q), r); };
        Tensor e = L.basis(3)[i].split == 1 ? xyz(x, y, z) - xyz(x, z, y) - xyz(y, z, x) + xyz(z, y, x)
                                            : xyz(x, y, z) - xyz(y, x, z) - xyz(z, x, y) + xyz(z, y, x);
        auto tt = L.lie_to_tensor(L.basis_element(3, i));
        CHECK(tt == e);
        int nz = 0;
        for (auto c : tt.data()) nz += (c != 0);
        bool distinct = w[0] != w[1] && w[1] != w[2] && w[0] != w[2];
        CHECK(nz == (distinct ? 4 : 3));
    }
}

TEST_CASE("bracket agrees with the commutator, is antisymmetric and satisfies Jacobi") {
    std::mt19937_64 rng(3);
    for (int g = 2; g <= 3; ++g) {
        FreeLie L(2 * g);
        for (int trial = 0; trial < 30; ++trial) {
            auto x = random_lie(L, 1, rng), y = random_lie(L, 1, rng), z = random_lie(L, 2, rng);
            auto yz = L.bracket(y, z);
            CHECK(L.lie_to_tensor(yz) == commutator(L.lie_to_tensor(y), L.lie_to_tensor(z)));
            CHECK(L.add(yz, L.bracket(z, y)).is_zero());
            auto j = L.add(L.add(L.bracket(x, yz), L.bracket(y, L.bracket(z, x))), L.bracket(z, L.bracket(x, y)));
            CHECK(j.is_zero());
            CHECK(L.tensor_to_lie(L.lie_to_tensor(z)) == z);
        }
        CHECK_THROWS_AS(L.bracket(random_lie(L, 2, rng), random_lie(L, 3, rng)), UnsupportedDegree);
        Tensor notlie(2 * g, 2);
        notlie[0] = 1;
        CHECK_THROWS_AS(L.tensor_to_lie(notlie), std::invalid_argument);
    }
}

TEST_CASE("bracket matrix shapes and ranks") {
    FreeLieContext ctx(2);
    auto m2 = ctx.bracket_matrix(2);
    CHECK(m2.rows() == 60);
    CHECK(m2.cols() == 80);
    CHECK(rational_rank(m2) == 60);
    CHECK(kernel_lattice(m2).rank() == 20);
    auto m1 = ctx.bracket_matrix(1);
    CHECK(rational_rank(m1) == 20);
    CHECK(kernel_lattice(m1).rank() == 4);

    // a1 (x) [a1,b1] maps to [a1,[a1,b1]] != 0
    const auto& L = ctx.lie();
    const auto& sp = ctx.symplectic();
    auto ab = L.bracket(L.generator(sp.a(1)), L.generator(sp.b(1)));
    long j = -1;
    for (std::size_t i = 0; i < L.dim(2); ++i)
        if (L.basis_element(2, i) == ab) j = static_cast<long>(i);
    REQUIRE(j >= 0);
    auto col = IntegerMatrix(ctx.bracket_matrix(1)).transpose().row(0 * L.dim(2) + j);
    CHECK_FALSE(is_zero(col));
}

TEST_CASE("projection to H' and H/B") {
    FreeLieContext ctx(2);
    const auto& L = ctx.lie();
    const auto& sp = ctx.symplectic();
    CHECK(ctx.project_vector(sp.a(1), Lagrangian::A) == HVector{0, 0});
    CHECK(ctx.project_vector(sp.b(1), Lagrangian::A) == HVector{1, 0});
    CHECK(ctx.project_vector(sp.a(2), Lagrangian::B) == HVector{0, 1});
    auto x = L.bracket(L.generator(sp.a(1)), L.generator(sp.b(2)));
    CHECK(ctx.project_lie(x, Lagrangian::A).is_zero());
    auto y = L.bracket(L.generator(sp.b(1)), L.generator(sp.b(2)));
    const auto& Q = ctx.quotient_lie();
    CHECK(ctx.project_lie(y, Lagrangian::A) == Q.bracket(Q.generator({1, 0}), Q.generator({0, 1})));

    // projection commutes with the tensor embedding
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto z = random_lie(L, 3, rng);
        for (auto l : {Lagrangian::A, Lagrangian::B})
            CHECK(Q.lie_to_tensor(ctx.project_lie(z, l)) == ctx.project_tensor(L.lie_to_tensor(z), l));
    }
    // omega'(a, h') = omega(a, h) depends only on h mod A
    for (int trial = 0; trial < 20; ++trial) {
        HVector a(4, 0), h(4, 0), k(4, 0);
        for (int i = 0; i < 2; ++i) {
            a[i] = int(rng() % 5) - 2;
            k[i] = int(rng() % 5) - 2;
        }
        for (auto& c : h) c = int(rng() % 5) - 2;
        CHECK(sp.omega(a, h) == sp.omega(a, h + k));
    }
}

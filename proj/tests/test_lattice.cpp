#include "symp/gf2.hpp"
#include "symp/lattice.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace symp;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    IntegerMatrix m(r, c);
    std::uniform_int_distribution<int> d(-bound, bound);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("hermite normal form examples") {
    auto id = IntegerMatrix::identity(2);
    auto h = hermite_normal_form(id);
    CHECK(h.hnf == id);
    CHECK(h.transform == id);

    IntegerMatrix m{{2, 4}, {1, 3}};
    h = hermite_normal_form(m);
    CHECK(h.hnf == IntegerMatrix{{1, 1}, {0, 2}});
    CHECK(h.transform * m == h.hnf);
    CHECK(abs(determinant(h.transform)) == Integer(1));

    IntegerMatrix z(3, 2);
    h = hermite_normal_form(z);
    CHECK(h.rank == 0);
    CHECK(h.hnf.is_zero());
}

TEST_CASE("hermite normal form span matches brute force on a small lattice") {
    // Points of the span of {(2,4),(1,3)} in a box are exactly the points of {(1,1),(0,2)}.
    IntegerMatrix m{{2, 4}, {1, 3}};
    auto l1 = IntegerLattice::from_matrix(m);
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            bool in_span = false;
            for (int s = -30; s <= 30 && !in_span; ++s)
                for (int t = -30; t <= 30 && !in_span; ++t) in_span = (2 * s + t == x) && (4 * s + 3 * t == y);
            CHECK(l1.contains(make_vector({x, y})) == in_span);
        }
}

TEST_CASE("random HNF: transform, idempotence, kernel") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntegerMatrix m = random_matrix(rng, r, c, 4);
        if (trial % 3 == 0 && r > 1) m.set_row(r - 1, add(m.row(0), m.row(r - 2)));
        auto h = hermite_normal_form(m);
        CHECK(h.transform * m == h.hnf);
        CHECK(abs(determinant(h.transform)) == Integer(1));
        CHECK(hermite_normal_form(h.hnf).hnf == h.hnf);
        for (std::size_t k = 0; k < h.rank; ++k) {
            std::size_t p = h.pivots[k];
            CHECK(h.hnf(k, p).sign() > 0);
            for (std::size_t i = 0; i < k; ++i) {
                CHECK(h.hnf(i, p).sign() >= 0);
                CHECK(h.hnf(i, p) < h.hnf(k, p));
            }
        }
        auto ker = kernel_basis(m);
        for (const auto& v : ker) CHECK(is_zero(matvec(m, v)));
        CHECK(ker.size() + rational_rank(m) == c);
        // saturation: an integer vector in the rational kernel lies in the lattice
        auto kl = kernel_lattice(m);
        for (const auto& v : ker) {
            IntVector w = scale(Integer(3), v);
            CHECK(kl.contains(w));
        }
    }
}

TEST_CASE("kernel lattice examples") {
    auto k = kernel_lattice(IntegerMatrix{{1, 1}});
    CHECK(k == IntegerLattice::from_generators(2, {make_vector({1, -1})}));
    CHECK(kernel_lattice(IntegerMatrix{{2, 1}, {1, 1}}).rank() == 0);
    // no unit entries: exercises the residual fallback
    auto k2 = kernel_lattice(IntegerMatrix{{2, 4, 6}});
    CHECK(k2 == IntegerLattice::from_generators(3, {make_vector({-2, 1, 0}), make_vector({-3, 0, 1})}));
}

TEST_CASE("index, sum and intersection") {
    auto z2 = IntegerLattice::full(2);
    auto two = IntegerLattice::from_generators(2, {make_vector({2, 0}), make_vector({0, 2})});
    CHECK(index(z2, z2).is_one());
    CHECK(index(z2, two).value == Integer(4));
    CHECK_THROWS_AS(index(two, z2), NotSublattice);
    auto line = IntegerLattice::from_generators(2, {make_vector({1, 1})});
    CHECK(index(z2, line).infinite);

    auto a = IntegerLattice::from_generators(2, {make_vector({2, 0}), make_vector({0, 3})});
    auto b = IntegerLattice::from_generators(2, {make_vector({3, 0}), make_vector({0, 2})});
    CHECK(sum(a, b) == z2);
    CHECK(intersection(a, b) == IntegerLattice::from_generators(2, {make_vector({6, 0}), make_vector({0, 6})}));
}

TEST_CASE("lattice equality and index multiplicativity on random spans") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        IntegerMatrix m = random_matrix(rng, 4, 5, 3);
        auto l = IntegerLattice::from_matrix(m);
        // another generating set of the same span
        IntegerMatrix u = IntegerMatrix::identity(4);
        u(0, 1) = Integer(static_cast<long long>(rng() % 5));
        u(2, 3) = -Integer(static_cast<long long>(rng() % 4));
        u(3, 0) = 1;
        auto l2 = IntegerLattice::from_matrix(u * m);
        CHECK(l == l2);
        CHECK(l2 == l);
        auto l3 = IntegerLattice::from_generators(5, [&] {
            std::vector<IntVector> g;
            for (const auto& v : l.basis()) g.push_back(scale(Integer(2), v));
            return g;
        }());
        auto l4 = IntegerLattice::from_generators(5, [&] {
            std::vector<IntVector> g;
            for (const auto& v : l3.basis()) g.push_back(scale(Integer(3), v));
            return g;
        }());
        auto i12 = index(l, l3), i23 = index(l3, l4), i13 = index(l, l4);
        CHECK(i12.value * i23.value == i13.value);
        CHECK(i13.value == pow(Integer(6), static_cast<unsigned>(l.rank())));
    }
}

TEST_CASE("gf2 rank and solve") {
    GF2Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.row(i).set(i);
    GF2Vector t(3);
    t.set(0);
    t.set(2);
    auto x = gf2_solve(id, t);
    REQUIRE(x);
    CHECK(*x == t);
    GF2Matrix z(2, 3);
    CHECK(gf2_rank(z) == 0);
    CHECK_FALSE(gf2_solve(z, t));
    CHECK(gf2_left_kernel(z).size() == 2);

    GF2Matrix m(3, 4);
    m.row(0).set(0);
    m.row(0).set(1);
    m.row(1).set(1);
    m.row(1).set(2);
    m.row(2) = m.row(0) ^ m.row(1);
    CHECK(gf2_rank(m) == 2);
    auto k = gf2_left_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].popcount() == 3);
}

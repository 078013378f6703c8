#include "symp/integer.hpp"

#include <catch_amalgamated.hpp>

using symp::Integer;

TEST_CASE("small arithmetic stays exact") {
    Integer a(7), b(-3);
    CHECK(a + b == Integer(4));
    CHECK(a * b == Integer(-21));
    CHECK(a / b == Integer(-3));  // floor
    CHECK(a % b == Integer(-2));
    CHECK(Integer(-7) / Integer(2) == Integer(-4));
    CHECK(Integer(-7) % Integer(2) == Integer(1));
}

TEST_CASE("overflow promotes to GMP and demotes back") {
    Integer big(INT64_MAX);
    big += Integer(1);
    CHECK_FALSE(big.is_small());
    CHECK(big.str() == "9223372036854775808");
    big -= Integer(1);
    CHECK(big.is_small());
    CHECK(big == Integer(INT64_MAX));

    Integer p = symp::pow(Integer(3), 60);
    CHECK(p.str() == mpz_class("42391158275216203514294433201").get_str());
    CHECK(symp::floor_div(p, symp::pow(Integer(3), 58)) == Integer(9));
    CHECK(-Integer(INT64_MIN) == Integer(mpz_class("9223372036854775808")));
}

TEST_CASE("extended gcd") {
    Integer g, s, t;
    symp::gcdext(Integer(240), Integer(46), g, s, t);
    CHECK(g == Integer(2));
    CHECK(s * Integer(240) + t * Integer(46) == g);
    symp::gcdext(Integer(-4), Integer(0), g, s, t);
    CHECK(g == Integer(4));
    CHECK(s * Integer(-4) == g);

    Integer big = symp::pow(Integer(2), 70) * Integer(3);
    symp::gcdext(big, Integer(9), g, s, t);
    CHECK(g == Integer(3));
    CHECK(s * big + t * Integer(9) == g);
}

TEST_CASE("addmul matches multiply then add across the promotion boundary") {
    Integer acc(INT64_MAX - 5);
    acc.addmul(Integer(3), Integer(2));
    CHECK(acc == Integer(mpz_class("9223372036854775808")));
    acc.submul(Integer(1), Integer(1));
    CHECK(acc == Integer(INT64_MAX));
}

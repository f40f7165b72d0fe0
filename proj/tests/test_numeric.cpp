#include <doctest.h>
#include <floercone/numeric.hpp>

using namespace floercone;

TEST_CASE("bigint arithmetic") {
    CHECK(bigint(0).to_string() == "0");
    CHECK(bigint(-42).to_string() == "-42");
    CHECK((bigint(1000000007) * bigint(998244353)).to_string() == "998244359987710471");
    CHECK((bigint(-7) + bigint(3)).to_string() == "-4");
    CHECK((bigint(7) - bigint(10)).to_string() == "-3");

    bigint big = bigint::from_string("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK((big * big).to_string() == "15241578753238836750495351562536198787501905199875019052100");
    bigint q, r;
    bigint::divmod(big, bigint::from_string("987654321"), q, r);
    CHECK((q * bigint::from_string("987654321") + r) == big);
    CHECK(r.to_string() == "574845669");
    CHECK(q.to_string() == "124999998873437499901");

    CHECK(bigint::gcd(bigint(48), bigint(-18)).to_string() == "6");
    CHECK(bigint(100) / bigint(-7) == bigint(-14));
    CHECK(bigint(100) % bigint(-7) == bigint(2));
    CHECK(bigint(-100) % bigint(7) == bigint(-2));
    CHECK_THROWS(bigint::from_string("12x"));
    CHECK_THROWS((void)(bigint(1) / bigint(0)));
}

TEST_CASE("rational normalization and ordering") {
    CHECK(rational(2, 4).to_string() == "1/2");
    CHECK(rational(-2, -4).to_string() == "1/2");
    CHECK(rational(2, -4).to_string() == "-1/2");
    CHECK(rational(0, 5).to_string() == "0");
    CHECK(rational::parse("-6/10") == rational(-3, 5));
    CHECK(rational::parse("7") == rat(7));
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK(rat(1, 3) * rat(3, 7) == rat(1, 7));
    CHECK(rat(1, 3) / rat(2, 3) == rat(1, 2));
    CHECK(rat(-1, 2) < rat(1, 3));
    CHECK(rat(5, 2).floor().to_ll() == 2);
    CHECK(rat(-5, 2).floor().to_ll() == -3);
    CHECK(rat(-5, 2).ceil().to_ll() == -2);
    CHECK(rat(-5, 2).mod1() == rat(1, 2));
    CHECK(rat(7, 3).mod1() == rat(1, 3));
    CHECK_THROWS(rational(1, 0));
    CHECK_THROWS(rat(1, 2).to_ll());
}

TEST_CASE("rational exactness at surgery-formula scales") {
    // (2 d s - k)^2 / (4 d k) stays exact for large inputs
    rational s = rat(123456789, 2);
    long long d = 97, k = 1000003;
    rational v = (rat(2 * d) * s - rat(k)) * (rat(2 * d) * s - rat(k)) / rat(4 * d * k);
    CHECK(v * rat(4 * d * k) == (rat(2 * d) * s - rat(k)) * (rat(2 * d) * s - rat(k)));
}

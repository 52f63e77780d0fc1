#include "doctest.h"

#include "vfock/errors.hpp"
#include "vfock/scalar.hpp"

using vfock::Poly;
using vfock::Rational;

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("3").str() == "3");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("+5/10") == Rational(1, 2));
    CHECK(Rational::parse("0/7").is_zero());
    CHECK_THROWS_AS(Rational::parse("1/0"), vfock::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), vfock::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), vfock::ParseError);
    CHECK_THROWS_AS(Rational::parse("2/-3"), vfock::ParseError);
}

TEST_CASE("rational arithmetic")
{
    Rational a(1, 2), b(-2, 3);
    CHECK(a + b == Rational(-1, 6));
    CHECK(a * b == Rational(-1, 3));
    CHECK(a / b == Rational(-3, 4));
    CHECK(a > b);
    CHECK(vfock::pow(b, 3) == Rational(-8, 27));
    CHECK(vfock::factorial(6) == Rational(720));
    CHECK_THROWS_AS(a / Rational(0), vfock::DomainError);
    CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("polynomial ring")
{
    Poly z = Poly::variable();
    Poly p = (z + Poly(1)) * (z - Poly(Rational(1, 2)));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(-1, 2));
    CHECK(p.coeff(1) == Rational(1, 2));
    CHECK(p.eval(Rational(2)) == Rational(9, 2));
    CHECK((p - p).is_zero());
    CHECK(Poly(0).degree() == -1);

    auto [q, r] = Poly::divmod(p, z + Poly(1));
    CHECK(q == z - Poly(Rational(1, 2)));
    CHECK(r.is_zero());
    CHECK(vfock::exact_div(p, z + Poly(1)) == q);
    CHECK_THROWS(vfock::exact_div(p, z + Poly(3)));
    CHECK(vfock::pow(z, 3).degree() == 3);
}

TEST_CASE("sampler is reproducible")
{
    vfock::RationalSampler a(7), b(7);
    for (int i = 0; i < 50; ++i) {
        Rational x = a.any();
        CHECK(x == b.any());
        CHECK(x.raw().get_den() <= 7);
    }
    vfock::RationalSampler c(3);
    for (int i = 0; i < 50; ++i)
        CHECK_FALSE(c.nonzero().is_zero());
}

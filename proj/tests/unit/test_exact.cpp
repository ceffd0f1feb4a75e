#include <doctest.h>

#include "treg/error.hpp"
#include "treg/exact/gauss_rational.hpp"
#include "treg/exact/gaussian_factor.hpp"
#include "treg/exact/laurent.hpp"
#include "treg/exact/polynomial.hpp"

using namespace treg::exact;

TEST_CASE("gauss rationals parse and print") {
    CHECK(GaussRational::parse("3/4") == GaussRational(mpq_class(3, 4)));
    CHECK(GaussRational::parse("i") == GaussRational::i());
    CHECK(GaussRational::parse("-1/2+3i") == GaussRational(mpq_class(-1, 2), 3));
    CHECK(GaussRational::parse("-3/2i") == GaussRational(0, mpq_class(-3, 2)));
    for (const auto* s : {"0", "7", "-2/3", "i", "1+i", "-1/2-5/3i"})
        CHECK(GaussRational::parse(GaussRational::parse(s).str()) == GaussRational::parse(s));
}

TEST_CASE("gauss rational field operations") {
    GaussRational a(mpq_class(1, 2), 3), b(-2, mpq_class(1, 5));
    CHECK(a * a.inverse() == GaussRational(1));
    CHECK((a + b) - b == a);
    CHECK((a / b) * b == a);
    CHECK(GaussRational::i().pow(4) == GaussRational(1));
    CHECK(GaussRational::i().pow(-1) == -GaussRational::i());
    CHECK(a * a.conj() == GaussRational(a.norm()));
}

TEST_CASE("polynomial parsing and evaluation") {
    auto p = Polynomial::parse("(x - 1)^2 * y - i*x/2", {"x", "y"});
    CHECK(p.evaluate({GaussRational(3), GaussRational(2)}) == GaussRational(8, mpq_class(-3, 2)));
    CHECK(p.total_degree() == 3);
    auto q = Polynomial::parse("x^2 - 2*x + 1", {"x"});
    auto r = Polynomial::parse("(x-1)*(x-1)", {"x"});
    CHECK((q - r).terms().empty());
    CHECK_THROWS_AS(Polynomial::parse("x + z", {"x"}), treg::Error);
}

TEST_CASE("laurent series arithmetic") {
    const int prec = 8;
    auto t = Laurent::monomial(GaussRational(1), 1, prec);
    auto one = Laurent::constant(GaussRational(1), prec);
    // 1/(1 - t) = sum t^k
    auto geo = (one - t).inverse();
    for (int k = 0; k < prec - 1; ++k) CHECK(geo.coefficient(k) == GaussRational(1));
    auto inv = t.inverse();
    CHECK(inv.valuation() == -1);
    CHECK((inv * t - one).valuation() == std::nullopt);
    CHECK(Laurent::constant(GaussRational(0), prec).valuation() == std::nullopt);
}

TEST_CASE("Gaussian prime factorization") {
    auto f = factor_gaussian(GaussRational(2));
    CHECK(f.unit == -GaussRational::i());
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0].first == GaussRational(1, 1));
    CHECK(f.primes[0].second == 2);
    auto g = factor_gaussian(GaussRational(mpq_class(5, 3)));
    CHECK(g.primes.size() == 3);
    for (const auto* s : {"1", "-1", "i", "16/9", "-5+2i", "2/5+2/5i", "7/30-11/4i", "1+i", "-3"}) {
        GaussRational c = GaussRational::parse(s);
        auto h = factor_gaussian(c);
        GaussRational prod = h.unit;
        for (const auto& [p, e] : h.primes) {
            CHECK(p.re() > 0);
            CHECK(p.im() >= 0);
            prod *= p.pow(e);
        }
        CHECK(prod == c);
        CHECK((h.unit.is_one() || h.unit.is_minus_one() || h.unit == GaussRational::i() || h.unit == -GaussRational::i()));
    }
    CHECK_THROWS_AS(factor_gaussian(GaussRational(0)), treg::Error);
}

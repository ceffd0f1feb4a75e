#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "treg/elliptic/curve.hpp"
#include "treg/elliptic/flat_norm.hpp"
#include "treg/elliptic/local_expansion.hpp"
#include "treg/elliptic/weierstrass.hpp"

using namespace treg;
using namespace treg::elliptic;
using exact::GaussRational;

namespace {

ExactCurve cubic_plus_one() { return ExactCurve(GaussRational(0), GaussRational(1)); }

std::vector<ExactPoint> torsion_points(const ExactCurve& e) {
    return {ExactPoint::infinity(), e.point(-1, 0), e.point(0, 1), e.point(0, -1), e.point(2, 3), e.point(2, -3)};
}

bool same(const ExactPoint& a, const ExactPoint& b) { return a.same_as(b, 0); }

}  // namespace

TEST_CASE("identity and inverse on y^2 = x^3 + 1") {
    auto e = cubic_plus_one();
    auto p = e.point(0, 1);
    CHECK(same(add_points(e, p, ExactPoint::infinity()), p));
    CHECK(add_points(e, p, e.point(0, -1)).is_infinity());
}

TEST_CASE("doubling (0,1) gives (0,-1)") {
    auto e = cubic_plus_one();
    // tangent slope 3x^2/(2y) = 0 at (0,1): x3 = 0, y3 = -1
    auto d = add_points(e, e.point(0, 1), e.point(0, 1));
    CHECK(same(d, e.point(0, -1)));
}

TEST_CASE("the six rational points form a cyclic group of order six") {
    auto e = cubic_plus_one();
    auto g = e.point(2, 3);
    CHECK(same(multiply(e, g, 1), e.point(2, 3)));
    CHECK(same(multiply(e, g, 2), e.point(0, 1)));
    CHECK(same(multiply(e, g, 3), e.point(-1, 0)));
    CHECK(same(multiply(e, g, 4), e.point(0, -1)));
    CHECK(same(multiply(e, g, 5), e.point(2, -3)));
    CHECK(multiply(e, g, 6).is_infinity());
}

TEST_CASE("associativity and commutativity on every triple of torsion points") {
    auto e = cubic_plus_one();
    auto pts = torsion_points(e);
    int n = 0;
    for (const auto& p : pts)
        for (const auto& q : pts)
            for (const auto& r : pts) {
                CHECK(same(add_points(e, add_points(e, p, q), r), add_points(e, p, add_points(e, q, r))));
                CHECK(same(add_points(e, p, q), add_points(e, q, p)));
                ++n;
            }
    CHECK(n == 216);
    for (const auto& p : pts) CHECK(add_points(e, p, negate(e, p)).is_infinity());
}

TEST_CASE("group axioms on random multiples of a point of infinite order") {
    // y^2 = x^3 - 2 with generator (3, 5)
    ExactCurve e(GaussRational(0), GaussRational(-2));
    auto g = e.point(3, 5);
    std::mt19937_64 rng(2024);
    auto pick = [&] { return multiply(e, g, static_cast<long>(rng() % 9) - 4); };
    for (int k = 0; k < 100; ++k) {
        auto p = pick(), q = pick(), r = pick();
        auto s = add_points(e, add_points(e, p, q), r);
        CHECK(e.contains(s));
        CHECK(same(s, add_points(e, p, add_points(e, q, r))));
        CHECK(same(add_points(e, p, q), add_points(e, q, p)));
    }
}

TEST_CASE("group law errors") {
    auto e = cubic_plus_one();
    CHECK_THROWS_AS(e.point(1, 1), Error);
    auto off = ExactPoint::affine(GaussRational(1), GaussRational(1));
    try {
        add_points(e, off, e.point(0, 1));
        FAIL("expected point-not-on-curve");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::point_not_on_curve);
    }
    auto cusp = ExactCurve::degeneration(GaussRational(0), GaussRational(0));
    CHECK(cusp.degenerate());
    try {
        add_points(cusp, ExactPoint::infinity(), ExactPoint::infinity());
        FAIL("expected singular-curve");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::singular_curve);
    }
    CHECK_THROWS_AS(ExactCurve(GaussRational(0), GaussRational(0)), Error);
}

TEST_CASE("divisor class point") {
    auto e = cubic_plus_one();
    auto p = e.point(0, 1);
    ExactDivisor zero{{p, 1}, {p, -1}};
    CHECK(zero.empty());
    CHECK(divisor_class_point(e, zero).is_infinity());
    CHECK(is_principal(e, zero));

    ExactDivisor three{{p, 3}, {ExactPoint::infinity(), -3}};
    CHECK(divisor_class_point(e, three).is_infinity());
    CHECK(is_principal(e, three));

    ExactDivisor one{{p, 1}, {ExactPoint::infinity(), -1}};
    CHECK(same(divisor_class_point(e, one), p));
    CHECK_FALSE(is_principal(e, one));

    ExactDivisor bad{{p, 2}};
    CHECK_FALSE(is_principal(e, bad));
    try {
        divisor_class_point(e, bad);
        FAIL("expected nonzero-degree");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::nonzero_degree);
    }
}

TEST_CASE("divisor class is a homomorphism") {
    ExactCurve e(GaussRational(0), GaussRational(-2));
    auto g = e.point(3, 5);
    std::mt19937_64 rng(77);
    auto random_divisor = [&] {
        ExactDivisor d;
        long total = 0;
        for (int k = 0; k < 3; ++k) {
            long n = static_cast<long>(rng() % 5) - 2;
            d.add(multiply(e, g, static_cast<long>(rng() % 7) - 3), n);
            total += n;
        }
        d.add(ExactPoint::infinity(), -total);
        return d;
    };
    for (int k = 0; k < 30; ++k) {
        auto d1 = random_divisor(), d2 = random_divisor();
        CHECK(same(divisor_class_point(e, d1 + d2),
                   add_points(e, divisor_class_point(e, d1), divisor_class_point(e, d2))));
    }
}

TEST_CASE("complex group law matches the analytic addition theorem") {
    Lattice L{{1.0, 0.0}, {0.3, 1.1}};
    WeierstrassEngine w(L);
    ComplexCurve e(-w.g2() / 4.0, -w.g3() / 4.0, L, 1e-9);
    auto at = [&](cplx z) { return ComplexPoint::affine(w.wp(z), w.wp_prime(z) / 2.0); };
    cplx z1(0.21, 0.13), z2(0.37, 0.42);
    auto p = at(z1), q = at(z2);
    CHECK(e.contains(p));
    auto s = add_points(e, p, q);
    CHECK(s.same_as(at(z1 + z2), 1e-8));
}

TEST_CASE("sigma is normalized at the origin") {
    WeierstrassEngine w(Lattice{{1.0, 0.0}, {0.2, 0.9}});
    for (double r : {1e-3, 1e-4, 1e-5}) {
        cplx z = r * cplx(1, 1);
        CHECK(std::abs(w.sigma(z) / z - 1.0) < 10 * r * r);
    }
}

TEST_CASE("wp is even") {
    WeierstrassEngine w(Lattice{{1.3, 0.2}, {-0.4, 1.7}});
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            cplx z = w.lattice().point((i + 0.3) / 6.0, (j + 0.6) / 6.0);
            CHECK(std::abs(w.wp(-z) - w.wp(z)) <= 1e-12 * std::abs(w.wp(z)));
        }
}

TEST_CASE("differential equation residual") {
    Lattice L{{1.0, 0.0}, {0.25, 1.2}};
    WeierstrassEngine w(L);
    auto residual = [&](cplx z) {
        cplx p = w.wp(z), dp = w.wp_prime(z);
        return dp * dp - 4.0 * p * p * p + w.g2() * p + w.g3();
    };
    CHECK(std::abs(residual(L.point(0.3, 0.4))) < 1e-9);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            cplx z = L.point((i + 0.5) / 10.0, (j + 0.5) / 10.0);
            cplx p = w.wp(z);
            double scale = 1.0 + 4.0 * std::pow(std::abs(p), 3);
            CHECK(std::abs(residual(z)) / scale < 1e-9);
        }
}

TEST_CASE("theta series agree with truncated lattice sums") {
    Lattice L{{1.0, 0.0}, {0.1, 1.05}};
    WeierstrassEngine w(L);
    cplx z = L.point(0.31, 0.22);
    double e10 = std::abs(wp_lattice_sum(L, z, 10) - w.wp(z));
    double e20 = std::abs(wp_lattice_sum(L, z, 20) - w.wp(z));
    double e40 = std::abs(wp_lattice_sum(L, z, 40) - w.wp(z));
    CHECK(e20 < 2e-3);
    CHECK(e40 < e20);
    CHECK(e20 < e10);
    // the truncated symmetric sum converges like n^-2
    CHECK(e20 / e40 > 3.0);
    CHECK(std::abs(g2_lattice_sum(L, 40) - w.g2()) < 1e-2 * std::abs(w.g2()));
    CHECK(std::abs(g3_lattice_sum(L, 40) - w.g3()) < 1e-2 * std::abs(w.g3()) + 1e-2);
}

TEST_CASE("square lattice invariants") {
    // g3 vanishes for the square lattice by symmetry
    WeierstrassEngine w(Lattice{{1.0, 0.0}, {0.0, 1.0}});
    CHECK(std::abs(w.g3()) < 1e-10);
    CHECK(w.g2().real() > 0);
}

TEST_CASE("zeta derivative is -wp and quasi-periods satisfy Legendre's relation") {
    Lattice L{{1.1, -0.2}, {0.35, 0.95}};
    WeierstrassEngine w(L);
    cplx z(0.27, 0.18);
    double h = 1e-5;
    cplx dz = (w.zeta(z + h) - w.zeta(z - h)) / (2 * h);
    CHECK(std::abs(dz + w.wp(z)) < 1e-5 * std::abs(w.wp(z)));
    cplx e1 = w.quasi_period_w1(), e2 = w.quasi_period_w2();
    cplx legendre = e1 * L.w2 - e2 * L.w1;
    CHECK(std::abs(legendre - cplx(0, 2 * std::numbers::pi)) < 1e-10);
}

TEST_CASE("sigma quasi-periodicity seen by the direct series") {
    Lattice L{{1.0, 0.1}, {-0.3, 1.15}};
    WeierstrassEngine w(L);
    using lc = std::complex<long double>;
    lc z(0.21L, 0.17L);
    for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {-1, 0}}) {
        lc lam = lc(L.point(m, n));
        lc e = w.quasi_period(m, n);
        long double predicted = std::real(e * (z + lam / 2.0L));
        long double got = w.log_abs_sigma_direct(z + lam) - w.log_abs_sigma_direct(z);
        CHECK(std::abs(static_cast<double>(got - predicted)) < 1e-10);
        CHECK(std::abs(static_cast<double>(w.log_abs_sigma(z + lam) - w.log_abs_sigma_direct(z + lam))) < 1e-10);
    }
}

TEST_CASE("lattice errors") {
    try {
        WeierstrassEngine w(Lattice{{1.0, 0.0}, {2.0, 0.0}});
        FAIL("expected lattice-degenerate");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::lattice_degenerate);
    }
    WeierstrassEngine w(Lattice{{1.0, 0.0}, {0.0, 1.0}});
    try {
        w.wp(cplx(1.0, 1.0));
        FAIL("expected z-on-lattice");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::z_on_lattice);
    }
}

TEST_CASE("flat log norm: trivial divisor is constant") {
    auto w = std::make_shared<WeierstrassEngine>(Lattice{{1.0, 0.0}, {0.2, 1.0}});
    FlatNormField f(w, {});
    CHECK(f(cplx(0.3, 0.1)) == 0.0);
    CHECK(f(cplx(-2.0, 5.0)) == 0.0);
}

TEST_CASE("flat log norm is doubly periodic") {
    Lattice L{{1.0, 0.0}, {0.3, 1.2}};
    auto w = std::make_shared<WeierstrassEngine>(L);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        cplx p = L.point(u(rng), u(rng)), q = L.point(u(rng), u(rng));
        FlatNormField f(w, {{p, 1}, {q, -1}});
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                cplx z = L.point(0.1 + 0.17 * i, 0.05 + 0.19 * j);
                if (f.distance_to_support(z) < 0.05) continue;
                CHECK(std::abs(f(z + L.w1) - f(z)) < 1e-8);
                CHECK(std::abs(f(z + L.w2) - f(z)) < 1e-8);
                CHECK(std::abs(f(z - L.w1 + 2.0 * L.w2) - f(z)) < 1e-8);
            }
    }
}

TEST_CASE("periodicity correction checked against unreduced theta evaluation") {
    Lattice L{{1.0, 0.0}, {0.3, 1.2}};
    auto w = std::make_shared<WeierstrassEngine>(L);
    cplx p(0.12, 0.31), q(-0.27, 0.05);
    FlatNormField f(w, {{p, 1}, {q, -1}});
    using lc = std::complex<long double>;
    auto direct = [&](lc z) {
        long double v = w->log_abs_sigma_direct(z - lc(p)) - w->log_abs_sigma_direct(z - lc(q));
        return v + std::real(std::conj(f.correction()) * z);
    };
    lc z(0.4L, 0.35L);
    CHECK(std::abs(static_cast<double>(direct(z + lc(L.w1)) - direct(z))) < 1e-9);
    CHECK(std::abs(static_cast<double>(direct(z + lc(L.w2)) - direct(z))) < 1e-9);
    CHECK(std::abs(static_cast<double>(direct(z) - f.log_norm(z))) < 1e-10);
}

TEST_CASE("flat log norm is discretely harmonic away from the support") {
    Lattice L{{1.0, 0.0}, {0.3, 1.2}};
    auto w = std::make_shared<WeierstrassEngine>(L);
    FlatNormField f(w, {{cplx(0.1, 0.2), 2}, {cplx(0.6, 0.5), -1}, {cplx(-0.2, 0.7), -1}});
    using lc = std::complex<long double>;
    const long double h = 1e-5L;
    double worst = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            cplx zd = L.point(i / 8.0, j / 8.0);
            if (f.distance_to_support(zd) < 0.1) continue;
            lc z(zd);
            long double lap = (f.log_norm(z + h) + f.log_norm(z - h) + f.log_norm(z + lc(0, h)) +
                               f.log_norm(z - lc(0, h)) - 4 * f.log_norm(z)) /
                              (h * h);
            worst = std::max(worst, std::abs(static_cast<double>(lap)));
        }
    CHECK(worst < 1e-5);
}

TEST_CASE("flat log norm has the expected logarithmic singularity") {
    auto w = std::make_shared<WeierstrassEngine>(Lattice{{1.0, 0.0}, {0.0, 1.0}});
    cplx a(0.2, 0.3);
    FlatNormField f(w, {{a, 2}, {cplx(-0.3, -0.1), -2}});
    double prev = 0;
    for (int k = 2; k <= 9; ++k) {
        double r = std::pow(10.0, -k);
        double rest = f(a + r * cplx(0.6, 0.8)) - 2 * std::log(r);
        if (k > 2) CHECK(std::abs(rest - prev) < 1e-1);
        prev = rest;
    }
    try {
        f(a);
        FAIL("expected evaluation-at-support");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::evaluation_at_support);
    }
    try {
        f(a + cplx(1.0, 0.0));
        FAIL("expected evaluation-at-support for a translate");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::evaluation_at_support);
    }
}

TEST_CASE("local charts satisfy the curve equation") {
    auto e = cubic_plus_one();
    auto eq = exact::Polynomial::parse("y^2 - x^3 - 1", {"x", "y"});
    for (const auto& p : torsion_points(e)) {
        LocalChart ch = local_chart(e, p, 12);
        auto v = eq.evaluate_in<exact::Laurent>({ch.x, ch.y}, [](const GaussRational& c) {
            return exact::Laurent::constant(c, 12);
        });
        CHECK_FALSE(v.valuation().has_value());
    }
}

TEST_CASE("divisors of the line factors on y^2 = x^3 + 1") {
    auto e = cubic_plus_one();
    auto pts = torsion_points(e);  // O, (-1,0), (0,1), (0,-1), (2,3), (2,-3)
    auto divisor = [&](const std::string& text) {
        auto f = exact::Polynomial::parse(text, {"x", "y"});
        std::vector<long> d;
        for (const auto& p : pts) d.push_back(local_value(e, p, f).valuation);
        return d;
    };
    CHECK(divisor("x+1") == std::vector<long>{-2, 2, 0, 0, 0, 0});
    CHECK(divisor("y-1") == std::vector<long>{-3, 0, 3, 0, 0, 0});
    CHECK(divisor("y-x-1") == std::vector<long>{-3, 1, 1, 0, 1, 0});
    CHECK(divisor("y-2*x+1") == std::vector<long>{-3, 0, 0, 1, 2, 0});
    // x at O in the parameter x/y: x = t^-2 (1 + ...)
    CHECK(local_value(e, pts[0], exact::Polynomial::parse("x", {"x", "y"})).leading == GaussRational(1));
    // x + 1 = y^2/3 + ... at (-1, 0)
    CHECK(local_value(e, pts[1], exact::Polynomial::parse("x+1", {"x", "y"})).leading ==
          GaussRational(mpq_class(1, 3)));
}

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "treg/error.hpp"
#include "treg/milnor/evaluate.hpp"
#include "treg/milnor/tame.hpp"

using namespace treg;
using namespace treg::milnor;
using testing::p1_line_registry;
using testing::p1_product_registry;

namespace {

FactoredFunction on(const std::string& ambient, const std::string& name, long e = 1) {
    return FactoredFunction::factor(ambient, name, e);
}
FactoredFunction cst(const std::string& ambient, GaussRational c) { return FactoredFunction::constant_on(ambient, c); }

const FactoredFunction* value_at(const SymbolBoundary& b, const std::string& component) {
    for (const auto& t : b.terms)
        if (t.component == component) return &t.symbol.entries.front();
    return nullptr;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("valuations are sparse and default to zero") {
    auto reg = p1_line_registry();
    auto t = on("P1_t", "t");
    CHECK(valuation(reg, t, "t=0") == 1);
    CHECK(valuation(reg, t, "t=inf") == -1);
    CHECK(valuation(reg, t, "t=1") == 0);
    CHECK(code_of([&] { valuation(reg, t, "s=0"); }) == ErrorCode::unregistered_component);
}

TEST_CASE("tame symbol of {t, s} on the product of two lines") {
    auto reg = p1_product_registry();
    auto b = tame_symbol(reg, make_symbol("P1xP1", {on("P1xP1", "t"), on("P1xP1", "s")}));
    CHECK(b.terms.size() == 4);
    const std::string d0 = vertical_curve_name("t=0", "P1_s"), dinf = vertical_curve_name("t=inf", "P1_s");
    const std::string h0 = horizontal_curve_name("P1_t", "s=0"), hinf = horizontal_curve_name("P1_t", "s=inf");
    REQUIRE(value_at(b, d0));
    CHECK(*value_at(b, d0) == on(d0, restricted_factor_name("s", "t=0"), -1));
    CHECK(*value_at(b, dinf) == on(dinf, restricted_factor_name("s", "t=inf"), 1));
    CHECK(*value_at(b, h0) == on(h0, restricted_factor_name("t", "s=0"), 1));
    CHECK(*value_at(b, hinf) == on(hinf, restricted_factor_name("t", "s=inf"), -1));
}

TEST_CASE("tame symbols of {z, 1 - z} and {z, z} on a line") {
    auto reg = p1_line_registry();
    auto z = on("P1_t", "t");
    auto one_minus_z = -on("P1_t", "t-1");
    auto b = tame_symbol(reg, make_symbol("P1_t", {z, one_minus_z}));
    CHECK(b.terms.size() == 3);
    for (const auto& term : b.terms) {
        CHECK(term.symbol.entries.front().is_constant());
        CHECK(term.symbol.entries.front().constant == GaussRational(1));
    }
    auto zz = tame_symbol(reg, make_symbol("P1_t", {z, z}));
    CHECK(zz.terms.size() == 2);
    for (const auto& term : zz.terms) CHECK(term.symbol.entries.front().constant == GaussRational(-1));
}

TEST_CASE("tame symbol golden with constants and shared zeros") {
    auto reg = p1_line_registry();
    // {2 t^2, (t-1) t^-1}: at t=0 a=2, b=-1: (+1) * (2t^2)_0^-1 / ((t-1)t^-1)_0^2 = (1/2) / 1
    auto f = cst("P1_t", 2) * on("P1_t", "t", 2);
    auto g = on("P1_t", "t-1") * on("P1_t", "t", -1);
    auto b = tame_symbol(reg, make_symbol("P1_t", {f, g}));
    CHECK(value_at(b, "t=0")->constant == GaussRational(mpq_class(1, 2)));
    // at t=1: a=0, b=1 -> f(1) = 2
    CHECK(value_at(b, "t=1")->constant == GaussRational(2));
    // at inf: a=-2, b=0 -> g0^2 = 1
    CHECK(value_at(b, "t=inf")->constant == GaussRational(1));
    CHECK(weil_reciprocity(reg, "P1_t", f, g) == GaussRational(1));
}

TEST_CASE("Weil reciprocity on random pairs over a line and over an elliptic curve") {
    std::mt19937_64 rng(4242);
    auto p1 = p1_line_registry();
    for (int k = 0; k < 100; ++k) {
        auto f = testing::random_function(p1, "P1_t", rng, 4);
        auto g = testing::random_function(p1, "P1_t", rng, 4);
        CHECK_MESSAGE(weil_reciprocity(p1, "P1_t", f, g) == GaussRational(1), f.str() << " / " << g.str());
    }
    auto e = testing::cubic_registry();
    for (int k = 0; k < 100; ++k) {
        auto f = testing::random_function(e, "E", rng, 3);
        auto g = testing::random_function(e, "E", rng, 3);
        CHECK_MESSAGE(weil_reciprocity(e, "E", f, g) == GaussRational(1), f.str() << " / " << g.str());
    }
}

TEST_CASE("tame symbol is antisymmetric") {
    std::mt19937_64 rng(99);
    auto e = testing::cubic_registry();
    for (int k = 0; k < 40; ++k) {
        auto f = testing::random_function(e, "E", rng, 3);
        auto g = testing::random_function(e, "E", rng, 3);
        auto fg = tame_symbol(e, make_symbol("E", {f, g}));
        auto gf = tame_symbol(e, make_symbol("E", {g, f}));
        REQUIRE(fg.terms.size() == gf.terms.size());
        for (const auto& t : fg.terms) {
            auto other = value_at(gf, t.component);
            REQUIRE(other);
            CHECK((t.symbol.entries.front().constant * other->constant).is_one());
        }
    }
}

TEST_CASE("reciprocity errors") {
    auto e = testing::cubic_registry();
    auto reg = p1_product_registry();
    auto f = on("P1xP1", "t");
    CHECK(code_of([&] { weil_reciprocity(reg, "P1xP1", f, f); }) == ErrorCode::invalid_argument);
    FactorRegistry bad = e;
    bad.add_factor({"stray", "E", std::nullopt});
    bad.set_multiplicity("stray", "O", 1);
    CHECK(code_of([&] { weil_reciprocity(bad, "E", on("E", "stray"), on("E", "x")); }) == ErrorCode::nonzero_degree);
}

TEST_CASE("higher symbol of {t, s, ts} at t = 0") {
    auto reg = p1_product_registry();
    auto t = on("P1xP1", "t"), s = on("P1xP1", "s");
    const std::string d = vertical_curve_name("t=0", "P1_s");
    auto b = higher_tame(reg, make_symbol("P1xP1", {t, s, t * s}), d);
    const auto s0 = on(d, restricted_factor_name("s", "t=0"));
    REQUIRE(b.terms.size() == 2);
    CHECK(b.terms[0].symbol.entries == std::vector<FactoredFunction>{s0, s0});
    CHECK(b.terms[0].exponent == 1);
    CHECK(b.terms[1].symbol.entries == std::vector<FactoredFunction>{cst(d, 1), s0});
    CHECK(b.terms[1].exponent == 1);
    // {s, s} = {s, -1} is 2-torsion and {1, s} is trivial
    CHECK(is_zero(b, TorsionMode::modulo_two_torsion));
    CHECK_FALSE(is_zero(b, TorsionMode::exact));
}

TEST_CASE("boundary of a boundary vanishes modulo 2-torsion") {
    std::mt19937_64 rng(7);
    auto reg = p1_product_registry();
    for (int k = 0; k < 40; ++k) {
        std::vector<FactoredFunction> entries;
        for (int j = 0; j < 3; ++j) entries.push_back(testing::random_function(reg, "P1xP1", rng, 3));
        auto sym = make_symbol("P1xP1", entries);
        CHECK_MESSAGE(boundary_squared_vanishes(reg, sym), sym.str() << " -> "
                                                                    << describe(normalize(boundary_squared(reg, sym),
                                                                                          TorsionMode::modulo_two_torsion)));
    }
    for (int k = 0; k < 20; ++k) {
        std::vector<FactoredFunction> entries;
        for (int j = 0; j < 2; ++j) entries.push_back(testing::random_function(reg, "P1xP1", rng, 3));
        CHECK(boundary_squared_vanishes(reg, make_symbol("P1xP1", entries)));
    }
}

TEST_CASE("boundary squared of length two agrees with Weil reciprocity on each fibre") {
    auto reg = p1_product_registry();
    auto t = on("P1xP1", "t"), s = on("P1xP1", "s");
    auto sym = make_symbol("P1xP1", {t * s, -on("P1xP1", "s-1")});
    auto bb = boundary_squared(reg, sym);
    CHECK(is_zero(bb, TorsionMode::exact));
}

TEST_CASE("change of local equation leaves the higher symbol unchanged modulo 2-torsion") {
    std::mt19937_64 rng(31);
    auto reg = p1_product_registry();
    const std::string d = vertical_curve_name("t=0", "P1_s");
    std::vector<FactoredFunction> units{on(d, restricted_factor_name("s-1", "t=0")), cst(d, 3),
                                        on(d, restricted_factor_name("s", "t=0"), 2) * cst(d, mpq_class(-2, 5))};
    for (const auto& u : units) {
        auto changed = reg.with_local_equation(d, u);
        for (int k = 0; k < 15; ++k) {
            std::vector<FactoredFunction> entries;
            int n = 2 + static_cast<int>(k % 2);
            for (int j = 0; j < n; ++j) entries.push_back(testing::random_function(reg, "P1xP1", rng, 3));
            auto sym = make_symbol("P1xP1", entries);
            auto a = normalize(higher_tame(reg, sym, d), TorsionMode::modulo_two_torsion);
            auto b = normalize(higher_tame(changed, sym, d), TorsionMode::modulo_two_torsion);
            CHECK_MESSAGE(a == b, describe(a) << " vs " << describe(b));
        }
    }
}

TEST_CASE("Steinberg relations map to trivial boundaries") {
    auto reg = p1_product_registry();
    auto t = on("P1xP1", "t"), s = on("P1xP1", "s");
    auto one_minus_t = -on("P1xP1", "t-1");
    for (const auto& sym : {make_symbol("P1xP1", {t, one_minus_t, s}), make_symbol("P1xP1", {s, t, one_minus_t}),
                            make_symbol("P1xP1", {t, -t, s}), make_symbol("P1xP1", {t * s, -(t * s), s})}) {
        auto check = steinberg_image_check(reg, sym);
        CHECK_MESSAGE(check.all_recognized(), sym.str() << " -> " << check.boundary.str());
    }
    // negation pairs vanish outright modulo 2-torsion; (f, 1-f) leaves formal Steinberg symbols
    CHECK(is_zero(steinberg_image_check(reg, make_symbol("P1xP1", {t, -t, s})).boundary, TorsionMode::modulo_two_torsion));
    auto st = steinberg_image_check(reg, make_symbol("P1xP1", {t, one_minus_t, s}));
    CHECK_FALSE(is_zero(st.boundary, TorsionMode::modulo_two_torsion));
    for (auto v : st.verdicts) CHECK((v == TrivialityRule::steinberg_pair || v == TrivialityRule::unit_entry));
    CHECK(is_steinberg_pair(reg, on("P1xP1", "t", -1) * on("P1xP1", "t-1"), on("P1xP1", "t", -1)));
    CHECK_FALSE(is_steinberg_pair(reg, t, s));
    CHECK(code_of([&] { steinberg_image_check(reg, make_symbol("P1xP1", {t, s, t})); }) ==
          ErrorCode::pattern_not_found);
}

TEST_CASE("missing restriction is reported") {
    auto reg = p1_product_registry();
    reg.add_factor({"g", "P1xP1", std::nullopt});
    const std::string d = vertical_curve_name("t=0", "P1_s");
    reg.set_multiplicity("g", d, 1);
    CHECK(code_of([&] { tame_symbol(reg, make_symbol("P1xP1", {on("P1xP1", "g"), on("P1xP1", "s")})); }) ==
          ErrorCode::unresolvable_restriction);
}

TEST_CASE("evaluation of factored functions") {
    auto line = p1_line_registry();
    auto f = on("P1_t", "t-1", 2) * on("P1_t", "t", -1);
    CHECK(eval_factored_exact(line, f, {GaussRational(2)}) == GaussRational(mpq_class(1, 2)));
    CHECK(std::abs(eval_factored(line, f, {{2.0, 0.0}}) - std::complex<double>(0.5, 0)) < 1e-15);
    CHECK(eval_factored_exact(line, f, {GaussRational(1)}) == GaussRational(0));
    CHECK(code_of([&] { eval_factored_exact(line, f, {GaussRational(0)}); }) == ErrorCode::indeterminate_value);
    auto reg = p1_product_registry();
    auto g = on("P1xP1", "t") * on("P1xP1", "s-1") * cst("P1xP1", GaussRational::i());
    CHECK(eval_factored_exact(reg, g, {GaussRational(3), GaussRational(-1)}) == GaussRational(0, -6));
}

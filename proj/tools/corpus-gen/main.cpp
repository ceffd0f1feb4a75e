// Writes the shipped corpora: p1xp1.json, elliptic.json, completion.json,
// completion_missing_fact.json and empty.json. Output is deterministic.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "treg/cycles/facts.hpp"
#include "treg/elliptic/curve.hpp"
#include "treg/milnor/builders.hpp"
#include "treg/report/corpus.hpp"

namespace {

using namespace treg;
using cycles::FactKind;
using cycles::FormalDivisor;
using cycles::Slot;
using cycles::SubvarietyDescriptor;
using exact::GaussRational;
using milnor::FactoredFunction;
using report::Corpus;

FactoredFunction on(const std::string& ambient, const std::string& name, long e = 1) {
    return FactoredFunction::factor(ambient, name, e);
}

// c * prod F^e over the factors of `ambient`, up to `terms` factors with |e| <= max_exp.
FactoredFunction random_monomial(const milnor::FactorRegistry& reg, const std::string& ambient, std::mt19937_64& rng,
                                 int terms, int max_exp = 2) {
    static const std::vector<GaussRational> constants{GaussRational(1),  GaussRational(-1),
                                                      GaussRational(2),  GaussRational(mpq_class(1, 3)),
                                                      GaussRational(1, 1), GaussRational(mpq_class(-5, 2), 0)};
    auto names = reg.factors_on(ambient);
    FactoredFunction f = FactoredFunction::constant_on(ambient, constants[rng() % constants.size()]);
    for (int k = 0; k < terms; ++k) {
        long e = static_cast<long>(rng() % (2 * max_exp + 1)) - max_exp;
        if (e != 0) f = f * on(ambient, names[rng() % names.size()], e);
    }
    return f;
}

std::string numbered(const std::string& stem, int k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d", k);
    return stem + "-" + buf;
}

void add_reciprocity(Corpus& c, const std::string& curve, std::uint64_t seed, int count, int terms) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        auto f = random_monomial(c.registry, curve, rng, terms);
        auto g = random_monomial(c.registry, curve, rng, terms);
        c.reciprocity.push_back({numbered(curve, k), curve, f, g});
    }
}

void add_boundary_squared(Corpus& c, const std::string& surface, std::uint64_t seed, int count, std::size_t length) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        std::vector<FactoredFunction> entries;
        for (std::size_t j = 0; j < length; ++j) entries.push_back(random_monomial(c.registry, surface, rng, 3));
        c.boundary_squared.push_back(
            {numbered(surface + "-n" + std::to_string(length), k), milnor::make_symbol(surface, std::move(entries))});
    }
}

Corpus p1xp1() {
    Corpus c;
    c.name = "p1xp1";
    const std::vector<GaussRational> pts{GaussRational(0), GaussRational(1), GaussRational(-1), GaussRational(2),
                                         GaussRational::i()};
    milnor::register_product(c.registry, "P1xP1", milnor::projective_line_table("P1_t", "t", pts),
                             milnor::projective_line_table("P1_s", "s", pts));
    milnor::register_curve(c.registry,
                           milnor::projective_line_table("P1_z", "z",
                                                         {GaussRational(0), GaussRational(1), GaussRational(-1),
                                                          GaussRational(2), GaussRational::i(), GaussRational(0, -1),
                                                          GaussRational(mpq_class(1, 2)), GaussRational(3)}));

    using milnor::horizontal_curve_name;
    using milnor::restricted_factor_name;
    using milnor::vertical_curve_name;
    const std::string S = "P1xP1";
    auto t = on(S, "t"), s = on(S, "s");
    auto term = [](const std::string& component, std::vector<FactoredFunction> entries, long exponent) {
        return milnor::BoundaryTerm{component, milnor::make_symbol(component, std::move(entries)), exponent};
    };
    auto restricted = [&](const std::string& component, const std::string& factor, const std::string& point) {
        return on(component, restricted_factor_name(factor, point));
    };

    // (inf x P1, s) - (0 x P1, s) + (P1 x 0, t) - (P1 x inf, t)
    const std::string d0 = vertical_curve_name("t=0", "P1_s"), dinf = vertical_curve_name("t=inf", "P1_s");
    const std::string h0 = horizontal_curve_name("P1_t", "s=0"), hinf = horizontal_curve_name("P1_t", "s=inf");
    c.tame.push_back({"t-s",
                      milnor::make_symbol(S, {t, s}),
                      std::nullopt,
                      {{term(dinf, {restricted(dinf, "s", "t=inf")}, 1), term(d0, {restricted(d0, "s", "t=0")}, -1),
                        term(h0, {restricted(h0, "t", "s=0")}, 1), term(hinf, {restricted(hinf, "t", "s=inf")}, -1)}},
                      milnor::TorsionMode::exact});
    const std::string L = "P1_z";
    auto cst = [](const std::string& v, GaussRational a) { return FactoredFunction::constant_on(v, a); };
    c.tame.push_back({"2z2-by-(z-1)/z",
                      milnor::make_symbol(L, {cst(L, 2) * on(L, "z", 2), on(L, "z-1") * on(L, "z", -1)}),
                      std::nullopt,
                      {{term("z=0", {cst("z=0", GaussRational(mpq_class(1, 2)))}, 1),
                        term("z=1", {cst("z=1", 2)}, 1)}},
                      milnor::TorsionMode::exact});
    c.tame.push_back({"z-by-1-z", milnor::make_symbol(L, {on(L, "z"), -on(L, "z-1")}), std::nullopt, {},
                      milnor::TorsionMode::exact});

    const auto s0 = restricted(d0, "s", "t=0");
    c.higher_tame.push_back({"t-s-ts-at-t0", milnor::make_symbol(S, {t, s, t * s}), d0,
                             {{term(d0, {s0, s0}, 1), term(d0, {cst(d0, 1), s0}, 1)}}, milnor::TorsionMode::exact});
    c.higher_tame.push_back({"t-s-ts-at-t0-mod2", milnor::make_symbol(S, {t, s, t * s}), d0, {},
                             milnor::TorsionMode::modulo_two_torsion});

    c.boundary_squared.push_back({"ts-by-1-s", milnor::make_symbol(S, {t * s, -on(S, "s-1")}), milnor::TorsionMode::exact});
    c.boundary_squared.push_back({"t-s-ts", milnor::make_symbol(S, {t, s, t * s})});
    add_boundary_squared(c, S, 2, 20, 2);
    add_boundary_squared(c, S, 3, 30, 3);
    add_reciprocity(c, L, 1, 100, 4);
    return c;
}

milnor::CurveTable cubic(const std::string& name, const std::string& x, const std::string& y) {
    elliptic::ExactCurve e(GaussRational(0), GaussRational(1));
    std::vector<milnor::LabelledPoint> pts{{"O", elliptic::ExactPoint::infinity()},
                                            {"(-1,0)", e.point(-1, 0)},
                                            {"(0,1)", e.point(0, 1)},
                                            {"(0,-1)", e.point(0, -1)},
                                            {"(2,3)", e.point(2, 3)},
                                            {"(2,-3)", e.point(2, -3)}};
    std::vector<std::string> lines{x + "+1",          x,
                                   x + "-2",          y + "-1",
                                   y + "+1",          y + "-" + x + "-1",
                                   y + "+" + x + "+1", y + "-2*" + x + "+1",
                                   y + "+2*" + x + "-1"};
    std::vector<std::pair<std::string, std::string>> factors;
    for (const auto& l : lines) factors.emplace_back(l, l);
    return milnor::elliptic_curve_table(name, e, {x, y}, pts, factors);
}

Corpus elliptic_corpus() {
    Corpus c;
    c.name = "elliptic";
    milnor::register_curve(c.registry, cubic("E", "x", "y"));
    milnor::register_product(c.registry, "E1xE2", cubic("E1", "x1", "y1"), cubic("E2", "x2", "y2"));
    add_reciprocity(c, "E", 4, 100, 3);
    add_boundary_squared(c, "E1xE2", 5, 10, 2);
    add_boundary_squared(c, "E1xE2", 6, 10, 3);

    using elliptic::cplx;
    elliptic::Lattice L1{{1.0, 0.0}, {0.3, 1.2}}, L2{{1.0, 0.0}, {-0.2, 0.9}};
    report::CupProductInstance cup;
    cup.id = "e1xe2-flat-pair";
    cup.ambient = {"E1xE2", {"E1", "E2"}};
    cup.lattices = {L1, L2};
    const cplx q(0.05, 0.3), p(0.4, 0.1);
    cup.terms.push_back({1,
                         SubvarietyDescriptor({Slot::full("E1"), Slot::point("q")}),
                         "sigma_1",
                         0,
                         {{cplx(0.1, 0.2), 1}, {cplx(0.5, 0.4), -1}},
                         0,
                         {{{cplx(0.3, 0.6), q}, {cplx(-0.2, 0.1), q}}, 0}});
    cup.terms.push_back({-2,
                         SubvarietyDescriptor({Slot::point("p"), Slot::full("E2")}),
                         "sigma_2",
                         1,
                         {{cplx(-0.3, 0.1), 2}, {cplx(0.2, 0.3), -1}, {cplx(0.1, -0.2), -1}},
                         0,
                         {{{p, cplx(0.35, -0.1)}}, 0}});
    c.cup_products.push_back(std::move(cup));

    c.harmonicity.push_back({"cell-two-points",
                             L1,
                             {{L1.point(1.0 / 16, 1.0 / 16), 1}, {L1.point(9.0 / 16, 7.0 / 16), -1}},
                             8,
                             8,
                             {0.04, 0.02, 0.01}});
    return c;
}

cycles::RegistryFact fact(FactKind k, std::vector<std::string> subjects, std::optional<SubvarietyDescriptor> carrier = {},
                          FormalDivisor hvc = {}, std::optional<std::string> base = {}) {
    return {k, std::move(subjects), std::move(carrier), std::move(hvc), std::move(base)};
}

SubvarietyDescriptor slice(const std::string& name, int dim) {
    return SubvarietyDescriptor(std::vector<Slot>(4, Slot::group(name, dim)));
}
SubvarietyDescriptor over123(const std::string& name, int dim, Slot last) {
    return SubvarietyDescriptor({Slot::group(name, dim), Slot::group(name, dim), Slot::group(name, dim), std::move(last)});
}
SubvarietyDescriptor fibre(const std::string& p1, const std::string& p2, const std::string& p3) {
    return SubvarietyDescriptor({Slot::point(p1), Slot::point(p2), Slot::point(p3), Slot::full("E4")});
}
cycles::Precycle precycle(const std::string& symbol, const SubvarietyDescriptor& v, FormalDivisor d) {
    return {FactoredFunction::factor(v.name(), symbol), v, std::move(d)};
}

// Section on a slice S of E1 x ... x E4 with div = A - B, both reducible to horizontal/vertical cycles.
void add_four_fold(Corpus& c) {
    const cycles::Ambient four{"E1xE2xE3xE4", {"E1", "E2", "E3", "E4"}};
    const std::vector<long> n1{2, 1}, n2{1, 3};
    auto S = slice("S", 2), A = slice("A", 1), B = slice("B", 1);
    FormalDivisor hvc_a, hvc_b;
    for (std::size_t i = 0; i < 2; ++i) {
        std::string k = std::to_string(i + 1);
        cycles::accumulate(hvc_a, fibre("a1" + k, "a2" + k, "a3" + k), n1[i]);
        cycles::accumulate(hvc_a, over123("Pr(A)", 1, Slot::point("a4" + k)), n2[i]);
        cycles::accumulate(hvc_b, fibre("b1" + k, "b2" + k, "b3" + k), n1[i]);
        cycles::accumulate(hvc_b, over123("Pr(B)", 1, Slot::point("b4" + k)), n2[i]);
    }
    auto za = over123("Pr(A)", 1, Slot::full("E4")), zb = over123("Pr(B)", 1, Slot::full("E4"));
    cycles::FactRegistry facts;
    facts.add(fact(FactKind::hvc_equivalence, {A.name()}, za, hvc_a));
    facts.add(fact(FactKind::hvc_equivalence, {B.name()}, zb, hvc_b));
    for (const auto& z : {za, zb}) {
        facts.add(fact(FactKind::generic_hyperplane_irreducible, {z.name()}));
        facts.add(fact(FactKind::picard_restriction, {z.name()}));
    }
    facts.add(fact(FactKind::bertini_curve, {"(a11,a21,a31)", "(a12,a22,a32)"}, over123("C1", 1, Slot::full("E4"))));
    facts.add(fact(FactKind::bertini_curve, {"(a12,a22,a32)", "(b11,b21,b31)"}, over123("C2", 1, Slot::full("E4"))));
    facts.add(fact(FactKind::bertini_curve, {"(b11,b21,b31)", "(b12,b22,b32)"}, over123("C3", 1, Slot::full("E4"))));
    facts.add(fact(FactKind::degree_zero_flat_bundle, {"E4"}, {}, {}, std::string("b41")));
    facts.add(fact(FactKind::rational_equivalence, {"Pr(A)", "Pr(B)"}, over123("Pr(S)", 2, Slot::full("E4"))));

    const std::vector<report::FormFactor> eta{{"eta1", 1, 2}, {"eta2", 3, 4}};
    c.completions.push_back({"e4-hyperplane", "hyperplane", four, precycle("f", S, {{A, 1}, {B, -1}}), facts, eta});
    c.completions.push_back({"e4-hyperplane-hvc-b", "hyperplane", four,
                             precycle("sigma", S, FormalDivisor{{A, 1}} + cycles::scale(hvc_b, -1)), facts, eta});
}

void add_products(Corpus& c) {
    const cycles::Ambient surface{"E1xE2", {"E1", "E2"}};
    const SubvarietyDescriptor curve({Slot::group("D", 1), Slot::group("D", 1)});
    auto pq = [](const std::string& p, const std::string& q) {
        return SubvarietyDescriptor({Slot::point(p), Slot::point(q)});
    };
    auto flat = [](std::optional<std::string> base) {
        cycles::FactRegistry r;
        r.add(fact(FactKind::degree_zero_flat_bundle, {"E1"}, {}, {}, std::move(base)));
        r.add(fact(FactKind::degree_zero_flat_bundle, {"E2"}));
        return r;
    };
    const std::vector<report::FormFactor> eta{{"eta1", 1, 2}};
    c.completions.push_back({"product-constant", "product", surface,
                             {FactoredFunction::constant_on(curve.name(), GaussRational(3)), curve, {}}, flat({}), eta});
    c.completions.push_back({"product-two-points", "product", surface,
                             precycle("f", curve, {{pq("p1", "q1"), 1}, {pq("p2", "q2"), -1}}), flat("O"), eta});
    std::mt19937_64 rng(17);
    for (int k = 0; k < 6; ++k) {
        FormalDivisor d;
        long total = 0;
        int n = 2 + static_cast<int>(rng() % 4);
        for (int m = 0; m < n; ++m) {
            long e = static_cast<long>(rng() % 7) - 3;
            cycles::accumulate(d, pq("p" + std::to_string(rng() % 4), "q" + std::to_string(rng() % 4)), e);
            total += e;
        }
        cycles::accumulate(d, pq("p" + std::to_string(rng() % 4), "q" + std::to_string(rng() % 4)), -total);
        c.completions.push_back({numbered("product-random", k), "product", surface, precycle("f", curve, d),
                                 flat(k % 2 ? std::optional<std::string>("O") : std::nullopt), eta});
    }
}

Corpus completion_corpus() {
    Corpus c;
    c.name = "completion";
    add_four_fold(c);
    add_products(c);
    return c;
}

// The four-fold instance without the Bertini curve joining the a- and b-fibre chains.
Corpus missing_fact_corpus() {
    Corpus c;
    c.name = "completion-missing-fact";
    add_four_fold(c);
    c.completions.resize(1);
    cycles::FactRegistry fewer;
    for (const auto& f : c.completions[0].facts.facts())
        if (!(f.kind == FactKind::bertini_curve && f.carrier->name() == "C2xE4")) fewer.add(f);
    c.completions[0].facts = fewer;
    return c;
}

Corpus empty_corpus() {
    Corpus c;
    c.name = "empty";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: treg-corpus-gen <output-directory>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    try {
        const std::vector<std::pair<std::string, Corpus>> files{{"p1xp1.json", p1xp1()},
                                                                {"elliptic.json", elliptic_corpus()},
                                                                {"completion.json", completion_corpus()},
                                                                {"completion_missing_fact.json", missing_fact_corpus()},
                                                                {"empty.json", empty_corpus()}};
        for (const auto& [name, corpus] : files) {
            std::ofstream os(dir / name, std::ios::binary);
            os << report::write_corpus(corpus);
            if (!os) {
                std::cerr << "treg-corpus-gen: cannot write " << (dir / name).string() << "\n";
                return 1;
            }
        }
    } catch (const treg::Error& e) {
        std::cerr << "treg-corpus-gen: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "treg/milnor/tame.hpp"

#include <random>

#include "treg/error.hpp"

namespace treg::milnor {

namespace {

void require_component(const FactorRegistry& reg, const std::string& ambient, const std::string& component) {
    const Variety& v = reg.variety(ambient);
    for (const auto& c : v.components)
        if (c == component) return;
    fail(ErrorCode::unregistered_component, "'" + component + "' is not a component of '" + ambient + "'");
}

long parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

long valuation(const FactorRegistry& reg, const FactoredFunction& f, const std::string& component) {
    require_component(reg, f.ambient, component);
    long nu = 0;
    for (const auto& [name, e] : f.exponents) nu += e * reg.multiplicity(name, component);
    return nu;
}

FactoredFunction residue(const FactorRegistry& reg, const FactoredFunction& f, const std::string& component) {
    require_component(reg, f.ambient, component);
    FactoredFunction out = FactoredFunction::constant_on(component, f.constant);
    out.bundle = f.bundle;
    for (const auto& [name, e] : f.exponents) {
        const FactoredFunction* r = reg.restriction(name, component);
        if (!r)
            fail(ErrorCode::unresolvable_restriction,
                 "no registered restriction of factor '" + name + "' to '" + component + "'");
        out = out * r->pow(e);
    }
    return out;
}

std::vector<std::string> support(const FactorRegistry& reg, const MilnorSymbol& sym) {
    std::vector<std::string> out;
    for (const auto& d : reg.variety(sym.base).components) {
        bool hit = false;
        for (const auto& e : sym.entries) hit = hit || valuation(reg, e, d) != 0;
        if (hit) out.push_back(d);
    }
    return out;
}

SymbolBoundary tame_symbol(const FactorRegistry& reg, const MilnorSymbol& sym) {
    if (sym.length() != 2) fail(ErrorCode::invalid_argument, "tame_symbol needs a symbol of length 2");
    const FactoredFunction& f = sym.entries[0];
    const FactoredFunction& g = sym.entries[1];
    SymbolBoundary out;
    for (const auto& d : support(reg, sym)) {
        long a = valuation(reg, f, d), b = valuation(reg, g, d);
        FactoredFunction value = residue(reg, f, d).pow(b) * residue(reg, g, d).pow(-a);
        if (parity_sign(a * b) < 0) value = -value;
        out.terms.push_back({d, make_symbol(d, {value}), 1});
    }
    return out;
}

SymbolBoundary higher_tame(const FactorRegistry& reg, const MilnorSymbol& sym, const std::string& component) {
    const std::size_t n = sym.length();
    if (n == 0) fail(ErrorCode::invalid_argument, "higher_tame needs a symbol of length >= 1");
    std::vector<long> nu(n);
    for (std::size_t j = 0; j < n; ++j) nu[j] = valuation(reg, sym.entries[j], component);
    std::vector<std::optional<FactoredFunction>> res(n);
    auto residue_of = [&](std::size_t k) -> const FactoredFunction& {
        if (!res[k]) res[k] = residue(reg, sym.entries[k], component);
        return *res[k];
    };
    SymbolBoundary out;
    for (std::size_t j = 0; j < n; ++j) {
        if (nu[j] == 0) continue;
        std::vector<FactoredFunction> entries;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) entries.push_back(residue_of(k));
        // 1-based position j+1 gives the sign (-1)^(N-(j+1))
        long exponent = parity_sign(static_cast<long>(n - (j + 1))) * nu[j];
        out.terms.push_back({component, make_symbol(component, std::move(entries)), exponent});
    }
    return out;
}

SymbolBoundary higher_tame_all(const FactorRegistry& reg, const MilnorSymbol& sym) {
    SymbolBoundary out;
    for (const auto& d : support(reg, sym)) {
        SymbolBoundary part = higher_tame(reg, sym, d);
        out.terms.insert(out.terms.end(), part.terms.begin(), part.terms.end());
    }
    return out;
}

SymbolBoundary boundary_squared(const FactorRegistry& reg, const MilnorSymbol& sym) {
    if (sym.length() < 2) fail(ErrorCode::invalid_argument, "boundary_squared needs a symbol of length >= 2");
    SymbolBoundary first = higher_tame_all(reg, sym);
    SymbolBoundary out;
    for (const BoundaryTerm& t : first.terms) {
        if (!reg.has_variety(t.component))
            fail(ErrorCode::inconsistent_nesting, "component '" + t.component + "' is not registered as a variety");
        const Variety& d = reg.variety(t.component);
        for (const auto& e : t.symbol.entries)
            for (const auto& [name, ex] : e.exponents)
                if (reg.factor(name).variety != d.name)
                    fail(ErrorCode::inconsistent_nesting, "factor '" + name + "' does not live on '" + d.name + "'");
        SymbolBoundary second = higher_tame_all(reg, t.symbol);
        for (BoundaryTerm& s : second.terms) {
            s.exponent *= t.exponent;
            out.terms.push_back(std::move(s));
        }
    }
    return out;
}

bool boundary_squared_vanishes(const FactorRegistry& reg, const MilnorSymbol& sym, TorsionMode mode) {
    return is_zero(boundary_squared(reg, sym), mode);
}

GaussRational weil_reciprocity(const FactorRegistry& reg, const std::string& curve, const FactoredFunction& f,
                               const FactoredFunction& g) {
    const Variety& c = reg.variety(curve);
    if (c.dim != 1) fail(ErrorCode::invalid_argument, "'" + curve + "' is not a curve");
    if (f.ambient != curve || g.ambient != curve)
        fail(ErrorCode::invalid_argument, "functions must live on '" + curve + "'");
    if (!f.is_rational_function() || !g.is_rational_function())
        fail(ErrorCode::invalid_argument, "reciprocity applies to rational functions only");
    for (const auto* h : {&f, &g}) {
        long degree = 0;
        for (const auto& p : c.components) degree += valuation(reg, *h, p);
        if (degree != 0)
            fail(ErrorCode::nonzero_degree, "divisor of " + h->str() + " has degree " + std::to_string(degree));
    }
    GaussRational prod(1);
    for (const BoundaryTerm& t : tame_symbol(reg, make_symbol(curve, {f, g})).terms) {
        const FactoredFunction& v = t.symbol.entries.front();
        if (!v.is_constant())
            fail(ErrorCode::common_component_uncancelled,
                 "tame value at '" + t.component + "' is not a constant: " + v.str());
        prod *= v.constant.pow(t.exponent);
    }
    return prod;
}

std::string rule_name(TrivialityRule r) {
    switch (r) {
    case TrivialityRule::zero_exponent: return "zero-exponent";
    case TrivialityRule::unit_entry: return "unit-entry";
    case TrivialityRule::steinberg_pair: return "steinberg-pair";
    case TrivialityRule::negation_pair: return "negation-pair";
    case TrivialityRule::repeated_entry: return "repeated-entry";
    case TrivialityRule::unrecognized: return "unrecognized";
    }
    return "unrecognized";
}

bool SteinbergCheck::all_recognized() const {
    for (auto v : verdicts)
        if (v == TrivialityRule::unrecognized) return false;
    return true;
}

namespace {

GaussRational random_gauss(std::mt19937_64& rng) {
    auto small = [&rng](long span) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span; };
    long den_re = 1 + static_cast<long>(rng() % 7), den_im = 1 + static_cast<long>(rng() % 7);
    return {mpq_class(small(60), den_re), mpq_class(small(60), den_im)};
}

bool evaluable(const FactorRegistry& reg, const FactoredFunction& f) {
    for (const auto& [name, e] : f.exponents)
        if (!reg.factor(name).polynomial) return false;
    return true;
}

// f at an exact point, or nullopt if some factor vanishes there.
std::optional<GaussRational> eval_exact(const FactorRegistry& reg, const FactoredFunction& f,
                                        const std::vector<GaussRational>& pt) {
    GaussRational acc = f.constant;
    for (const auto& [name, e] : f.exponents) {
        GaussRational v = reg.factor(name).polynomial->evaluate(pt);
        if (v.is_zero()) return std::nullopt;
        acc *= v.pow(e);
    }
    return acc;
}

}  // namespace

bool is_steinberg_pair(const FactorRegistry& reg, const FactoredFunction& g, const FactoredFunction& h,
                       std::uint64_t seed) {
    if (g.ambient != h.ambient || !g.is_rational_function() || !h.is_rational_function()) return false;
    for (const auto& p : reg.steinberg_pairs())
        if ((p.f == g && p.one_minus_f == h) || (p.f == h && p.one_minus_f == g)) return true;
    if (g.is_constant() && h.is_constant()) return (g.constant + h.constant).is_one();
    const Variety& v = reg.variety(g.ambient);
    if (!v.free_coordinates || !evaluable(reg, g) || !evaluable(reg, h)) return false;
    std::mt19937_64 rng(seed);
    int checked = 0;
    for (int attempt = 0; attempt < 64 && checked < 8; ++attempt) {
        std::vector<GaussRational> pt;
        for (std::size_t k = 0; k < v.coordinates.size(); ++k) pt.push_back(random_gauss(rng));
        auto a = eval_exact(reg, g, pt);
        auto b = eval_exact(reg, h, pt);
        if (!a || !b) continue;
        if (!(*a + *b).is_one()) return false;
        ++checked;
    }
    return checked == 8;
}

namespace {

TrivialityRule classify(const FactorRegistry& reg, const BoundaryTerm& t) {
    if (t.exponent == 0) return TrivialityRule::zero_exponent;
    const auto& e = t.symbol.entries;
    for (const auto& x : e)
        if (x.is_unit_constant()) return TrivialityRule::unit_entry;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i + 1] == -e[i]) return TrivialityRule::negation_pair;
        if (e[i + 1] == e[i]) return TrivialityRule::repeated_entry;
        if (is_steinberg_pair(reg, e[i], e[i + 1])) return TrivialityRule::steinberg_pair;
    }
    return TrivialityRule::unrecognized;
}

}  // namespace

SteinbergCheck steinberg_image_check(const FactorRegistry& reg, const MilnorSymbol& sym) {
    bool found = false;
    const auto& e = sym.entries;
    for (std::size_t i = 0; i + 1 < e.size() && !found; ++i)
        found = e[i + 1] == -e[i] || is_steinberg_pair(reg, e[i], e[i + 1]);
    if (!found) fail(ErrorCode::pattern_not_found, "no adjacent (f, 1-f) or (s, -s) pair in " + sym.str());
    SteinbergCheck out;
    out.boundary = higher_tame_all(reg, sym);
    for (const auto& t : out.boundary.terms) out.verdicts.push_back(classify(reg, t));
    return out;
}

}  // namespace treg::milnor

#include "treg/report/corpus.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string_view>

#include "codec.hpp"
#include "treg/error.hpp"

namespace treg::report {

using milnor::FactoredFunction;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    fail(ErrorCode::schema_invalid, where + ": " + what);
}

// Read access to one JSON object that rejects fields outside `allowed`.
class Obj {
public:
    Obj(const json& j, std::string where, std::initializer_list<std::string_view> allowed)
        : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) bad(where_, "expected an object");
        for (const auto& [k, v] : j_.items()) {
            bool known = false;
            for (auto a : allowed) known = known || a == k;
            if (!known) bad(where_, "unknown field '" + k + "'");
        }
    }

    const std::string& where() const { return where_; }
    std::string at(const std::string& k) const { return where_ + "." + k; }
    bool has(const std::string& k) const { return j_.contains(k); }

    const json& req(const std::string& k) const {
        if (!j_.contains(k)) bad(where_, "missing field '" + k + "'");
        return j_.at(k);
    }
    std::string str(const std::string& k) const {
        const json& v = req(k);
        if (!v.is_string()) bad(at(k), "expected a string");
        return v.get<std::string>();
    }
    long integer(const std::string& k) const {
        const json& v = req(k);
        if (!v.is_number_integer()) bad(at(k), "expected an integer");
        return v.get<long>();
    }
    double number(const std::string& k) const {
        const json& v = req(k);
        if (!v.is_number()) bad(at(k), "expected a number");
        return v.get<double>();
    }
    bool boolean(const std::string& k) const {
        const json& v = req(k);
        if (!v.is_boolean()) bad(at(k), "expected a boolean");
        return v.get<bool>();
    }
    const json& array(const std::string& k) const {
        const json& v = req(k);
        if (!v.is_array()) bad(at(k), "expected an array");
        return v;
    }
    std::vector<std::string> strings(const std::string& k) const {
        std::vector<std::string> out;
        for (const auto& v : array(k)) {
            if (!v.is_string()) bad(at(k), "expected strings");
            out.push_back(v.get<std::string>());
        }
        return out;
    }

private:
    const json& j_;
    std::string where_;
};

std::string item(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

// ---- decoding ----

exact::GaussRational gauss(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a Gaussian rational string");
    try {
        return exact::GaussRational::parse(j.get<std::string>());
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

std::map<std::string, long> exponent_map(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object of exponents");
    std::map<std::string, long> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number_integer()) bad(where + "." + k, "expected an integer exponent");
        if (v.get<long>() != 0) out[k] = v.get<long>();
    }
    return out;
}

FactoredFunction function(const json& j, const std::string& where) {
    Obj o(j, where, {"ambient", "constant", "factors", "bundle"});
    FactoredFunction f;
    f.ambient = o.str("ambient");
    if (o.has("constant")) f.constant = gauss(o.req("constant"), o.at("constant"));
    if (f.constant.is_zero()) bad(o.at("constant"), "zero function");
    if (o.has("factors")) f.exponents = exponent_map(o.req("factors"), o.at("factors"));
    if (o.has("bundle")) f.bundle = exponent_map(o.req("bundle"), o.at("bundle"));
    return f;
}

std::vector<FactoredFunction> functions(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    std::vector<FactoredFunction> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(function(j[k], item(where, k)));
    return out;
}

milnor::MilnorSymbol symbol(const json& j, const std::string& where) {
    Obj o(j, where, {"base", "entries"});
    return milnor::make_symbol(o.str("base"), functions(o.req("entries"), o.at("entries")));
}

milnor::SymbolBoundary boundary(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    milnor::SymbolBoundary b;
    for (std::size_t k = 0; k < j.size(); ++k) {
        Obj o(j[k], item(where, k), {"component", "entries", "exponent"});
        milnor::BoundaryTerm t;
        t.component = o.str("component");
        t.symbol = milnor::make_symbol(t.component, functions(o.req("entries"), o.at("entries")));
        if (o.has("exponent")) t.exponent = o.integer("exponent");
        b.terms.push_back(std::move(t));
    }
    return b;
}

milnor::TorsionMode torsion(const std::string& s, const std::string& where) {
    if (s == "exact") return milnor::TorsionMode::exact;
    if (s == "modulo_two_torsion") return milnor::TorsionMode::modulo_two_torsion;
    bad(where, "unknown torsion mode '" + s + "'");
}

cycles::Slot slot(const json& j, const std::string& where) {
    if (j.is_object() && j.contains("full")) {
        Obj o(j, where, {"full"});
        return cycles::Slot::full(o.str("full"));
    }
    if (j.is_object() && j.contains("point")) {
        Obj o(j, where, {"point"});
        return cycles::Slot::point(o.str("point"));
    }
    Obj o(j, where, {"group", "dim", "varies"});
    return cycles::Slot::group(o.str("group"), static_cast<int>(o.integer("dim")),
                               o.has("varies") ? o.boolean("varies") : true);
}

cycles::SubvarietyDescriptor descriptor(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of slots");
    std::vector<cycles::Slot> slots;
    for (std::size_t k = 0; k < j.size(); ++k) slots.push_back(slot(j[k], item(where, k)));
    try {
        return cycles::SubvarietyDescriptor(std::move(slots));
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

cycles::FormalDivisor divisor(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    cycles::FormalDivisor d;
    for (std::size_t k = 0; k < j.size(); ++k) {
        Obj o(j[k], item(where, k), {"component", "multiplicity"});
        cycles::accumulate(d, descriptor(o.req("component"), o.at("component")), o.integer("multiplicity"));
    }
    return d;
}

cycles::Precycle precycle(const json& j, const std::string& where) {
    Obj o(j, where, {"section", "variety", "divisor"});
    cycles::Precycle p{function(o.req("section"), o.at("section")), descriptor(o.req("variety"), o.at("variety")),
                       divisor(o.req("divisor"), o.at("divisor"))};
    return p;
}

cycles::RegistryFact fact(const json& j, const std::string& where) {
    Obj o(j, where, {"kind", "subjects", "carrier", "hvc", "base_point"});
    auto kind = cycles::parse_fact_kind(o.str("kind"));
    if (!kind) bad(o.at("kind"), "unknown fact kind '" + o.str("kind") + "'");
    cycles::RegistryFact f;
    f.kind = *kind;
    f.subjects = o.strings("subjects");
    if (o.has("carrier")) f.carrier = descriptor(o.req("carrier"), o.at("carrier"));
    if (o.has("hvc")) f.hvc = divisor(o.req("hvc"), o.at("hvc"));
    if (o.has("base_point")) f.base_point = o.str("base_point");
    return f;
}

cycles::Ambient ambient(const json& j, const std::string& where) {
    Obj o(j, where, {"name", "factors"});
    return {o.str("name"), o.strings("factors")};
}

std::complex<double> complex_number(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        bad(where, "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

elliptic::Lattice lattice(const json& j, const std::string& where) {
    Obj o(j, where, {"w1", "w2"});
    elliptic::Lattice l{complex_number(o.req("w1"), o.at("w1")), complex_number(o.req("w2"), o.at("w2"))};
    try {
        l.validate();
    } catch (const Error& e) {
        bad(where, e.what());
    }
    return l;
}

elliptic::AnalyticDivisor analytic_divisor(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array");
    elliptic::AnalyticDivisor d;
    long degree = 0;
    for (std::size_t k = 0; k < j.size(); ++k) {
        Obj o(j[k], item(where, k), {"at", "multiplicity"});
        d.emplace_back(complex_number(o.req("at"), o.at("at")), o.integer("multiplicity"));
        degree += d.back().second;
    }
    if (degree != 0) bad(where, "divisor degree is " + std::to_string(degree));
    return d;
}

void load_registry(milnor::FactorRegistry& reg, const json& j, const std::string& where) {
    Obj o(j, where, {"varieties", "factors", "multiplicities", "restrictions", "steinberg_pairs"});
    const json& vs = o.array("varieties");
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Obj v(vs[k], item(o.at("varieties"), k), {"name", "dim", "coordinates", "components", "free_coordinates"});
        milnor::Variety var;
        var.name = v.str("name");
        var.dim = static_cast<int>(v.integer("dim"));
        if (v.has("coordinates")) var.coordinates = v.strings("coordinates");
        if (v.has("components")) var.components = v.strings("components");
        if (v.has("free_coordinates")) var.free_coordinates = v.boolean("free_coordinates");
        reg.add_variety(std::move(var));
    }
    for (const auto& [name, var] : reg.varieties())
        for (const auto& c : var.components) {
            if (!reg.has_variety(c)) bad(where, "component '" + c + "' of '" + name + "' is not registered");
            if (reg.variety(c).dim != var.dim - 1)
                bad(where, "component '" + c + "' of '" + name + "' is not of codimension one");
        }

    const json& fs = o.array("factors");
    for (std::size_t k = 0; k < fs.size(); ++k) {
        Obj f(fs[k], item(o.at("factors"), k), {"name", "variety", "polynomial"});
        milnor::Factor fac{f.str("name"), f.str("variety"), std::nullopt};
        if (!reg.has_variety(fac.variety)) bad(f.where(), "variety '" + fac.variety + "' is not registered");
        if (f.has("polynomial")) {
            try {
                fac.polynomial = exact::Polynomial::parse(f.str("polynomial"), reg.variety(fac.variety).coordinates);
            } catch (const Error& e) {
                bad(f.at("polynomial"), e.what());
            }
        }
        reg.add_factor(std::move(fac));
    }

    if (o.has("multiplicities")) {
        const json& ms = o.array("multiplicities");
        for (std::size_t k = 0; k < ms.size(); ++k) {
            Obj m(ms[k], item(o.at("multiplicities"), k), {"factor", "component", "value"});
            long value = m.integer("value");
            if (value == 0) bad(m.where(), "zero multiplicities are implicit");
            reg.set_multiplicity(m.str("factor"), m.str("component"), value);
        }
    }
    if (o.has("restrictions")) {
        const json& rs = o.array("restrictions");
        for (std::size_t k = 0; k < rs.size(); ++k) {
            Obj r(rs[k], item(o.at("restrictions"), k), {"factor", "component", "value"});
            reg.set_restriction(r.str("factor"), r.str("component"), function(r.req("value"), r.at("value")));
        }
    }
    if (o.has("steinberg_pairs")) {
        const json& ps = o.array("steinberg_pairs");
        for (std::size_t k = 0; k < ps.size(); ++k) {
            Obj p(ps[k], item(o.at("steinberg_pairs"), k), {"f", "one_minus_f"});
            reg.add_steinberg_pair(function(p.req("f"), p.at("f")), function(p.req("one_minus_f"), p.at("one_minus_f")));
        }
    }

    // a principal divisor on a curve has degree zero
    for (const auto& [name, fac] : reg.factors()) {
        const auto& var = reg.variety(fac.variety);
        if (var.dim != 1) continue;
        long degree = 0;
        for (const auto& c : var.components) degree += reg.multiplicity(name, c);
        if (degree != 0)
            bad(where, "factor '" + name + "' on curve '" + var.name + "' has divisor degree " + std::to_string(degree));
    }
}

void check_function(const milnor::FactorRegistry& reg, const FactoredFunction& f, const std::string& where) {
    if (!reg.has_variety(f.ambient)) bad(where, "variety '" + f.ambient + "' is not registered");
    for (const auto& [name, e] : f.exponents) {
        if (!reg.has_factor(name)) bad(where, "factor '" + name + "' is not registered");
        if (reg.factor(name).variety != f.ambient) bad(where, "factor '" + name + "' does not live on '" + f.ambient + "'");
    }
}

void check_symbol(const milnor::FactorRegistry& reg, const milnor::MilnorSymbol& s, const std::string& where) {
    for (const auto& e : s.entries) {
        check_function(reg, e, where);
        if (e.ambient != s.base) bad(where, "entry on '" + e.ambient + "' in a symbol over '" + s.base + "'");
    }
}

SymbolGolden golden(const json& j, const std::string& where, bool higher) {
    Obj o(j, where, higher ? std::initializer_list<std::string_view>{"id", "symbol", "component", "expected", "mode"}
                           : std::initializer_list<std::string_view>{"id", "symbol", "expected", "mode"});
    SymbolGolden g;
    g.id = o.str("id");
    g.symbol = symbol(o.req("symbol"), o.at("symbol"));
    if (higher) g.component = o.str("component");
    g.expected = boundary(o.req("expected"), o.at("expected"));
    if (o.has("mode")) g.mode = torsion(o.str("mode"), o.at("mode"));
    return g;
}

CupProductInstance cup_product(const json& j, const std::string& where) {
    Obj o(j, where, {"id", "ambient", "lattices", "terms"});
    CupProductInstance c;
    c.id = o.str("id");
    c.ambient = ambient(o.req("ambient"), o.at("ambient"));
    const json& ls = o.array("lattices");
    for (std::size_t k = 0; k < ls.size(); ++k) c.lattices.push_back(lattice(ls[k], item(o.at("lattices"), k)));
    if (c.lattices.size() != c.ambient.factors.size()) bad(o.at("lattices"), "one lattice per factor expected");
    const json& ts = o.array("terms");
    for (std::size_t k = 0; k < ts.size(); ++k) {
        Obj t(ts[k], item(o.at("terms"), k),
              {"coefficient", "variety", "section", "factor", "divisor", "offset", "points", "intersection_dimension"});
        CupProductTerm term;
        term.coefficient = t.integer("coefficient");
        term.variety = descriptor(t.req("variety"), t.at("variety"));
        term.section = t.str("section");
        long factor = t.integer("factor");
        if (factor < 1 || static_cast<std::size_t>(factor) > c.ambient.factors.size())
            bad(t.at("factor"), "factor index out of range");
        term.factor = static_cast<std::size_t>(factor - 1);
        term.divisor = analytic_divisor(t.req("divisor"), t.at("divisor"));
        if (t.has("offset")) term.offset = t.number("offset");
        const json& ps = t.array("points");
        for (std::size_t m = 0; m < ps.size(); ++m) {
            const std::string w = item(t.at("points"), m);
            if (!ps[m].is_array() || ps[m].size() != c.ambient.factors.size()) bad(w, "expected one coordinate per factor");
            quad::Point p;
            for (std::size_t n = 0; n < ps[m].size(); ++n) p.push_back(complex_number(ps[m][n], item(w, n)));
            term.meets.points.push_back(std::move(p));
        }
        if (t.has("intersection_dimension")) term.meets.dimension = static_cast<int>(t.integer("intersection_dimension"));
        c.terms.push_back(std::move(term));
    }
    return c;
}

HarmonicityInstance harmonicity(const json& j, const std::string& where) {
    Obj o(j, where, {"id", "lattice", "divisor", "grid", "steps"});
    HarmonicityInstance h;
    h.id = o.str("id");
    h.lattice = lattice(o.req("lattice"), o.at("lattice"));
    h.divisor = analytic_divisor(o.req("divisor"), o.at("divisor"));
    Obj g(o.req("grid"), o.at("grid"), {"na", "nb"});
    h.na = static_cast<int>(g.integer("na"));
    h.nb = static_cast<int>(g.integer("nb"));
    if (h.na < 1 || h.nb < 1) bad(o.at("grid"), "grid needs at least one point per direction");
    for (const auto& s : o.array("steps")) {
        if (!s.is_number() || !(s.get<double>() > 0)) bad(o.at("steps"), "steps must be positive numbers");
        h.steps.push_back(s.get<double>());
    }
    return h;
}

Corpus decode(const json& j) {
    Obj o(j, "corpus",
          {"schema_version", "name", "registry", "tame", "higher_tame", "boundary_squared", "reciprocity", "completions",
           "cup_products", "harmonicity"});
    if (o.integer("schema_version") != schema_version)
        bad(o.at("schema_version"), "unsupported version " + std::to_string(o.integer("schema_version")));
    Corpus c;
    c.name = o.str("name");
    if (o.has("registry")) load_registry(c.registry, o.req("registry"), o.at("registry"));

    auto each = [&](const std::string& key, auto&& fn) {
        if (!o.has(key)) return;
        const json& a = o.array(key);
        for (std::size_t k = 0; k < a.size(); ++k) fn(a[k], item(o.at(key), k));
    };
    each("tame", [&](const json& e, const std::string& w) {
        c.tame.push_back(golden(e, w, false));
        check_symbol(c.registry, c.tame.back().symbol, w);
    });
    each("higher_tame", [&](const json& e, const std::string& w) {
        c.higher_tame.push_back(golden(e, w, true));
        check_symbol(c.registry, c.higher_tame.back().symbol, w);
        if (!c.registry.has_variety(*c.higher_tame.back().component))
            bad(w, "component '" + *c.higher_tame.back().component + "' is not registered");
    });
    each("boundary_squared", [&](const json& e, const std::string& w) {
        Obj b(e, w, {"id", "symbol", "mode"});
        BoundaryCase bc{b.str("id"), symbol(b.req("symbol"), b.at("symbol"))};
        if (b.has("mode")) bc.mode = torsion(b.str("mode"), b.at("mode"));
        check_symbol(c.registry, bc.symbol, w);
        c.boundary_squared.push_back(std::move(bc));
    });
    each("reciprocity", [&](const json& e, const std::string& w) {
        Obj r(e, w, {"id", "curve", "f", "g"});
        ReciprocityCase rc{r.str("id"), r.str("curve"), function(r.req("f"), r.at("f")), function(r.req("g"), r.at("g"))};
        check_function(c.registry, rc.f, r.at("f"));
        check_function(c.registry, rc.g, r.at("g"));
        if (rc.f.ambient != rc.curve || rc.g.ambient != rc.curve) bad(w, "functions do not live on '" + rc.curve + "'");
        c.reciprocity.push_back(std::move(rc));
    });
    each("completions", [&](const json& e, const std::string& w) {
        Obj i(e, w, {"id", "method", "ambient", "input", "facts", "form"});
        CompletionInstance ci;
        ci.id = i.str("id");
        ci.method = i.str("method");
        if (ci.method != "product" && ci.method != "hyperplane") bad(i.at("method"), "unknown method '" + ci.method + "'");
        ci.ambient = ambient(i.req("ambient"), i.at("ambient"));
        ci.input = precycle(i.req("input"), i.at("input"));
        if (i.has("facts")) {
            const json& fs = i.array("facts");
            for (std::size_t k = 0; k < fs.size(); ++k) ci.facts.add(fact(fs[k], item(i.at("facts"), k)));
        }
        if (i.has("form")) {
            const json& fs = i.array("form");
            for (std::size_t k = 0; k < fs.size(); ++k) {
                Obj f(fs[k], item(i.at("form"), k), {"kind", "factors"});
                FormFactor ff{f.str("kind")};
                if (ff.kind != "eta1" && ff.kind != "eta2") bad(f.at("kind"), "unknown form '" + ff.kind + "'");
                const json& ab = f.array("factors");
                if (ab.size() != 2 || !ab[0].is_number_unsigned() || !ab[1].is_number_unsigned())
                    bad(f.at("factors"), "expected two factor indices");
                ff.a = ab[0].get<std::size_t>();
                ff.b = ab[1].get<std::size_t>();
                if (ff.a < 1 || ff.b < 1 || ff.a > ci.ambient.factors.size() || ff.b > ci.ambient.factors.size())
                    bad(f.at("factors"), "factor index out of range");
                ci.form.push_back(ff);
            }
        }
        c.completions.push_back(std::move(ci));
    });
    each("cup_products", [&](const json& e, const std::string& w) { c.cup_products.push_back(cup_product(e, w)); });
    each("harmonicity", [&](const json& e, const std::string& w) { c.harmonicity.push_back(harmonicity(e, w)); });

    std::set<std::string> ids;
    auto unique = [&](const std::string& id) {
        if (!ids.insert(id).second) bad("corpus", "duplicate id '" + id + "'");
    };
    for (const auto& g : c.tame) unique(g.id);
    for (const auto& g : c.higher_tame) unique(g.id);
    for (const auto& b : c.boundary_squared) unique(b.id);
    for (const auto& r : c.reciprocity) unique(r.id);
    for (const auto& i : c.completions) unique(i.id);
    for (const auto& i : c.cup_products) unique(i.id);
    for (const auto& i : c.harmonicity) unique(i.id);
    return c;
}

}  // namespace

namespace detail {

json encode(const FactoredFunction& f) {
    json j = {{"ambient", f.ambient}};
    if (!f.constant.is_one()) j["constant"] = f.constant.str();
    if (!f.exponents.empty()) j["factors"] = f.exponents;
    if (!f.bundle.empty()) j["bundle"] = f.bundle;
    return j;
}

json encode(const std::vector<FactoredFunction>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(encode(f));
    return a;
}

json encode(const milnor::MilnorSymbol& s) { return {{"base", s.base}, {"entries", encode(s.entries)}}; }

json encode(const milnor::SymbolBoundary& b) {
    json a = json::array();
    for (const auto& t : b.terms) {
        json e = {{"component", t.component}, {"entries", encode(t.symbol.entries)}};
        if (t.exponent != 1) e["exponent"] = t.exponent;
        a.push_back(std::move(e));
    }
    return a;
}

std::string torsion_name(milnor::TorsionMode m) {
    return m == milnor::TorsionMode::exact ? "exact" : "modulo_two_torsion";
}

json encode(const cycles::SubvarietyDescriptor& d) {
    json a = json::array();
    for (const auto& s : d.slots()) {
        switch (s.kind) {
            case cycles::SlotKind::full: a.push_back({{"full", s.label}}); break;
            case cycles::SlotKind::point: a.push_back({{"point", s.label}}); break;
            case cycles::SlotKind::group: {
                json g = {{"group", s.label}, {"dim", s.group_dim}};
                if (!s.varies) g["varies"] = false;
                a.push_back(std::move(g));
                break;
            }
        }
    }
    return a;
}

json encode(const cycles::FormalDivisor& d) {
    json a = json::array();
    for (const auto& [c, n] : d) a.push_back({{"component", encode(c)}, {"multiplicity", n}});
    return a;
}

json encode(const cycles::Precycle& p) {
    return {{"section", encode(p.section)}, {"variety", encode(p.variety)}, {"divisor", encode(p.divisor)}};
}

json encode(const cycles::RegistryFact& f) {
    json j = {{"kind", cycles::fact_kind_name(f.kind)}, {"subjects", f.subjects}};
    if (f.carrier) j["carrier"] = encode(*f.carrier);
    if (!f.hvc.empty()) j["hvc"] = encode(f.hvc);
    if (f.base_point) j["base_point"] = *f.base_point;
    return j;
}

json encode(const cycles::Ambient& a) { return {{"name", a.name}, {"factors", a.factors}}; }

json encode(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json encode(const elliptic::Lattice& l) { return {{"w1", encode(l.w1)}, {"w2", encode(l.w2)}}; }

json encode(const elliptic::AnalyticDivisor& d) {
    json a = json::array();
    for (const auto& [z, n] : d) a.push_back({{"at", encode(z)}, {"multiplicity", n}});
    return a;
}

json encode(const milnor::FactorRegistry& reg) {
    json vs = json::array(), fs = json::array(), ms = json::array(), rs = json::array(), ps = json::array();
    for (const auto& [name, v] : reg.varieties()) {
        json e = {{"name", name}, {"dim", v.dim}};
        if (!v.coordinates.empty()) e["coordinates"] = v.coordinates;
        if (!v.components.empty()) e["components"] = v.components;
        if (v.free_coordinates) e["free_coordinates"] = true;
        vs.push_back(std::move(e));
    }
    for (const auto& [name, f] : reg.factors()) {
        json e = {{"name", name}, {"variety", f.variety}};
        if (f.polynomial) e["polynomial"] = f.polynomial->str();
        fs.push_back(std::move(e));
    }
    for (const auto& [key, m] : reg.multiplicities())
        if (m != 0) ms.push_back({{"factor", key.first}, {"component", key.second}, {"value", m}});
    for (const auto& [key, f] : reg.restrictions())
        rs.push_back({{"factor", key.first}, {"component", key.second}, {"value", encode(f)}});
    for (const auto& p : reg.steinberg_pairs()) ps.push_back({{"f", encode(p.f)}, {"one_minus_f", encode(p.one_minus_f)}});
    json j = {{"varieties", vs}, {"factors", fs}, {"multiplicities", ms}, {"restrictions", rs}};
    if (!ps.empty()) j["steinberg_pairs"] = ps;
    return j;
}

}  // namespace detail

namespace {

using detail::encode;
using detail::torsion_name;

json encode(const Corpus& c) {
    json j = {{"schema_version", schema_version}, {"name", c.name}};
    if (!c.registry.varieties().empty()) j["registry"] = encode(c.registry);
    auto goldens = [](const std::vector<SymbolGolden>& gs) {
        json a = json::array();
        for (const auto& g : gs) {
            json e = {{"id", g.id}, {"symbol", encode(g.symbol)}, {"expected", encode(g.expected)},
                      {"mode", torsion_name(g.mode)}};
            if (g.component) e["component"] = *g.component;
            a.push_back(std::move(e));
        }
        return a;
    };
    if (!c.tame.empty()) j["tame"] = goldens(c.tame);
    if (!c.higher_tame.empty()) j["higher_tame"] = goldens(c.higher_tame);
    if (!c.boundary_squared.empty()) {
        json a = json::array();
        for (const auto& b : c.boundary_squared)
            a.push_back({{"id", b.id}, {"symbol", encode(b.symbol)}, {"mode", torsion_name(b.mode)}});
        j["boundary_squared"] = a;
    }
    if (!c.reciprocity.empty()) {
        json a = json::array();
        for (const auto& r : c.reciprocity)
            a.push_back({{"id", r.id}, {"curve", r.curve}, {"f", encode(r.f)}, {"g", encode(r.g)}});
        j["reciprocity"] = a;
    }
    if (!c.completions.empty()) {
        json a = json::array();
        for (const auto& i : c.completions) {
            json facts = json::array();
            for (const auto& f : i.facts.facts()) facts.push_back(encode(f));
            json e = {{"id", i.id}, {"method", i.method}, {"ambient", encode(i.ambient)}, {"input", encode(i.input)},
                      {"facts", facts}};
            if (!i.form.empty()) {
                json form = json::array();
                for (const auto& f : i.form) form.push_back({{"kind", f.kind}, {"factors", {f.a, f.b}}});
                e["form"] = form;
            }
            a.push_back(std::move(e));
        }
        j["completions"] = a;
    }
    if (!c.cup_products.empty()) {
        json a = json::array();
        for (const auto& i : c.cup_products) {
            json lattices = json::array(), terms = json::array();
            for (const auto& l : i.lattices) lattices.push_back(encode(l));
            for (const auto& t : i.terms) {
                json points = json::array();
                for (const auto& p : t.meets.points) {
                    json q = json::array();
                    for (auto z : p) q.push_back(encode(z));
                    points.push_back(std::move(q));
                }
                json e = {{"coefficient", t.coefficient}, {"variety", encode(t.variety)}, {"section", t.section},
                          {"factor", t.factor + 1}, {"divisor", encode(t.divisor)}, {"points", points}};
                if (t.offset != 0) e["offset"] = t.offset;
                if (t.meets.dimension != 0) e["intersection_dimension"] = t.meets.dimension;
                terms.push_back(std::move(e));
            }
            a.push_back({{"id", i.id}, {"ambient", encode(i.ambient)}, {"lattices", lattices}, {"terms", terms}});
        }
        j["cup_products"] = a;
    }
    if (!c.harmonicity.empty()) {
        json a = json::array();
        for (const auto& h : c.harmonicity)
            a.push_back({{"id", h.id}, {"lattice", encode(h.lattice)}, {"divisor", encode(h.divisor)},
                         {"grid", {{"na", h.na}, {"nb", h.nb}}}, {"steps", h.steps}});
        j["harmonicity"] = a;
    }
    return j;
}

}  // namespace

cycles::FormDescriptor CompletionInstance::form_descriptor() const {
    const std::size_t n = ambient.factors.size();
    cycles::FormDescriptor out(n);
    for (std::size_t k = 0; k < form.size(); ++k) {
        const auto& f = form[k];
        auto piece = f.kind == "eta1" ? cycles::FormDescriptor::eta1(n, f.a - 1, f.b - 1)
                                      : cycles::FormDescriptor::eta2(n, f.a - 1, f.b - 1);
        out = k == 0 ? piece : out.wedge(piece);
    }
    return out;
}

cycles::Ledger CupProductInstance::ledger() const {
    cycles::Ledger l(ambient);
    for (const auto& t : terms) l.add(t.coefficient, {FactoredFunction::factor(t.variety.name(), t.section), t.variety, {}});
    return l;
}

const CompletionInstance& Corpus::completion(const std::string& id) const {
    for (const auto& c : completions)
        if (c.id == id) return c;
    fail(ErrorCode::invalid_argument, "corpus '" + name + "' has no completion instance '" + id + "'");
}

Corpus parse_corpus(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::schema_invalid, std::string("not valid JSON: ") + e.what());
    }
    try {
        return decode(j);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::schema_invalid) throw;
        fail(ErrorCode::schema_invalid, e.what());
    } catch (const json::exception& e) {
        fail(ErrorCode::schema_invalid, e.what());
    }
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::schema_invalid, "cannot read corpus '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

std::string write_corpus(const Corpus& corpus) { return encode(corpus).dump(1) + "\n"; }

}  // namespace treg::report

#include "treg/milnor/normal_form.hpp"

#include <sstream>
#include <variant>

#include "treg/exact/gaussian_factor.hpp"

namespace treg::milnor {

namespace {

// A factor name or a constant.
using Atom = std::variant<std::string, GaussRational>;

bool is_const(const Atom& a) { return std::holds_alternative<GaussRational>(a); }

class Accumulator {
public:
    explicit Accumulator(TorsionMode mode) : mode_(mode) {}

    void add(const std::string& component, std::vector<Atom> atoms, long coef) {
        if (coef == 0) return;
        ComponentClass& cls = out_[component];
        long sign = 1;
        for (const Atom& a : atoms)
            if (is_const(a)) {
                const auto& c = std::get<GaussRational>(a);
                if (c.is_one()) return;
                if (c.is_minus_one() && mode_ == TorsionMode::modulo_two_torsion) return;
            }
        // constants to the front, both groups sorted; track the permutation sign
        for (std::size_t i = 1; i < atoms.size(); ++i)
            for (std::size_t j = i; j > 0 && before(atoms[j], atoms[j - 1]); --j) {
                std::swap(atoms[j], atoms[j - 1]);
                sign = -sign;
            }
        for (std::size_t i = 1; i < atoms.size(); ++i)
            if (atoms[i] == atoms[i - 1]) {
                if (is_const(atoms[i]) && std::get<GaussRational>(atoms[i]).is_minus_one()) continue;
                if (mode_ == TorsionMode::modulo_two_torsion) return;
                // {a, a} = {a, -1}
                atoms[i] = GaussRational(-1);
                add(component, std::move(atoms), coef * sign);
                return;
            }
        std::vector<std::string> factors;
        std::vector<GaussRational> consts;
        for (const Atom& a : atoms) {
            if (is_const(a)) consts.push_back(std::get<GaussRational>(a));
            else factors.push_back(std::get<std::string>(a));
        }
        long k = coef * sign;
        if (consts.empty()) {
            cls.factor_terms[factors] += k;
        } else if (consts.size() == 1) {
            auto [it, inserted] = cls.scaled.try_emplace(factors, GaussRational(1));
            it->second *= consts.front().pow(k);
        } else {
            std::vector<std::string> key;
            for (const auto& c : consts) key.push_back("#" + c.str());
            key.insert(key.end(), factors.begin(), factors.end());
            cls.constant_terms[key] += k;
        }
    }

    NormalForm finish() {
        for (auto it = out_.begin(); it != out_.end();) {
            ComponentClass& c = it->second;
            std::erase_if(c.factor_terms, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(c.constant_terms, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(c.scaled, [this](const auto& kv) {
                return kv.second.is_one() || (mode_ == TorsionMode::modulo_two_torsion && kv.second.is_minus_one());
            });
            if (c.empty()) it = out_.erase(it);
            else ++it;
        }
        return std::move(out_);
    }

private:
    static bool before(const Atom& a, const Atom& b) {
        if (is_const(a) != is_const(b)) return is_const(a);
        if (is_const(a)) return std::get<GaussRational>(a) < std::get<GaussRational>(b);
        return std::get<std::string>(a) < std::get<std::string>(b);
    }

    TorsionMode mode_;
    NormalForm out_;
};

std::vector<std::pair<Atom, long>> atoms_of(const FactoredFunction& f, TorsionMode mode) {
    std::vector<std::pair<Atom, long>> out;
    if (mode == TorsionMode::modulo_two_torsion) {
        // symbols with a root of unity entry are torsion
        for (const auto& [p, e] : exact::factor_gaussian(f.constant).primes) out.emplace_back(p, e);
    } else if (!f.constant.is_one()) {
        out.emplace_back(f.constant, 1);
    }
    for (const auto& [name, e] : f.exponents) out.emplace_back(name, e);
    return out;
}

void expand(Accumulator& acc, const BoundaryTerm& t, std::size_t pos, std::vector<Atom>& chosen, long coef,
            const std::vector<std::vector<std::pair<Atom, long>>>& lists) {
    if (pos == lists.size()) {
        acc.add(t.component, chosen, coef);
        return;
    }
    for (const auto& [atom, m] : lists[pos]) {
        chosen.push_back(atom);
        expand(acc, t, pos + 1, chosen, coef * m, lists);
        chosen.pop_back();
    }
}

}  // namespace

NormalForm normalize(const SymbolBoundary& b, TorsionMode mode) {
    Accumulator acc(mode);
    NormalForm degrees;
    for (const BoundaryTerm& t : b.terms) {
        if (t.exponent == 0) continue;
        if (t.symbol.entries.empty()) {
            degrees[t.component].degree += t.exponent;
            continue;
        }
        std::vector<std::vector<std::pair<Atom, long>>> lists;
        for (const auto& e : t.symbol.entries) lists.push_back(atoms_of(e, mode));
        std::vector<Atom> chosen;
        expand(acc, t, 0, chosen, t.exponent, lists);
    }
    NormalForm out = acc.finish();
    for (const auto& [comp, cls] : degrees)
        if (cls.degree != 0) out[comp].degree += cls.degree;
    return out;
}

bool is_zero(const SymbolBoundary& b, TorsionMode mode) { return normalize(b, mode).empty(); }

std::string describe(const NormalForm& nf) {
    if (nf.empty()) return "0";
    std::ostringstream os;
    for (const auto& [comp, cls] : nf) {
        os << comp << ":";
        if (cls.degree) os << " " << cls.degree;
        for (const auto& [k, v] : cls.factor_terms) {
            os << " " << v << "{";
            for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
            os << "}";
        }
        for (const auto& [k, v] : cls.scaled) {
            os << " {" << v.str();
            for (const auto& f : k) os << "," << f;
            os << "}";
        }
        for (const auto& [k, v] : cls.constant_terms) {
            os << " " << v << "{";
            for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
            os << "}";
        }
        os << ";";
    }
    return os.str();
}

}  // namespace treg::milnor

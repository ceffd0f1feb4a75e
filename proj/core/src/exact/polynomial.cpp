#include "treg/exact/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "treg/error.hpp"

namespace treg::exact {

Polynomial Polynomial::constant(const GaussRational& c, std::vector<std::string> variables) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t index, std::vector<std::string> variables) {
    Polynomial p(std::move(variables));
    Monomial m(p.vars_.size(), 0);
    m.at(index) = 1;
    p.add_term(m, GaussRational(1));
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Monomial& m, const GaussRational& c) {
    if (m.size() != vars_.size()) fail(ErrorCode::invalid_argument, "monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (vars_ != o.vars_) fail(ErrorCode::invalid_argument, "polynomials over different variables");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            out.add_term(m, ca * cb);
        }
    return out;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial out = constant(GaussRational(1), vars_);
    for (unsigned k = 0; k < n; ++k) out = out * *this;
    return out;
}

GaussRational Polynomial::evaluate(const std::vector<GaussRational>& point) const {
    if (point.size() != vars_.size()) fail(ErrorCode::invalid_argument, "point arity mismatch");
    return evaluate_in<GaussRational>(point, [](const GaussRational& c) { return c; });
}

std::complex<double> Polynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != vars_.size()) fail(ErrorCode::invalid_argument, "point arity mismatch");
    std::complex<double> acc = 0;
    for (const auto& [mono, coef] : terms_) {
        std::complex<double> term = coef.to_complex();
        for (std::size_t k = 0; k < mono.size(); ++k)
            if (mono[k] > 0) term *= std::pow(point[k], mono[k]);
        acc += term;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coef] = *it;
        std::string factors;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (mono[k] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[k];
            if (mono[k] > 1) factors += "^" + std::to_string(mono[k]);
        }
        std::string c = coef.str();
        bool compound = !coef.is_real() && sgn(coef.re()) != 0;
        if (!first) os << " + ";
        if (factors.empty()) os << (compound ? "(" + c + ")" : c);
        else if (coef.is_one()) os << factors;
        else if (coef.is_minus_one()) os << "-" << factors;
        else os << (compound ? "(" + c + ")" : c) << "*" << factors;
        first = false;
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::schema_invalid, "polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (eat('*')) acc = acc * unary();
            else if (eat('/')) {
                Polynomial d = unary();
                if (d.total_degree() != 0) error("division by a non-constant");
                acc = acc * Polynomial::constant(d.terms().begin()->second.inverse(), vars_);
            } else return acc;
        }
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class v(s_.substr(start, pos_ - start), 10);
            return Polynomial::constant(GaussRational(v), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it != vars_.end()) return Polynomial::variable(static_cast<std::size_t>(it - vars_.begin()), vars_);
            if (name == "i") return Polynomial::constant(GaussRational::i(), vars_);
            error("unknown variable '" + name + "'");
        }
        error(std::string("unexpected character '") + c + "'");
    }

    std::string s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

}  // namespace treg::exact

#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "treg/exact/gauss_rational.hpp"

namespace treg::exact {

// Sparse multivariate polynomial over Q(i) in a fixed, named variable list.
class Polynomial {
public:
    using Monomial = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    // Parses expressions such as "x^3 - 2*x*y + (1/2+i)*y" over the given variables.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& variables);
    static Polynomial constant(const GaussRational& c, std::vector<std::string> variables);
    static Polynomial variable(std::size_t index, std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Monomial, GaussRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Monomial& m, const GaussRational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(unsigned n) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    GaussRational evaluate(const std::vector<GaussRational>& point) const;
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    // Generic evaluation over any commutative ring R that can be built from a GaussRational.
    template <class R, class Lift>
    R evaluate_in(const std::vector<R>& point, Lift lift) const {
        R acc = lift(GaussRational(0));
        for (const auto& [mono, coef] : terms_) {
            R term = lift(coef);
            for (std::size_t k = 0; k < mono.size(); ++k)
                for (int e = 0; e < mono[k]; ++e) term = term * point[k];
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const;

private:
    void check_compatible(const Polynomial& o) const;

    std::vector<std::string> vars_;
    std::map<Monomial, GaussRational> terms_;
};

}  // namespace treg::exact

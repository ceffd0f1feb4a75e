#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "treg/cycles/descriptor.hpp"

namespace treg::cycles {

// 1-form legs carried by one factor: dz_j, dz̄_j or both.
enum class Leg : unsigned { none = 0, dz = 1, dzbar = 2, both = 3 };

struct FormTerm {
    std::complex<double> coefficient;
    std::vector<Leg> legs;  // one per factor, in the canonical order dz_1, dz̄_1, dz_2, ...
};

// Constant-coefficient differential form on a product of curves, written in the
// holomorphic 1-forms omega_j = dx_j / y_j = dz_j of each factor.
class FormDescriptor {
public:
    explicit FormDescriptor(std::size_t factors = 0) : factors_(factors) {}

    static FormDescriptor omega(std::size_t factors, std::size_t j);
    static FormDescriptor omega_bar(std::size_t factors, std::size_t j);
    // omega_a ^ conj(omega_b) + conj(omega_a) ^ omega_b
    static FormDescriptor eta1(std::size_t factors, std::size_t a, std::size_t b);
    // i (omega_a ^ conj(omega_b) - conj(omega_a) ^ omega_b)
    static FormDescriptor eta2(std::size_t factors, std::size_t a, std::size_t b);

    std::size_t factor_count() const { return factors_; }
    const std::vector<FormTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Throws invalid-argument when the result would mix bidegrees.
    FormDescriptor operator+(const FormDescriptor& o) const;
    FormDescriptor operator-(const FormDescriptor& o) const { return *this + o * std::complex<double>(-1); }
    FormDescriptor operator*(std::complex<double> c) const;
    FormDescriptor wedge(const FormDescriptor& o) const;
    FormDescriptor conj() const;

    std::pair<int, int> bidegree() const;
    bool is_real(double eps = 1e-12) const;
    std::string str() const;

private:
    void add_term(const std::vector<Leg>& legs, std::complex<double> c);
    std::size_t factors_;
    std::vector<FormTerm> terms_;
};

// True iff every term dies on V: a leg on a point slot or a non-varying group coordinate,
// or more dz (or dz̄) legs on a group than its dimension.
bool restriction_vanishes(const FormDescriptor& form, const SubvarietyDescriptor& v);

}  // namespace treg::cycles

#pragma once

#include <optional>
#include <vector>

#include "treg/exact/gauss_rational.hpp"

namespace treg::exact {

// Truncated Laurent series  sum_k c_k t^(order + k) + O(t^(order + precision)).
class Laurent {
public:
    Laurent() = default;
    Laurent(int order, std::vector<GaussRational> coeffs);

    static Laurent constant(const GaussRational& c, int precision);
    static Laurent monomial(const GaussRational& c, int exponent, int precision);

    int order() const { return order_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }
    // Absolute truncation exponent.
    int known_until() const { return order_ + precision(); }
    const std::vector<GaussRational>& coeffs() const { return coeffs_; }
    GaussRational coefficient(int exponent) const;

    // Lowest exponent with a nonzero coefficient, if any is known.
    std::optional<int> valuation() const;
    // Coefficient at the valuation; undefined for an all-zero series.
    GaussRational leading() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent inverse() const;
    Laurent pow(int n) const;
    Laurent truncated(int until) const;

private:
    void normalize();

    int order_ = 0;
    std::vector<GaussRational> coeffs_;
};

}  // namespace treg::exact

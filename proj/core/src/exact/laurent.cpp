#include "treg/exact/laurent.hpp"

#include <algorithm>

#include "treg/error.hpp"

namespace treg::exact {

Laurent::Laurent(int order, std::vector<GaussRational> coeffs) : order_(order), coeffs_(std::move(coeffs)) { normalize(); }

Laurent Laurent::constant(const GaussRational& c, int precision) { return monomial(c, 0, precision); }

Laurent Laurent::monomial(const GaussRational& c, int exponent, int precision) {
    std::vector<GaussRational> v(static_cast<std::size_t>(precision));
    if (precision > 0) v[0] = c;
    return {exponent, std::move(v)};
}

void Laurent::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        // keep the known range; everything is zero so far
        order_ += static_cast<int>(coeffs_.size());
        coeffs_.clear();
        return;
    }
    order_ += static_cast<int>(lead);
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
}

GaussRational Laurent::coefficient(int exponent) const {
    int k = exponent - order_;
    if (k < 0) return GaussRational(0);
    if (k >= precision()) fail(ErrorCode::invalid_argument, "coefficient beyond series precision");
    return coeffs_[static_cast<std::size_t>(k)];
}

std::optional<int> Laurent::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return order_;
}

GaussRational Laurent::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::invalid_argument, "leading coefficient of a series known to be zero");
    return coeffs_.front();
}

Laurent Laurent::truncated(int until) const {
    Laurent out = *this;
    int keep = std::max(0, until - order_);
    if (keep < precision()) out.coeffs_.resize(static_cast<std::size_t>(keep));
    return out;
}

Laurent Laurent::operator+(const Laurent& o) const {
    int lo = std::min(order_, o.order_);
    int hi = std::min(known_until(), o.known_until());
    std::vector<GaussRational> v(static_cast<std::size_t>(std::max(0, hi - lo)));
    for (int e = lo; e < hi; ++e) {
        GaussRational s(0);
        if (e >= order_) s += coeffs_[static_cast<std::size_t>(e - order_)];
        if (e >= o.order_) s += o.coeffs_[static_cast<std::size_t>(e - o.order_)];
        v[static_cast<std::size_t>(e - lo)] = s;
    }
    return {lo, std::move(v)};
}

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    int ord = order_ + o.order_;
    int n = std::min(precision(), o.precision());
    // a zero series still carries information: O(t^known_until)
    if (coeffs_.empty() || o.coeffs_.empty()) {
        int until = std::min(known_until() + o.order_, o.known_until() + order_);
        return {until, {}};
    }
    std::vector<GaussRational> v(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; a + b < n; ++b)
            v[static_cast<std::size_t>(a + b)] += coeffs_[static_cast<std::size_t>(a)] * o.coeffs_[static_cast<std::size_t>(b)];
    return {ord, std::move(v)};
}

Laurent Laurent::inverse() const {
    if (coeffs_.empty()) fail(ErrorCode::invalid_argument, "inverse of a series with unknown leading term");
    int n = precision();
    std::vector<GaussRational> v(static_cast<std::size_t>(n));
    GaussRational inv0 = coeffs_[0].inverse();
    v[0] = inv0;
    for (int k = 1; k < n; ++k) {
        GaussRational s(0);
        for (int j = 1; j <= k; ++j) s += coeffs_[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(k - j)];
        v[static_cast<std::size_t>(k)] = -s * inv0;
    }
    return {-order_, std::move(v)};
}

Laurent Laurent::pow(int n) const {
    Laurent base = n < 0 ? inverse() : *this;
    int e = n < 0 ? -n : n;
    Laurent out = constant(GaussRational(1), precision());
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
}

}  // namespace treg::exact

#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "treg/cycles/ledger.hpp"
#include "treg/elliptic/flat_norm.hpp"
#include "treg/milnor/registry.hpp"

namespace treg::quad {

using Point = std::vector<std::complex<double>>;

// log of the norm of one ledger term's section, with a test for its divisor support.
struct SectionNorm {
    std::function<double(const Point&)> log_norm;
    std::function<bool(const Point&)> meets_support;
};

// log|f| for a rational function; the support is where a factor with nonzero exponent vanishes.
SectionNorm rational_norm(const milnor::FactorRegistry& reg, milnor::FactoredFunction f);
// Flat log norm read off coordinate `coordinate` of the point; `min_distance` bounds the support test.
SectionNorm flat_norm(std::shared_ptr<const elliptic::FlatNormField> field, std::size_t coordinate = 0,
                      double min_distance = 1e-9);

// Z_i meet D in `points`; dimension > 0 marks an improper intersection.
struct Intersection {
    std::vector<Point> points;
    int dimension = 0;
};

// sum_i r_i sum_{P in Z_i . D} log||sigma_i(P)||.
// Throws intersection-meets-support, non-proper-intersection, invalid-argument on size mismatch.
double cup_product_pairing(const cycles::Ledger& ledger, const std::vector<Intersection>& meets,
                           const std::vector<SectionNorm>& norms);

}  // namespace treg::quad

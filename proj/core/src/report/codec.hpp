#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "treg/cycles/facts.hpp"
#include "treg/cycles/ledger.hpp"
#include "treg/elliptic/flat_norm.hpp"
#include "treg/milnor/normal_form.hpp"
#include "treg/milnor/registry.hpp"
#include "treg/milnor/symbol.hpp"

namespace treg::report {

using json = nlohmann::json;

namespace detail {

json encode(const milnor::FactoredFunction& f);
json encode(const std::vector<milnor::FactoredFunction>& fs);
json encode(const milnor::MilnorSymbol& s);
json encode(const milnor::SymbolBoundary& b);
json encode(const cycles::SubvarietyDescriptor& d);
json encode(const cycles::FormalDivisor& d);
json encode(const cycles::Precycle& p);
json encode(const cycles::RegistryFact& f);
json encode(const cycles::Ambient& a);
json encode(std::complex<double> z);
json encode(const elliptic::Lattice& l);
json encode(const elliptic::AnalyticDivisor& d);
json encode(const milnor::FactorRegistry& reg);
std::string torsion_name(milnor::TorsionMode m);

}  // namespace detail

}  // namespace treg::report

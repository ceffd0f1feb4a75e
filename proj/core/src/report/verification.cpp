#include "treg/report/verification.hpp"

#include <functional>

#include "treg/milnor/tame.hpp"

namespace treg::report {

namespace {

using milnor::normalize;

VerificationReport guarded(std::string id, std::string anchor, std::string gate,
                           const std::function<void(VerificationReport&)>& body) {
    VerificationReport r{std::move(id), std::move(anchor), Status::fail, std::move(gate), {}, {}};
    try {
        body(r);
    } catch (const Error& e) {
        r.status = Status::fail;
        r.detail = e.what();
    }
    return r;
}

void skipped_if_empty(std::vector<VerificationReport>& out, std::size_t before, const std::string& suite,
                      const std::string& anchor) {
    if (out.size() == before) out.push_back({suite, anchor, Status::skipped, "", {}, "corpus has no cases"});
}

void golden_suite(std::vector<VerificationReport>& out, const Corpus& c, const std::vector<SymbolGolden>& goldens,
                  const std::string& suite, const std::string& anchor) {
    const std::size_t before = out.size();
    for (const auto& g : goldens)
        out.push_back(guarded(suite + "/" + g.id, anchor, "normal forms equal", [&](VerificationReport& r) {
            auto actual = g.component                  ? milnor::higher_tame(c.registry, g.symbol, *g.component)
                          : g.symbol.length() == 2 ? milnor::tame_symbol(c.registry, g.symbol)
                                                   : milnor::higher_tame_all(c.registry, g.symbol);
            auto a = normalize(actual, g.mode), e = normalize(g.expected, g.mode);
            r.payload = {{"terms", static_cast<double>(actual.terms.size())},
                         {"components", static_cast<double>(a.size())},
                         {"mismatch", a == e ? 0.0 : 1.0}};
            r.status = a == e ? Status::pass : Status::fail;
            if (a != e) r.detail = "got " + milnor::describe(a) + "; expected " + milnor::describe(e);
        }));
    skipped_if_empty(out, before, suite, anchor);
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "fail";
}

std::vector<VerificationReport> reciprocity_suite(const Corpus& c) {
    std::vector<VerificationReport> out;
    for (const auto& rc : c.reciprocity)
        out.push_back(guarded("reciprocity/" + rc.id, "weil-reciprocity", "product == 1", [&](VerificationReport& r) {
            auto prod = milnor::weil_reciprocity(c.registry, rc.curve, rc.f, rc.g);
            auto z = prod.to_complex();
            r.payload = {{"product_re", z.real()}, {"product_im", z.imag()}};
            r.status = prod.is_one() ? Status::pass : Status::fail;
            if (!prod.is_one()) r.detail = "product is " + prod.str();
        }));
    skipped_if_empty(out, 0, "reciprocity", "weil-reciprocity");
    return out;
}

std::vector<VerificationReport> tame_suites(const Corpus& c) {
    std::vector<VerificationReport> out;
    golden_suite(out, c, c.tame, "tame", "tame-symbol-golden");
    golden_suite(out, c, c.higher_tame, "higher-tame", "higher-tame-golden");
    const std::size_t before = out.size();
    for (const auto& b : c.boundary_squared)
        out.push_back(guarded("boundary-squared/" + b.id, "boundary-squared-zero", "surviving_components == 0",
                              [&](VerificationReport& r) {
                                  auto nf = normalize(milnor::boundary_squared(c.registry, b.symbol), b.mode);
                                  r.payload = {{"length", static_cast<double>(b.symbol.length())},
                                               {"surviving_components", static_cast<double>(nf.size())}};
                                  r.status = nf.empty() ? Status::pass : Status::fail;
                                  if (!nf.empty()) r.detail = milnor::describe(nf);
                              }));
    skipped_if_empty(out, before, "boundary-squared", "boundary-squared-zero");
    auto rec = reciprocity_suite(c);
    out.insert(out.end(), rec.begin(), rec.end());
    return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == Status::fail) return 1;
    return 0;
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::schema_invalid:
        case ErrorCode::invalid_argument: return 2;
        case ErrorCode::missing_registry_fact: return 3;
        default: return 1;
    }
}

}  // namespace treg::report

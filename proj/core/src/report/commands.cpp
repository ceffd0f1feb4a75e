#include "treg/report/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "codec.hpp"
#include "treg/cycles/completion.hpp"
#include "treg/quad/harmonicity.hpp"
#include "treg/quad/monte_carlo.hpp"
#include "treg/quad/quadrature.hpp"
#include "treg/quad/surjectivity.hpp"
#include "treg/report/verification.hpp"

namespace treg::report {

namespace {

using detail::encode;

json encode(const VerificationReport& r, const RunConfig& cfg, const std::optional<std::string>& stamp) {
    json j = {{"check_id", r.check_id},     {"anchor", r.anchor},      {"status", status_name(r.status)},
              {"gate", r.gate},             {"payload", r.payload},    {"config_hash", cfg.hash()},
              {"timestamp", stamp ? json(*stamp) : json(nullptr)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json encode(const quad::QuadratureResult& q, const RunConfig& cfg) {
    return {{"value", q.value},         {"error", q.abs_error_estimate}, {"nodes", q.nodes},
            {"converged", q.converged}, {"method", q.method},            {"config_hash", cfg.hash()}};
}

json encode(const quad::McEstimate& m) {
    return {{"estimate", m.estimate}, {"std_error", m.std_error}, {"samples", m.samples}, {"seed", m.seed},
            {"method", m.method}};
}

CommandResult document(const std::string& command, const RunConfig& cfg, const std::vector<VerificationReport>& reports,
                       json result, const std::string& corpus = {}) {
    auto stamp = report_timestamp();
    json j = {{"schema_version", schema_version},
              {"command", command},
              {"config_hash", cfg.hash()},
              {"timestamp", stamp ? json(*stamp) : json(nullptr)}};
    if (!corpus.empty()) j["corpus"] = corpus;
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(encode(r, cfg, stamp));
    j["reports"] = rs;
    if (!result.is_null()) j["result"] = std::move(result);
    return {exit_code(reports), j.dump(2) + "\n"};
}

std::string case_anchor(const std::string& id) {
    if (id == "eta1-f2" || id == "eta2-f1") return "vanishing-integral";
    if (id == "eta1-f1" || id == "eta2-f2") return "positive-diagonal";
    return "plumbing";
}

VerificationReport check(std::string id, std::string anchor, std::string gate, bool ok,
                         std::map<std::string, double> payload, std::string detail = {}) {
    return {std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(gate), std::move(payload),
            ok ? std::string() : std::move(detail)};
}

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double case_golden(const std::string& id) {
    if (id == "eta1-f2" || id == "eta2-f1") return 0.0;
    if (id == "eta1-f1" || id == "eta2-f2") return 4 * std::numbers::pi;
    if (id == "disk-unit") return std::numbers::pi;
    fail(ErrorCode::invalid_argument, "unknown case '" + id + "'");
}

CommandResult cmd_verify_tame(const std::filesystem::path& path, const RunConfig& cfg) {
    Corpus c = load_corpus(path);
    return document("verify-tame", cfg, tame_suites(c), nullptr, c.name);
}

CommandResult cmd_verify_reciprocity(const std::filesystem::path& path, const RunConfig& cfg) {
    Corpus c = load_corpus(path);
    return document("verify-reciprocity", cfg, reciprocity_suite(c), nullptr, c.name);
}

CommandResult cmd_complete(const std::filesystem::path& path, const std::string& target, const RunConfig& cfg) {
    Corpus corpus = load_corpus(path);
    const CompletionInstance& inst = corpus.completion(target);
    cycles::Completion c = inst.method == "product"
                               ? cycles::complete_on_product(inst.ambient, inst.input, inst.facts)
                               : cycles::complete_hyperplane_precycle(inst.ambient, inst.input, inst.facts);

    json terms = json::array(), log = json::array(), stages = json::array();
    for (const auto& t : c.ledger.terms())
        terms.push_back({{"coefficient", t.coefficient}, {"role", t.role}, {"precycle", encode(t.precycle)}});
    for (const auto& s : c.log)
        log.push_back({{"role", s.role},
                       {"coefficient", s.coefficient},
                       {"section", s.precycle.section.str()},
                       {"variety", s.precycle.variety.name()},
                       {"facts", s.facts}});
    for (const auto& s : c.stages) stages.push_back({{"role", s.role}, {"divisor", encode(s.divisor)}});

    const cycles::FormalDivisor div = cycles::ledger_divisor(c.ledger);
    json result = {{"target", inst.id},
                   {"ledger", {{"ambient", encode(c.ledger.ambient())}, {"terms", terms}}},
                   {"divisor", encode(div)},
                   {"log", log},
                   {"stages", stages}};
    std::vector<VerificationReport> reports{check("completion/" + inst.id, "completion-closure", "divisor_terms == 0",
                                                  div.empty(), {{"divisor_terms", static_cast<double>(div.size())}},
                                                  "left over: " + cycles::str(div))};
    if (!inst.form.empty()) {
        auto keep = cycles::surviving_terms(c.ledger, inst.form_descriptor());
        result["surviving_terms"] = keep;
        bool seed_only = keep.size() == 1 && c.ledger.terms()[keep[0]].role == "seed";
        reports.push_back(check("completion/" + inst.id + "/form-filter", "completion-closure", "only the seed survives",
                                seed_only, {{"surviving_terms", static_cast<double>(keep.size())}}));
    }
    return document("complete", cfg, reports, std::move(result), corpus.name);
}

CommandResult cmd_integrate(const std::string& id, const RunConfig& cfg, bool oracle_only) {
    const double golden = case_golden(id);
    const quad::Integrand2D g = quad::integrand_for_case(id);
    const std::string anchor = case_anchor(id);
    json result = {{"case", id}, {"golden", golden}, {"integrand", g.name}};
    std::vector<VerificationReport> reports;

    quad::McEstimate mc = quad::mc_oracle(g, cfg.mc_seed, cfg.mc_n);
    result["mc"] = encode(mc);
    if (oracle_only) {
        const double gap = std::abs(mc.estimate - golden);
        reports.push_back(check("integrate/" + id + "/oracle", anchor, "|mc - golden| <= 3 std_error", gap <= 3 * mc.std_error,
                                {{"estimate", mc.estimate}, {"std_error", mc.std_error}, {"gap", gap}},
                                "oracle misses the reference value"));
        return document("integrate", cfg, reports, std::move(result));
    }

    quad::QuadratureResult q = quad::integrate_c(g, cfg.tol, cfg.max_depth);
    result["quadrature"] = encode(q, cfg);
    const double gap = std::abs(q.value - golden);
    const double allowed = std::max(cfg.tol, q.abs_error_estimate);
    reports.push_back(check("integrate/" + id + "/quadrature", anchor, "converged and |value - golden| <= max(tol, error)",
                            q.converged && gap <= allowed,
                            {{"value", q.value}, {"error", q.abs_error_estimate}, {"gap", gap}},
                            q.converged ? "value misses the reference" : "quadrature did not converge"));
    if (anchor == "positive-diagonal")
        reports.push_back(check("integrate/" + id + "/sign", anchor, "value > 10 error", q.value > 10 * q.abs_error_estimate,
                                {{"value", q.value}, {"error", q.abs_error_estimate}}, "sign not resolved"));
    const double spread = std::abs(q.value - mc.estimate);
    reports.push_back(check("integrate/" + id + "/oracle", anchor, "|value - mc| <= 3 (std_error + error)",
                            spread <= 3 * (mc.std_error + q.abs_error_estimate),
                            {{"spread", spread}, {"std_error", mc.std_error}}, "quadrature and oracle disagree"));
    return document("integrate", cfg, reports, std::move(result));
}

CommandResult cmd_surjectivity(const RunConfig& cfg, Format format) {
    quad::SurjectivityReport s = quad::surjectivity_report(cfg.surjectivity());
    const int code = s.verdict ? 0 : 1;
    if (format == Format::csv) {
        std::ostringstream os;
        os << "i,j,value,abs_error,bound,nodes,converged,mc_estimate,mc_std_error,oracle_agrees\n";
        for (const auto& row : s.entries)
            for (const auto& e : row)
                os << e.i << "," << e.j << "," << number(e.quad.value) << "," << number(e.quad.abs_error_estimate) << ","
                   << number(e.bound) << "," << e.quad.nodes << "," << (e.quad.converged ? "true" : "false") << ","
                   << number(e.mc.estimate) << "," << number(e.mc.std_error) << ","
                   << (e.oracle_agrees ? "true" : "false") << "\n";
        return {code, os.str()};
    }
    json matrix = json::array();
    for (const auto& row : s.entries) {
        json r = json::array();
        for (const auto& e : row)
            r.push_back({{"i", e.i},
                         {"j", e.j},
                         {"quadrature", encode(e.quad, cfg)},
                         {"mc", encode(e.mc)},
                         {"bound", e.bound},
                         {"oracle_agrees", e.oracle_agrees}});
        matrix.push_back(std::move(r));
    }
    json result = {{"entries", matrix},
                   {"determinant", s.determinant},
                   {"determinant_enclosure", {s.det_lower, s.det_upper}},
                   {"verdict", s.verdict},
                   {"diagnostic", s.diagnostic}};
    std::vector<VerificationReport> reports{check("surjectivity/determinant", "regulator-determinant-nonzero",
                                                  "enclosure excludes 0 and every entry agrees with its oracle", s.verdict,
                                                  {{"determinant", s.determinant},
                                                   {"det_lower", s.det_lower},
                                                   {"det_upper", s.det_upper}},
                                                  s.diagnostic)};
    CommandResult out = document("surjectivity", cfg, reports, std::move(result));
    out.exit_code = code;
    return out;
}

CommandResult cmd_harmonicity(const std::filesystem::path& path, const RunConfig& cfg) {
    Corpus c = load_corpus(path);
    std::vector<VerificationReport> reports;
    json result = json::array();
    for (const auto& h : c.harmonicity) {
        auto engine = std::make_shared<elliptic::WeierstrassEngine>(h.lattice, cfg.lattice_truncation);
        auto field = std::make_shared<elliptic::FlatNormField>(engine, h.divisor);

        // translation by each period, sampled on a half-shifted grid away from the support
        double periodicity = 0;
        for (int k = 0; k < h.na; ++k)
            for (int l = 0; l < h.nb; ++l) {
                elliptic::cplx z = (k + 0.5) / h.na * h.lattice.w1 + (l + 0.5) / h.nb * h.lattice.w2;
                if (field->distance_to_support(z) < 1e-3) continue;
                const double base = (*field)(z);
                periodicity = std::max({periodicity, std::abs((*field)(z + h.lattice.w1) - base),
                                        std::abs((*field)(z + h.lattice.w2) - base)});
            }
        reports.push_back(check("harmonicity/" + h.id + "/periodicity", "flat-norm-harmonic", "max_residual < 1e-8",
                                periodicity < 1e-8, {{"max_residual", periodicity}}, "log norm is not doubly periodic"));

        quad::Grid grid{0, h.lattice.w1, h.lattice.w2, h.na, h.nb};
        auto fit = quad::harmonicity_fit(quad::flat_norm_field(field), grid, h.steps);
        reports.push_back(check("harmonicity/" + h.id + "/laplacian", "flat-norm-harmonic", "|slope - 2| <= 0.1",
                                std::abs(fit.slope - 2) <= 0.1, {{"slope", fit.slope}, {"constant", fit.constant}},
                                "discrete Laplacian does not decay like h^2"));
        json runs = json::array();
        for (const auto& r : fit.runs) runs.push_back({{"h", r.h}, {"max_residual", r.max_residual}, {"points", r.points}});
        result.push_back({{"id", h.id}, {"periodicity_residual", periodicity}, {"runs", runs}, {"slope", fit.slope},
                          {"constant", fit.constant}});
    }
    if (reports.empty())
        reports.push_back({"harmonicity", "flat-norm-harmonic", Status::skipped, "", {}, "corpus has no cases"});
    return document("harmonicity", cfg, reports, std::move(result), c.name);
}

}  // namespace treg::report

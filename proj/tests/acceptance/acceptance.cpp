// One line per acceptance criterion; exit status 0 iff every criterion passes within its time budget.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "treg/cycles/completion.hpp"
#include "treg/error.hpp"
#include "treg/milnor/tame.hpp"
#include "treg/quad/harmonicity.hpp"
#include "treg/quad/monte_carlo.hpp"
#include "treg/quad/pairing.hpp"
#include "treg/quad/quadrature.hpp"
#include "treg/quad/surjectivity.hpp"
#include "treg/report/config.hpp"
#include "treg/report/corpus.hpp"

namespace fs = std::filesystem;
using namespace treg;

namespace {

const fs::path CORPUS = TREG_CORPUS_DIR;

struct Outcome {
    bool ok = false;
    std::string summary;
};

struct Line {
    int id;
    std::string title;
    double budget_s;
    Outcome outcome;
    double seconds;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Line measure(int id, std::string title, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("threw ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {id, std::move(title), budget_s, std::move(o), s};
}

report::Corpus corpus(const std::string& name) { return report::load_corpus(CORPUS / name); }

Outcome tame_golden() {
    auto c = corpus("p1xp1.json");
    for (const auto& g : c.tame) {
        if (g.id != "t-s") continue;
        auto b = milnor::tame_symbol(c.registry, g.symbol);
        bool same = milnor::normalize(b, milnor::TorsionMode::exact) == milnor::normalize(g.expected, milnor::TorsionMode::exact);
        return {same && b.terms.size() == 4,
                fmt("T{t,s}: %zu terms, %s four-term sum", b.terms.size(), same ? "equals" : "differs from")};
    }
    return {false, "golden t-s missing from p1xp1.json"};
}

Outcome reciprocity() {
    std::size_t line = 0, curve = 0, bad = 0;
    for (const char* name : {"p1xp1.json", "elliptic.json"}) {
        auto c = corpus(name);
        for (const auto& r : c.reciprocity) {
            bool one = milnor::weil_reciprocity(c.registry, r.curve, r.f, r.g).is_one();
            bad += !one;
            (r.curve == "P1_z" ? line : curve) += 1;
        }
    }
    return {bad == 0 && line >= 100 && curve >= 100,
            fmt("%zu pairs on P1, %zu on the elliptic curve, %zu products != 1", line, curve, bad)};
}

Outcome boundary_squared() {
    std::size_t n2 = 0, n3 = 0, bad = 0;
    for (const char* name : {"p1xp1.json", "elliptic.json"}) {
        auto c = corpus(name);
        for (const auto& b : c.boundary_squared) {
            bool zero = milnor::normalize(milnor::boundary_squared(c.registry, b.symbol), b.mode).empty();
            bad += !zero;
            (b.symbol.length() == 2 ? n2 : n3) += 1;
        }
    }
    return {bad == 0 && n2 > 0 && n3 > 0, fmt("%zu cases with N=2, %zu with N=3, %zu nonempty", n2, n3, bad)};
}

Outcome completion_closure() {
    auto c = corpus("completion.json");
    std::size_t open = 0, unfiltered = 0;
    for (const auto& inst : c.completions) {
        auto done = inst.method == "product" ? cycles::complete_on_product(inst.ambient, inst.input, inst.facts)
                                             : cycles::complete_hyperplane_precycle(inst.ambient, inst.input, inst.facts);
        open += !cycles::is_twisted_cycle(done.ledger);
        auto keep = cycles::surviving_terms(done.ledger, inst.form_descriptor());
        unfiltered += !(keep.size() == 1 && done.ledger.terms()[keep[0]].role == "seed");
    }
    return {open == 0 && unfiltered == 0 && !c.completions.empty(),
            fmt("%zu instances, %zu with nonempty divisor, %zu where more than the seed survives", c.completions.size(),
                open, unfiltered)};
}

Outcome vanishing() {
    bool ok = true;
    std::string out;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        auto folded = quad::theorem_integrand(i, j);
        std::size_t nonzero = 0;
        for (int a = -40; a <= 40; ++a)
            for (int b = -40; b <= 40; ++b) nonzero += folded.eval({0.173 * a + 0.01, 0.131 * b + 0.02}) != 0.0;
        auto q = quad::integrate_c(folded);
        auto sym = quad::mc_oracle(quad::unfolded_integrand(i, j), 11, 200000, quad::McMode::antithetic);
        auto disk = quad::unfolded_integrand(i, j);
        disk.domain = quad::PolarDomain::disk(4.0);
        auto plain = quad::mc_oracle(disk, 12, 200000, quad::McMode::plain);
        bool case_ok = nonzero == 0 && std::abs(q.value) < 1e-8 && std::abs(sym.estimate) <= 3 * sym.std_error &&
                       std::abs(plain.estimate) <= 3 * plain.std_error;
        ok = ok && case_ok;
        out += fmt("(%d,%d) folded nonzero at %zu pts, |I|=%.1e, sym MC %.2e+-%.1e, disk MC %.2e+-%.1e; ", i, j, nonzero,
                   std::abs(q.value), sym.estimate, sym.std_error, plain.estimate, plain.std_error);
    }
    out.resize(out.size() - 2);
    return {ok, out};
}

Outcome signs() {
    bool ok = true;
    std::string out;
    for (int k : {1, 2}) {
        auto g = quad::theorem_integrand(k, k);
        auto q = quad::integrate_c(g);
        auto mc = quad::mc_oracle(g, 21 + k, 400000);
        bool case_ok = q.converged && q.value > 0 && std::abs(q.value) > 10 * q.abs_error_estimate &&
                       std::abs(q.value - mc.estimate) <= 3 * (mc.std_error + q.abs_error_estimate);
        ok = ok && case_ok;
        out += fmt("(%d,%d) I=%.12f err=%.1e MC=%.4f+-%.4f; ", k, k, q.value, q.abs_error_estimate, mc.estimate,
                   mc.std_error);
    }
    out.resize(out.size() - 2);
    return {ok, out};
}

Outcome surjectivity() {
    auto r = quad::surjectivity_report(report::RunConfig{}.surjectivity());
    return {r.verdict, fmt("det=%.6f enclosure [%.6f, %.6f]%s", r.determinant, r.det_lower, r.det_upper,
                           r.verdict ? "" : (" " + r.diagnostic).c_str())};
}

Outcome flat_norm() {
    auto c = corpus("elliptic.json");
    if (c.harmonicity.empty()) return {false, "no harmonicity instance in elliptic.json"};
    const auto& h = c.harmonicity.front();
    auto engine = std::make_shared<elliptic::WeierstrassEngine>(h.lattice, report::RunConfig{}.lattice_truncation);
    auto field = std::make_shared<elliptic::FlatNormField>(engine, h.divisor);
    double periodic = 0;
    std::size_t skipped = 0;
    for (int k = 0; k < h.na; ++k)
        for (int l = 0; l < h.nb; ++l) {
            elliptic::cplx z = (k + 0.5) / h.na * h.lattice.w1 + (l + 0.5) / h.nb * h.lattice.w2;
            if (field->distance_to_support(z) < 1e-3) {
                ++skipped;
                continue;
            }
            double base = (*field)(z);
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n)
                    periodic = std::max(periodic, std::abs((*field)(z + h.lattice.point(m, n)) - base));
        }
    auto fit = quad::harmonicity_fit(quad::flat_norm_field(field), {0, h.lattice.w1, h.lattice.w2, h.na, h.nb}, h.steps);
    return {periodic < 1e-8 && std::abs(fit.slope - 2) <= 0.1,
            fmt("periodicity residual %.1e (%zu support points skipped), Laplacian slope %.3f over %zu step sizes", periodic,
                skipped, fit.slope, h.steps.size())};
}

Outcome cup_product() {
    auto c = corpus("elliptic.json");
    if (c.cup_products.empty()) return {false, "no cup-product instance in elliptic.json"};
    const auto& inst = c.cup_products.front();
    std::vector<std::shared_ptr<elliptic::FlatNormField>> fields;
    std::vector<quad::SectionNorm> norms;
    std::vector<quad::Intersection> meets;
    for (const auto& t : inst.terms) {
        auto engine = std::make_shared<elliptic::WeierstrassEngine>(inst.lattices[t.factor]);
        fields.push_back(std::make_shared<elliptic::FlatNormField>(engine, t.divisor, t.offset));
        norms.push_back(quad::flat_norm(fields.back(), t.factor));
        meets.push_back(t.meets);
    }
    const double value = quad::cup_product_pairing(inst.ledger(), meets, norms);

    // unreduced theta series at lattice-translated intersection points
    using lc = std::complex<long double>;
    double worst = 0;
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            long double expect = 0;
            for (std::size_t k = 0; k < inst.terms.size(); ++k) {
                const auto& t = inst.terms[k];
                const auto& f = *fields[k];
                for (const auto& pt : t.meets.points) {
                    lc z = lc(pt[t.factor] + inst.lattices[t.factor].point(m, n));
                    long double s = std::real(std::conj(f.correction()) * z) + f.offset();
                    for (const auto& [a, mult] : f.divisor()) s += mult * f.engine().log_abs_sigma_direct(z - lc(a));
                    expect += t.coefficient * s;
                }
            }
            worst = std::max(worst, std::abs(value - static_cast<double>(expect)));
        }
    return {worst < 1e-9, fmt("pairing %.12f, max deviation over 9 lattice shifts %.1e", value, worst)};
}

int shell(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("treg-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string base = std::string("env -u TREG_CONFIG -u SOURCE_DATE_EPOCH ") + TREG_EXE + " surjectivity --out ";
    int a = shell(base + (dir / "a.json").string());
    int b = shell(base + (dir / "b.json").string());
    std::string ja = slurp(dir / "a.json"), jb = slurp(dir / "b.json");
    fs::remove_all(dir);
    bool same = !ja.empty() && ja == jb;
    return {a == 0 && b == 0 && same,
            fmt("exit codes %d, %d; %zu bytes, %s", a, b, ja.size(), same ? "byte-identical" : "outputs differ")};
}

}  // namespace

int main() {
    std::vector<Line> lines;
    lines.push_back(measure(1, "tame-symbol golden", 1, tame_golden));
    lines.push_back(measure(2, "Weil reciprocity", 5, reciprocity));
    lines.push_back(measure(3, "boundary squared zero", 5, boundary_squared));
    lines.push_back(measure(4, "completion closure", 2, completion_closure));
    lines.push_back(measure(5, "vanishing integrals", 30, vanishing));
    lines.push_back(measure(6, "diagonal signs", 120, signs));
    lines.push_back(measure(7, "surjectivity determinant", 180, surjectivity));
    lines.push_back(measure(8, "flat-norm harmonicity", 30, flat_norm));
    lines.push_back(measure(9, "cup-product evaluator", 5, cup_product));
    lines.push_back(measure(10, "determinism", 2 * lines[6].budget_s, determinism));

    int failures = 0;
    for (const auto& l : lines) {
        bool pass = l.outcome.ok && l.seconds < l.budget_s;
        failures += !pass;
        std::printf("criterion %2d %s  %-25s %s (%.3f s < %g s)\n", l.id, pass ? "PASS" : "FAIL", l.title.c_str(),
                    l.outcome.summary.c_str(), l.seconds, l.budget_s);
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(lines.size()) - failures, lines.size());
    return failures == 0 ? 0 : 1;
}

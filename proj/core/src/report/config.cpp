#include "treg/report/config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "treg/error.hpp"

namespace treg::report {

namespace {

std::string trim(std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T v{};
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size())
        fail(ErrorCode::schema_invalid, "config key '" + key + "': cannot parse '" + text + "'");
    return v;
}

}  // namespace

std::string RunConfig::canonical() const {
    char tol_text[32];
    std::snprintf(tol_text, sizeof tol_text, "%.17g", tol);
    std::ostringstream os;
    os << "lattice_truncation=" << lattice_truncation << "\n"
       << "max_depth=" << max_depth << "\n"
       << "mc_n=" << mc_n << "\n"
       << "mc_seed=" << mc_seed << "\n"
       << "tol=" << tol_text << "\n";
    return os.str();
}

std::string RunConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

quad::SurjectivityOptions RunConfig::surjectivity() const { return {tol, max_depth, mc_n, mc_seed}; }

RunConfig parse_config(const std::string& text, RunConfig cfg) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::schema_invalid, "config line " + std::to_string(lineno) + " is not key=value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "tol") cfg.tol = parse_number<double>(key, value);
        else if (key == "max_depth") cfg.max_depth = parse_number<int>(key, value);
        else if (key == "mc_n") cfg.mc_n = parse_number<std::uint64_t>(key, value);
        else if (key == "mc_seed") cfg.mc_seed = parse_number<std::uint64_t>(key, value);
        else if (key == "lattice_truncation") cfg.lattice_truncation = parse_number<int>(key, value);
        else fail(ErrorCode::schema_invalid, "unknown config key '" + key + "'");
    }
    if (!(cfg.tol > 0)) fail(ErrorCode::schema_invalid, "tol must be positive");
    if (cfg.max_depth < 1) fail(ErrorCode::schema_invalid, "max_depth must be at least 1");
    if (cfg.mc_n < 2) fail(ErrorCode::schema_invalid, "mc_n must be at least 2");
    if (cfg.lattice_truncation < 1) fail(ErrorCode::schema_invalid, "lattice_truncation must be at least 1");
    return cfg;
}

RunConfig config_from_environment() {
    const char* path = std::getenv("TREG_CONFIG");
    if (!path || !*path) return {};
    std::ifstream in(path);
    if (!in) fail(ErrorCode::schema_invalid, std::string("cannot read TREG_CONFIG file '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::optional<std::string> report_timestamp() {
    const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
    if (!epoch || !*epoch) return std::nullopt;
    std::time_t t = parse_number<long long>("SOURCE_DATE_EPOCH", epoch);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char out[32];
    std::strftime(out, sizeof out, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return out;
}

}  // namespace treg::report

#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

// Bad configuration or unreadable assets; the CLI maps this to exit 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string example = "both";  // campedelli | oort-peters | both
    std::optional<std::uint64_t> prime;
    std::string branches = "101";
    std::vector<std::string> checks;  // empty: all
    std::string asset_dir;            // empty: the shipped assets
};

enum class Verdict { Pass, Fail, Skip };
std::string verdict_name(Verdict v);

struct CheckRecord {
    std::string example;
    std::string name;
    std::string anchor;
    std::string digest;
    Verdict verdict = Verdict::Fail;
    nlohmann::json witness;
    double wall_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<CheckRecord> records;
    bool all_pass() const;
    const CheckRecord* find(const std::string& example, const std::string& name) const;
};

inline constexpr const char* kReportSchema = "godeaux-report/1";

std::vector<std::string> check_names(const std::string& example);

// Smallest prime >= start in which -3 is a square (the Oort-Peters points
// need sqrt(-3)).
std::uint64_t oort_peters_default_prime(std::uint64_t start = 30047);

Report run(const RunConfig& cfg);

nlohmann::json report_json(const Report& r, bool with_times = true);
std::string report_text(const Report& r);

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 1469598103934665603ULL);

}  // namespace godeaux

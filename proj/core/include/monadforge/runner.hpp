#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monadforge/monad.hpp"

namespace monadforge {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int counterexample = 1;
inline constexpr int budget = 2;
inline constexpr int usage = 3;
inline constexpr int io = 4;
} // namespace exit_code

enum class OutputFormat { text, json };

/// Everything a run depends on. The serialized form (minus the output path) is
/// embedded in every report.
struct RunConfig {
    std::string command;
    std::vector<int> dims;
    /// Optional group label per factor.
    std::vector<std::string> groups;
    std::int64_t k = 1;
    BandConvention band = BandConvention::reversed;
    TableConvention table = TableConvention::clean;
    std::vector<std::uint64_t> primes{2, 3};
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;
    std::int64_t radius = 2;
    std::string what = "stability";
    std::optional<MultiDegree> twist;
    std::optional<MultiDegree> c1;
    std::int64_t rank = 1;
    std::int64_t s = 1;
    /// build: also emit the Macaulay2 script.
    bool cas = false;
    OutputFormat format = OutputFormat::text;
    std::string output;

    /// Flat "key = value" lines in a fixed key order.
    std::string to_config_text(bool include_output = true) const;
};

/// Parses "key = value" lines; '#' starts a comment. Throws ParseError on
/// unknown keys or malformed values.
RunConfig parse_config_text(std::string_view text);
/// Applies one key/value pair to `config`.
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);

struct RunOutput {
    /// file name suffix appended to RunConfig::output ("" = the main file)
    std::string suffix;
    std::string content;
};

struct RunResult {
    int exit_code = exit_code::ok;
    /// The first entry is the main report.
    std::vector<RunOutput> outputs;
};

/// Executes config.command. Library errors are mapped to exit codes; nothing
/// is written to disk.
RunResult run(const RunConfig& config);

/// Runs and writes outputs to config.output (or stdout when empty).
int run_and_write(const RunConfig& config);

/// Macaulay2 script declaring the Z^r-graded ring and both matrices, ending in
/// a zero test of B*A. Throws DomainError for an empty monad.
std::string export_cas_script(const Monad& monad);

std::string tool_version();

} // namespace monadforge

#pragma once
// cli.hpp - command-line invocations, their execution, and JSON reports.

#include "arcgraph/graph.hpp"
#include "arcgraph/outsets.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcgraph::cli {

inline constexpr const char* kVersion = "1.0.0";

namespace exit_code {
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kCap = 65;
}  // namespace exit_code

enum class Command { Eval, Arc, Witness, Out, Frobenius, Prefix, In, Friends, Polygon, Chain, Subgraph, Selftest };

std::string to_string(Command c);

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help or no arguments; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Invocation {
    Command command = Command::Selftest;
    std::optional<FunctionId> function;  // absent only for selftest
    std::vector<Natural> inputs;
    ExplorationBudget budget;
    bool json = false;
    std::optional<u64> residue;         // arc --r
    std::optional<u64> k;               // arc --k
    std::optional<Natural> verify;      // arc --verify N
    std::optional<Factorization> factors;  // with --verify
    u64 horizon_factor = kDefaultStrictHorizonFactor;
};

/// argv without the program name. Throws UsageError naming the offending token.
Invocation parse_invocation(const std::vector<std::string>& args);

struct Report {
    nlohmann::ordered_json json;
    std::string text;
    int exit_code = exit_code::kTrue;
};

/// Never throws for operation failures; those become reports with exit codes 64/65.
Report execute(const Invocation& inv);

/// Full process behaviour: parse, execute, print. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON pieces, shared with tests that reload reports.

nlohmann::ordered_json function_to_json(const FunctionId& f);
FunctionId function_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json certificate_to_json(const RefutationCertificate& c);
RefutationCertificate certificate_from_json(const nlohmann::ordered_json& j);
/// base is the digit base for witness_digits, 0 to omit them.
nlohmann::ordered_json verdict_to_json(const ArcVerdict& v, u64 base);
ArcVerdict verdict_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json budget_to_json(const ExplorationBudget& b);
nlohmann::ordered_json characterization_to_json(const OutCharacterization& c);

/// The report without timing_ms, for determinism comparisons.
nlohmann::ordered_json without_timing(nlohmann::ordered_json j);

}  // namespace arcgraph::cli

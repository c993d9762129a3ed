#include "arcgraph/verdict.hpp"

namespace arcgraph {

void ExplorationBudget::validate() const {
    if (oracle_k_max == 0 || dp_state_cap == 0 || max_witness_digits == 0 || input_cap == 0 ||
        search_node_cap == 0 || max_results == 0) {
        throw PreconditionError("budget fields must all be positive");
    }
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Proven: return "proven";
        case VerdictKind::Refuted: return "refuted";
        case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string certificate_name(const RefutationCertificate& c) {
    return std::visit(overloaded{
                          [](const ResidueClassCert&) { return std::string("ResidueClass"); },
                          [](const BelowMinimumCert&) { return std::string("BelowMinimum"); },
                          [](const ModularExhaustionCert&) { return std::string("ModularExhaustion"); },
                          [](const TauExhaustionCert&) { return std::string("TauFactorizationExhaustion"); },
                          [](const BoundedExhaustionCert&) { return std::string("BoundedExhaustion"); },
                      },
                      c);
}

std::string describe(const RefutationCertificate& c) {
    using std::to_string;
    return std::visit(
        overloaded{
            [](const ResidueClassCert& r) {
                return "every member is divisible by d = " + to_string(r.d) + " but u is not";
            },
            [](const BelowMinimumCert& r) { return "u is below the minimum " + to_string(r.minimum) + " of Out"; },
            [](const ModularExhaustionCert& r) {
                return "no N = " + to_string(r.residue) + " (mod " + to_string(r.modulus) + ") has base-" +
                       to_string(r.base) + " digit sum " + to_string(r.target) + " (preperiod " +
                       to_string(r.preperiod) + ", period " + to_string(r.period) + ")";
            },
            [](const TauExhaustionCert& r) {
                return "no exponent tuple for n = " + to_string(r.n) + " divides u = " + to_string(r.u) + " (" +
                       to_string(r.tuples_searched) + " tuples searched)";
            },
            [](const BoundedExhaustionCert& r) { return "no multiple N <= " + to_string(r.k) + "*n works"; },
        },
        c);
}

}  // namespace arcgraph

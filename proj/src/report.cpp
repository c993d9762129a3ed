#include "arcgraph/cli.hpp"

namespace arcgraph::cli {

using nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

u64 field(const ordered_json& j, const char* key) { return j.at(key).get<u64>(); }

}  // namespace

ordered_json function_to_json(const FunctionId& f) {
    ordered_json j;
    j["name"] = f.name();
    if (f.is_digit_function()) j["b"] = f.base();
    if (f.kind() == FunctionKind::HappySum) j["e"] = f.exponent();
    return j;
}

FunctionId function_from_json(const ordered_json& j) {
    const auto name = j.at("name").get<std::string>();
    if (name == "sb") return FunctionId::sum_digits(field(j, "b"));
    if (name == "happy") return FunctionId::happy(j.at("e").get<unsigned>(), field(j, "b"));
    if (name == "tau") return FunctionId::tau();
    if (name == "omega") return FunctionId::omega();
    if (name == "bigomega") return FunctionId::big_omega();
    throw PreconditionError("unknown function name '" + name + "'");
}

ordered_json certificate_to_json(const RefutationCertificate& c) {
    ordered_json j;
    j["name"] = certificate_name(c);
    std::visit(overloaded{
                   [&](const ResidueClassCert& r) { j["d"] = r.d; },
                   [&](const BelowMinimumCert& r) { j["minimum"] = r.minimum; },
                   [&](const ModularExhaustionCert& r) {
                       j["base"] = r.base;
                       j["modulus"] = r.modulus;
                       j["target"] = r.target;
                       j["residue"] = r.residue;
                       j["preperiod"] = r.preperiod;
                       j["period"] = r.period;
                   },
                   [&](const TauExhaustionCert& r) {
                       j["n"] = r.n;
                       j["u"] = r.u;
                       j["tuples_searched"] = r.tuples_searched;
                   },
                   [&](const BoundedExhaustionCert& r) { j["k"] = r.k; },
               },
               c);
    j["description"] = describe(c);
    return j;
}

RefutationCertificate certificate_from_json(const ordered_json& j) {
    const auto name = j.at("name").get<std::string>();
    if (name == "ResidueClass") return ResidueClassCert{field(j, "d")};
    if (name == "BelowMinimum") return BelowMinimumCert{field(j, "minimum")};
    if (name == "ModularExhaustion") {
        return ModularExhaustionCert{field(j, "base"),    field(j, "modulus"),   field(j, "target"),
                                     field(j, "residue"), field(j, "preperiod"), field(j, "period")};
    }
    if (name == "TauFactorizationExhaustion") {
        return TauExhaustionCert{field(j, "n"), field(j, "u"), field(j, "tuples_searched")};
    }
    if (name == "BoundedExhaustion") return BoundedExhaustionCert{field(j, "k")};
    throw PreconditionError("unknown certificate '" + name + "'");
}

ordered_json verdict_to_json(const ArcVerdict& v, u64 base) {
    ordered_json j;
    j["kind"] = to_string(kind_of(v));
    std::visit(overloaded{
                   [&](const Proven& p) {
                       j["witness"] = to_decimal(p.witness.value);
                       if (base >= 2) j["witness_digits"] = digit_expansion(p.witness.value, base).to_string();
                       if (p.witness.factorization) j["factorization"] = p.witness.factorization->to_string();
                   },
                   [&](const Refuted& r) { j["certificate"] = certificate_to_json(r.certificate); },
                   [&](const Unknown& u) { j["reason"] = u.budget_spent; },
               },
               v);
    return j;
}

ArcVerdict verdict_from_json(const ordered_json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "proven") {
        Witness w{parse_natural(j.at("witness").get<std::string>()), std::nullopt};
        if (j.contains("factorization")) w.factorization = Factorization::parse(j["factorization"].get<std::string>());
        return Proven{std::move(w)};
    }
    if (kind == "refuted") return Refuted{certificate_from_json(j.at("certificate"))};
    if (kind == "unknown") return Unknown{j.at("reason").get<std::string>()};
    throw PreconditionError("unknown verdict kind '" + kind + "'");
}

ordered_json budget_to_json(const ExplorationBudget& b) {
    return ordered_json{{"oracle_k_max", b.oracle_k_max},         {"dp_state_cap", b.dp_state_cap},
                        {"max_witness_digits", b.max_witness_digits}, {"input_cap", b.input_cap},
                        {"search_node_cap", b.search_node_cap},   {"max_results", b.max_results}};
}

ordered_json characterization_to_json(const OutCharacterization& c) {
    ordered_json j;
    j["kind"] = characterization_name(c);
    std::visit(overloaded{
                   [&](const FullOut& f) { j["reason"] = f.reason; },
                   [&](const ExactTail& t) { j["min_u"] = t.min_u; },
                   [&](const CofiniteComputed& cc) {
                       j["frobenius"] = cc.frobenius;
                       j["proven_bound"] = cc.proven_bound;
                   },
                   [&](const ResidueConstrained& rc) {
                       j["d"] = rc.d;
                       j["equality"] = to_string(rc.equality);
                       if (rc.strict_witness) j["strict_witness"] = *rc.strict_witness;
                       j["horizon"] = rc.horizon;
                   },
                   [&](const InfiniteNotCofinite& inc) { j["minimum"] = inc.minimum; },
               },
               c);
    return j;
}

ordered_json without_timing(ordered_json j) {
    j.erase("timing_ms");
    return j;
}

}  // namespace arcgraph::cli

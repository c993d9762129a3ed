#include "arcgraph/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace arcgraph::cli {

using nlohmann::ordered_json;

namespace {

struct CommandInfo {
    Command command;
    const char* name;
    std::size_t arity;
    const char* operands;
    const char* summary;
};

constexpr std::array<CommandInfo, 12> kCommands{{
    {Command::Eval, "eval", 1, "N", "g(N)"},
    {Command::Arc, "arc", 2, "n u", "decide n -> u (--r for N = r mod n, --k for N <= k*n, --verify N to check a witness)"},
    {Command::Witness, "witness", 2, "n u", "constructive witness for n -> u"},
    {Command::Out, "out", 1, "n", "classify Out(g,n)"},
    {Command::Frobenius, "frobenius", 1, "n", "largest u outside a cofinite Out(g,n)"},
    {Command::Prefix, "prefix", 2, "n u_max", "membership of 1..u_max in Out(g,n)"},
    {Command::In, "in", 2, "n u_max", "which of 1..u_max have an arc to n"},
    {Command::Friends, "friends", 2, "n u", "arcs in both directions"},
    {Command::Polygon, "polygon", 2, "bound length", "directed cycles over 1..bound"},
    {Command::Chain, "chain", 3, "n k steps", "longest increasing chain of k-bounded arcs"},
    {Command::Subgraph, "subgraph", 1, "bound", "verdict for every ordered pair in 1..bound"},
    {Command::Selftest, "selftest", 0, "", "run the built-in regression vectors"},
}};

const CommandInfo& info(Command c) { return kCommands[static_cast<std::size_t>(c)]; }

std::string general_help() {
    std::ostringstream os;
    os << "usage: arcgraph <command> [options] operands...\n\ncommands:\n";
    for (const auto& c : kCommands) {
        os << "  " << c.name << (c.arity ? " " : "") << c.operands << "\n      " << c.summary << "\n";
    }
    os << "\nfunction: --g sb|happy|tau|omega|bigomega, --b base (sb, happy), --e exponent (happy)\n"
          "output:   --format text|json\n"
          "exit:     0 proven/true, 1 refuted/false, 2 unknown, 64 usage error, 65 cap exceeded\n"
          "run 'arcgraph <command> --help' for the budget options\n";
    return os.str();
}

u64 input(const Invocation& inv, std::size_t i) {
    const Natural& v = inv.inputs.at(i);
    if (!fits_u64(v) || to_u64(v) > inv.budget.input_cap) {
        throw CapExceeded("operand " + to_decimal(v) + " exceeds the input cap " + std::to_string(inv.budget.input_cap));
    }
    return to_u64(v);
}

int exit_for(const ArcVerdict& v) {
    switch (kind_of(v)) {
        case VerdictKind::Proven: return exit_code::kTrue;
        case VerdictKind::Refuted: return exit_code::kFalse;
        case VerdictKind::Unknown: return exit_code::kUnknown;
    }
    return exit_code::kUnknown;
}

std::string abbreviate(const std::string& digits) {
    if (digits.size() <= 120) return digits;
    return digits.substr(0, 60) + "..." + digits.substr(digits.size() - 30) + " (" + std::to_string(digits.size()) +
           " digits)";
}

std::string verdict_text(const ArcVerdict& v, u64 base) {
    if (const auto* p = std::get_if<Proven>(&v)) {
        std::string s = "proven, N = " + abbreviate(to_decimal(p->witness.value));
        if (base >= 2 && base != 10) s += ", base " + std::to_string(base) + ": " + abbreviate(digit_expansion(p->witness.value, base).to_string());
        if (p->witness.factorization) s += ", N = " + p->witness.factorization->to_string();
        return s;
    }
    if (const auto* r = std::get_if<Refuted>(&v)) {
        return "refuted [" + certificate_name(r->certificate) + "]: " + describe(r->certificate);
    }
    return "unknown: " + std::get<Unknown>(v).budget_spent;
}

std::string label(const Invocation& inv) {
    std::string s = info(inv.command).name;
    if (inv.function) s += " " + inv.function->describe();
    for (const auto& x : inv.inputs) s += " " + to_decimal(x);
    return s;
}

// Each handler fills the verdict JSON and the text body and returns the exit code.
struct Outcome {
    ordered_json verdict;
    std::string text;
    int exit = exit_code::kTrue;
};

Outcome arc_outcome(const ArcVerdict& v, u64 base, const std::string& head) {
    return {verdict_to_json(v, base), head + ": " + verdict_text(v, base), exit_for(v)};
}

Outcome prefix_outcome(const MembershipPrefix& p, u64 base, bool in_direction) {
    Outcome o;
    o.verdict["kind"] = "prefix";
    ordered_json members = ordered_json::array();
    ordered_json entries = ordered_json::array();
    std::ostringstream text;
    text << (in_direction ? "u with an arc to " : "Out prefix of ") << p.n << ":\n";
    for (const auto& e : p.entries) {
        if (e.verdict == Membership::Member) members.push_back(e.u);
        if (e.verdict == Membership::Unknown) o.exit = exit_code::kUnknown;
        entries.push_back({{"u", e.u}, {"membership", to_string(e.verdict)}, {"verdict", verdict_to_json(e.evidence, base)}});
        text << "  " << e.u << ": " << to_string(e.verdict) << "\n";
    }
    o.verdict["members"] = std::move(members);
    o.verdict["entries"] = std::move(entries);
    o.text = text.str();
    return o;
}

ordered_json edge_json(const ArcEdge& e, u64 base) {
    return {{"from", e.from}, {"to", e.to}, {"verdict", verdict_to_json(e.verdict, base)}};
}

struct Check {
    const char* name;
    std::function<bool()> run;
};

Outcome selftest() {
    const auto sb10 = FunctionId::sum_digits(10);
    const std::vector<Check> checks{
        {"s_10: 33 -> 3 is refuted by modular exhaustion",
         [&] {
             const auto v = decide_arc(sb10, 33, 3);
             return is_refuted(v) &&
                    std::holds_alternative<ModularExhaustionCert>(std::get<Refuted>(v).certificate);
         }},
        {"s_10: 3 -> 3k for k <= 10 with verified witnesses, 3 -> 6 gives 33",
         [&] {
             for (u64 u = 3; u <= 30; u += 3) {
                 const auto v = witness_sb(10, 3, u);
                 if (!is_proven(v) || !verify_arc_witness(sb10, 3, u, witness_of(v))) return false;
             }
             return witness_of(witness_sb(10, 3, 6)).value == 33;
         }},
        {"s_2: 4 -> 3 gives 28", [] { return witness_of(witness_sb(2, 4, 3)).value == 28; }},
        {"s_2 pair for n = 3 is A = 84, B = 180",
         [] {
             const auto p = construct_sb_pair(2, 3);
             return p.A == 84 && p.B == 180;
         }},
        {"s_b: Out = N exactly when gcd(b-1,n) = 1 and rad(n) | b (b <= 12, n <= 30)",
         [] {
             for (u64 b = 2; b <= 12; ++b) {
                 for (u64 n = 1; n <= 30; ++n) {
                     bool rad = true;
                     for (const auto& pf : factorize(n).factors) rad = rad && b % pf.prime == 0;
                     const bool full = std::holds_alternative<FullOut>(classify_out(FunctionId::sum_digits(b), n));
                     if (full != (std::gcd(b - 1, n) == 1 && rad)) return false;
                 }
             }
             return true;
         }},
        {"s_10: k copies of 7 witness 7k for k <= 5",
         [&] {
             for (u64 k = 1; k <= 5; ++k) {
                 if (!verify_arc_witness(sb10, 7, 7 * k, Witness{sb_repetition_witness(10, 7, k), std::nullopt})) {
                     return false;
                 }
             }
             return true;
         }},
        {"tau: Frobenius number of Out(tau, 8) is 3",
         [] { return frobenius_of_out(FunctionId::tau(), 8) == std::optional<u64>(3); }},
        {"tau: 6 -> 16 gives 210 and 6 -> 5 is refuted",
         [] {
             const auto v = witness_tau(6, 16);
             return is_proven(v) && witness_of(v).value == 210 && is_refuted(witness_tau(6, 5));
         }},
        {"omega: 12 -> 1 is below the minimum 2",
         [] {
             const auto v = decide_prime_count_arc(FunctionId::omega(), 12, 1);
             const auto* r = std::get_if<Refuted>(&v);
             const auto* bm = r ? std::get_if<BelowMinimumCert>(&r->certificate) : nullptr;
             return bm && bm->minimum == 2;
         }},
        {"Omega: 12 -> 5 gives 420",
         [] { return witness_of(decide_prime_count_arc(FunctionId::big_omega(), 12, 5)).value == 420; }},
    };

    Outcome o;
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& c : checks) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception&) {
            ok = false;
        }
        all = all && ok;
        list.push_back({{"name", c.name}, {"passed", ok}});
        text << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    }
    o.verdict["kind"] = all ? "true" : "false";
    o.verdict["checks"] = std::move(list);
    o.text = text.str();
    o.exit = all ? exit_code::kTrue : exit_code::kFalse;
    return o;
}

Outcome dispatch(const Invocation& inv) {
    if (inv.command == Command::Selftest) return selftest();
    const FunctionId& f = *inv.function;
    const ExplorationBudget& budget = inv.budget;
    const u64 base = f.is_digit_function() ? f.base() : 0;
    const std::string head = label(inv);

    switch (inv.command) {
        case Command::Eval: {
            const Natural value = eval(f, inv.inputs[0], budget.input_cap, inv.factors);
            Outcome o;
            o.verdict = {{"kind", "value"}, {"value", to_decimal(value)}};
            o.text = f.describe() + "(" + abbreviate(to_decimal(inv.inputs[0])) + ") = " + to_decimal(value);
            return o;
        }
        case Command::Arc: {
            const u64 n = input(inv, 0);
            const u64 u = input(inv, 1);
            if (inv.verify) {
                const Witness w{*inv.verify, inv.factors};
                bool ok = inv.residue ? verify_congruence_witness(f, n, *inv.residue, u, w, budget)
                                      : verify_arc_witness(f, n, u, w, budget);
                if (inv.k) ok = ok && w.value <= to_natural(n) * to_natural(*inv.k);
                Outcome o;
                o.verdict = {{"kind", ok ? "true" : "false"}, {"witness", to_decimal(w.value)}};
                o.text = head + ": witness " + abbreviate(to_decimal(w.value)) + (ok ? " verifies" : " does not verify");
                o.exit = ok ? exit_code::kTrue : exit_code::kFalse;
                return o;
            }
            if (inv.residue) return arc_outcome(congruence_arc(f, n, *inv.residue, u, budget), base, head);
            if (inv.k) return arc_outcome(k_bounded_arc(f, n, u, *inv.k, budget), base, head);
            return arc_outcome(decide_arc(f, n, u, budget), base, head);
        }
        case Command::Witness: {
            const u64 n = input(inv, 0);
            const u64 u = input(inv, 1);
            switch (f.kind()) {
                case FunctionKind::SumDigits: return arc_outcome(witness_sb(f.base(), n, u, budget), base, head);
                case FunctionKind::Tau: return arc_outcome(witness_tau(n, u, budget), base, head);
                default: return arc_outcome(decide_arc(f, n, u, budget), base, head);
            }
        }
        case Command::Out: {
            const auto c = classify_out(f, input(inv, 0), budget, inv.horizon_factor);
            Outcome o;
            o.verdict = characterization_to_json(c);
            o.text = head + ": " + o.verdict.dump();
            o.exit = std::holds_alternative<FullOut>(c) ? exit_code::kTrue : exit_code::kFalse;
            return o;
        }
        case Command::Frobenius: {
            Outcome o;
            try {
                const auto fr = frobenius_of_out(f, input(inv, 0), budget);
                if (fr) {
                    o.verdict = {{"kind", "value"}, {"value", std::to_string(*fr)}};
                    o.text = head + ": " + std::to_string(*fr);
                } else {
                    o.verdict = {{"kind", "none"}, {"reason", "Out is all of N"}};
                    o.text = head + ": none, Out is all of N";
                }
            } catch (const NoFrobeniusNumber& e) {
                o.verdict = {{"kind", "no-frobenius"}, {"reason", e.what()}};
                o.text = head + ": " + e.what();
                o.exit = exit_code::kFalse;
            }
            return o;
        }
        case Command::Prefix:
            return prefix_outcome(enumerate_out_prefix(f, input(inv, 0), input(inv, 1), budget), base, false);
        case Command::In: return prefix_outcome(in_search(f, input(inv, 0), input(inv, 1), budget), base, true);
        case Command::Friends: {
            const auto r = friends(f, input(inv, 0), input(inv, 1), budget);
            Outcome o;
            o.verdict = {{"kind", to_string(r.overall)},
                         {"forward", verdict_to_json(r.forward, base)},
                         {"backward", verdict_to_json(r.backward, base)}};
            o.text = head + ": " + to_string(r.overall) + "\n  forward: " + verdict_text(r.forward, base) +
                     "\n  backward: " + verdict_text(r.backward, base);
            o.exit = r.overall == Friendship::Friends      ? exit_code::kTrue
                     : r.overall == Friendship::NotFriends ? exit_code::kFalse
                                                           : exit_code::kUnknown;
            return o;
        }
        case Command::Polygon: {
            const auto polys = find_polygons(f, input(inv, 0), input(inv, 1), budget);
            Outcome o;
            ordered_json list = ordered_json::array();
            std::ostringstream text;
            text << head << ": " << polys.size() << " found\n";
            for (const auto& p : polys) {
                ordered_json edges = ordered_json::array();
                for (const auto& e : p.edges) edges.push_back(edge_json(e, base));
                list.push_back({{"vertices", p.vertices}, {"edges", std::move(edges)}});
                text << " ";
                for (u64 v : p.vertices) text << " " << v;
                text << "\n";
            }
            o.verdict = {{"kind", polys.empty() ? "none" : "found"}, {"polygons", std::move(list)}};
            o.text = text.str();
            o.exit = polys.empty() ? exit_code::kFalse : exit_code::kTrue;
            return o;
        }
        case Command::Chain: {
            const auto chain = k_bounded_chain(f, input(inv, 0), input(inv, 1), input(inv, 2), budget);
            Outcome o;
            ordered_json steps = ordered_json::array();
            std::string text = head + ":";
            for (const auto& s : chain) {
                ordered_json step{{"value", s.value}};
                if (s.witness) step["witness"] = to_decimal(*s.witness);
                steps.push_back(std::move(step));
                text += " " + std::to_string(s.value);
            }
            o.verdict = {{"kind", "chain"}, {"arcs", chain.size() - 1}, {"steps", std::move(steps)}};
            o.text = text;
            return o;
        }
        case Command::Subgraph: {
            const auto edges = subgraph_export(f, input(inv, 0), budget);
            Outcome o;
            ordered_json list = ordered_json::array();
            std::ostringstream text;
            for (const auto& e : edges) {
                if (is_unknown(e.verdict)) o.exit = exit_code::kUnknown;
                list.push_back(edge_json(e, base));
                text << e.from << " -> " << e.to << ": " << to_string(kind_of(e.verdict)) << "\n";
            }
            o.verdict = {{"kind", "edges"}, {"edges", std::move(list)}};
            o.text = text.str();
            return o;
        }
        case Command::Selftest: break;
    }
    return selftest();
}

}  // namespace

std::string to_string(Command c) { return info(c).name; }

Invocation parse_invocation(const std::vector<std::string>& args) {
    if (args.empty() || args[0] == "--help" || args[0] == "-h") throw HelpRequested(general_help());
    const CommandInfo* cmd = nullptr;
    for (const auto& c : kCommands) {
        if (args[0] == c.name) cmd = &c;
    }
    if (!cmd) throw UsageError("unknown command '" + args[0] + "'");

    Invocation inv;
    inv.command = cmd->command;
    std::string g;
    std::optional<u64> b;
    std::optional<unsigned> e;
    std::string format = "text";
    std::optional<std::string> verify;
    std::optional<std::string> factors;
    std::vector<std::string> operands;

    CLI::App app{cmd->summary, std::string("arcgraph ") + cmd->name};
    app.add_option("operands", operands, cmd->operands);
    app.add_option("--g", g, "function: sb, happy, tau, omega, bigomega")
        ->check(CLI::IsMember({"sb", "happy", "tau", "omega", "bigomega"}));
    app.add_option("--b", b, "digit base (>= 2)");
    app.add_option("--e", e, "digit power for happy (>= 1)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--r", inv.residue, "arc: residue class r of N modulo n");
    app.add_option("--k", inv.k, "arc: only multiples N <= k*n");
    app.add_option("--verify", verify, "arc: check the given N instead of deciding");
    app.add_option("--factors", factors, "factorization of N such as 2^3*5 (eval, arc --verify)");
    app.add_option("--horizon", inv.horizon_factor, "out: multiples of d checked up to horizon*d");
    app.add_option("--k-max", inv.budget.oracle_k_max, "multiples scanned by bounded searches")->envname("ARCGRAPH_K_MAX");
    app.add_option("--dp-cap", inv.budget.dp_state_cap, "state cap of the digit-sum DP")->envname("ARCGRAPH_DP_CAP");
    app.add_option("--max-digits", inv.budget.max_witness_digits, "largest witness built, in digits")
        ->envname("ARCGRAPH_MAX_DIGITS");
    app.add_option("--input-cap", inv.budget.input_cap, "largest operand and factorization size")
        ->envname("ARCGRAPH_INPUT_CAP");
    app.add_option("--node-cap", inv.budget.search_node_cap, "node cap of tuple and chain searches")
        ->envname("ARCGRAPH_NODE_CAP");
    app.add_option("--max-results", inv.budget.max_results, "polygons returned")->envname("ARCGRAPH_MAX_RESULTS");

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& ex) {
        throw UsageError(ex.what());
    }

    try {
        inv.budget.validate();
    } catch (const PreconditionError& ex) {
        throw UsageError(ex.what());
    }
    if (operands.size() != cmd->arity) {
        throw UsageError(std::string(cmd->name) + " takes " + std::to_string(cmd->arity) + " operand(s) (" +
                         cmd->operands + "), got " + std::to_string(operands.size()));
    }
    for (const auto& op : operands) {
        try {
            inv.inputs.push_back(parse_natural(op));
        } catch (const PreconditionError&) {
            throw UsageError("malformed natural '" + op + "'");
        }
    }
    if (cmd->command != Command::Eval) {
        for (std::size_t i = 0; i < operands.size(); ++i) {
            if (inv.inputs[i] == 0) throw UsageError("operand '" + operands[i] + "' must be positive");
        }
    } else if (inv.inputs[0] == 0) {
        throw UsageError("operand '0' must be positive");
    }

    const bool arc_only = inv.residue || inv.k || verify;
    if (arc_only && cmd->command != Command::Arc) throw UsageError("--r, --k and --verify apply to arc only");
    if (inv.residue && inv.k) throw UsageError("--r and --k cannot be combined");
    if (factors && !verify && cmd->command != Command::Eval) throw UsageError("--factors needs --verify or eval");
    if (inv.k && *inv.k == 0) throw UsageError("--k must be positive");
    if (inv.residue && !inv.inputs.empty() && to_natural(*inv.residue) >= inv.inputs[0]) {
        throw UsageError("--r " + std::to_string(*inv.residue) + " must be below n");
    }
    if (verify) {
        try {
            inv.verify = parse_natural(*verify);
        } catch (const PreconditionError&) {
            throw UsageError("malformed natural '" + *verify + "'");
        }
    }
    if (factors) {
        try {
            inv.factors = Factorization::parse(*factors);
        } catch (const std::exception&) {
            throw UsageError("malformed factorization '" + *factors + "'");
        }
    }
    inv.json = format == "json";

    if (cmd->command == Command::Selftest) {
        if (!g.empty()) throw UsageError("selftest takes no function");
        return inv;
    }
    if (g.empty()) throw UsageError("missing --g");
    const bool digit = g == "sb" || g == "happy";
    if (digit && !b) throw UsageError("missing --b for " + g);
    if (!digit && b) throw UsageError("--b does not apply to " + g);
    if (g == "happy" && !e) throw UsageError("missing --e for happy");
    if (g != "happy" && e) throw UsageError("--e applies to happy only");
    if (b && (*b < 2 || *b > inv.budget.input_cap)) throw UsageError("--b " + std::to_string(*b) + " out of range");
    if (e && *e == 0) throw UsageError("--e must be at least 1");

    if (g == "sb") inv.function = FunctionId::sum_digits(*b);
    else if (g == "happy") inv.function = FunctionId::happy(*e, *b);
    else if (g == "tau") inv.function = FunctionId::tau();
    else if (g == "omega") inv.function = FunctionId::omega();
    else inv.function = FunctionId::big_omega();
    return inv;
}

Report execute(const Invocation& inv) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.json["command"] = to_string(inv.command);
    if (inv.function) report.json["function"] = function_to_json(*inv.function);
    ordered_json inputs = ordered_json::array();
    for (const auto& x : inv.inputs) inputs.push_back(to_decimal(x));
    report.json["inputs"] = std::move(inputs);

    Outcome o;
    try {
        o = dispatch(inv);
    } catch (const CapExceeded& ex) {
        o = {{{"kind", "error"}, {"error", "cap-exceeded"}, {"message", ex.what()}},
             label(inv) + ": cap exceeded: " + ex.what(),
             exit_code::kCap};
    } catch (const PreconditionError& ex) {
        o = {{{"kind", "error"}, {"error", "usage"}, {"message", ex.what()}},
             label(inv) + ": " + ex.what(),
             exit_code::kUsage};
    } catch (const NoFrobeniusNumber& ex) {
        o = {{{"kind", "no-frobenius"}, {"reason", ex.what()}}, label(inv) + ": " + ex.what(), exit_code::kFalse};
    }
    report.json["verdict"] = std::move(o.verdict);
    report.json["budget"] = budget_to_json(inv.budget);
    report.json["version"] = kVersion;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.json["timing_ms"] = ms;
    report.text = std::move(o.text);
    report.exit_code = o.exit;
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_invocation(args);
    } catch (const HelpRequested& h) {
        if (args.empty()) {
            err << h.what();
            return exit_code::kUsage;
        }
        out << h.what();
        return exit_code::kTrue;
    } catch (const UsageError& ex) {
        err << "arcgraph: " << ex.what() << "\n" << "run 'arcgraph --help' for usage\n";
        return exit_code::kUsage;
    }
    const Report r = execute(inv);
    if (inv.json) {
        out << r.json.dump(2) << "\n";
    } else {
        out << r.text;
        if (r.text.empty() || r.text.back() != '\n') out << "\n";
    }
    out.flush();
    return r.exit_code;
}

}  // namespace arcgraph::cli

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "arcgraph/cli.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace arcgraph;
using nlohmann::ordered_json;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Appends the first few failures to the detail line.
struct Tally {
    Outcome out;
    int failures = 0;
    void fail(const std::string& what) {
        out.ok = false;
        if (++failures <= 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
    }
    Outcome done(const std::string& summary) {
        if (out.ok) out.detail = summary;
        else if (failures > 3) out.detail += "; ... " + std::to_string(failures) + " failures";
        return out;
    }
};

std::string str(u64 v) { return std::to_string(v); }

// (b, n) in the pair sweep: gcd(b-1, n) = 1 and Out(s_b, n) is not everything.
std::vector<std::pair<u64, u64>> pair_sweep() {
    std::vector<std::pair<u64, u64>> out;
    for (u64 b = 2; b <= 12; ++b) {
        for (u64 n = 2; n <= 60; ++n) {
            if (std::gcd(b - 1, n) != 1) continue;
            if (b % multiplicative_profile(factorize(n)).radical == 0) continue;
            out.push_back({b, n});
        }
    }
    return out;
}

Outcome example4() {
    const auto r = cli::execute(cli::parse_invocation({"arc", "--g", "sb", "--b", "10", "33", "3"}));
    const auto v = decide_arc(FunctionId::sum_digits(10), 33, 3);
    Tally t;
    if (r.exit_code != cli::exit_code::kFalse) t.fail("exit " + str(r.exit_code));
    if (!is_refuted(v)) t.fail("not refuted");
    else if (!recheck_certificate(FunctionId::sum_digits(10), 33, 3, std::get<Refuted>(v).certificate)) {
        t.fail("certificate does not recheck");
    }
    return t.done("refuted, " + (is_refuted(v) ? certificate_name(std::get<Refuted>(v).certificate) : std::string()));
}

Outcome example5() {
    Tally t;
    const auto sb10 = FunctionId::sum_digits(10);
    std::string w6;
    for (u64 u = 3; u <= 30; u += 3) {
        const auto r = cli::execute(cli::parse_invocation({"witness", "--g", "sb", "--b", "10", "3", str(u)}));
        const auto v = witness_sb(10, 3, u);
        if (r.exit_code != 0 || !is_proven(v)) {
            t.fail("u=" + str(u) + " not proven");
            continue;
        }
        if (!verify_arc_witness(sb10, 3, u, witness_of(v))) t.fail("u=" + str(u) + " witness fails");
        if (r.json["verdict"]["witness"] != witness_of(v).value.get_str()) t.fail("u=" + str(u) + " cli differs");
        if (u == 6) w6 = witness_of(v).value.get_str();
    }
    if (w6 != "33") t.fail("u=6 witness " + w6);
    return t.done("10 witnesses verified, u=6 gives " + w6);
}

Outcome pair_construction() {
    Tally t;
    const auto sweep = pair_sweep();
    for (const auto& [b, n] : sweep) {
        const auto p = construct_sb_pair(b, n);
        const std::string at = "(" + str(b) + "," + str(n) + ")";
        if (p.A % n != 0 || p.B % n != 0) t.fail(at + " not multiples");
        if (digit_sum(p.A, b) != n) t.fail(at + " s_b(A)");
        if (digit_sum(p.B, b) != n - 1 + b) t.fail(at + " s_b(B)");
        if (p.a != n || p.ell != n - 1 + b || std::gcd(p.a, p.ell) != 1) t.fail(at + " a, l");
    }
    return t.done(str(sweep.size()) + " pairs checked");
}

Outcome cofiniteness() {
    Tally t;
    const auto sweep = pair_sweep();
    std::size_t checked = 0;
    u64 longest = 0;
    for (const auto& [b, n] : sweep) {
        const auto p = construct_sb_pair(b, n);
        const u64 from = sb_cofinite_threshold(b, n);
        if (from != (p.a - 1) * (p.ell - 1)) t.fail("threshold (" + str(b) + "," + str(n) + ")");
        for (u64 u = from; u <= from + 50; ++u) {
            const Natural N = sb_concatenation_witness(p, u);
            if (N % n != 0 || digit_sum(N, b) != u) t.fail("(" + str(b) + "," + str(n) + ") u=" + str(u));
            longest = std::max(longest, digit_length(N, b));
            ++checked;
        }
    }
    return t.done(str(checked) + " witnesses verified, longest " + str(longest) + " digits");
}

Outcome dp_vs_oracle() {
    Tally t;
    u64 agreed = 0, dp_only = 0;
    for (u64 b : {2ULL, 3ULL, 10ULL}) {
        for (u64 n = 1; n <= 25; ++n) {
            std::vector<bool> found(11, false);
            for (u64 k = 1; k <= 100'000; ++k) {
                const u64 s = oracle::digit_sum(k * n, b);
                if (s <= 10) found[s] = true;
            }
            const u64 d = std::gcd(b - 1, n);
            for (u64 u = 1; u <= 10; ++u) {
                const auto v = decide_sb_exact(b, n, u, 0);
                const std::string at = "b=" + str(b) + " n=" + str(n) + " u=" + str(u);
                if (is_unknown(v)) t.fail(at + " unknown");
                if (found[u] && !is_proven(v)) t.fail(at + " oracle found, DP false");
                if (is_proven(v) && u % d != 0) t.fail(at + " DP true but d does not divide u");
                if (is_proven(v) && !verify_arc_witness(FunctionId::sum_digits(b), n, u, witness_of(v))) {
                    t.fail(at + " DP witness fails");
                }
                if (is_proven(v) && !found[u]) ++dp_only;
                else ++agreed;
            }
        }
    }
    return t.done(str(agreed + dp_only) + " queries, 0 disagreements, " + str(dp_only) +
                  " DP-true beyond the oracle horizon");
}

Outcome repetition() {
    Tally t;
    std::mt19937_64 rng(20);
    for (int i = 0; i < 20; ++i) {
        const u64 b = 2 + rng() % 15;
        const u64 n = 2 + rng() % 500;
        const u64 s = digit_sum(n, b);
        for (u64 k = 1; k <= 10; ++k) {
            const std::string at = "b=" + str(b) + " n=" + str(n) + " k=" + str(k);
            if (!is_proven(decide_sb_exact(b, n, k * s, 0))) t.fail(at + " DP false");
            const Witness w{sb_repetition_witness(b, n, k), std::nullopt};
            if (!verify_arc_witness(FunctionId::sum_digits(b), n, k * s, w)) t.fail(at + " repetition fails");
        }
    }
    return t.done("20 (b,n) x 10 k verified");
}

Outcome full_equivalence() {
    Tally t;
    u64 full = 0;
    for (u64 b = 2; b <= 12; ++b) {
        for (u64 n = 1; n <= 100; ++n) {
            const bool predicted = std::gcd(b - 1, n) == 1 && b % multiplicative_profile(factorize(n)).radical == 0;
            const bool is_full = std::holds_alternative<FullOut>(classify_out(FunctionId::sum_digits(b), n));
            const std::string at = "b=" + str(b) + " n=" + str(n);
            if (predicted != is_full) t.fail(at + " classification");
            if (!is_full) continue;
            ++full;
            for (u64 u = 1; u <= 15; ++u) {
                if (!is_proven(decide_sb_exact(b, n, u, 0))) t.fail(at + " u=" + str(u) + " DP false");
            }
        }
    }
    return t.done(str(full) + " Full cases of 1100, all DP-true for u <= 15");
}

Outcome tau_suite() {
    Tally t;
    const auto table = oracle::tau_sieve(40 * 200'000);
    u64 queries = 0, beyond = 0;
    for (u64 n = 1; n <= 40; ++n) {
        for (u64 u = 1; u <= 24; ++u) {
            const auto d = decide_tau_exact(n, u);
            const auto hit = oracle::first_multiple(table, n, u, 200'000);
            const std::string at = "n=" + str(n) + " u=" + str(u);
            if (hit && !d.member) t.fail(at + " oracle found " + str(*hit));
            if (d.member) {
                const auto w = witness_tau(n, u);
                if (!is_proven(w) || !verify_arc_witness(FunctionId::tau(), n, u, witness_of(w))) t.fail(at + " witness");
                if (!hit) ++beyond;
            }
            ++queries;
        }
    }
    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        u64 q = 1;
        for (u64 k = 1; k <= 5; ++k) {
            q *= p;
            const auto f = frobenius_of_out(FunctionId::tau(), q);
            if (!f || *f != k) t.fail("frobenius(" + str(q) + ")");
        }
    }
    u64 non_pp = 0;
    for (u64 n = 2; n <= 200; ++n) {
        if (is_prime_power(n)) continue;
        ++non_pp;
        if (decide_tau_exact(n, oracle::count_divisors(n) + 1).member) t.fail("tau(n)+1 reached from " + str(n));
    }
    for (u64 n : {6ULL, 12ULL, 30ULL}) {
        for (u64 l = 0; l <= 5; ++l) {
            const u64 u = (u64{1} << l) * oracle::count_divisors(n);
            const auto v = witness_tau(n, u);
            if (!is_proven(v) || !verify_arc_witness(FunctionId::tau(), n, u, witness_of(v))) {
                t.fail("2^" + str(l) + "*tau(" + str(n) + ")");
            }
        }
    }
    return t.done(str(queries) + " queries agree (" + str(beyond) + " beyond the oracle), " + str(non_pp) +
                  " non-prime-powers refuted at tau(n)+1");
}

Outcome prime_count_tails() {
    Tally t;
    const u64 k_max = 100'000;
    const auto pc = oracle::prime_count_sieve(50 * k_max);
    for (const auto& [f, table] : {std::pair{FunctionId::omega(), &pc.omega}, std::pair{FunctionId::big_omega(), &pc.big_omega}}) {
        for (u64 n = 1; n <= 50; ++n) {
            const u64 m = (*table)[n];
            for (u64 u = 1; u <= 6; ++u) {
                const auto v = decide_prime_count_arc(f, n, u);
                const auto hit = oracle::first_multiple(*table, n, u, k_max);
                const std::string at = f.name() + " n=" + str(n) + " u=" + str(u);
                if (is_proven(v) != (u >= m)) t.fail(at + " tail");
                if (hit.has_value() != is_proven(v)) t.fail(at + " oracle");
                if (is_proven(v) && !verify_arc_witness(f, n, u, witness_of(v))) t.fail(at + " witness");
            }
            if (m >= 2) {
                const auto fr = frobenius_of_out(f, n);
                if (!fr || *fr != m - 1) t.fail(f.name() + " frobenius(" + str(n) + ")");
            }
        }
    }
    return t.done("600 queries match tails and oracle, Frobenius numbers match");
}

Outcome graph_soundness() {
    Tally t;
    std::mt19937_64 rng(10);
    const std::vector<FunctionId> fs{FunctionId::sum_digits(10), FunctionId::sum_digits(2), FunctionId::tau(),
                                     FunctionId::omega(), FunctionId::big_omega()};
    for (int i = 0; i < 100; ++i) {
        const auto& f = fs[rng() % fs.size()];
        const u64 n = 1 + rng() % 100, u = 1 + rng() % 100;
        const auto a = friends(f, n, u), b = friends(f, u, n);
        if (a.overall != b.overall) t.fail("friends " + f.name() + " " + str(n) + " " + str(u));
    }
    const auto polys = find_polygons(FunctionId::omega(), 10, 3);
    bool has235 = false;
    for (const auto& p : polys) {
        has235 = has235 || p.vertices == std::vector<u64>{2, 3, 5};
        for (const auto& e : p.edges) {
            if (!is_proven(e.verdict) || !verify_arc_witness(FunctionId::omega(), e.from, e.to, witness_of(e.verdict))) {
                t.fail("edge " + str(e.from) + "->" + str(e.to));
            }
        }
    }
    if (!has235) t.fail("(2,3,5) missing");
    for (int i = 0; i < 100; ++i) {
        const auto& f = fs[rng() % fs.size()];
        const u64 n = 1 + rng() % 200, u = 1 + rng() % 200;
        if (kind_of(congruence_arc(f, n, 0, u)) != kind_of(decide_arc(f, n, u))) {
            t.fail("congruence " + f.name() + " " + str(n) + " " + str(u));
        }
    }
    return t.done("symmetry, " + str(polys.size()) + " polygons re-verified, r=0 agrees");
}

struct Regression {
    std::vector<std::string> args;
    int exit;
};

Outcome cli_suite() {
    Tally t;
    std::vector<Regression> regs{
        {{"arc", "--g", "sb", "--b", "10", "33", "3"}, cli::exit_code::kFalse},
        {{"frobenius", "--g", "tau", "8"}, cli::exit_code::kTrue},
        {{"arc", "--g", "tau", "6", "5"}, cli::exit_code::kFalse},
        {{"witness", "--g", "tau", "6", "16"}, cli::exit_code::kTrue},
        {{"arc", "--g", "omega", "12", "1"}, cli::exit_code::kFalse},
        {{"arc", "--g", "bigomega", "12", "5"}, cli::exit_code::kTrue},
        {{"arc", "--g", "sb", "--b", "10", "33", "3", "--k", "100"}, cli::exit_code::kFalse},
        {{"arc", "--g", "tau", "4", "2", "--r", "1"}, cli::exit_code::kTrue},
        {{"arc", "--g", "happy", "--e", "2", "--b", "10", "7", "2", "--k-max", "3"}, cli::exit_code::kUnknown},
    };
    for (u64 u = 3; u <= 30; u += 3) regs.push_back({{"witness", "--g", "sb", "--b", "10", "3", str(u)}, 0});

    auto call = [](std::vector<std::string> args, ordered_json* json) {
        std::ostringstream out, err;
        if (json) args.insert(args.end(), {"--format", "json"});
        const int code = cli::run(args, out, err);
        if (json) *json = ordered_json::parse(out.str());
        return code;
    };
    for (const auto& r : regs) {
        std::string at;
        for (const auto& a : r.args) at += a + " ";
        ordered_json j;
        const int code = call(r.args, &j);
        if (code != r.exit) t.fail(at + "exit " + str(code));
        const auto& v = j["verdict"];
        if (v["kind"] == "proven" || v["kind"] == "refuted" || v["kind"] == "unknown") {
            const u64 base = j["function"].contains("b") ? j["function"]["b"].get<u64>() : 0;
            if (cli::verdict_to_json(cli::verdict_from_json(v), base) != v) t.fail(at + "verdict round trip");
        }
        if (cli::function_to_json(cli::function_from_json(j["function"])) != j["function"]) t.fail(at + "function");
        ordered_json again;
        call(r.args, &again);
        if (cli::without_timing(j).dump() != cli::without_timing(again).dump()) t.fail(at + "not deterministic");
        if (v.contains("witness")) {
            std::vector<std::string> check{"arc", "--g", j["function"]["name"]};
            if (j["function"].contains("b")) check.insert(check.end(), {"--b", str(j["function"]["b"].get<u64>())});
            if (j["function"].contains("e")) check.insert(check.end(), {"--e", str(j["function"]["e"].get<u64>())});
            check.insert(check.end(), {j["inputs"][0], j["inputs"][1], "--verify", v["witness"]});
            const auto r_flag = std::find(r.args.begin(), r.args.end(), "--r");
            if (r_flag != r.args.end()) check.insert(check.end(), {"--r", *(r_flag + 1)});
            if (v.contains("factorization")) check.insert(check.end(), {"--factors", v["factorization"]});
            if (call(check, nullptr) != cli::exit_code::kTrue) t.fail(at + "witness does not re-verify");
        }
    }
    if (call({"arc", "--g", "sb", "33", "3"}, nullptr) != cli::exit_code::kUsage) t.fail("usage exit");
    if (call({"arc", "--g", "tau", "6", "8", "--input-cap", "5"}, nullptr) != cli::exit_code::kCap) t.fail("cap exit");
    if (call({"selftest"}, nullptr) != cli::exit_code::kTrue) t.fail("selftest");
    return t.done(str(regs.size()) + " regression commands, exit codes 0/1/2/64/65 observed, selftest 0");
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "33 -> 3 refuted for s_10", 1, example4},
        {2, "witnesses 3 -> 3k for s_10", 1, example5},
        {3, "witness pair construction sweep", 30, pair_construction},
        {4, "concatenation witnesses above the threshold", 60, cofiniteness},
        {5, "digit-sum DP against the bounded oracle", 300, dp_vs_oracle},
        {6, "self-concatenation multiples", 10, repetition},
        {7, "Out = N characterization", 60, full_equivalence},
        {8, "divisor-count suite", 300, tau_suite},
        {9, "prime-count tails", 120, prime_count_tails},
        {10, "graph soundness", 120, graph_soundness},
        {11, "command-line reports and exit codes", 120, cli_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && s > c.limit_s) {
            o.ok = false;
            o.detail += "; over the time limit";
        }
        failed += o.ok ? 0 : 1;
        std::printf("criterion %2d %s: %s (%.2f s, limit %.0f s) %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, s,
                    c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "delsub/balls.hpp"
#include "delsub/bounds.hpp"
#include "delsub/cells.hpp"
#include "delsub/recon.hpp"
#include "delsub/verify.hpp"
#include "delsub/version.hpp"

using nlohmann::json;
using namespace delsub;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuardrail = 3;

struct Emit {
    bool pretty = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void operator()(json& report) const {
        if (timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
    }
};

json base_report(const std::string& command) {
    return {{"schema_version", kReportSchemaVersion},
            {"library_version", kLibraryVersion},
            {"command", command},
            {"parameters", json::object()},
            {"results", json::object()}};
}

json histogram_json(const PairHistogram& h) {
    json buckets = json::array();
    for (int ori = 0; ori < 2; ++ori)
        for (int s_out = 0; s_out <= h.d; ++s_out)
            for (int dp = 0; dp <= 5; ++dp) {
                const std::uint64_t v = h.counts[static_cast<std::size_t>(ori)]
                                                [static_cast<std::size_t>(s_out)]
                                                [static_cast<std::size_t>(dp)];
                if (v == 0) continue;
                buckets.push_back({{"orientation", ori == 0 ? "j<=j'" : "j>j'"},
                                   {"s_out", s_out},
                                   {"d_prime", dp == 5 ? json(">=5") : json(dp)},
                                   {"count", v}});
            }
    return {{"m", h.m},
            {"m_prime", h.m_prime},
            {"two_sided", h.two_sided},
            {"buckets", buckets},
            {"bounds_ok", !check_histogram_bounds(h).has_value()}};
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("range", "expected <from>:<to>");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of the single-deletion two-substitution channel"};
    app.require_subcommand(1);

    Emit emit;
    app.add_flag("--pretty", emit.pretty, "indent the JSON report");
    app.add_flag("--timing", emit.timing, "include timing_ms in the report (breaks byte-reproducibility)");
    int threads = 0;
    app.add_option("--threads", threads, "cap internal parallelism (0 = hardware)");

    // --- ball ---------------------------------------------------------
    auto* ball = app.add_subcommand("ball", "enumerate an error ball");
    ball->fallthrough();
    std::string ball_word;
    int ball_q = 2, ball_del = 0, ball_sub = 0;
    bool ball_count_only = false, ball_force = false;
    ball->add_option("--word", ball_word)->required();
    ball->add_option("--q", ball_q)->required();
    ball->add_option("--del", ball_del, "number of deletions (exact)");
    ball->add_option("--sub", ball_sub, "max substitutions");
    ball->add_flag("--count-only", ball_count_only);
    ball->add_flag("--force", ball_force, "override enumeration guardrails");

    // --- intersect ----------------------------------------------------
    auto* intersect = app.add_subcommand("intersect", "intersection of two B^DS_{1,2} balls");
    intersect->fallthrough();
    std::string ix, iy, imethod = "both";
    int iq = 2;
    bool imembers = false, iforce = false;
    int idel = 1, isub = 2;
    intersect->add_option("--x", ix)->required();
    intersect->add_option("--y", iy)->required();
    intersect->add_option("--q", iq)->required();
    intersect->add_option("--method", imethod, "brute | cells | both")
        ->check(CLI::IsMember({"brute", "cells", "both"}));
    intersect->add_option("--del", idel, "deletions (cells method requires 1)");
    intersect->add_option("--sub", isub, "max substitutions (cells method requires 2)");
    intersect->add_flag("--members", imembers, "list the intersection members");
    intersect->add_flag("--force", iforce);

    // --- coverage -----------------------------------------------------
    auto* coverage = app.add_subcommand("coverage", "read coverage of a code");
    coverage->fallthrough();
    std::string cov_file;
    std::optional<int> cov_q, cov_n;
    std::optional<std::uint64_t> cov_sample, cov_seed;
    bool cov_force = false;
    coverage->add_option("--code", cov_file)->required();
    coverage->add_option("--q", cov_q);
    coverage->add_option("--n", cov_n);
    coverage->add_option("--sample-pairs", cov_sample, "sampled lower bound instead of exhaustive");
    coverage->add_option("--seed", cov_seed);
    coverage->add_flag("--force", cov_force, "force the exhaustive scan past the op budget");

    // --- simulate -----------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "seeded reconstruction trials");
    simulate->fallthrough();
    std::string sim_file, sim_mode = "uniform-ball";
    std::optional<int> sim_q, sim_n;
    std::size_t sim_reads = 1, sim_trials = 1;
    std::optional<std::uint64_t> sim_seed;
    simulate->add_option("--code", sim_file)->required();
    simulate->add_option("--q", sim_q);
    simulate->add_option("--n", sim_n);
    simulate->add_option("--reads", sim_reads)->required();
    simulate->add_option("--trials", sim_trials)->required();
    simulate->add_option("--seed", sim_seed, "required: trials are replayable bit-for-bit");
    simulate->add_option("--mode", sim_mode)->check(CLI::IsMember({"uniform-ball", "process"}));

    // --- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->fallthrough();
    std::string suite;
    std::vector<int> v_qs;
    std::optional<int> v_n, v_n_max, v_n_min, v_pairs, v_instances, v_smax, v_dmin, v_dmax;
    std::optional<std::uint64_t> v_seed;
    std::string v_fit_range;
    bool v_exhaustive = false;
    verify->add_option("--suite", suite, "xi | lemma2 | cells | lemma3-tables | claims | bound")
        ->required();
    verify->add_option("--q", v_qs)->delimiter(',');
    verify->add_option("--n", v_n);
    verify->add_option("--n-max", v_n_max);
    verify->add_option("--n-min", v_n_min);
    verify->add_option("--s-max", v_smax);
    verify->add_option("--d-min", v_dmin);
    verify->add_option("--d-max", v_dmax);
    verify->add_option("--pairs", v_pairs);
    verify->add_option("--instances", v_instances);
    verify->add_option("--fit-range", v_fit_range, "extremal fit range <from>:<to> (bound suite)");
    verify->add_option("--seed", v_seed);
    verify->add_flag("--exhaustive", v_exhaustive);

    // --- extremal -----------------------------------------------------
    auto* extremal = app.add_subcommand("extremal", "extremal family sizes and quadratic fit");
    extremal->fallthrough();
    int ext_q = 2;
    std::string ext_range;
    bool ext_fit = false;
    std::string ext_csv;
    extremal->add_option("--q", ext_q)->required();
    extremal->add_option("--n-range", ext_range, "<from>:<to>, even lengths")->required();
    extremal->add_flag("--fit", ext_fit);
    extremal->add_option("--csv", ext_csv, "write per-n sizes as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // --help exits 0, bad usage exits 2
    }

    try {
        if (*ball) {
            json rep = base_report("ball");
            rep["parameters"] = {{"word", ball_word}, {"q", ball_q},          {"del", ball_del},
                                 {"sub", ball_sub},   {"count_only", ball_count_only},
                                 {"force", ball_force}};
            const Word w = Word::parse(ball_word, ball_q);
            const WordSet b = enum_ds_ball(w, {ball_del, ball_sub}, {ball_force});
            rep["results"]["size"] = b.size();
            if (ball_del == 0) {
                const std::uint64_t closed = xi_0s(ball_q, w.length(), ball_sub);
                rep["results"]["xi_closed_form"] = closed;
                rep["results"]["xi_matches"] = closed == b.size();
                if (closed != b.size()) {
                    emit(rep);
                    return kExitVerificationFailure;
                }
            }
            if (!ball_count_only) {
                json members = json::array();
                for (const Word& v : b) members.push_back(v.str());
                rep["results"]["members"] = members;
            }
            if (ball_force) rep["notes"] = json::array({"guardrail override active"});
            emit(rep);
            return kExitOk;
        }

        if (*intersect) {
            json rep = base_report("intersect");
            rep["parameters"] = {{"x", ix}, {"y", iy},     {"q", iq},
                                 {"del", idel}, {"sub", isub}, {"method", imethod}};
            const Word x = Word::parse(ix, iq);
            const Word y = Word::parse(iy, iq);
            const bool cells_applicable = idel == 1 && isub == 2 && x != y;
            if ((imethod == "cells" || imethod == "both") && !cells_applicable)
                throw SpecError("the cell decomposition applies to t=1, s=2 and distinct words");

            std::optional<WordSet> by_brute, by_cells;
            if (imethod == "brute" || imethod == "both")
                by_brute = brute_intersection(x, y, {idel, isub}, {iforce});
            if (imethod == "cells" || imethod == "both")
                by_cells = ds12_intersection_via_cells(x, y);
            const WordSet& result = by_brute ? *by_brute : *by_cells;

            rep["results"]["size"] = result.size();
            const int d = hamming(x, y);
            rep["results"]["hamming_distance"] = d;
            if (d == 2) {
                const CanonicalD2Form f = classify_d2(x, y);
                rep["results"]["d2_subcase"] = to_string(f.subcase);
            }
            if (d >= 2) rep["results"]["histogram"] = histogram_json(pair_distance_histogram(x, y));
            if (imethod == "both") {
                const bool agree = *by_brute == *by_cells;
                rep["results"]["methods_agree"] = agree;
                if (!agree) {
                    emit(rep);
                    return kExitVerificationFailure;
                }
            }
            if (imembers) {
                json members = json::array();
                for (const Word& v : result) members.push_back(v.str());
                rep["results"]["members"] = members;
            }
            emit(rep);
            return kExitOk;
        }

        if (*coverage) {
            json rep = base_report("coverage");
            rep["parameters"] = {{"code", cov_file}, {"force", cov_force}};
            if (cov_sample && !cov_seed)
                throw SpecError("--sample-pairs draws random pairs: --seed is required");
            std::ifstream in(cov_file);
            if (!in) throw LoadError("cannot open code file: " + cov_file);
            const Code code = Code::load(in, cov_q, cov_n);
            rep["parameters"]["q"] = code.q();
            rep["parameters"]["n"] = code.length();
            CoverageOptions opts;
            opts.force_exhaustive = cov_force;
            opts.sample_pairs = cov_sample;
            if (cov_seed) {
                opts.seed = *cov_seed;
                rep["seed"] = *cov_seed;
            }
            const int dmin = min_hamming_distance(code);
            const CoverageResult cov = read_coverage(code, opts);
            rep["results"] = {{"codewords", code.size()},
                              {"min_hamming_distance", dmin},
                              {"nu", cov.nu},
                              {"witness_x", cov.witness_x.str()},
                              {"witness_x_prime", cov.witness_x_prime.str()},
                              {"exact", cov.exact},
                              {"pairs_examined", cov.pairs_examined},
                              {"reconstruction_threshold", cov.nu + 1}};
            if (dmin < 2)
                rep["notes"] = json::array({"minimum distance below 2: coverage may be driven by d=1 pairs"});
            emit(rep);
            return kExitOk;
        }

        if (*simulate) {
            json rep = base_report("simulate");
            if (!sim_seed) throw SpecError("--seed is required for randomized commands");
            std::ifstream in(sim_file);
            if (!in) throw LoadError("cannot open code file: " + sim_file);
            const Code code = Code::load(in, sim_q, sim_n);
            SimulationParams params;
            params.reads = sim_reads;
            params.trials = sim_trials;
            params.seed = *sim_seed;
            params.mode = sim_mode == "process" ? SampleMode::Process : SampleMode::UniformBall;
            rep["parameters"] = {{"code", sim_file},   {"q", code.q()},       {"n", code.length()},
                                 {"reads", sim_reads}, {"trials", sim_trials}, {"mode", sim_mode}};
            rep["seed"] = *sim_seed;
            rep["results"]["rng_algorithm"] = kRngAlgorithm;
            const SimulationResult res = simulate_reconstruction(code, params);
            rep["results"]["trials"] = res.trials;
            rep["results"]["unique_correct"] = res.unique_correct;
            rep["results"]["ambiguous"] = res.ambiguous;
            rep["results"]["wrong"] = res.wrong;
            rep["results"]["eligible_codewords"] = res.eligible_codewords;
            rep["results"]["ineligible_codewords"] = res.ineligible_codewords;
            emit(rep);
            return kExitOk;
        }

        if (*verify) {
            json rep = base_report("verify");
            rep["parameters"]["suite"] = suite;
            const auto need_seed = [&]() {
                if (!v_seed) throw SpecError("--seed is required for randomized suites");
                rep["seed"] = *v_seed;
                return *v_seed;
            };
            SuiteReport report;
            if (suite == "xi") {
                XiSuiteParams p;
                p.seed = need_seed();
                if (!v_qs.empty()) p.qs = v_qs;
                if (v_n_max) p.n_max = *v_n_max;
                if (v_smax) p.s_max = *v_smax;
                report = verify_xi(p);
            } else if (suite == "lemma2") {
                Lemma2SuiteParams p;
                p.seed = need_seed();
                if (!v_qs.empty()) p.random_qs = v_qs;
                if (v_n_max) p.exhaustive_n_max = *v_n_max;
                if (v_n) p.random_n = *v_n;
                if (v_pairs) p.pairs_per_d = *v_pairs;
                report = verify_lemma2(p);
            } else if (suite == "cells") {
                CellsSuiteParams p;
                p.seed = need_seed();
                if (!v_qs.empty()) p.distance_qs = v_qs;
                const int cap = v_n ? *v_n : 7;
                p.distance_n_max = v_exhaustive ? cap : std::min(cap, 5);
                p.union_exhaustive_n_max = v_exhaustive ? cap - 1 : 4;
                if (v_pairs) p.random_union_pairs = *v_pairs;
                report = verify_cells(p);
            } else if (suite == "lemma3-tables") {
                TablesSuiteParams p;
                p.seed = need_seed();
                if (!v_qs.empty()) p.qs = v_qs;
                if (v_n) p.n = *v_n;
                if (v_pairs) p.pairs_per_d = *v_pairs;
                if (v_dmin) p.d_min = *v_dmin;
                if (v_dmax) p.d_max = *v_dmax;
                report = verify_lemma3_tables(p);
            } else if (suite == "claims") {
                ClaimsSuiteParams p;
                p.seed = need_seed();
                if (!v_qs.empty()) p.qs = v_qs;
                if (v_n_min) p.n_min = *v_n_min;
                if (v_n_max) p.n_max = *v_n_max;
                if (v_instances) p.instances_per_q = *v_instances;
                report = verify_claims(p);
            } else if (suite == "bound") {
                BoundSuiteParams p;
                if (!v_qs.empty()) p.q = v_qs.front();
                if (v_n) p.n = *v_n;
                if (!v_fit_range.empty()) {
                    const auto [from, to] = parse_range(v_fit_range);
                    p.fit_n_from = from;
                    p.fit_n_to = to;
                }
                p.threads = threads;
                report = verify_bound(p);
            } else {
                throw CLI::ValidationError("--suite", "unknown suite: " + suite);
            }
            rep["results"] = report.to_json();
            emit(rep);
            return report.passed ? kExitOk : kExitVerificationFailure;
        }

        if (*extremal) {
            json rep = base_report("extremal");
            const auto [from, to] = parse_range(ext_range);
            rep["parameters"] = {{"q", ext_q}, {"n_from", from}, {"n_to", to}, {"fit", ext_fit}};
            const auto sizes = extremal_sizes(ext_q, from, to);
            if (sizes.empty()) throw DomainError("no even lengths in the requested range");
            json pts = json::array();
            for (const auto& [n, v] : sizes) pts.push_back({{"n", n}, {"size", v}});
            rep["results"]["sizes"] = pts;
            if (!ext_csv.empty()) {
                std::ofstream csv(ext_csv);
                if (!csv) throw LoadError("cannot write CSV file: " + ext_csv);
                csv << "n,size\n";
                for (const auto& [n, v] : sizes) csv << n << "," << v << "\n";
                rep["results"]["csv"] = ext_csv;
            }
            if (ext_fit) {
                if (sizes.size() < 3)
                    throw DomainError("fit needs at least three even lengths in the range");
                const QuadraticFit fit = fit_quadratic(sizes);
                rep["results"]["fit"] = {{"a", fit.a.str()},
                                         {"b", fit.b.str()},
                                         {"c", fit.c.str()},
                                         {"consistent", fit.consistent}};
                // smallest even n >= 8 from which the family already follows the fit
                int onset = -1;
                for (int n = 8; n <= to; n += 2) {
                    const auto probe = extremal_sizes(ext_q, n, n);
                    if (probe.empty()) continue;
                    const Rational v = fit.a * Rational(static_cast<std::int64_t>(n) * n) +
                                       fit.b * Rational(n) + fit.c;
                    if (v == Rational(probe.front().second)) {
                        onset = n;
                        break;
                    }
                }
                rep["results"]["quadratic_regime_onset_n"] = onset;
            }
            emit(rep);
            return kExitOk;
        }
    } catch (const GuardrailError& e) {
        std::cerr << "guardrail: " << e.what() << "\n";
        return kExitGuardrail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#ifndef DELSUB_VERIFY_HPP
#define DELSUB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "delsub/bounds.hpp"
#include "delsub/rng.hpp"
#include "delsub/word.hpp"

namespace delsub {

struct CheckResult {
    std::string name;
    bool passed = false;
    nlohmann::json details = nlohmann::json::object();  // counts, counterexample dump on failure
};

struct SuiteReport {
    std::string suite;
    bool passed = false;
    std::vector<CheckResult> checks;

    nlohmann::json to_json() const;
};

Word random_word(int q, int n, Rng& rng);

/// A word at Hamming distance exactly d from x.
Word random_word_at_distance(const Word& x, int d, Rng& rng);

struct XiSuiteParams {
    std::vector<int> qs = {2, 3, 4};
    int n_max = 8;
    int s_max = 3;
    int closed_form_q_max = 6;
    int closed_form_len_max = 40;
    std::uint64_t seed = 1;
};
SuiteReport verify_xi(const XiSuiteParams& p = {});

struct Lemma2SuiteParams {
    int exhaustive_n_max = 6;  // q = 2, all pairs with 1 <= d <= 4
    std::vector<int> random_qs = {2, 3};
    int random_n = 9;
    int pairs_per_d = 500;
    std::uint64_t seed = 2;
};
SuiteReport verify_lemma2(const Lemma2SuiteParams& p = {});

struct CellsSuiteParams {
    std::vector<int> distance_qs = {2, 3};
    int distance_n_max = 7;       // deleted-pair distance identity, exhaustive
    int union_exhaustive_n_max = 6;  // cell union vs brute force at q = 2
    int random_union_pairs = 100;
    int lemma4_pairs = 200;
    std::uint64_t seed = 3;
};
SuiteReport verify_cells(const CellsSuiteParams& p = {});

struct TablesSuiteParams {
    std::vector<int> qs = {2, 3};
    int n = 12;
    int d_min = 2;
    int d_max = 6;
    int pairs_per_d = 1000;
    std::uint64_t seed = 4;
};
SuiteReport verify_lemma3_tables(const TablesSuiteParams& p = {});

struct ClaimsSuiteParams {
    std::vector<int> qs = {2, 3};
    int n_min = 6;
    int n_max = 10;
    int instances_per_q = 100;
    std::uint64_t seed = 5;
};
SuiteReport verify_claims(const ClaimsSuiteParams& p = {});

struct BoundSuiteParams {
    int q = 2;
    int n = 9;
    int fit_n_from = 12;
    int fit_n_to = 18;
    int onset_n_from = 8;
    int threads = 0;
};
SuiteReport verify_bound(const BoundSuiteParams& p = {});

}  // namespace delsub

#endif

#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "delsub/cells.hpp"
#include "delsub/rng.hpp"
#include "delsub/verify.hpp"

using namespace delsub;

namespace {

bool next_raw(std::string& raw, int q) {
    for (int i = static_cast<int>(raw.size()) - 1; i >= 0; --i) {
        if (static_cast<unsigned char>(raw[static_cast<std::size_t>(i)]) + 1 < q) {
            ++raw[static_cast<std::size_t>(i)];
            std::fill(raw.begin() + i + 1, raw.end(), '\0');
            return true;
        }
        raw[static_cast<std::size_t>(i)] = '\0';
    }
    return false;
}

}  // namespace

TEST_CASE("deleted-pair distance decomposition") {
    const CellIndex a = deletion_pair_distance(Word::parse("0011", 2), Word::parse("0101", 2), 1, 4);
    CHECK(a.deleted_distance == 1);
    CHECK(a.support_outside == 0);
    CHECK(a.delta == 1);

    const Word x = Word::parse("01201", 3);
    CHECK(deletion_pair_distance(x, x, 3, 3).deleted_distance == 0);

    const Word y = Word::parse("00100", 2);
    CHECK(deletion_pair_distance(y, y, 1, 3).deleted_distance == 1);

    CHECK_THROWS_AS(deletion_pair_distance(x, Word::parse("012", 3), 1, 1), DimensionError);
    CHECK_THROWS_AS(deletion_pair_distance(x, x, 0, 1), IndexError);
}

TEST_CASE("deleted-pair distance equals the direct computation (random)") {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const int q = k % 2 ? 3 : 2;
        const int n = 8;
        const Word x = random_word(q, n, rng);
        const Word xp = random_word(q, n, rng);
        const int j = 1 + static_cast<int>(uniform_below(rng, n));
        const int jp = 1 + static_cast<int>(uniform_below(rng, n));
        const CellIndex ci = deletion_pair_distance(x, xp, j, jp);
        CHECK(ci.deleted_distance == hamming(delete_at(x, j), delete_at(xp, jp)));
        CHECK(ci.deleted_distance == ci.support_outside + ci.delta);
    }
}

TEST_CASE("brute-force intersections") {
    const Word z = Word::parse("0101", 2);
    CHECK(brute_intersection(z, z, {1, 2}) == enum_ds_ball(z, {1, 2}));

    const WordSet m = brute_intersection(Word::parse("0000", 2), Word::parse("1111", 2), {1, 2});
    CHECK(m.size() == 6);  // the length-3 binary words of weight 1 or 2
    for (const Word& w : m) {
        int weight = 0;
        for (int i = 1; i <= 3; ++i) weight += w.at(i);
        CHECK(weight >= 1);
        CHECK(weight <= 2);
    }

    CHECK(brute_intersection(Word::parse("0000", 2), Word::parse("0011", 2), {0, 2}).size() == 8);
}

TEST_CASE("structural substitution intersection, case by case") {
    // d = 4: exactly the six two-and-two mixes
    const WordSet d4 = sub2_intersection_structural(Word::parse("0000", 2), Word::parse("1111", 2));
    std::vector<std::string> got;
    for (const Word& w : d4) got.push_back(w.str());
    CHECK(got == std::vector<std::string>{"0011", "0101", "0110", "1001", "1010", "1100"});

    // d = 1: free symbol at the support position, one substitution elsewhere
    CHECK(sub2_intersection_structural(Word::parse("000", 2), Word::parse("100", 2)).size() ==
          xi_d2_closed(2, 3, 1));

    // d = 3 at q = 2: 6q - 6
    CHECK(sub2_intersection_structural(Word::parse("000", 2), Word::parse("111", 2)).size() == 6);

    const Word u = Word::parse("0102", 3);
    CHECK_THROWS_AS(sub2_intersection_structural(u, u), DomainError);
    CHECK_THROWS_AS(
        sub2_intersection_structural(Word::parse("00000", 2), Word::parse("11111", 2)),
        DomainError);
}

TEST_CASE("structural generator equals brute force (exhaustive, q = 2, n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        std::string a(static_cast<std::size_t>(n), '\0');
        do {
            const Word u = Word::from_raw(a, 2);
            const WordSet bu = enum_sub_ball(u, 2);
            std::string b(static_cast<std::size_t>(n), '\0');
            do {
                const Word up = Word::from_raw(b, 2);
                const int d = hamming(u, up);
                if (d >= 1 && d <= 4)
                    CHECK(sub2_intersection_structural(u, up) ==
                          set_intersection(bu, enum_sub_ball(up, 2)));
            } while (next_raw(b, 2));
        } while (next_raw(a, 2));
    }
}

TEST_CASE("cells") {
    // adjacent transposition: deleting inside the swap leaves equal words
    const WordSet full = cell(Word::parse("0100", 2), Word::parse("0010", 2), 2, 3);
    CHECK(full.size() == 7);
    CHECK(full == enum_sub_ball(Word::parse("000", 2), 2));

    // far-apart deletions: distance >= 5 leaves an empty cell
    const Word alt1 = Word::parse("010101", 2);
    const Word alt2 = Word::parse("101010", 2);
    REQUIRE(deletion_pair_distance(alt1, alt2, 6, 6).deleted_distance >= 5);
    CHECK(cell(alt1, alt2, 6, 6).is_empty());

    CHECK(cell(Word::parse("10001", 2), Word::parse("00000", 2), 1, 1).size() == 8);
}

TEST_CASE("cell union equals brute force (exhaustive, q = 2, n <= 5)") {
    for (int n = 4; n <= 5; ++n) {
        std::string a(static_cast<std::size_t>(n), '\0');
        do {
            const Word x = Word::from_raw(a, 2);
            const WordSet bx = enum_ds_ball(x, {1, 2});
            std::string b = a;
            do {
                const Word xp = Word::from_raw(b, 2);
                CHECK(ds12_intersection_via_cells(x, xp) ==
                      set_intersection(bx, enum_ds_ball(xp, {1, 2})));
            } while (next_raw(b, 2));
        } while (next_raw(a, 2));
    }
}

TEST_CASE("cell union on the n = 12 alternating pair") {
    const Word x = Word::parse("101010101010", 2);
    const Word xp = Word::parse("100110101010", 2);
    const WordSet via = ds12_intersection_via_cells(x, xp);
    CHECK(via.size() == 238);
    CHECK(via == brute_intersection(x, xp, {1, 2}));
}

TEST_CASE("pair histogram bucketing matches a direct rescan") {
    Rng rng(21);
    for (int k = 0; k < 60; ++k) {
        const int q = k % 2 ? 3 : 2;
        const Word x = random_word(q, 10, rng);
        const Word xp = random_word_at_distance(x, 2 + static_cast<int>(uniform_below(rng, 5)), rng);
        const PairHistogram h = pair_distance_histogram(x, xp);
        CHECK(h.total() == static_cast<std::uint64_t>(h.m) * h.m_prime);

        // independent route: deleted-word Hamming distances plus a support scan
        std::map<std::tuple<int, int, int>, std::uint64_t> direct;
        const SupportDiff s = support_diff(x, xp);
        for (int j : run_profile(x).boundaries) {
            for (int jp : run_profile(xp).boundaries) {
                const int lo = std::min(j, jp), hi = std::max(j, jp);
                int outside = 0;
                for (int v : s.indices) outside += (v < lo || v > hi);
                const int dp = hamming(delete_at(x, j), delete_at(xp, jp));
                ++direct[{j <= jp ? 0 : 1, outside, std::min(dp, 5)}];
            }
        }
        for (const auto& [key, count] : direct) {
            const auto [ori, s_out, dp] = key;
            CHECK(h.counts[static_cast<std::size_t>(ori)][static_cast<std::size_t>(s_out)]
                          [static_cast<std::size_t>(dp)] == count);
        }
    }
}

TEST_CASE("pair histogram requires distance >= 2") {
    CHECK_THROWS_AS(pair_distance_histogram(Word::parse("0000", 2), Word::parse("0001", 2)),
                    DomainError);
}

TEST_CASE("histogram buckets respect the pair-count bounds") {
    Rng rng(22);
    for (int q : {2, 3}) {
        for (int d = 2; d <= 6; ++d) {
            for (int k = 0; k < 50; ++k) {
                const Word x = random_word(q, 12, rng);
                const Word xp = random_word_at_distance(x, d, rng);
                CHECK(!check_histogram_bounds(pair_distance_histogram(x, xp)).has_value());
            }
        }
    }
}

TEST_CASE("two-sided d = 2 column totals stay within n + 10") {
    Rng rng(23);
    int seen = 0;
    for (int k = 0; k < 200; ++k) {
        const Word a = random_word(2, 12, rng);
        const Word b = random_word_at_distance(a, 2, rng);
        const PairHistogram h = pair_distance_histogram(a, b);
        if (!h.two_sided) continue;
        ++seen;
        CHECK(h.column_total(2) <= static_cast<std::uint64_t>(h.n) + 10);
    }
    CHECK(seen > 20);
    // 10001 vs 00000: both deleted-word equalities fail
    CHECK(pair_distance_histogram(Word::parse("10001", 2), Word::parse("00000", 2)).two_sided);
}

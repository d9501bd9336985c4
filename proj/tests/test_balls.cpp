#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "delsub/balls.hpp"
#include "delsub/rng.hpp"

using namespace delsub;

namespace {

std::vector<std::string> strings_of(const WordSet& s) {
    std::vector<std::string> out;
    for (const Word& w : s) out.push_back(w.str());
    return out;
}

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

TEST_CASE("substitution balls") {
    CHECK(strings_of(enum_sub_ball(Word::parse("010", 2), 1)) ==
          std::vector<std::string>{"000", "010", "011", "110"});
    CHECK(strings_of(enum_sub_ball(Word::parse("00", 2), 0)) == std::vector<std::string>{"00"});
    CHECK(enum_sub_ball(Word::parse("0000", 3), 2).size() == 33);  // 1 + 4*2 + 6*4
}

TEST_CASE("deletion balls") {
    CHECK(strings_of(enum_del_ball(Word::parse("0011", 2), 1)) ==
          std::vector<std::string>{"001", "011"});
    CHECK(strings_of(enum_del_ball(Word::parse("0000", 2), 1)) == std::vector<std::string>{"000"});
    CHECK(enum_del_ball(Word::parse("0101", 2), 1).size() == 4);
    CHECK_THROWS_AS(enum_del_ball(Word::parse("01", 2), 2), SpecError);
}

TEST_CASE("deletion-substitution balls") {
    CHECK_THROWS_AS(enum_ds_ball(Word::parse("00", 2), {1, 1}), SpecError);
    CHECK(strings_of(enum_ds_ball(Word::parse("000", 2), {1, 1})) ==
          std::vector<std::string>{"00", "01", "10"});
    const WordSet b = enum_ds_ball(Word::parse("0000", 2), {1, 2});
    CHECK(b.size() == 7);  // every length-3 binary word except 111
    CHECK(!b.contains(Word::parse("111", 2)));
}

TEST_CASE("ds balls grow with the substitution budget") {
    Rng rng(99);
    for (int k = 0; k < 30; ++k) {
        std::string raw(7, '\0');
        for (auto& c : raw) c = static_cast<char>(uniform_below(rng, 3));
        const Word x = Word::from_raw(raw, 3);
        WordSet prev = enum_ds_ball(x, {1, 0});
        for (int s = 1; s <= 3; ++s) {
            const WordSet cur = enum_ds_ball(x, {1, s});
            CHECK(cur.includes(prev));
            prev = cur;
        }
    }
}

TEST_CASE("xi_0s") {
    CHECK(xi_0s(2, 4, 2) == 11);
    CHECK(xi_0s(5, 9, 0) == 1);
    CHECK(xi_0s(2, 7, 2) == 29);  // (8^2 - 8 + 2) / 2 in the shifted-index form
    CHECK(xi_02_closed(2, 7) == 29);
    CHECK_THROWS_AS(xi_0s(2, 4, 5), DomainError);
    CHECK_THROWS_AS(xi_0s(2, 4, -1), DomainError);
}

TEST_CASE("xi_ds") {
    CHECK(xi_ds({2, 4, 2, 2}) == 8);  // binary specialization 2(n-1)
    CHECK(xi_ds({2, 6, 3, 2}) == 6);
    CHECK(xi_ds({3, 6, 1, 2}) == 33);
    CHECK_THROWS_AS(xi_ds({2, 4, 0, 2}), DomainError);
    CHECK_THROWS_AS(xi_ds({2, 6, 5, 2}), DomainError);  // d > 2s: callers use the zero case
    CHECK_THROWS_AS(xi_ds({2, 1, 2, 2}), DomainError);  // n < d
}

TEST_CASE("xi_d2_closed") {
    CHECK(xi_d2_closed(2, 4, 1) == 8);
    CHECK(xi_d2_closed(2, 11, 4) == 6);
    CHECK(xi_d2_closed(2, 7, 3) == 6);  // 6q - 6 at q = 2
    CHECK(xi_d2_closed(3, 7, 2) == 29);
    CHECK(xi_d2_closed(3, 7, 2) == xi_ds({3, 7, 2, 2}));
    CHECK_THROWS_AS(xi_d2_closed(2, 7, 5), DomainError);
    CHECK_THROWS_AS(xi_d2_closed(2, 1, 2), DomainError);
}

TEST_CASE("enumerated sub-ball sizes match the formula (exhaustive, small)") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 5; ++n) {
            for (int s = 0; s <= std::min(3, n); ++s) {
                const std::uint64_t expect = xi_0s(q, n, s);
                std::string raw(static_cast<std::size_t>(n), '\0');
                do {
                    CHECK(enum_sub_ball(Word::from_raw(raw, q), s).size() == expect);
                } while (next_raw(raw, q));
            }
        }
    }
}

TEST_CASE("enumeration guardrails") {
    const Word big = Word::from_raw(std::string(25, '\0'), 2);  // q^n over the cap
    CHECK_THROWS_AS(enum_sub_ball(big, 1), GuardrailError);
    CHECK(enum_sub_ball(big, 1, {true}).size() == 26);  // force overrides

    // candidate estimate cap: 24 * sum_{k<=12} C(23,k) is ~100M
    const Word mid = Word::from_raw(std::string(24, '\0'), 2);
    CHECK_THROWS_AS(enum_ds_ball(mid, {1, 12}), GuardrailError);
}

TEST_CASE("exact counting refuses to overflow") {
    CHECK_THROWS_AS(xi_0s(36, 10000, 5000), OverflowError);
    CHECK_THROWS_AS(detail::binomial(10000, 5000), OverflowError);
    CHECK(xi_0s(36, 10000, 3) == 1ull + 10000ull * 35 + detail::binomial(10000, 2) * 35 * 35 +
                                     detail::binomial(10000, 3) * 35 * 35 * 35);
}

TEST_CASE("generic path agrees with canonical ordering above the packing width") {
    // length 22 over q = 8 exceeds one 64-bit key (3 bits * 22 = 66), so the
    // unpacked path runs; the universe guardrail must be overridden to get there
    std::string raw(22, '\0');
    raw[0] = 7;
    const Word x = Word::from_raw(raw, 8);
    const WordSet d = enum_del_ball(x, 1, {true});
    CHECK(d.size() == run_profile(x).m());
    CHECK(std::is_sorted(d.begin(), d.end()));

    const WordSet s = enum_sub_ball(x, 1, {true});
    CHECK(s.size() == xi_0s(8, 22, 1));
    CHECK(std::is_sorted(s.begin(), s.end()));
}

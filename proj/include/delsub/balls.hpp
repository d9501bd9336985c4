#ifndef DELSUB_BALLS_HPP
#define DELSUB_BALLS_HPP

#include <cstdint>

#include "delsub/word.hpp"
#include "delsub/wordset.hpp"

namespace delsub {

/// Channel parameters: exactly `deletions` deletions, at most
/// `max_substitutions` substitutions. Valid for a word of length n
/// when deletions + max_substitutions < n.
struct BallSpec {
    int deletions = 0;          // t
    int max_substitutions = 0;  // s
};

/// Arguments of the intersection-size formula xi^{q,n}_{d,s}.
struct XiQuery {
    int q = 2;
    std::int64_t n = 0;
    int d = 0;
    int s = 0;
};

/// |B^S_s(u)| = sum_{k<=s} C(n,k) (q-1)^k. Exact; throws OverflowError
/// rather than wrapping.
std::uint64_t xi_0s(int q, std::int64_t n, int s);

/// |B^S_s(u,u')| for d_H(u,u') = d, 1 <= d <= 2s (callers handle the
/// zero case d >= 2s+1 themselves). Exact.
std::uint64_t xi_ds(const XiQuery& query);

/// Closed form of xi^{q,length}_{d,2} for d in {1,2,3,4}; `length` is the
/// length of the compared words. Agrees with xi_ds at s = 2.
std::uint64_t xi_d2_closed(int q, std::int64_t length, int d);

/// Closed form of xi^{q,length}_{0,2}; agrees with xi_0s(q, length, 2).
std::uint64_t xi_02_closed(int q, std::int64_t length);

/// Enumeration guardrails. Enumeration refuses when q^n exceeds
/// kMaxUniverse (n > 24 at q = 2, correspondingly less for larger q) or the
/// candidate count estimate exceeds kMaxCandidates; `force` overrides.
struct EnumLimits {
    bool force = false;
    static constexpr std::uint64_t kMaxUniverse = std::uint64_t(1) << 24;
    static constexpr std::uint64_t kMaxCandidates = 20'000'000;
};

/// All words within Hamming distance s of u.
WordSet enum_sub_ball(const Word& u, int s, EnumLimits limits = {});

/// All subsequences of x of length n - t.
WordSet enum_del_ball(const Word& x, int t, EnumLimits limits = {});

/// B^DS_{t,s}(x): exactly t deletions then at most s substitutions.
WordSet enum_ds_ball(const Word& x, BallSpec spec, EnumLimits limits = {});

namespace detail {
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t binomial(std::int64_t n, std::int64_t k);
std::uint64_t checked_pow(std::uint64_t base, int exp);
/// Estimated number of generated candidates for enum_ds_ball.
std::uint64_t ds_candidate_estimate(int q, int n, const BallSpec& spec);
void check_enum_guardrail(int q, int n, std::uint64_t candidates, const EnumLimits& limits);
}  // namespace detail

}  // namespace delsub

#endif

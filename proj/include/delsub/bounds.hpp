#ifndef DELSUB_BOUNDS_HPP
#define DELSUB_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "delsub/cells.hpp"
#include "delsub/word.hpp"

namespace delsub {

enum class D2Subcase {
    TransposedAdjacent,  // both deleted-word equalities hold: x = w a b w', x' = w b a w'
    OneSided,            // exactly one holds: x = w a b^s0 b w', x' = w b b^s0 c w' (maybe mirrored)
    TwoSided,            // neither holds
};

const char* to_string(D2Subcase s);

/// Decomposition of a Hamming-distance-2 pair:
///   x  = prefix x_i1  mid x_i2  suffix
///   x' = prefix x'_i1 mid x'_i2 suffix
/// plus subcase labels (a, b, c), the OneSided gap sigma0, and, for
/// TransposedAdjacent forms produced by canonical_d2_form, the
/// run-extension parameters sigma1/sigma2/sigma1'/sigma2' and the run
/// indices tau/tau' of i1 in x and x'.
struct CanonicalD2Form {
    D2Subcase subcase = D2Subcase::TwoSided;
    int q = 2;
    int n = 0;
    int i1 = 0, i2 = 0;

    std::string prefix, mid, suffix;      // raw symbol bytes; may be empty
    Symbol x_i1 = 0, x_i2 = 0, xp_i1 = 0, xp_i2 = 0;

    Symbol a = 0, b = 0, c = 0;  // c is meaningful for OneSided only
    int sigma0 = 0;              // OneSided: i2 - i1 - 1
    bool mirrored = false;       // OneSided with only x_del(i2) == x'_del(i1)

    int sigma1 = 0, sigma2 = 0, sigma1_prime = 0, sigma2_prime = 0;
    int tau = 0, tau_prime = 0;

    std::pair<Word, Word> reconstruct() const;
};

/// Tests the two deleted-word equalities and returns the subcase with the
/// decomposition. Requires d_H(x, x') = 2.
CanonicalD2Form classify_d2(const Word& x, const Word& x_prime);

/// classify_d2 plus sigma/tau run parameters; requires the
/// TransposedAdjacent subcase.
CanonicalD2Form canonical_d2_form(const Word& x, const Word& x_prime);

/// (q^2-1) n^2 - (3q^2+5q-5) n + c.
std::int64_t theorem_bound(int q, std::int64_t n, std::int64_t c);

/// The alternating adjacent-transposition pair: x = 101010 A_{n-6}(10),
/// x' = 100110 A_{n-6}(10), embedded in Sigma_q. Requires even n >= 8.
std::pair<Word, Word> extremal_pair(int q, int n);

/// Exact rational on 64-bit numerator/denominator, always normalized,
/// denominator positive. Overflow throws rather than wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t value) : num(value), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    Rational operator+(const Rational&) const;
    Rational operator-(const Rational&) const;
    Rational operator*(const Rational&) const;
    Rational operator/(const Rational&) const;
    friend bool operator==(const Rational&, const Rational&) = default;

    bool is_integer() const { return den == 1; }
    std::string str() const;
};

struct QuadraticFit {
    Rational a, b, c;
    bool consistent = false;  // every point lies on the quadratic through the first three
};

/// Exact interpolation through the first three points; requires >= 3 points
/// with pairwise distinct abscissae.
QuadraticFit fit_quadratic(std::span<const std::pair<std::int64_t, std::int64_t>> points);

/// Exact cell-size predictions for an adjacent-transposition pair of
/// length n (n >= 6):
///   e_union        = |E^{i1} u E^{i2}| = 2 xi^{q,n-1}_{0,2} - xi^{q,n-1}_{1,2}
///   diff_two_ahead = |E^{j_l}_{j_l} \ (E^{j_{l+1}}_{j_{l+1}} u E^{j_{l+2}}_{j_{l+2}})|
///   diff_one_ahead = |E^{j_l}_{j_l} \ E^{j_{l+1}}_{j_{l+1}}|
struct ClaimCellPredictions {
    std::uint64_t e_union = 0;
    std::uint64_t diff_two_ahead = 0;  // 2(q-1)n + q^2 - 8q + 4
    std::uint64_t diff_one_ahead = 0;  // 2(q-1)n + q^2 - 8q + 6
};
ClaimCellPredictions claim_cell_predictions(int q, std::int64_t n);

/// Seeded construction of an adjacent-transposition pair with prescribed
/// run structure: tau - 1 single-symbol runs before the a-run, extensions
/// sigma1/sigma2, remainder filled with single-symbol runs.
struct TransposedAdjacentInstance {
    Word x;
    Word x_prime;
    int i1 = 0;
};
TransposedAdjacentInstance make_transposed_adjacent(int q, int n, int tau, int sigma1, int sigma2,
                                                    std::uint64_t seed);

/// Exhaustive scan of |B^DS_{1,2}(x, x')| over all unordered pairs with
/// d_H >= 2 in Sigma_q^n. Ties broken by lexicographically smallest pair.
struct PairScanResult {
    std::uint64_t max_size = 0;
    Word arg_x;
    Word arg_x_prime;
    std::map<int, std::uint64_t> max_by_distance;
    std::uint64_t pairs_scanned = 0;
};
PairScanResult max_intersection_exhaustive(int q, int n, int threads = 0);

/// Brute-force |B^DS_{1,2}| sizes of the extremal family over even n in
/// [n_from, n_to].
std::vector<std::pair<std::int64_t, std::int64_t>> extremal_sizes(int q, int n_from, int n_to);

}  // namespace delsub

#endif

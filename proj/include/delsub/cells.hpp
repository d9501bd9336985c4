#ifndef DELSUB_CELLS_HPP
#define DELSUB_CELLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delsub/balls.hpp"
#include "delsub/word.hpp"
#include "delsub/wordset.hpp"

namespace delsub {

/// One entry of the deleted-pair distance decomposition: deleting position
/// j from x and j' from x' leaves words at Hamming distance
/// deleted_distance = support_outside + delta, where the window is the
/// closed interval [j, j'] (or [j', j] when j > j') and delta counts the
/// misaligned adjacent coordinates inside it.
struct CellIndex {
    int j = 0;
    int j_prime = 0;
    int deleted_distance = 0;  // d'
    int support_outside = 0;   // |supp(x - x') \ window|
    int delta = 0;             // Delta (j <= j') or Delta' (j > j')
};

CellIndex deletion_pair_distance(const Word& x, const Word& x_prime, int j, int j_prime);

/// B^DS_{t,s}(x) intersected with B^DS_{t,s}(x') by enumerating both balls.
WordSet brute_intersection(const Word& x, const Word& x_prime, BallSpec spec, EnumLimits limits = {});

/// B^S_2(u,u') built from the structural case templates, without
/// enumerating either ball. Requires 1 <= d_H(u,u') <= 4; d = 0 (full ball)
/// and d >= 5 (empty) are signaled as DomainError rather than returned.
WordSet sub2_intersection_structural(const Word& u, const Word& u_prime);

/// The cell E^j_{j'} = B^S_2(x with j deleted, x' with j' deleted) of the
/// one-deletion two-substitution intersection, of word length n-1.
WordSet cell(const Word& x, const Word& x_prime, int j, int j_prime);

/// B^DS_{1,2}(x,x') as the union of cells over run-end representatives of
/// x and x' (m*m' cells instead of n^2).
WordSet ds12_intersection_via_cells(const Word& x, const Word& x_prime);

/// Counts of run-end pairs (j_i, j'_{i'}) bucketed by orientation
/// (j <= j' vs j > j'), by |supp \ window|, and by deleted-pair distance
/// d' (values 0..4 plus a single >=5 bucket).
struct PairHistogram {
    int n = 0;
    int d = 0;
    bool two_sided = false;  // meaningful for d == 2 only
    int m = 0, m_prime = 0;
    // counts[orientation][s_out][d' bucket]; orientation 0: j <= j', 1: j > j'
    std::array<std::vector<std::array<std::uint64_t, 6>>, 2> counts;

    std::uint64_t total() const;
    std::uint64_t column_total(int d_prime_bucket) const;
};

PairHistogram pair_distance_histogram(const Word& x, const Word& x_prime);

/// Per-bucket ceiling implied by the pair-count lemma; the same rule
/// reproduces every entry of the published d = 2 (two-sided), d = 3, d = 4
/// and d >= 5 tables. Unbounded buckets (d' >= 5) return nullopt.
std::optional<std::uint64_t> histogram_bucket_bound(int d, bool two_sided, int orientation,
                                                    int s_out, int d_prime, int n);

/// Nullopt when every bucket respects its bound, else a description of the
/// first violation.
std::optional<std::string> check_histogram_bounds(const PairHistogram& h);

}  // namespace delsub

#endif

#ifndef DELSUB_RECON_HPP
#define DELSUB_RECON_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "delsub/balls.hpp"
#include "delsub/rng.hpp"
#include "delsub/word.hpp"
#include "delsub/wordset.hpp"

namespace delsub {

/// A set of distinct codewords sharing length and alphabet.
class Code {
public:
    static Code of(std::vector<Word> words);

    /// Text format: optional first line `q=<int> n=<int>`, one codeword per
    /// line, `#` starts a comment, blank lines ignored. Duplicates and
    /// header/override mismatches are LoadErrors. The alphabet must come
    /// from the header or the override.
    static Code load(std::istream& in, std::optional<int> q_override = std::nullopt,
                     std::optional<int> n_override = std::nullopt);

    int length() const { return n_; }
    int q() const { return q_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }

private:
    int n_ = 0;
    int q_ = 0;
    std::vector<Word> words_;  // sorted, distinct
};

int min_hamming_distance(const Code& code);

struct CoverageOptions {
    bool force_exhaustive = false;
    std::optional<std::uint64_t> sample_pairs;  // when set, random-pair lower bound
    std::uint64_t seed = 0;                     // used by sampling only
    /// Refuse exhaustive scans above this many ball-membership operations
    /// unless forced.
    std::uint64_t op_budget = 10'000'000;
};

struct CoverageResult {
    std::uint64_t nu = 0;
    Word witness_x;
    Word witness_x_prime;
    bool exact = true;  // false for sampled lower bounds
    std::uint64_t pairs_examined = 0;
};

/// nu(C; B^DS_{1,2}) with a lexicographically smallest witness pair.
CoverageResult read_coverage(const Code& code, CoverageOptions options = {});

bool is_reconstruction_code(const Code& code, std::uint64_t N, CoverageOptions options = {});

enum class SampleMode { UniformBall, Process };
const char* to_string(SampleMode m);

/// One channel output drawn from B^DS_{1,2}(x). UniformBall is uniform over
/// the distinct ball elements; Process draws a deletion position, a
/// substitution count in {0,1,2}, positions and replacement symbols
/// uniformly (its output law over the ball is nonuniform).
Word channel_sample(const Word& x, SampleMode mode, Rng& rng);

struct ReadSet {
    std::vector<Word> reads;  // pairwise distinct
    std::optional<Word> source;
};

/// N pairwise distinct elements of B^DS_{1,2}(x); throws CapacityError
/// (reporting the ball size) when N exceeds it.
ReadSet sample_distinct_reads(const Word& x, std::size_t N, SampleMode mode, Rng& rng);

/// True iff r is in B^DS_{1,2}(c), decided by the distance decomposition
/// (some deletion position leaves Hamming distance <= 2), never by
/// materializing the ball.
bool ball_contains(const Word& c, const Word& r);

/// Codewords whose ball contains every read, in lexicographic order.
std::vector<Word> decode(const ReadSet& reads, const Code& code);

struct SimulationParams {
    std::size_t reads = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::UniformBall;
};

struct SimulationResult {
    std::size_t trials = 0;
    std::size_t unique_correct = 0;
    std::size_t ambiguous = 0;   // source among several candidates
    std::size_t wrong = 0;       // source not decoded (soundness says never)
    std::size_t eligible_codewords = 0;
    std::size_t ineligible_codewords = 0;  // ball smaller than the read count
};

/// Seeded reconstruction trials: each trial transmits a codeword drawn
/// uniformly from those whose ball holds at least `reads` distinct
/// elements, samples that many distinct reads, and decodes against the
/// code. Codewords with smaller balls cannot emit the requested number of
/// distinct reads; they are counted as ineligible and never transmitted.
/// Throws CapacityError when no codeword is eligible.
SimulationResult simulate_reconstruction(const Code& code, const SimulationParams& params);

}  // namespace delsub

#endif

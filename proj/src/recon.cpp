#include "delsub/recon.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <sstream>
#include <string>

namespace delsub {

Code Code::of(std::vector<Word> words) {
    if (words.empty()) throw DomainError("a code needs at least one codeword");
    const int n = words.front().length();
    const int q = words.front().q();
    for (const Word& w : words)
        if (w.length() != n || w.q() != q)
            throw DimensionError("codewords must share length and alphabet");
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw LoadError("duplicate codeword");
    Code c;
    c.n_ = n;
    c.q_ = q;
    c.words_ = std::move(words);
    return c;
}

Code Code::load(std::istream& in, std::optional<int> q_override, std::optional<int> n_override) {
    std::optional<int> q_header, n_header;
    std::vector<std::string> lines;
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        std::string content = line.substr(begin, end - begin + 1);
        if (first_content && content.find('=') != std::string::npos) {
            std::istringstream hs(content);
            std::string token;
            while (hs >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
                    throw LoadError("malformed header token: " + token);
                const std::string key = token.substr(0, eq);
                int value = 0;
                try {
                    value = std::stoi(token.substr(eq + 1));
                } catch (const std::exception&) {
                    throw LoadError("malformed header value: " + token);
                }
                if (key == "q") q_header = value;
                else if (key == "n") n_header = value;
                else throw LoadError("unknown header key: " + key);
            }
            first_content = false;
            continue;
        }
        first_content = false;
        lines.push_back(std::move(content));
    }

    if (q_override && q_header && *q_override != *q_header)
        throw LoadError("alphabet override disagrees with file header");
    if (n_override && n_header && *n_override != *n_header)
        throw LoadError("length override disagrees with file header");
    const std::optional<int> q = q_override ? q_override : q_header;
    const std::optional<int> n = n_override ? n_override : n_header;
    if (!q) throw LoadError("alphabet size not specified (no header and no override)");
    if (lines.empty()) throw LoadError("code file contains no codewords");

    std::vector<Word> words;
    words.reserve(lines.size());
    for (const std::string& text : lines) {
        try {
            Word w = Word::parse(text, *q);
            if (n && w.length() != *n)
                throw LoadError("codeword '" + text + "' does not have the declared length");
            words.push_back(std::move(w));
        } catch (const DomainError& e) {
            throw LoadError("bad codeword '" + text + "': " + e.what());
        }
    }
    try {
        return Code::of(std::move(words));
    } catch (const DimensionError& e) {
        throw LoadError(e.what());
    }
}

int min_hamming_distance(const Code& code) {
    if (code.size() < 2) throw DomainError("minimum distance needs at least two codewords");
    const auto& ws = code.words();
    int best = code.length() + 1;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            best = std::min(best, hamming(ws[i], ws[j]));
    return best;
}

namespace {

std::uint64_t intersection_count(const WordSet& a, const WordSet& b) {
    std::uint64_t count = 0;
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else { ++count; ++it; ++jt; }
    }
    return count;
}

}  // namespace

CoverageResult read_coverage(const Code& code, CoverageOptions options) {
    if (code.size() < 2) throw DomainError("read coverage needs at least two codewords");
    if (code.length() < 4) throw DomainError("read coverage needs n >= 4");

    const std::uint64_t ball_estimate =
        detail::ds_candidate_estimate(code.q(), code.length(), {1, 2});
    const std::uint64_t pair_count = code.size() * (code.size() - 1) / 2;
    const std::uint64_t op_estimate = pair_count * ball_estimate;

    std::vector<std::size_t> xs, ys;  // pair index lists, lexicographic
    bool exact = true;
    if (options.sample_pairs && !options.force_exhaustive && op_estimate > options.op_budget) {
        exact = false;
        Rng rng(options.seed);
        for (std::uint64_t k = 0; k < *options.sample_pairs; ++k) {
            std::size_t i = static_cast<std::size_t>(uniform_below(rng, code.size()));
            std::size_t j = static_cast<std::size_t>(uniform_below(rng, code.size() - 1));
            if (j >= i) ++j;
            xs.push_back(std::min(i, j));
            ys.push_back(std::max(i, j));
        }
    } else {
        if (op_estimate > options.op_budget && !options.force_exhaustive)
            throw GuardrailError("read coverage scan estimated at " + std::to_string(op_estimate) +
                                 " operations; pass force or a sampling budget");
        for (std::size_t i = 0; i < code.size(); ++i)
            for (std::size_t j = i + 1; j < code.size(); ++j) {
                xs.push_back(i);
                ys.push_back(j);
            }
    }

    // balls computed once per codeword
    std::vector<WordSet> balls;
    balls.reserve(code.size());
    for (const Word& w : code.words()) balls.push_back(enum_ds_ball(w, {1, 2}));

    std::uint64_t best = 0;
    std::size_t bi = 0, bj = 1;
    bool any = false;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const std::uint64_t v = intersection_count(balls[xs[k]], balls[ys[k]]);
        if (!any || v > best ||
            (v == best && (xs[k] < bi || (xs[k] == bi && ys[k] < bj)))) {
            best = v;
            bi = xs[k];
            bj = ys[k];
            any = true;
        }
    }
    return CoverageResult{best, code.words()[bi], code.words()[bj], exact,
                          static_cast<std::uint64_t>(xs.size())};
}

bool is_reconstruction_code(const Code& code, std::uint64_t N, CoverageOptions options) {
    if (N < 1) throw DomainError("read count must be >= 1");
    options.force_exhaustive = true;  // the definition needs the exact maximum
    return read_coverage(code, options).nu < N;
}

const char* to_string(SampleMode m) {
    return m == SampleMode::UniformBall ? "uniform-ball" : "process";
}

Word channel_sample(const Word& x, SampleMode mode, Rng& rng) {
    const int n = x.length();
    if (n < 4) throw DomainError("channel sampling needs n >= 4");
    if (mode == SampleMode::UniformBall) {
        const WordSet ball = enum_ds_ball(x, {1, 2});
        return ball.words()[static_cast<std::size_t>(uniform_below(rng, ball.size()))];
    }
    // process mode: deletion position, then 0..2 substitutions
    const int q = x.q();
    const int del = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))) + 1;
    std::string raw = delete_at(x, del).raw();
    const int subs = static_cast<int>(uniform_below(rng, 3));
    const int len = n - 1;
    // distinct positions without replacement
    int p1 = -1, p2 = -1;
    if (subs >= 1) p1 = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(len)));
    if (subs >= 2) {
        p2 = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(len - 1)));
        if (p2 >= p1) ++p2;
    }
    for (int p : {p1, p2}) {
        if (p < 0) continue;
        const auto cur = static_cast<std::uint64_t>(static_cast<unsigned char>(raw[static_cast<std::size_t>(p)]));
        std::uint64_t c = uniform_below(rng, static_cast<std::uint64_t>(q - 1));
        if (c >= cur) ++c;
        raw[static_cast<std::size_t>(p)] = static_cast<char>(c);
    }
    return Word::from_raw(std::move(raw), q);
}

ReadSet sample_distinct_reads(const Word& x, std::size_t N, SampleMode mode, Rng& rng) {
    const WordSet ball = enum_ds_ball(x, {1, 2});
    if (N > ball.size())
        throw CapacityError("requested " + std::to_string(N) + " distinct reads but the ball has " +
                                std::to_string(ball.size()) + " elements",
                            ball.size());
    ReadSet rs;
    rs.source = x;
    rs.reads.reserve(N);
    if (mode == SampleMode::UniformBall) {
        // partial Fisher-Yates over ball indices: uniform without replacement
        std::vector<std::uint32_t> idx(ball.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < N; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(idx.size() - i)));
            std::swap(idx[i], idx[j]);
            rs.reads.push_back(ball.words()[idx[i]]);
        }
        return rs;
    }
    std::vector<Word> seen;
    while (rs.reads.size() < N) {
        Word w = channel_sample(x, mode, rng);
        auto it = std::lower_bound(seen.begin(), seen.end(), w);
        if (it != seen.end() && *it == w) continue;
        seen.insert(it, w);
        rs.reads.push_back(std::move(w));
    }
    return rs;
}

bool ball_contains(const Word& c, const Word& r) {
    if (r.length() != c.length() - 1 || r.q() != c.q())
        throw DimensionError("read must be one symbol shorter than the codeword");
    const std::string& cs = c.raw();
    const std::string& rs = r.raw();
    const int len = r.length();
    // d_H(c with position j deleted, r) <= 2 for some j; prefix mismatches
    // are shared across j, so track them incrementally
    int prefix_mismatch = 0;
    for (int j = 0; j <= len; ++j) {  // j = 0-based deletion index into c
        if (prefix_mismatch <= 2) {
            int d = prefix_mismatch;
            for (int i = j; i < len && d <= 2; ++i)
                d += (cs[static_cast<std::size_t>(i + 1)] != rs[static_cast<std::size_t>(i)]);
            if (d <= 2) return true;
        }
        if (j < len)
            prefix_mismatch += (cs[static_cast<std::size_t>(j)] != rs[static_cast<std::size_t>(j)]);
        if (prefix_mismatch > 2) break;  // every later deletion keeps these mismatches
    }
    return false;
}

std::vector<Word> decode(const ReadSet& reads, const Code& code) {
    std::vector<Word> out;
    for (const Word& c : code.words()) {
        bool all = true;
        for (const Word& r : reads.reads)
            if (!ball_contains(c, r)) {
                all = false;
                break;
            }
        if (all) out.push_back(c);
    }
    return out;  // code words are already sorted
}

SimulationResult simulate_reconstruction(const Code& code, const SimulationParams& params) {
    if (params.reads < 1) throw DomainError("need at least one read per trial");
    SimulationResult res;
    res.trials = params.trials;

    std::vector<std::size_t> eligible;
    std::size_t max_ball = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::uint64_t size = enum_ds_ball(code.words()[i], {1, 2}).size();
        max_ball = std::max<std::size_t>(max_ball, size);
        if (size >= params.reads) eligible.push_back(i);
    }
    res.eligible_codewords = eligible.size();
    res.ineligible_codewords = code.size() - eligible.size();
    if (eligible.empty())
        throw CapacityError("no codeword ball holds " + std::to_string(params.reads) +
                                " distinct reads (largest ball: " + std::to_string(max_ball) + ")",
                            max_ball);

    Rng rng(params.seed);
    for (std::size_t t = 0; t < params.trials; ++t) {
        const Word& x =
            code.words()[eligible[static_cast<std::size_t>(uniform_below(rng, eligible.size()))]];
        const ReadSet rs = sample_distinct_reads(x, params.reads, params.mode, rng);
        const std::vector<Word> candidates = decode(rs, code);
        const bool has_source = std::binary_search(candidates.begin(), candidates.end(), x);
        if (!has_source) ++res.wrong;
        else if (candidates.size() == 1) ++res.unique_correct;
        else ++res.ambiguous;
    }
    return res;
}

}  // namespace delsub

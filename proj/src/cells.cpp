#include "delsub/cells.hpp"

#include <algorithm>
#include <cassert>

namespace delsub {

CellIndex deletion_pair_distance(const Word& x, const Word& x_prime, int j, int j_prime) {
    detail::require_same_shape(x, x_prime);
    const int n = x.length();
    if (j < 1 || j > n || j_prime < 1 || j_prime > n)
        throw IndexError("deletion position out of range");

    const std::string& a = x.raw();
    const std::string& b = x_prime.raw();
    CellIndex ci;
    ci.j = j;
    ci.j_prime = j_prime;
    const int lo = std::min(j, j_prime);
    const int hi = std::max(j, j_prime);
    for (int i = 1; i <= n; ++i)
        if (a[static_cast<std::size_t>(i - 1)] != b[static_cast<std::size_t>(i - 1)] && (i < lo || i > hi))
            ++ci.support_outside;
    if (j <= j_prime) {
        // Delta_{[j,j']}: i in [j, j'-1] with x'_i != x_{i+1}
        for (int i = j; i <= j_prime - 1; ++i)
            if (b[static_cast<std::size_t>(i - 1)] != a[static_cast<std::size_t>(i)]) ++ci.delta;
    } else {
        // Delta'_{[j',j]}: i in [j', j-1] with x_i != x'_{i+1}
        for (int i = j_prime; i <= j - 1; ++i)
            if (a[static_cast<std::size_t>(i - 1)] != b[static_cast<std::size_t>(i)]) ++ci.delta;
    }
    ci.deleted_distance = ci.support_outside + ci.delta;
    return ci;
}

WordSet brute_intersection(const Word& x, const Word& x_prime, BallSpec spec, EnumLimits limits) {
    detail::require_same_shape(x, x_prime);
    return set_intersection(enum_ds_ball(x, spec, limits), enum_ds_ball(x_prime, spec, limits));
}

namespace {

void emit_context_substitutions(const std::string& base, const std::vector<int>& ctx0, int q,
                                std::vector<std::string>& out) {
    // exactly one substitution at a context position
    for (int p : ctx0) {
        std::string w = base;
        const char orig = base[static_cast<std::size_t>(p)];
        for (int c = 0; c < q; ++c) {
            if (c == orig) continue;
            w[static_cast<std::size_t>(p)] = static_cast<char>(c);
            out.push_back(w);
        }
    }
}

}  // namespace

WordSet sub2_intersection_structural(const Word& u, const Word& u_prime) {
    detail::require_same_shape(u, u_prime);
    const int n = u.length();
    const int q = u.q();
    const std::string& a = u.raw();
    const std::string& b = u_prime.raw();

    std::vector<int> supp0;  // 0-based support positions
    for (int i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) supp0.push_back(i);
    const int d = static_cast<int>(supp0.size());
    if (d == 0)
        throw DomainError("equal words: B^S_2(u,u) is the full substitution ball, not a structural case");
    if (d >= 5)
        throw DomainError("distance exceeds 4: B^S_2(u,u') is empty");

    std::vector<int> ctx0;
    ctx0.reserve(static_cast<std::size_t>(n - d));
    {
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            if (k < supp0.size() && supp0[k] == i) { ++k; continue; }
            ctx0.push_back(i);
        }
    }

    std::vector<std::string> out;
    switch (d) {
        case 1: {
            // free symbol at i1, context unchanged or with one substitution
            const int i1 = supp0[0];
            for (int v = 0; v < q; ++v) {
                std::string w = a;
                w[static_cast<std::size_t>(i1)] = static_cast<char>(v);
                out.push_back(w);
                emit_context_substitutions(w, ctx0, q, out);
            }
            break;
        }
        case 2: {
            const int i1 = supp0[0], i2 = supp0[1];
            // (i) context exact, both support symbols free
            std::size_t exact_count = 0;
            for (int v = 0; v < q; ++v) {
                for (int vp = 0; vp < q; ++vp) {
                    std::string w = a;
                    w[static_cast<std::size_t>(i1)] = static_cast<char>(v);
                    w[static_cast<std::size_t>(i2)] = static_cast<char>(vp);
                    out.push_back(std::move(w));
                    ++exact_count;
                }
            }
            // (ii) one context substitution, support pair crossed
            const std::array<std::pair<char, char>, 2> cross = {
                std::pair<char, char>{a[static_cast<std::size_t>(i1)], b[static_cast<std::size_t>(i2)]},
                std::pair<char, char>{b[static_cast<std::size_t>(i1)], a[static_cast<std::size_t>(i2)]}};
            std::size_t before = out.size();
            for (const auto& [v, vp] : cross) {
                std::string base = a;
                base[static_cast<std::size_t>(i1)] = v;
                base[static_cast<std::size_t>(i2)] = vp;
                emit_context_substitutions(base, ctx0, q, out);
            }
            // conditions (i) and (ii) are exclusive
            assert(exact_count == static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
            assert(out.size() - before ==
                   2u * static_cast<std::size_t>(ctx0.size()) * static_cast<std::size_t>(q - 1));
            (void)before;
            break;
        }
        case 3: {
            const int i1 = supp0[0], i2 = supp0[1], i3 = supp0[2];
            const char a1 = a[static_cast<std::size_t>(i1)], b1 = b[static_cast<std::size_t>(i1)];
            const char a2 = a[static_cast<std::size_t>(i2)], b2 = b[static_cast<std::size_t>(i2)];
            const char a3 = a[static_cast<std::size_t>(i3)], b3 = b[static_cast<std::size_t>(i3)];
            // one coordinate free, the other two pinned to opposite sources
            const char F = -1;
            const std::array<std::array<char, 3>, 6> pats = {{{F, a2, b3},
                                                              {F, b2, a3},
                                                              {a1, F, b3},
                                                              {b1, F, a3},
                                                              {a1, b2, F},
                                                              {b1, a2, F}}};
            for (const auto& pat : pats) {
                for (int v = 0; v < q; ++v) {
                    std::string w = a;
                    w[static_cast<std::size_t>(i1)] = pat[0] == F ? static_cast<char>(v) : pat[0];
                    w[static_cast<std::size_t>(i2)] = pat[1] == F ? static_cast<char>(v) : pat[1];
                    w[static_cast<std::size_t>(i3)] = pat[2] == F ? static_cast<char>(v) : pat[2];
                    out.push_back(std::move(w));
                }
            }
            break;
        }
        case 4: {
            // two coordinates from u and two from u', never adjacent-source-equal splits of other shapes
            const std::array<std::array<int, 4>, 6> pick_from_u = {{{1, 1, 0, 0},
                                                                    {1, 0, 1, 0},
                                                                    {1, 0, 0, 1},
                                                                    {0, 1, 1, 0},
                                                                    {0, 1, 0, 1},
                                                                    {0, 0, 1, 1}}};
            for (const auto& pick : pick_from_u) {
                std::string w = a;
                for (int t = 0; t < 4; ++t) {
                    const int p = supp0[static_cast<std::size_t>(t)];
                    w[static_cast<std::size_t>(p)] =
                        pick[static_cast<std::size_t>(t)] ? a[static_cast<std::size_t>(p)]
                                                          : b[static_cast<std::size_t>(p)];
                }
                out.push_back(std::move(w));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<Word> words;
    words.reserve(out.size());
    for (std::string& s : out) words.push_back(Word::from_raw(std::move(s), q));
    return WordSet::from_sorted_unique(std::move(words), n, q);
}

WordSet cell(const Word& x, const Word& x_prime, int j, int j_prime) {
    detail::require_same_shape(x, x_prime);
    if (x.length() < 4) throw SpecError("cells need n >= 4 so that t + s < n");
    const Word u = delete_at(x, j);
    const Word u_prime = delete_at(x_prime, j_prime);
    const int d = hamming(u, u_prime);
    if (d == 0) return enum_sub_ball(u, 2);
    if (d >= 5) return WordSet::empty(u.length(), u.q());
    return sub2_intersection_structural(u, u_prime);
}

WordSet ds12_intersection_via_cells(const Word& x, const Word& x_prime) {
    detail::require_same_shape(x, x_prime);
    const int n = x.length();
    if (n < 4) throw SpecError("ds12 intersection needs n >= 4");
    const int q = x.q();
    const RunProfile rx = run_profile(x);
    const RunProfile rxp = run_profile(x_prime);

    // deleted subsequences computed once per run end and reused
    std::vector<Word> xdel, xpdel;
    xdel.reserve(rx.boundaries.size());
    for (int j : rx.boundaries) xdel.push_back(delete_at(x, j));
    xpdel.reserve(rxp.boundaries.size());
    for (int jp : rxp.boundaries) xpdel.push_back(delete_at(x_prime, jp));

    std::vector<Word> all;
    for (const Word& u : xdel) {
        for (const Word& up : xpdel) {
            const int d = hamming(u, up);
            if (d >= 5) continue;
            WordSet piece = (d == 0) ? enum_sub_ball(u, 2) : sub2_intersection_structural(u, up);
            all.insert(all.end(), piece.begin(), piece.end());
        }
    }
    if (all.empty()) return WordSet::empty(n - 1, q);
    return WordSet::of(std::move(all));
}

std::uint64_t PairHistogram::total() const {
    std::uint64_t t = 0;
    for (const auto& side : counts)
        for (const auto& row : side)
            for (std::uint64_t c : row) t += c;
    return t;
}

std::uint64_t PairHistogram::column_total(int d_prime_bucket) const {
    std::uint64_t t = 0;
    for (const auto& side : counts)
        for (const auto& row : side) t += row[static_cast<std::size_t>(d_prime_bucket)];
    return t;
}

PairHistogram pair_distance_histogram(const Word& x, const Word& x_prime) {
    detail::require_same_shape(x, x_prime);
    const int d = hamming(x, x_prime);
    if (d < 2) throw DomainError("pair histogram requires Hamming distance >= 2");

    PairHistogram h;
    h.n = x.length();
    h.d = d;
    if (d == 2) {
        const SupportDiff s = support_diff(x, x_prime);
        const int i1 = s.indices[0], i2 = s.indices[1];
        h.two_sided = delete_at(x, i1) != delete_at(x_prime, i2) &&
                      delete_at(x, i2) != delete_at(x_prime, i1);
    }
    const RunProfile rx = run_profile(x);
    const RunProfile rxp = run_profile(x_prime);
    h.m = rx.m();
    h.m_prime = rxp.m();
    for (auto& side : h.counts)
        side.assign(static_cast<std::size_t>(d) + 1, std::array<std::uint64_t, 6>{});

    for (int j : rx.boundaries) {
        for (int jp : rxp.boundaries) {
            const CellIndex ci = deletion_pair_distance(x, x_prime, j, jp);
            const int ori = j <= jp ? 0 : 1;
            const int bucket = std::min(ci.deleted_distance, 5);
            ++h.counts[static_cast<std::size_t>(ori)][static_cast<std::size_t>(ci.support_outside)]
                      [static_cast<std::size_t>(bucket)];
        }
    }
    return h;
}

std::optional<std::uint64_t> histogram_bucket_bound(int d, bool two_sided, int orientation,
                                                    int s_out, int d_prime, int n) {
    if (d_prime >= 5) return std::nullopt;  // cells there are empty anyway
    if (s_out == d) {
        // window disjoint from the support
        if (d_prime < d) return 0;
        if (d_prime == d) return orientation == 0 ? static_cast<std::uint64_t>(n - d) : 0;
        return static_cast<std::uint64_t>(n - d);
    }
    // window covers d - s_out consecutive support positions: s_out + 1 placements,
    // each admitting at most d' - s_out + 1 pairs
    if (d_prime < s_out) return 0;
    std::uint64_t b = static_cast<std::uint64_t>(s_out + 1) * static_cast<std::uint64_t>(d_prime - s_out + 1);
    if (d == 2 && two_sided && s_out == 0) b -= 1;  // both Delta and Delta' positive
    return b;
}

std::optional<std::string> check_histogram_bounds(const PairHistogram& h) {
    for (int ori = 0; ori < 2; ++ori) {
        for (int s_out = 0; s_out <= h.d; ++s_out) {
            for (int dp = 0; dp < 5; ++dp) {
                const auto bound = histogram_bucket_bound(h.d, h.two_sided, ori, s_out, dp, h.n);
                if (!bound) continue;
                const std::uint64_t got =
                    h.counts[static_cast<std::size_t>(ori)][static_cast<std::size_t>(s_out)]
                            [static_cast<std::size_t>(dp)];
                if (got > *bound) {
                    return "bucket (orientation=" + std::string(ori == 0 ? "j<=j'" : "j>j'") +
                           ", s_out=" + std::to_string(s_out) + ", d'=" + std::to_string(dp) +
                           ") has " + std::to_string(got) + " pairs, bound " + std::to_string(*bound);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace delsub

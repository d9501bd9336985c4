#include "delsub/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <thread>

#include "delsub/rng.hpp"

namespace delsub {

const char* to_string(D2Subcase s) {
    switch (s) {
        case D2Subcase::TransposedAdjacent: return "transposed-adjacent";
        case D2Subcase::OneSided: return "one-sided";
        case D2Subcase::TwoSided: return "two-sided";
    }
    return "?";
}

std::pair<Word, Word> CanonicalD2Form::reconstruct() const {
    std::string xs = prefix;
    xs.push_back(static_cast<char>(x_i1));
    xs += mid;
    xs.push_back(static_cast<char>(x_i2));
    xs += suffix;
    std::string xps = prefix;
    xps.push_back(static_cast<char>(xp_i1));
    xps += mid;
    xps.push_back(static_cast<char>(xp_i2));
    xps += suffix;
    return {Word::from_raw(std::move(xs), q), Word::from_raw(std::move(xps), q)};
}

CanonicalD2Form classify_d2(const Word& x, const Word& x_prime) {
    detail::require_same_shape(x, x_prime);
    const SupportDiff s = support_diff(x, x_prime);
    if (s.d() != 2) throw DomainError("classify_d2 requires Hamming distance exactly 2");
    const int i1 = s.indices[0], i2 = s.indices[1];

    CanonicalD2Form f;
    f.q = x.q();
    f.n = x.length();
    f.i1 = i1;
    f.i2 = i2;
    f.prefix = x.raw().substr(0, static_cast<std::size_t>(i1 - 1));
    f.mid = x.raw().substr(static_cast<std::size_t>(i1), static_cast<std::size_t>(i2 - i1 - 1));
    f.suffix = x.raw().substr(static_cast<std::size_t>(i2));
    f.x_i1 = x.at(i1);
    f.x_i2 = x.at(i2);
    f.xp_i1 = x_prime.at(i1);
    f.xp_i2 = x_prime.at(i2);

    const bool fwd = delete_at(x, i1) == delete_at(x_prime, i2);
    const bool bwd = delete_at(x, i2) == delete_at(x_prime, i1);
    if (fwd && bwd) {
        f.subcase = D2Subcase::TransposedAdjacent;
        assert(i2 == i1 + 1 && f.x_i1 == f.xp_i2 && f.x_i2 == f.xp_i1);
        f.a = f.x_i1;
        f.b = f.x_i2;
    } else if (fwd || bwd) {
        f.subcase = D2Subcase::OneSided;
        f.mirrored = bwd;
        f.sigma0 = i2 - i1 - 1;
        if (!f.mirrored) {
            // x = w a b^s0 b w', x' = w b b^s0 c w'
            f.a = f.x_i1;
            f.b = f.xp_i1;
            f.c = f.xp_i2;
        } else {
            // same form read on the swapped pair (x', x)
            f.a = f.xp_i1;
            f.b = f.x_i1;
            f.c = f.x_i2;
        }
        assert(f.sigma0 > 0 || f.a != f.c);
    } else {
        f.subcase = D2Subcase::TwoSided;
    }
    return f;
}

CanonicalD2Form canonical_d2_form(const Word& x, const Word& x_prime) {
    CanonicalD2Form f = classify_d2(x, x_prime);
    if (f.subcase != D2Subcase::TransposedAdjacent)
        throw DomainError("canonical_d2_form requires the transposed-adjacent subcase");
    const RunProfile rx = run_profile(x);
    const RunProfile rxp = run_profile(x_prime);
    f.tau = run_index_of(x, f.i1);
    f.tau_prime = run_index_of(x_prime, f.i1);
    f.sigma1 = rx.run_lengths[static_cast<std::size_t>(f.tau - 1)] - 1;
    f.sigma2 = rx.run_lengths[static_cast<std::size_t>(f.tau)] - 1;
    f.sigma1_prime = rxp.run_lengths[static_cast<std::size_t>(f.tau_prime - 1)] - 1;
    f.sigma2_prime = rxp.run_lengths[static_cast<std::size_t>(f.tau_prime)] - 1;
    assert(f.sigma1 * f.sigma1_prime == 0 && f.sigma2 * f.sigma2_prime == 0);
    return f;
}

std::int64_t theorem_bound(int q, std::int64_t n, std::int64_t c) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (n < 1) throw DomainError("length must be >= 1");
    const __int128 Q = q, N = n;
    const __int128 v = (Q * Q - 1) * N * N - (3 * Q * Q + 5 * Q - 5) * N + c;
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("theorem_bound exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::pair<Word, Word> extremal_pair(int q, int n) {
    if (n < 8 || n % 2 != 0) throw DomainError("extremal_pair requires even n >= 8");
    std::string xs = {1, 0, 1, 0, 1, 0};
    std::string xps = {1, 0, 0, 1, 1, 0};
    for (int i = 0; i < n - 6; ++i) {
        const char sym = (i % 2 == 0) ? 1 : 0;
        xs.push_back(sym);
        xps.push_back(sym);
    }
    return {Word::from_raw(std::move(xs), q), Word::from_raw(std::move(xps), q)};
}

namespace {

std::int64_t checked_i64(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(what);
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    const __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked_i64(n, "rational overflow"), checked_i64(d, "rational overflow"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.num;
    const __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked_i64(n, "rational overflow"), checked_i64(d, "rational overflow"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw DomainError("division by zero rational");
    const __int128 n = static_cast<__int128>(num) * o.den;
    const __int128 d = static_cast<__int128>(den) * o.num;
    return Rational(checked_i64(n, "rational overflow"), checked_i64(d, "rational overflow"));
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

QuadraticFit fit_quadratic(std::span<const std::pair<std::int64_t, std::int64_t>> points) {
    if (points.size() < 3) throw DomainError("quadratic fit needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DomainError("duplicate abscissa in quadratic fit");

    const auto [x1, y1] = points[0];
    const auto [x2, y2] = points[1];
    const auto [x3, y3] = points[2];
    const Rational l1 = Rational(y1) / Rational((x1 - x2) * (x1 - x3));
    const Rational l2 = Rational(y2) / Rational((x2 - x1) * (x2 - x3));
    const Rational l3 = Rational(y3) / Rational((x3 - x1) * (x3 - x2));

    QuadraticFit fit;
    fit.a = l1 + l2 + l3;
    fit.b = Rational(0) - (l1 * Rational(x2 + x3) + l2 * Rational(x1 + x3) + l3 * Rational(x1 + x2));
    fit.c = l1 * Rational(x2 * x3) + l2 * Rational(x1 * x3) + l3 * Rational(x1 * x2);
    fit.consistent = true;
    for (const auto& [x, y] : points) {
        const Rational v = fit.a * Rational(x * x) + fit.b * Rational(x) + fit.c;
        if (!(v == Rational(y))) {
            fit.consistent = false;
            break;
        }
    }
    return fit;
}

ClaimCellPredictions claim_cell_predictions(int q, std::int64_t n) {
    if (n < 6) throw DomainError("claim predictions require n >= 6");
    ClaimCellPredictions p;
    const std::uint64_t full = xi_0s(q, n - 1, 2);
    const std::uint64_t x1 = xi_ds({q, n - 1, 1, 2});
    p.e_union = detail::checked_add(full, full) - x1;
    const __int128 base = 2 * static_cast<__int128>(q - 1) * n + static_cast<__int128>(q) * q - 8 * q;
    assert(base + 4 >= 0);
    p.diff_two_ahead = static_cast<std::uint64_t>(base + 4);
    p.diff_one_ahead = static_cast<std::uint64_t>(base + 6);
    return p;
}

TransposedAdjacentInstance make_transposed_adjacent(int q, int n, int tau, int sigma1, int sigma2,
                                                    std::uint64_t seed) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (tau < 1 || sigma1 < 0 || sigma2 < 0)
        throw DomainError("need tau >= 1 and nonnegative run extensions");
    const int head_len = tau - 1;
    const int body_len = sigma1 + sigma2 + 2;
    if (head_len + body_len > n)
        throw DomainError("requested run structure does not fit length n");

    Rng rng(seed);
    const auto pick_not = [&](int forbidden) {
        const std::uint64_t r = uniform_below(rng, static_cast<std::uint64_t>(q - 1));
        return static_cast<char>(r < static_cast<std::uint64_t>(forbidden) ? r : r + 1);
    };
    const char a = static_cast<char>(uniform_below(rng, static_cast<std::uint64_t>(q)));
    const char b = pick_not(a);

    std::string head(static_cast<std::size_t>(head_len), '\0');
    if (head_len >= 1) {
        head[static_cast<std::size_t>(head_len - 1)] = pick_not(a);
        for (int i = head_len - 2; i >= 0; --i)
            head[static_cast<std::size_t>(i)] = pick_not(head[static_cast<std::size_t>(i + 1)]);
    }
    std::string xs = head;
    xs.append(static_cast<std::size_t>(sigma1 + 1), a);
    xs.append(static_cast<std::size_t>(sigma2 + 1), b);
    char prev = b;
    for (int i = head_len + body_len; i < n; ++i) {
        const char sym = pick_not(prev);
        xs.push_back(sym);
        prev = sym;
    }

    TransposedAdjacentInstance inst{Word::from_raw(xs, q), Word::from_raw(xs, q), 0};
    inst.i1 = head_len + sigma1 + 1;
    std::string xps = xs;
    std::swap(xps[static_cast<std::size_t>(inst.i1 - 1)], xps[static_cast<std::size_t>(inst.i1)]);
    inst.x_prime = Word::from_raw(std::move(xps), q);
    return inst;
}

namespace {

// Dense bitmap over the deleted-word universe Sigma_q^{n-1}; one mask per
// source word, intersection size by AND + popcount.
struct BallTable {
    int q, n;
    std::uint64_t universe;   // q^(n-1)
    std::size_t stride;       // u64 words per mask
    std::vector<std::uint64_t> bits;

    BallTable(int q_, int n_) : q(q_), n(n_) {
        std::uint64_t total_words = 1;
        for (int i = 0; i < n; ++i) total_words *= static_cast<std::uint64_t>(q);
        universe = total_words / static_cast<std::uint64_t>(q);
        stride = static_cast<std::size_t>((universe + 63) / 64);
        bits.assign(stride * total_words, 0);

        std::vector<std::uint64_t> place(static_cast<std::size_t>(n - 1), 1);
        for (int i = n - 3; i >= 0; --i)
            place[static_cast<std::size_t>(i)] =
                place[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(q);

        std::vector<int> digits(static_cast<std::size_t>(n));
        std::vector<int> del(static_cast<std::size_t>(n - 1));
        for (std::uint64_t w = 0; w < total_words; ++w) {
            std::uint64_t t = w;
            for (int i = n - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(q));
                t /= static_cast<std::uint64_t>(q);
            }
            std::uint64_t* mask = &bits[stride * w];
            for (int j = 0; j < n; ++j) {
                int k = 0;
                for (int i = 0; i < n; ++i)
                    if (i != j) del[static_cast<std::size_t>(k++)] = digits[static_cast<std::size_t>(i)];
                std::uint64_t base = 0;
                for (int i = 0; i < n - 1; ++i)
                    base += static_cast<std::uint64_t>(del[static_cast<std::size_t>(i)]) *
                            place[static_cast<std::size_t>(i)];
                const auto set = [&](std::uint64_t idx) {
                    mask[idx >> 6] |= (std::uint64_t(1) << (idx & 63));
                };
                set(base);
                for (int p1 = 0; p1 < n - 1; ++p1) {
                    const int d1 = del[static_cast<std::size_t>(p1)];
                    for (int c1 = 0; c1 < q; ++c1) {
                        if (c1 == d1) continue;
                        const std::uint64_t idx1 =
                            base + (static_cast<std::uint64_t>(c1) - static_cast<std::uint64_t>(d1)) *
                                       place[static_cast<std::size_t>(p1)];
                        set(idx1);
                        for (int p2 = p1 + 1; p2 < n - 1; ++p2) {
                            const int d2 = del[static_cast<std::size_t>(p2)];
                            for (int c2 = 0; c2 < q; ++c2) {
                                if (c2 == d2) continue;
                                set(idx1 + (static_cast<std::uint64_t>(c2) - static_cast<std::uint64_t>(d2)) *
                                               place[static_cast<std::size_t>(p2)]);
                            }
                        }
                    }
                }
            }
        }
    }

    std::uint64_t intersection_size(std::uint64_t w1, std::uint64_t w2) const {
        const std::uint64_t* m1 = &bits[stride * w1];
        const std::uint64_t* m2 = &bits[stride * w2];
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < stride; ++i) count += static_cast<std::uint64_t>(__builtin_popcountll(m1[i] & m2[i]));
        return count;
    }
};

int index_distance(std::uint64_t w1, std::uint64_t w2, int q, int n) {
    int d = 0;
    for (int i = 0; i < n; ++i) {
        if (w1 % static_cast<std::uint64_t>(q) != w2 % static_cast<std::uint64_t>(q)) ++d;
        w1 /= static_cast<std::uint64_t>(q);
        w2 /= static_cast<std::uint64_t>(q);
    }
    return d;
}

Word word_from_index(std::uint64_t w, int q, int n) {
    std::string s(static_cast<std::size_t>(n), '\0');
    for (int i = n - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<char>(w % static_cast<std::uint64_t>(q));
        w /= static_cast<std::uint64_t>(q);
    }
    return Word::from_raw(std::move(s), q);
}

struct ScanRecord {
    std::uint64_t max_size = 0;
    std::uint64_t best_i = 0, best_j = 0;
    bool any = false;
    std::map<int, std::uint64_t> by_d;
    std::uint64_t pairs = 0;

    void consider(std::uint64_t v, std::uint64_t i, std::uint64_t j, int d) {
        ++pairs;
        auto [it, inserted] = by_d.try_emplace(d, v);
        if (!inserted && v > it->second) it->second = v;
        if (!any || v > max_size ||
            (v == max_size && (i < best_i || (i == best_i && j < best_j)))) {
            max_size = v;
            best_i = i;
            best_j = j;
            any = true;
        }
    }

    void merge(const ScanRecord& o) {
        pairs += o.pairs;
        for (const auto& [d, v] : o.by_d) {
            auto [it, inserted] = by_d.try_emplace(d, v);
            if (!inserted && v > it->second) it->second = v;
        }
        if (!o.any) return;
        if (!any || o.max_size > max_size ||
            (o.max_size == max_size &&
             (o.best_i < best_i || (o.best_i == best_i && o.best_j < best_j)))) {
            max_size = o.max_size;
            best_i = o.best_i;
            best_j = o.best_j;
            any = true;
        }
    }
};

}  // namespace

PairScanResult max_intersection_exhaustive(int q, int n, int threads) {
    if (q < 2 || n < 4) throw DomainError("scan requires q >= 2 and n >= 4");
    // memory guardrail: q^n masks of q^(n-1) bits each
    __int128 cost = 1;
    for (int i = 0; i < 2 * n - 1; ++i) cost *= q;
    if (cost > (static_cast<__int128>(1) << 28))
        throw GuardrailError("exhaustive pair scan refused: q^(2n-1) exceeds 2^28 bits of ball masks");

    const BallTable table(q, n);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned nthreads =
        threads > 0 ? static_cast<unsigned>(threads) : std::min<unsigned>(hw, 8);

    std::vector<ScanRecord> records(nthreads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            ScanRecord& rec = records[t];
            for (std::uint64_t i = t; i < total; i += nthreads) {
                for (std::uint64_t j = i + 1; j < total; ++j) {
                    const int d = index_distance(i, j, q, n);
                    if (d < 2) continue;
                    rec.consider(table.intersection_size(i, j), i, j, d);
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    ScanRecord final;
    for (const ScanRecord& r : records) final.merge(r);

    return PairScanResult{final.max_size, word_from_index(final.best_i, q, n),
                          word_from_index(final.best_j, q, n), std::move(final.by_d), final.pairs};
}

std::vector<std::pair<std::int64_t, std::int64_t>> extremal_sizes(int q, int n_from, int n_to) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (int n = n_from; n <= n_to; ++n) {
        if (n % 2 != 0) continue;
        const auto [x, xp] = extremal_pair(q, n);
        const WordSet inter = brute_intersection(x, xp, {1, 2});
        out.emplace_back(n, static_cast<std::int64_t>(inter.size()));
    }
    return out;
}

}  // namespace delsub

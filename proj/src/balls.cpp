#include "delsub/balls.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>
#include <vector>

namespace delsub {

namespace detail {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in exact count");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in exact count");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i);
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw OverflowError("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ds_candidate_estimate(int q, int n, const BallSpec& spec) {
    try {
        return checked_mul(binomial(n, spec.deletions),
                           xi_0s(q, n - spec.deletions, spec.max_substitutions));
    } catch (const OverflowError&) {
        return UINT64_MAX;
    }
}

void check_enum_guardrail(int q, int n, std::uint64_t candidates, const EnumLimits& limits) {
    if (limits.force) return;
    unsigned __int128 universe = 1;
    for (int i = 0; i < n && universe <= EnumLimits::kMaxUniverse; ++i)
        universe *= static_cast<unsigned>(q);
    if (universe > EnumLimits::kMaxUniverse)
        throw GuardrailError("enumeration refused: q^n exceeds 2^24 (pass force to override)");
    if (candidates > EnumLimits::kMaxCandidates)
        throw GuardrailError("enumeration refused: candidate count estimate " +
                             std::to_string(candidates) + " exceeds limit (pass force to override)");
}

}  // namespace detail

using detail::binomial;
using detail::checked_add;
using detail::checked_mul;
using detail::checked_pow;

std::uint64_t xi_0s(int q, std::int64_t n, int s) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (s < 0 || s > n) throw DomainError("xi_0s requires 0 <= s <= n");
    std::uint64_t total = 0;
    for (int k = 0; k <= s; ++k)
        total = checked_add(total, checked_mul(binomial(n, k), checked_pow(static_cast<std::uint64_t>(q - 1), k)));
    return total;
}

std::uint64_t xi_ds(const XiQuery& query) {
    const int q = query.q;
    const std::int64_t n = query.n;
    const int d = query.d;
    const int s = query.s;
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (s < 1 || d < 1 || d > 2 * s)
        throw DomainError("xi_ds requires 1 <= d <= 2s (the intersection is empty for d >= 2s+1)");
    if (n < d) throw DomainError("xi_ds requires n >= d");

    const int ilo = d <= s ? 0 : d - s;
    const int ihi = d <= s ? d : s;
    std::uint64_t total = 0;
    if (q == 2) {
        for (int i = ilo; i <= ihi; ++i) {
            const int lim = s - d + std::min(i, d - i);
            if (lim < 0) continue;
            std::uint64_t inner = 0;
            for (int k = 0; k <= lim; ++k) inner = checked_add(inner, binomial(n - d, k));
            total = checked_add(total, checked_mul(binomial(d, i), inner));
        }
        return total;
    }
    const int jlo = d <= s ? 0 : d - s;
    for (int i = ilo; i <= ihi; ++i) {
        for (int j = jlo; j <= d - i; ++j) {
            const int lim = s - d + std::min(i, j);
            if (lim < 0) continue;
            std::uint64_t inner = 0;
            for (int k = 0; k <= lim; ++k)
                inner = checked_add(inner,
                                    checked_mul(binomial(n - d, k), checked_pow(static_cast<std::uint64_t>(q - 1), k)));
            std::uint64_t eta = checked_mul(checked_pow(static_cast<std::uint64_t>(q - 2), d - i - j), inner);
            total = checked_add(total, checked_mul(checked_mul(binomial(d, i), binomial(d - i, j)), eta));
        }
    }
    return total;
}

std::uint64_t xi_d2_closed(int q, std::int64_t length, int d) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (d < 1 || d > 4) throw DomainError("xi_d2_closed is defined for d in {1,2,3,4}");
    if (length < d) throw DomainError("xi_d2_closed requires length >= d");
    const __int128 n = length + 1;  // the closed forms are stated for deleted length n-1
    const __int128 Q = q;
    __int128 v = 0;
    switch (d) {
        case 1: v = Q * (Q - 1) * n - 2 * Q * Q + 3 * Q; break;
        case 2: v = 2 * (Q - 1) * n + Q * Q - 6 * Q + 6; break;
        case 3: v = 6 * Q - 6; break;
        case 4: v = 6; break;
    }
    assert(v >= 0);
    if (v > static_cast<__int128>(UINT64_MAX)) throw OverflowError("xi_d2_closed exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t xi_02_closed(int q, std::int64_t length) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (length < 0) throw DomainError("length must be nonnegative");
    const __int128 n = length + 1;
    const __int128 Q = q;
    __int128 twice = (Q - 1) * (Q - 1) * n * n - (3 * Q - 5) * (Q - 1) * n + 2 * (Q * Q - 3 * Q + 3);
    assert(twice >= 0 && twice % 2 == 0);
    twice /= 2;
    if (twice > static_cast<__int128>(UINT64_MAX)) throw OverflowError("xi_02_closed exceeds 64 bits");
    return static_cast<std::uint64_t>(twice);
}

namespace {

// Packed fast path: a word of length n over q fits one u64 key when
// n * bits_per_symbol <= 64, with the leftmost symbol in the highest bits so
// numeric order equals lexicographic order.
struct Packing {
    int bits;
    int len;

    static bool fits(int q, int len) {
        const int bits = std::bit_width(static_cast<unsigned>(q - 1));
        return bits * len <= 64;
    }
    explicit Packing(int q, int len) : bits(std::bit_width(static_cast<unsigned>(q - 1))), len(len) {}

    std::uint64_t pack(const std::string& raw) const {
        std::uint64_t key = 0;
        for (char c : raw) key = (key << bits) | static_cast<unsigned char>(c);
        return key;
    }
    std::string unpack(std::uint64_t key) const {
        std::string s(static_cast<std::size_t>(len), '\0');
        const std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
        for (int i = len - 1; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = static_cast<char>(key & mask);
            key >>= bits;
        }
        return s;
    }
    int shift_of(int pos0) const { return bits * (len - 1 - pos0); }
};

// Substitution enumeration over packed keys (budget <= 3 in practice).
void gen_subs_packed(std::uint64_t key, const std::string& base, const Packing& pk, int start,
                     int budget, int q, std::vector<std::uint64_t>& out) {
    out.push_back(key);
    if (budget == 0) return;
    const int n = static_cast<int>(base.size());
    for (int p = start; p < n; ++p) {
        const std::uint64_t orig = static_cast<unsigned char>(base[static_cast<std::size_t>(p)]);
        const int sh = pk.shift_of(p);
        const std::uint64_t cleared = key & ~(((pk.bits == 64) ? ~0ull : ((1ull << pk.bits) - 1)) << sh);
        for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(q); ++c) {
            if (c == orig) continue;
            gen_subs_packed(cleared | (c << sh), base, pk, p + 1, budget - 1, q, out);
        }
    }
}

void gen_subs_generic(std::string& cur, const std::string& base, int start, int budget, int q,
                      std::vector<std::string>& out) {
    out.push_back(cur);
    if (budget == 0) return;
    const int n = static_cast<int>(cur.size());
    for (int p = start; p < n; ++p) {
        const char orig = base[static_cast<std::size_t>(p)];
        for (int c = 0; c < q; ++c) {
            if (c == orig) continue;
            cur[static_cast<std::size_t>(p)] = static_cast<char>(c);
            gen_subs_generic(cur, base, p + 1, budget - 1, q, out);
        }
        cur[static_cast<std::size_t>(p)] = orig;
    }
}

WordSet finalize_packed(std::vector<std::uint64_t>& keys, const Packing& pk, int q) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Word> words;
    words.reserve(keys.size());
    for (std::uint64_t k : keys) words.push_back(Word::from_raw(pk.unpack(k), q));
    return WordSet::from_sorted_unique(std::move(words), pk.len, q);
}

WordSet finalize_generic(std::vector<std::string>& raw, int len, int q) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Word> words;
    words.reserve(raw.size());
    for (std::string& s : raw) words.push_back(Word::from_raw(std::move(s), q));
    return WordSet::from_sorted_unique(std::move(words), len, q);
}

void gen_deletions(const std::string& base, int start, int t, std::string& scratch,
                   std::vector<std::string>& out) {
    if (t == 0) {
        out.push_back(scratch + base.substr(static_cast<std::size_t>(start)));
        return;
    }
    const int n = static_cast<int>(base.size());
    // keep position p, or delete it and recurse; enough positions must remain
    for (int p = start; p <= n - t; ++p) {
        scratch.append(base, static_cast<std::size_t>(start), static_cast<std::size_t>(p - start));
        gen_deletions(base, p + 1, t - 1, scratch, out);
        scratch.resize(scratch.size() - static_cast<std::size_t>(p - start));
    }
}

}  // namespace

WordSet enum_sub_ball(const Word& u, int s, EnumLimits limits) {
    if (s < 0) throw SpecError("substitution budget must be nonnegative");
    const int n = u.length();
    const int q = u.q();
    const int budget = std::min(s, n);
    detail::check_enum_guardrail(q, n, detail::ds_candidate_estimate(q, n, {0, budget}), limits);
    if (Packing::fits(q, n)) {
        Packing pk(q, n);
        std::vector<std::uint64_t> keys;
        keys.reserve(64);
        gen_subs_packed(pk.pack(u.raw()), u.raw(), pk, 0, budget, q, keys);
        return finalize_packed(keys, pk, q);
    }
    std::vector<std::string> raw;
    std::string cur = u.raw();
    gen_subs_generic(cur, u.raw(), 0, budget, q, raw);
    return finalize_generic(raw, n, q);
}

WordSet enum_del_ball(const Word& x, int t, EnumLimits limits) {
    const int n = x.length();
    if (t < 0 || t >= n) throw SpecError("deletion count must satisfy 0 <= t < n");
    detail::check_enum_guardrail(x.q(), n, binomial(n, t), limits);
    std::vector<std::string> raw;
    std::string scratch;
    gen_deletions(x.raw(), 0, t, scratch, raw);
    return finalize_generic(raw, n - t, x.q());
}

WordSet enum_ds_ball(const Word& x, BallSpec spec, EnumLimits limits) {
    const int n = x.length();
    if (spec.deletions < 0 || spec.max_substitutions < 0)
        throw SpecError("channel parameters must be nonnegative");
    if (spec.deletions + spec.max_substitutions >= n)
        throw SpecError("channel parameters must satisfy t + s < n");
    detail::check_enum_guardrail(x.q(), n, detail::ds_candidate_estimate(x.q(), n, spec), limits);

    EnumLimits inner = limits;
    inner.force = true;  // the combined estimate was already checked
    WordSet deleted = enum_del_ball(x, spec.deletions, inner);
    const int q = x.q();
    const int len = n - spec.deletions;
    const int budget = std::min(spec.max_substitutions, len);
    if (Packing::fits(q, len)) {
        Packing pk(q, len);
        std::vector<std::uint64_t> keys;
        for (const Word& w : deleted)
            gen_subs_packed(pk.pack(w.raw()), w.raw(), pk, 0, budget, q, keys);
        return finalize_packed(keys, pk, q);
    }
    std::vector<std::string> raw;
    for (const Word& w : deleted) {
        std::string cur = w.raw();
        gen_subs_generic(cur, w.raw(), 0, budget, q, raw);
    }
    return finalize_generic(raw, len, q);
}

}  // namespace delsub

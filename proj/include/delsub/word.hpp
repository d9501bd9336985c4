#ifndef DELSUB_WORD_HPP
#define DELSUB_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "delsub/errors.hpp"

namespace delsub {

using Symbol = std::uint8_t;

/// Largest supported alphabet; words print as single base-36 characters.
inline constexpr int kMaxAlphabet = 36;

/// A q-ary word x_1 x_2 ... x_n with n >= 1 and every symbol in [0, q).
///
/// Positions are 1-based in the public interface; symbols are stored
/// contiguously (one byte each), so words of length <= 15 need no heap
/// allocation and comparisons reduce to memcmp. Ordering is lexicographic
/// on symbols. Immutable after construction.
class Word {
public:
    Word(const std::vector<Symbol>& symbols, int q);

    /// Wraps a raw byte string whose chars are symbol values (not digits).
    static Word from_raw(std::string symbols, int q);

    /// Parses the text format: digits for q <= 10, base-36 otherwise.
    static Word parse(std::string_view text, int q);

    int length() const { return static_cast<int>(sym_.size()); }
    int q() const { return q_; }

    /// 1-based checked access.
    Symbol at(int pos) const {
        if (pos < 1 || pos > length()) throw IndexError("position out of range");
        return static_cast<Symbol>(sym_[static_cast<std::size_t>(pos - 1)]);
    }

    /// 0-based unchecked access for internal loops.
    Symbol operator[](std::size_t i) const { return static_cast<Symbol>(sym_[i]); }

    const std::string& raw() const { return sym_; }

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        int c = a.sym_.compare(b.sym_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.q_ <=> b.q_;
    }

private:
    Word(std::string sym, int q, bool /*checked*/) : sym_(std::move(sym)), q_(static_cast<std::uint8_t>(q)) {}

    std::string sym_;
    std::uint8_t q_;
};

/// Maximal blocks of identical symbols. boundaries[i] is the 1-based
/// position where run i+1 ends; the last boundary equals n.
struct RunProfile {
    std::vector<int> boundaries;
    std::vector<Symbol> run_symbols;
    std::vector<int> run_lengths;

    int m() const { return static_cast<int>(boundaries.size()); }

    /// Rebuilds the source word (round-trip check).
    Word expand(int q) const;
};

/// Positions where two equal-length words disagree, ascending.
struct SupportDiff {
    std::vector<int> indices;
    int d() const { return static_cast<int>(indices.size()); }
};

int hamming(const Word& x, const Word& y);
SupportDiff support_diff(const Word& x, const Word& y);
Word delete_at(const Word& x, int pos);
RunProfile run_profile(const Word& x);

/// Index of the run containing position pos (1-based).
int run_index_of(const Word& x, int pos);

namespace detail {
void require_same_shape(const Word& x, const Word& y);
char symbol_to_char(Symbol s);
int char_to_symbol(char c);  // -1 if not a base-36 character
}  // namespace detail

}  // namespace delsub

#endif

#include "delsub/word.hpp"

#include <algorithm>

namespace delsub {

namespace detail {

void require_same_shape(const Word& x, const Word& y) {
    if (x.length() != y.length())
        throw DimensionError("words have different lengths");
    if (x.q() != y.q())
        throw DimensionError("words have different alphabet sizes");
}

char symbol_to_char(Symbol s) {
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

int char_to_symbol(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c >= 'A' && c <= 'Z') return 10 + (c - 'A');
    return -1;
}

}  // namespace detail

static void validate(const std::string& sym, int q) {
    if (q < 2 || q > kMaxAlphabet)
        throw DomainError("alphabet size must be in [2, 36]");
    if (sym.empty())
        throw DomainError("word must have length >= 1");
    for (char c : sym)
        if (static_cast<unsigned char>(c) >= static_cast<unsigned>(q))
            throw DomainError("symbol value exceeds alphabet");
}

Word::Word(const std::vector<Symbol>& symbols, int q)
    : sym_(symbols.begin(), symbols.end()), q_(static_cast<std::uint8_t>(q)) {
    validate(sym_, q);
}

Word Word::from_raw(std::string symbols, int q) {
    validate(symbols, q);
    return Word(std::move(symbols), q, true);
}

Word Word::parse(std::string_view text, int q) {
    if (q < 2 || q > kMaxAlphabet)
        throw DomainError("alphabet size must be in [2, 36]");
    std::string sym;
    sym.reserve(text.size());
    for (char c : text) {
        int v = detail::char_to_symbol(c);
        if (v < 0 || v >= q)
            throw DomainError(std::string("invalid symbol '") + c + "' for alphabet size " +
                              std::to_string(q));
        sym.push_back(static_cast<char>(v));
    }
    if (sym.empty()) throw DomainError("word must have length >= 1");
    return Word(std::move(sym), q, true);
}

std::string Word::str() const {
    std::string out;
    out.reserve(sym_.size());
    for (char c : sym_) out.push_back(detail::symbol_to_char(static_cast<Symbol>(c)));
    return out;
}

int hamming(const Word& x, const Word& y) {
    detail::require_same_shape(x, y);
    int d = 0;
    const std::string& a = x.raw();
    const std::string& b = y.raw();
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

SupportDiff support_diff(const Word& x, const Word& y) {
    detail::require_same_shape(x, y);
    SupportDiff s;
    for (int i = 0; i < x.length(); ++i)
        if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)])
            s.indices.push_back(i + 1);
    if (s.indices.empty())
        throw DomainError("words are equal: support of the difference is empty");
    return s;
}

Word delete_at(const Word& x, int pos) {
    if (x.length() < 2)
        throw DomainError("cannot delete from a length-1 word");
    if (pos < 1 || pos > x.length())
        throw IndexError("deletion position out of range");
    std::string s = x.raw();
    s.erase(static_cast<std::size_t>(pos - 1), 1);
    return Word::from_raw(std::move(s), x.q());
}

RunProfile run_profile(const Word& x) {
    RunProfile rp;
    const std::string& s = x.raw();
    int start = 0;
    for (int i = 0; i < x.length(); ++i) {
        if (i + 1 == x.length() || s[static_cast<std::size_t>(i + 1)] != s[static_cast<std::size_t>(i)]) {
            rp.boundaries.push_back(i + 1);
            rp.run_symbols.push_back(static_cast<Symbol>(s[static_cast<std::size_t>(i)]));
            rp.run_lengths.push_back(i + 1 - start);
            start = i + 1;
        }
    }
    return rp;
}

Word RunProfile::expand(int q) const {
    std::string s;
    for (std::size_t i = 0; i < run_symbols.size(); ++i)
        s.append(static_cast<std::size_t>(run_lengths[i]), static_cast<char>(run_symbols[i]));
    return Word::from_raw(std::move(s), q);
}

int run_index_of(const Word& x, int pos) {
    if (pos < 1 || pos > x.length())
        throw IndexError("position out of range");
    const std::string& s = x.raw();
    int lambda = 1;
    for (int i = 1; i < pos; ++i)
        if (s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(i - 1)]) ++lambda;
    return lambda;
}

}  // namespace delsub

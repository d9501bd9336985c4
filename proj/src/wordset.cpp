#include "delsub/wordset.hpp"

#include <algorithm>
#include <cassert>

namespace delsub {

WordSet WordSet::empty(int length, int q) {
    WordSet s;
    s.len_ = length;
    s.q_ = q;
    return s;
}

WordSet WordSet::of(std::vector<Word> words) {
    if (words.empty())
        throw DomainError("cannot infer length/alphabet from an empty collection; use WordSet::empty");
    const int len = words.front().length();
    const int q = words.front().q();
    for (const Word& w : words)
        if (w.length() != len || w.q() != q)
            throw DimensionError("all members of a WordSet must share length and alphabet");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return from_sorted_unique(std::move(words), len, q);
}

WordSet WordSet::from_sorted_unique(std::vector<Word> words, int length, int q) {
    assert(std::is_sorted(words.begin(), words.end()));
    assert(std::adjacent_find(words.begin(), words.end()) == words.end());
    WordSet s;
    s.len_ = length;
    s.q_ = q;
    s.words_ = std::move(words);
    return s;
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool WordSet::includes(const WordSet& other) const {
    return std::includes(words_.begin(), words_.end(), other.words_.begin(), other.words_.end());
}

static void require_compatible(const WordSet& a, const WordSet& b) {
    if (a.word_length() != b.word_length() || a.q() != b.q())
        throw DimensionError("word sets have different length or alphabet");
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    require_compatible(a, b);
    std::vector<Word> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return WordSet::from_sorted_unique(std::move(out), a.word_length(), a.q());
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
    require_compatible(a, b);
    std::vector<Word> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return WordSet::from_sorted_unique(std::move(out), a.word_length(), a.q());
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
    require_compatible(a, b);
    std::vector<Word> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return WordSet::from_sorted_unique(std::move(out), a.word_length(), a.q());
}

}  // namespace delsub

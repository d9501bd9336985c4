#ifndef DELSUB_WORDSET_HPP
#define DELSUB_WORDSET_HPP

#include <vector>

#include "delsub/word.hpp"

namespace delsub {

/// A deduplicated set of equal-length, equal-alphabet words.
/// Iteration order is lexicographic regardless of construction order.
class WordSet {
public:
    WordSet() = default;

    static WordSet empty(int length, int q);

    /// Canonicalizes (sorts, dedups) and validates shape agreement.
    static WordSet of(std::vector<Word> words);

    /// Wraps a vector the caller guarantees is sorted and duplicate-free.
    static WordSet from_sorted_unique(std::vector<Word> words, int length, int q);

    int word_length() const { return len_; }
    int q() const { return q_; }
    std::size_t size() const { return words_.size(); }
    bool is_empty() const { return words_.empty(); }

    bool contains(const Word& w) const;

    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool includes(const WordSet& other) const;  // superset test

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    int len_ = 0;
    int q_ = 0;
    std::vector<Word> words_;
};

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);
WordSet set_difference(const WordSet& a, const WordSet& b);

}  // namespace delsub

#endif

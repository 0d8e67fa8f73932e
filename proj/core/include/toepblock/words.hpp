#pragma once

#include <string>
#include <vector>

namespace toepblock {

// A pair-matched word of length 2t: every letter occurs exactly twice and
// first occurrences appear in alphabetical order (canonical form).
//
// Positions are 1-based; position 0 is reserved for the circuit start so that
// the letter at position p labels the edge (pi(p-1), pi(p)).
class Word {
public:
    explicit Word(std::string letters);

    const std::string& letters() const { return letters_; }
    int t() const { return t_; }
    int length() const { return static_cast<int>(letters_.size()); }

    // Letter index (0-based, 'a' = 0) at position p in 1..2t.
    int letter_at(int pos) const { return letters_[pos - 1] - 'a'; }

    bool is_first_occurrence(int pos) const { return first_[letter_at(pos)] == pos; }

    // First and second occurrence positions of a letter index.
    int first_of(int letter) const { return first_[letter]; }
    int second_of(int letter) const { return second_[letter]; }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

private:
    std::string letters_;
    int t_ = 0;
    std::vector<int> first_;   // per letter
    std::vector<int> second_;  // per letter
};

// All pair-matched words of length 2t in canonical form, lexicographic.
// Cardinality is (2t)!/(2^t t!). Supported range: 1 <= t <= 6.
std::vector<Word> enumerate_pair_matched(int t);

// True iff repeated deletion of adjacent double letters empties the word.
bool is_catalan(const Word& w);

// Non-zero generating vertices: the first-occurrence positions, ascending.
// The full generating set of a circuit is {0} plus these.
std::vector<int> generating_vertices(const Word& w);

// Second-occurrence position of the letter first seen at position i.
int matched_position(const Word& w, int i);

}  // namespace toepblock

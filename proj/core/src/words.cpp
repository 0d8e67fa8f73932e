#include "toepblock/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace toepblock {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() % 2 != 0)
        throw std::invalid_argument("word length must be positive and even: '" + letters_ + "'");

    int seen = 0;
    first_.clear();
    second_.clear();
    for (int pos = 1; pos <= static_cast<int>(letters_.size()); ++pos) {
        char c = letters_[pos - 1];
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("word must use lowercase letters: '" + letters_ + "'");
        int idx = c - 'a';
        if (idx == seen) {
            // new letter; canonical form demands they appear in order a, b, c, ...
            first_.push_back(pos);
            second_.push_back(0);
            ++seen;
        } else if (idx < seen) {
            if (second_[idx] != 0)
                throw std::invalid_argument("letter '" + std::string(1, c) +
                                            "' occurs more than twice in '" + letters_ + "'");
            second_[idx] = pos;
        } else {
            throw std::invalid_argument("first occurrences out of alphabetical order in '" +
                                        letters_ + "'");
        }
    }
    for (int idx = 0; idx < seen; ++idx)
        if (second_[idx] == 0)
            throw std::invalid_argument("letter '" + std::string(1, char('a' + idx)) +
                                        "' occurs only once in '" + letters_ + "'");
    t_ = seen;
}

namespace {

// Build words position by position: either introduce the next fresh letter or
// close any letter that is still open. Canonical order falls out for free.
void extend(std::string& word, bool open[26], int next_new, int unused,
            std::vector<Word>& out) {
    if (unused == 0) {
        bool any_open = false;
        for (int i = 0; i < next_new; ++i) any_open |= open[i];
        if (!any_open) {
            out.emplace_back(word);
            return;
        }
    }
    if (unused > 0) {
        word.push_back(static_cast<char>('a' + next_new));
        open[next_new] = true;
        extend(word, open, next_new + 1, unused - 1, out);
        open[next_new] = false;
        word.pop_back();
    }
    for (int i = 0; i < next_new; ++i) {
        if (!open[i]) continue;
        word.push_back(static_cast<char>('a' + i));
        open[i] = false;
        extend(word, open, next_new, unused, out);
        open[i] = true;
        word.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_pair_matched(int t) {
    if (t < 1 || t > 6) throw std::invalid_argument("t must be in 1..6");
    std::vector<Word> out;
    std::string word;
    bool open[26] = {};
    extend(word, open, 0, t, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_catalan(const Word& w) {
    std::vector<char> stack;
    for (char c : w.letters()) {
        if (!stack.empty() && stack.back() == c)
            stack.pop_back();
        else
            stack.push_back(c);
    }
    return stack.empty();
}

std::vector<int> generating_vertices(const Word& w) {
    std::vector<int> s;
    s.reserve(w.t());
    for (int letter = 0; letter < w.t(); ++letter) s.push_back(w.first_of(letter));
    std::sort(s.begin(), s.end());
    return s;
}

int matched_position(const Word& w, int i) {
    return w.second_of(w.letter_at(i));
}

}  // namespace toepblock

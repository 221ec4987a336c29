#include "cycinv/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cycinv {

Word::Word(int alphabet_size, std::vector<int> letters)
    : alphabet_(alphabet_size), letters_(std::move(letters)) {
    check_alphabet();
    for (int l : letters_)
        if (l < 0 || l >= alphabet_)
            throw std::invalid_argument("Word: letter index out of range");
}

void Word::check_alphabet() const {
    if (alphabet_ < 1) throw std::invalid_argument("Word: alphabet size must be positive");
}

long Word::letter_sum() const {
    long s = 0;
    for (int l : letters_) s += l;
    return s;
}

Word Word::prefix(int length) const {
    return Word(alphabet_, std::vector<int>(letters_.begin(), letters_.begin() + length));
}

Word Word::suffix_from(int start) const {
    return Word(alphabet_, std::vector<int>(letters_.begin() + start, letters_.end()));
}

Word concat(const Word& a, const Word& b) {
    if (a.alphabet_ != b.alphabet_)
        throw std::invalid_argument("Word: alphabet mismatch in concatenation");
    std::vector<int> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word(a.alphabet_, std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.alphabet_ != b.alphabet_) return a.alphabet_ <=> b.alphabet_;
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.letters_ <=> b.letters_;
}

long Word::lex_rank() const {
    long rank = 0;
    for (int l : letters_) rank = rank * alphabet_ + l;
    return rank;
}

std::string Word::str(VarStyle style) const {
    if (letters_.empty()) return "1";
    const char name = style == VarStyle::X1Based ? 'x' : 'y';
    const int offset = style == VarStyle::X1Based ? 1 : 0;
    std::ostringstream os;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        if (i > 0) os << "*";
        os << name << letters_[i] + offset;
        if (j - i > 1) os << "^" << j - i;
        i = j;
    }
    return os.str();
}

std::vector<Word> all_words(int alphabet_size, int degree) {
    std::vector<Word> out;
    std::vector<int> letters(static_cast<size_t>(degree));
    while (true) {
        out.emplace_back(alphabet_size, letters);
        int pos = degree - 1;
        while (pos >= 0 && letters[static_cast<size_t>(pos)] == alphabet_size - 1) {
            letters[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<size_t>(pos)];
    }
    return out;
}

std::vector<Word> letter_rearrangements(const Word& w) {
    std::vector<int> letters = w.letters();
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.emplace_back(w.alphabet_size(), letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace cycinv

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cycinv {

// Display convention for variables: the x-alphabet is 1-based (x1..xd),
// the y-alphabet 0-based (y0..y_{d-1}).  Letters are 0-based internally
// in both cases.
enum class VarStyle { X1Based, Y0Based };

// Monomial of the free associative algebra: a sequence of letter indices
// in {0, ..., alphabet_size-1}.  The empty word is the unit.
class Word {
public:
    explicit Word(int alphabet_size) : alphabet_(alphabet_size) { check_alphabet(); }
    Word(int alphabet_size, std::vector<int> letters);

    int alphabet_size() const { return alphabet_; }
    int degree() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(int pos) const { return letters_[static_cast<size_t>(pos)]; }
    bool is_empty() const { return letters_.empty(); }

    // Sum of letter indices; a word is C_d-invariant in the y-alphabet
    // iff this is divisible by the alphabet size.
    long letter_sum() const;
    bool is_invariant() const { return letter_sum() % alphabet_ == 0; }

    Word prefix(int length) const;
    Word suffix_from(int start) const;
    friend Word concat(const Word& a, const Word& b);

    // Deg-lex: by degree, then lexicographically on the letters.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

    // Rank of the word among all words of the same degree in deg-lex
    // order; equals the base-d value of the letter sequence.
    long lex_rank() const;

    std::string str(VarStyle style) const;

private:
    void check_alphabet() const;

    int alphabet_;
    std::vector<int> letters_;
};

// All words of the given degree in deg-lex order (d^degree of them).
std::vector<Word> all_words(int alphabet_size, int degree);

// Distinct rearrangements of the word's letters, in deg-lex order.
std::vector<Word> letter_rearrangements(const Word& w);

}  // namespace cycinv

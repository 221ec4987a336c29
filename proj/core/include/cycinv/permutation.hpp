#pragma once

#include <string>
#include <vector>

#include "cycinv/word.hpp"

namespace cycinv {

// Element of Sym_n acting on the positions 1..n of a degree-n word:
//   (w ∘ sigma) has at position p the letter of w at position sigma^{-1}(p).
//
// Composition convention (fixed once, used everywhere): sigma.then(tau)
// applies sigma first, so (w ∘ sigma) ∘ tau = w ∘ sigma.then(tau).
class Permutation {
public:
    explicit Permutation(int n);                       // identity
    explicit Permutation(std::vector<int> images_0based);

    static Permutation identity(int n) { return Permutation(n); }
    // Transposition of 1-based positions i and j.
    static Permutation transposition(int n, int i, int j);
    // sigma with w ∘ sigma == target, matching equal letters left to right;
    // the words must be rearrangements of each other.
    static Permutation taking(const Word& from, const Word& to);

    int degree() const { return static_cast<int>(images_.size()); }
    // 0-based image of a 0-based position.
    int image(int pos) const { return images_[static_cast<size_t>(pos)]; }

    Permutation inverse() const;
    Permutation then(const Permutation& tau) const;

    Word apply(const Word& w) const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    bool is_identity() const;

    // One-line notation on 1-based positions, e.g. "[2 1 3]".
    std::string str() const;

private:
    std::vector<int> images_;
};

// All n! permutations of degree n, identity first, in lexicographic order
// of the image sequence.
std::vector<Permutation> all_permutations(int n);

}  // namespace cycinv

#include "cycinv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycinv {

Permutation::Permutation(int n) : images_(static_cast<size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("Permutation: transposition positions out of range");
    Permutation p(n);
    std::swap(p.images_[static_cast<size_t>(i - 1)], p.images_[static_cast<size_t>(j - 1)]);
    return p;
}

Permutation Permutation::taking(const Word& from, const Word& to) {
    const int n = from.degree();
    if (to.degree() != n || from.alphabet_size() != to.alphabet_size())
        throw std::invalid_argument("Permutation::taking: words are not compatible");
    // Queue of unmatched target positions per letter, consumed left to right.
    std::vector<std::vector<int>> slots(static_cast<size_t>(from.alphabet_size()));
    for (int p = n - 1; p >= 0; --p)
        slots[static_cast<size_t>(to.letter(p))].push_back(p);
    std::vector<int> images(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
        auto& avail = slots[static_cast<size_t>(from.letter(q))];
        if (avail.empty())
            throw std::invalid_argument("Permutation::taking: words are not rearrangements");
        images[static_cast<size_t>(q)] = avail.back();
        avail.pop_back();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& tau) const {
    if (degree() != tau.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> images(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        images[i] = tau.images_[static_cast<size_t>(images_[i])];
    return Permutation(std::move(images));
}

Word Permutation::apply(const Word& w) const {
    if (w.degree() != degree())
        throw std::invalid_argument("Permutation: word degree does not match permutation degree");
    std::vector<int> letters(images_.size());
    for (size_t q = 0; q < images_.size(); ++q)
        letters[static_cast<size_t>(images_[q])] = w.letter(static_cast<int>(q));
    return Word(w.alphabet_size(), std::move(letters));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) os << " ";
        os << images_[i] + 1;
    }
    os << "]";
    return os.str();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace cycinv

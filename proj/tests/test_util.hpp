#pragma once

#include <cstdint>
#include <vector>

#include "cycinv/cyclotomic.hpp"
#include "cycinv/nc_poly.hpp"
#include "cycinv/rational.hpp"
#include "cycinv/word.hpp"

namespace cycinv::test {

// Deterministic xorshift generator so property tests are reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational() { return Rational(range(-5, 5), range(1, 4)); }

    CycNumber cyc(int order) {
        std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(order)));
        for (auto& c : coeffs) c = rational();
        return CycNumber(order, std::move(coeffs));
    }

    Word word(int alphabet, int degree) {
        std::vector<int> letters(static_cast<size_t>(degree));
        for (auto& l : letters) l = static_cast<int>(range(0, alphabet - 1));
        return Word(alphabet, std::move(letters));
    }

    NcPoly<Rational> nc_poly(int alphabet, int max_degree, int terms) {
        NcPoly<Rational> f(alphabet);
        for (int i = 0; i < terms; ++i)
            f.add_term(word(alphabet, static_cast<int>(range(0, max_degree))), rational());
        return f;
    }

    NcPoly<Rational> homogeneous_nc_poly(int alphabet, int degree, int terms) {
        NcPoly<Rational> f(alphabet);
        for (int i = 0; i < terms; ++i) f.add_term(word(alphabet, degree), rational());
        return f;
    }

private:
    uint64_t state_;
};

}  // namespace cycinv::test

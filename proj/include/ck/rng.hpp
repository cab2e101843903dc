#pragma once

#include "ck/laurent.hpp"

#include <cstdint>

namespace ck {

// Small deterministic generator (xorshift64*); identical streams on every
// platform, which keeps seeded CLI output byte-identical.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545f4914f6cdd1dull;
    }
    // uniform-ish in [lo, hi]; modulo bias is irrelevant here
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

// Random Laurent polynomial over a block: at most max_terms monomials with
// exponents in [-exp_bound, exp_bound] and nonzero integer coefficients in
// [-coef_bound, coef_bound].
LaurentPoly random_laurent(const VarSetPtr& vs, const Block& b, Rng& rng, int max_terms = 8,
                           int exp_bound = 3, int coef_bound = 5);

} // namespace ck

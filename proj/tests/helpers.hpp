#pragma once

#include "ck/laurent.hpp"
#include "ck/rng.hpp"

#include <string>

namespace ckt {

// Shorthand used across the test suites.
inline ck::LaurentPoly P(const ck::VarSetPtr& vs, const std::string& expr) {
    return ck::parse_poly(vs, expr);
}

inline ck::LaurentPoly rand_poly(const ck::VarSetPtr& vs, const ck::Block& b, ck::Rng& rng,
                                 int max_terms = 6, int exp_bound = 3, int coef_bound = 5) {
    return ck::random_laurent(vs, b, rng, max_terms, exp_bound, coef_bound);
}

} // namespace ckt

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ck {

// Exact arbitrary-precision rational, always kept in canonical form by GMP.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "n" or "n/d". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

// Canonical "num/den" string, denominator always explicit.
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace ck

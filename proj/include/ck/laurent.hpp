#pragma once

#include "ck/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ck {

// Exponent vector of a Laurent monomial, one entry per variable of the
// ambient VarSet, in units of 1/exponent_unit. std::vector's built-in
// lexicographic order is the canonical term order.
using Exp = std::vector<int>;

// A contiguous-by-name group of variables ("x1".."xn" or "y1".."yn"),
// addressed by position in the ambient VarSet.
struct Block {
    std::vector<int> pos;
    int size() const { return static_cast<int>(pos.size()); }
};

// Fixed, ordered variable universe a polynomial lives over.
// exponent_unit = 2 means stored exponents count half-steps, which keeps
// half-integer powers representable on an integer lattice.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names, int unit = 1);

    const std::vector<std::string>& names() const { return names_; }
    int size() const { return static_cast<int>(names_.size()); }
    int unit() const { return unit_; }

    // Index of a variable by name; -1 if absent.
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const { return index_of(name) >= 0; }

    // Positions of prefix+"1" .. prefix+"k" for the maximal consecutive k.
    Block block(const std::string& prefix) const;

    bool same_as(const VarSet& other) const {
        return unit_ == other.unit_ && names_ == other.names_;
    }

private:
    VarSet(std::vector<std::string> names, int unit);
    std::vector<std::string> names_;
    int unit_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Convenience factory: x1..xn [, y1..yn] [, extras...], unit 1.
VarSetPtr make_vars(int n, bool with_y = false, std::vector<std::string> extras = {});

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero, so equality of term maps is
// equality of polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarSetPtr vs) : vs_(std::move(vs)) {}

    static LaurentPoly zero(VarSetPtr vs) { return LaurentPoly(std::move(vs)); }
    static LaurentPoly constant(VarSetPtr vs, const Rat& c);
    static LaurentPoly monomial(VarSetPtr vs, Exp e, const Rat& c);
    // x_name^k
    static LaurentPoly variable(VarSetPtr vs, const std::string& name, int power = 1);

    const VarSetPtr& varset() const { return vs_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool operator==(const LaurentPoly& g) const;
    bool operator!=(const LaurentPoly& g) const { return !(*this == g); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }
    LaurentPoly operator*(const Rat& c) const;

    // Adds c * x^e in place.
    void add_term(const Exp& e, const Rat& c);

    // Ring homomorphism var -> value, identity on the other variables.
    // Substituting into negative powers requires value to be an invertible
    // monomial; violations raise std::domain_error.
    LaurentPoly substitute(const std::string& var, const LaurentPoly& value) const;
    LaurentPoly substitute(const std::string& var, const Rat& value) const;

    // Sum of the terms whose exponents vanish on all of vars.
    LaurentPoly constant_term(const std::vector<int>& var_positions) const;
    LaurentPoly constant_term(const Block& b) const { return constant_term(b.pos); }

    // Keeps the terms whose total exponent over var_positions is <= maxdeg.
    LaurentPoly truncate_by_degree(const std::vector<int>& var_positions, int maxdeg) const;
    LaurentPoly truncate_by_degree(const Block& b, int maxdeg) const {
        return truncate_by_degree(b.pos, maxdeg);
    }

    // If every term of *this is constant on the dropped variables, rebuilds
    // the polynomial over target (which must contain all variables carrying
    // nonzero exponents). Throws std::domain_error otherwise.
    LaurentPoly project(const VarSetPtr& target) const;

    // Minimum exponent of the variable at position p over all terms
    // (0 for the zero polynomial).
    int min_exponent(int p) const;
    int max_exponent(int p) const;
    // Total degree over a block, per term; returns 0 for the zero polynomial.
    int max_degree(const Block& b) const;

    // The unique constant coefficient (term with all exponents zero).
    Rat constant_coefficient() const;
    // True if the polynomial equals the given constant.
    bool is_constant(const Rat& c) const;

    std::string to_pretty() const;

private:
    void require_same_varset(const LaurentPoly& g) const;
    VarSetPtr vs_;
    std::map<Exp, Rat> terms_;
};

// Exact division: returns q with q*divisor == f, verifying the product;
// raises internal_error if f is not divisible (that is a caller bug, since
// every division performed by this library is divisible by construction).
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& divisor);

// f^k for k >= 0 (any f), k < 0 only for invertible monomials.
LaurentPoly power(const LaurentPoly& f, int k);

// Parses the human-readable syntax produced by to_pretty():
// terms of coefficients and variable powers, e.g. "x1^2*x2 - 3/2*x1*y1^-1 + 1".
LaurentPoly parse_poly(const VarSetPtr& vs, const std::string& text);

} // namespace ck

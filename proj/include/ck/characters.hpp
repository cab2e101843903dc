#pragma once

#include "ck/laurent.hpp"
#include "ck/weyl.hpp"

#include <vector>

namespace ck {

using Partition = std::vector<int>; // weakly decreasing, nonnegative

bool is_partition(const Partition& p);
// Number of nonzero parts.
int partition_length(const Partition& p);

enum class DenominatorForm { Sum, Product };

// The group-alternating sum over x^{rho w} (Sum) or the factored product
// form (Product). Type B lives on the unit-2 exponent lattice; the result
// of every other type is over a unit-1 varset x1..xn.
LaurentPoly weyl_denominator(GroupType type, int n, DenominatorForm form,
                             int cap = kDefaultEnumerationCap);

// rho, in stored exponent units of the lattice the type works on
// (doubled entries for type B).
VectorZ rho_vector(GroupType type, int n);

// Classical character by the quotient of alternating sums over a local
// varset x1..xn; the half-integer exponents of type B cancel, so results of
// every type have unit-1 exponents. Requires partition length <= n
// (strictly < n in type D).
LaurentPoly character(GroupType type, const Partition& lambda, int n,
                      int cap = kDefaultEnumerationCap);

// Schur polynomial by explicit semistandard tableau enumeration, independent
// of every divided-difference code path. Oracle for the acceptance tests.
LaurentPoly schur_oracle(const Partition& lambda, int n);

// Rebuilds f (over some varset) onto a block of a target varset, matching
// variables positionally: variable from.pos[i] -> to.pos[i]. Exponents
// outside `from` must be zero.
LaurentPoly transplant(const LaurentPoly& f, const Block& from, const VarSetPtr& to_vs,
                       const Block& to);

} // namespace ck

#pragma once

#include "ck/report.hpp"
#include "ck/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ck {

// Quadratic relations pi^2 = pi, hatted pi^2 = -hatted pi, on seeded random
// Laurent polynomials, every generator of the type.
VerificationReport check_lemma1(GroupType type, int n, int trials, uint64_t seed);

// Braid and commutation relations of the type's operator family (plain and
// hatted), plus, for type D, raising-path independence of the key
// polynomials over a small index window.
VerificationReport check_braid(GroupType type, int n, int trials, uint64_t seed);

// Factored alternating group sums against direct enumeration, every
// monomial with |v_i| <= window.
VerificationReport check_eq45(GroupType type, int n, int window);

// Sum form of the Weyl denominators against the factored products,
// types A..D, ranks 1..n.
VerificationReport check_eq69(int n);

// Characters via the alternating-sum quotient against the image of the
// dominant monomial under the maximal operator word; for type A also
// against the tableau Schur oracle.
VerificationReport check_eq1013(GroupType type, int n, int max_weight);

// Kernel specialization coherence: the BC kernel at beta = 0/1 equals the
// C/B kernel.
VerificationReport check_kernel_specialization(int n, int maxdeg);

struct VerifyConfig {
    GroupType type = GroupType::C;
    int n = 2;
    int maxdeg = 4;
    int bound = 2;
    int trials = 100;
    uint64_t seed = 20060607;
};

// Dispatch by identity name ("lemma1", "braid", "eq4-5", "eq6-9", "prop3",
// "lemma2", "lemma4", "lemma5", "theorem6", "eq1-3", "theorem8",
// "theorem15", "lemma10", "corollary12", "eq10-13").
// Throws std::domain_error for unknown identities.
VerificationReport run_verify(const std::string& identity, const VerifyConfig& cfg);

std::vector<std::string> known_identities();

} // namespace ck

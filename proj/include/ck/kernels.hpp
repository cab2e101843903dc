#pragma once

#include "ck/divdiff.hpp"
#include "ck/keypoly.hpp"
#include "ck/laurent.hpp"
#include "ck/report.hpp"
#include "ck/weyl.hpp"

#include <optional>
#include <vector>

namespace ck {

// An x-degree-graded truncation of a kernel expansion: slice d holds
// exactly the terms of total x-degree d. The y-exponents stay exact, so
// every slice is lossless.
struct TruncatedSeries {
    VarSetPtr vs;
    Block xblock;
    int maxdeg = 0;
    std::vector<LaurentPoly> slices; // indexed 0..maxdeg

    static TruncatedSeries one(VarSetPtr vs, int maxdeg);
    // Restricts both operands to the common cutoff before comparing.
    bool operator==(const TruncatedSeries& o) const;
};

struct SliceMismatch {
    int slice = 0;
    Exp exponent;
    Rat left, right;
};

std::optional<SliceMismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

// Termwise operations, all exact per slice.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Multiplies by a polynomial whose terms all have nonnegative x-degree.
TruncatedSeries mul_poly(const TruncatedSeries& a, const LaurentPoly& p);
// Multiplies by (1 - m)^{-1} for a monomial m of positive x-degree.
TruncatedSeries mul_inverse_factor(const TruncatedSeries& a, const LaurentPoly& m);
TruncatedSeries substitute(const TruncatedSeries& a, const std::string& var, const Rat& value);

// Applies one operator word slice by slice. Operators must preserve the
// x-grading: any y-block operator, or type A operators on the x block.
TruncatedSeries apply_opword_series(const TruncatedSeries& s, const OpWord& w);
TruncatedSeries apply_opsum_series(const TruncatedSeries& s, const OpSum& ops);

// Varset x1..xn, y1..yn, beta shared by all kernel computations.
VarSetPtr kernel_vars(int n);

// The non-symmetric kernels. Type A keeps only the factors with
// i + j <= n + 1; the other types use the full grid plus the i <= j
// inverse factors and their polynomial numerators. BC carries beta.
TruncatedSeries kernel_series(GroupType type, int n, int maxdeg);
// Omega^A_{n-1}: the i + j <= n restriction over the same alphabets.
TruncatedSeries kernel_series_a_restricted(int n, int maxdeg);
// The symmetric (full-grid) kernels that the maximal x divided difference
// produces from the non-symmetric ones.
TruncatedSeries symmetric_kernel_series(GroupType type, int n, int maxdeg);
// Generating function of the dominant monomials x^lambda y^lambda.
TruncatedSeries dominant_series(int n, int maxdeg);

// Sum over sigma in S_n of hatted-x word times plain-y word.
OpSum xi_direct(int n);
// The factor multiplying the rank n-1 operator in the recursive
// factorization; the full factored operator is the product of the factors
// for ranks 2..n.
OpSum xi_factor(int k);

// The y-block pipelines mapping the type A kernel onto BC and D.
OpWord phi_bc_word(int n);
OpWord phi_d_word(int n);

// Key-polynomial expansion side of the kernel identities: sum of
// Khat_v(x) * K_{v omega}(y) (A), Khat_v(x) * K^BC_{-v}(y) (BC), or
// Khat_v(x) * K^D_{-v}(y) over v_n = 0 (D).
TruncatedSeries theorem6_rhs(GroupType type, int n, int maxdeg);

// Identity checks at a given rank and cutoff.
VerificationReport check_prop3(int n, int maxdeg);
VerificationReport check_lemma2(int n, int maxdeg);
VerificationReport check_lemma4(int n, int maxdeg);
VerificationReport check_lemma5(int n, int maxdeg);
VerificationReport check_theorem6(GroupType type, int n, int maxdeg);
// The symmetric corollaries: the maximal x word sends each kernel identity
// onto the classical Cauchy/Littlewood expansions.
VerificationReport check_corollaries(int n, int maxdeg);

} // namespace ck

#pragma once

#include "ck/keypoly.hpp"
#include "ck/laurent.hpp"
#include "ck/report.hpp"
#include "ck/rng.hpp"
#include "ck/weyl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ck {

// Dominance order by partial sums: u <= v iff u_1+..+u_k <= v_1+..+v_k
// for every k.
bool dominance_leq(const VectorZ& u, const VectorZ& v);

// Gram matrix between the plain family (rows) and the hatted family
// (columns). Entries excluded by the type D odd-rank hypothesis are absent.
struct GramMatrix {
    GroupType type = GroupType::A;
    int n = 0;
    int bound = 0;
    std::vector<VectorZ> rows, cols;
    std::vector<std::vector<std::optional<LaurentPoly>>> entries;
};

// The constant-term pairing of one classical type: CT(f g x^rho Delta) with
// the type's weight, the rational BC factors expanded adaptively in beta,
// and the variable-reversal convention in type A. The weight sign is
// normalized so the pairing of 1 with 1 is +1.
class ScalarProduct {
public:
    ScalarProduct(GroupType type, int n);

    GroupType type() const { return type_; }
    int rank() const { return n_; }
    // x1..xn, plus beta for type BC
    const VarSetPtr& varset() const { return vs_; }

    // f and g may live over any varset whose variables embed into this
    // context's; the result has exponents only in beta (type BC) and is a
    // plain rational constant otherwise.
    LaurentPoly scalar(const LaurentPoly& f, const LaurentPoly& g) const;
    // Convenience for the beta-free types; throws if the value is not constant.
    Rat scalar_value(const LaurentPoly& f, const LaurentPoly& g) const;

    GramMatrix gram(int bound) const;

    // The index u such that (K_v, Khat_u) = 1: -v, or the reversal of v in
    // type A.
    VectorZ partner(const VectorZ& v) const;

private:
    struct XIndex;
    LaurentPoly reverse_invert(const LaurentPoly& g) const;
    LaurentPoly ct_product(const LaurentPoly& fw, const LaurentPoly& g) const;
    LaurentPoly ct_product_bc(const LaurentPoly& fw, const LaurentPoly& g) const;
    LaurentPoly ct_with_index(const XIndex& idx, const LaurentPoly& g) const;
    LaurentPoly ct_bc_with_index(const XIndex& idx, const LaurentPoly& g) const;

    GroupType type_;
    int n_;
    VarSetPtr vs_;
    Block xb_;
    LaurentPoly weight_; // normalized; excludes the BC beta denominators
};

VerificationReport check_theorem8(GroupType type, int n, int trials, uint64_t seed);
VerificationReport check_theorem15(GroupType type, int n, int bound);
VerificationReport check_lemma10(GroupType type, int n, int window);
VerificationReport check_corollary12(GroupType type, int n, int window);

} // namespace ck

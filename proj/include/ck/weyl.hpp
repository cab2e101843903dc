#pragma once

#include "ck/laurent.hpp"

#include <string>
#include <vector>

namespace ck {

// Which classical family the ambient group belongs to. BC shares the B/C
// group; it differs only at the operator level.
enum class GroupType { A, B, C, D, BC };

GroupType group_type_from_string(const std::string& s);
std::string to_string(GroupType t);

// True if the last-node generator of the type is s_n (sign flip);
// type D uses tau_n instead, type A has none.
bool shares_bc_group(GroupType t);

using VectorZ = std::vector<int>;

// Generator-like actions on vectors: the simple reflections s_i, the type-D
// generator tau_n, and the (non-simple) sign flips theta_i.
struct Generator {
    enum class Kind { S, Tau, Theta };
    Kind kind = Kind::S;
    int index = 1; // 1-based; Tau always acts at the last two entries

    static Generator s(int i) { return {Kind::S, i}; }
    static Generator tau(int n) { return {Kind::Tau, n}; }
    static Generator theta(int i) { return {Kind::Theta, i}; }
};

using Word = std::vector<Generator>;

std::string word_to_string(const Word& w);

// Throws std::domain_error if gen is not available for (type, n).
void validate_generator(GroupType type, int n, const Generator& gen);

// v . gen, operators acting on the right.
VectorZ act_vector(GroupType type, const Generator& gen, VectorZ v);
VectorZ act_vector_word(GroupType type, const Word& w, VectorZ v);

// Monomial action x^v -> x^{v.gen} extended linearly, on the given block.
LaurentPoly act_poly(GroupType type, const Generator& gen, const LaurentPoly& f, const Block& b);
LaurentPoly act_poly_word(GroupType type, const Word& w, const LaurentPoly& f, const Block& b);

// Minimal number of generators carrying v to the decreasing reordering of
// (|v_1|,..,|v_n|), by memoized breadth-first search over the orbit.
// Type D vectors outside the orbit of their dominant representative raise
// std::domain_error.
int length_vector(GroupType type, const VectorZ& v);

// True if v lies in the orbit of its dominant representative (always true
// except for type D parity obstructions).
bool vector_reachable(GroupType type, const VectorZ& v);

// Decreasing reordering of the absolute values.
VectorZ dominant_representative(const VectorZ& v);

// The displayed reduced decompositions of the maximal elements.
Word max_element_word(GroupType type, int n);

// A group element as the image of [1,2,...,n] plus its length.
struct SignedPerm {
    VectorZ image;
    int length = 0;
};

// v . w from the image vector of w.
VectorZ apply_signed_perm(const VectorZ& image, const VectorZ& v);

inline constexpr int kDefaultEnumerationCap = 5;

// All group elements with their lengths, by breadth-first search from the
// identity. Throws resource_error when n exceeds the cap.
std::vector<SignedPerm> enumerate_group(GroupType type, int n, int cap = kDefaultEnumerationCap);

// Reduced word of the permutation with the given image of [1..n] (type A).
Word reduced_word_of_permutation(const VectorZ& image);

// Sum_w (-1)^{l(w)} f^w over the full group of the type, by enumeration.
LaurentPoly alternating_sum_direct(GroupType type, const LaurentPoly& f, const Block& b,
                                   int cap = kDefaultEnumerationCap);

// The factored right-hand sides: (1-theta_1)..(1-theta_n) alt_A for B/C,
// and the half-sum of the (1-theta) and (1+theta) products for D.
LaurentPoly alternating_sum_factored(GroupType type, const LaurentPoly& f, const Block& b,
                                     int cap = kDefaultEnumerationCap);

} // namespace ck

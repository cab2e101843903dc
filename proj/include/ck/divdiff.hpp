#pragma once

#include "ck/laurent.hpp"
#include "ck/weyl.hpp"

#include <string>
#include <vector>

namespace ck {

// One isobaric divided difference. Operators at index < n are the common
// pi_i of every family; the last node carries the type-specific variant
// (B, C, BC or D). Hatted operators subtract the identity.
struct DivDiff {
    char block = 'x'; // 'x' or 'y'
    int index = 1;    // 1-based node
    GroupType last = GroupType::A; // meaningful only when the op sits at the last node
    bool hatted = false;

    static DivDiff pi(int i, char block = 'x') { return {block, i, GroupType::A, false}; }
    static DivDiff pi_last(GroupType t, int n, char block = 'x') { return {block, n, t, false}; }
    DivDiff hat() const { return {block, index, last, true}; }
};

using OpWord = std::vector<DivDiff>;
// A formal sum of operator words, applied termwise.
using OpSum = std::vector<OpWord>;

std::string opword_to_string(const OpWord& w);

// f . op, computed by exact division per the defining rational expressions;
// the division is verified by re-multiplication.
LaurentPoly apply_divdiff(const LaurentPoly& f, const DivDiff& op);

// Left-to-right composition (operators act on the right).
LaurentPoly apply_opword(const LaurentPoly& f, const OpWord& w);

LaurentPoly apply_opsum(const LaurentPoly& f, const OpSum& s);

// pi-word along a generator word: s_i -> pi_i, last-node generators ->
// the type's last-node operator.
OpWord opword_from_generators(GroupType type, int n, const Word& w, char block = 'x',
                              bool hatted = false);

// Shift every node index by one (used by the recursive type-D pipelines).
OpWord shift_indices(const OpWord& w);

} // namespace ck

#pragma once

#include "ck/divdiff.hpp"
#include "ck/laurent.hpp"
#include "ck/weyl.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ck {

// Index of a key polynomial: the family type, the exponent vector, and
// which of the two families (plain or hatted) is meant.
struct KeyIndex {
    GroupType type = GroupType::A;
    VectorZ v;
    bool hatted = false;
};

// "type:v1,v2,...,vn[:hat]"
KeyIndex parse_key_index(const std::string& s);
std::string to_string(const KeyIndex& idx);

// True if the key polynomial K_v^type is defined: type A needs v in N^n,
// type D needs v reachable from its dominant representative.
bool valid_key_index(GroupType type, const VectorZ& v);

enum class IndexConstraint { None, Nonneg, LastZero };

// All valid v with sum |v_i| <= degree_bound satisfying the constraint,
// ordered by degree then lex-descending.
std::vector<VectorZ> enumerate_indices(GroupType type, int n, int degree_bound,
                                       IndexConstraint constraint = IndexConstraint::None);

// Generates key polynomials over one variable block of a fixed varset,
// caching every index reached. Raising paths start at the dominant
// representative and apply the first length-raising generator in a fixed
// order, so cached results are deterministic; path independence is a
// consequence of the braid relations and is asserted in tests.
class KeyTable {
public:
    KeyTable(VarSetPtr vs, char block = 'x', bool reverse_generator_order = false);

    LaurentPoly key(const KeyIndex& idx);
    LaurentPoly key(GroupType type, const VectorZ& v, bool hatted = false) {
        return key(KeyIndex{type, v, hatted});
    }

    const VarSetPtr& varset() const { return vs_; }
    const Block& block() const { return block_; }

private:
    struct CacheKey {
        GroupType type;
        VectorZ v;
        bool hatted;
        bool operator<(const CacheKey& o) const {
            if (type != o.type) return type < o.type;
            if (v != o.v) return v < o.v;
            return hatted < o.hatted;
        }
    };

    std::vector<std::pair<Generator, VectorZ>> raising_path(GroupType type, const VectorZ& v) const;

    VarSetPtr vs_;
    Block block_;
    char block_name_;
    bool reversed_;
    std::mutex mu_;
    std::map<CacheKey, LaurentPoly> cache_;
};

} // namespace ck

#include "ck/keypoly.hpp"

#include "ck/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ck {

KeyIndex parse_key_index(const std::string& s) {
    KeyIndex idx;
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::domain_error("key index needs a type prefix: " + s);
    idx.type = group_type_from_string(s.substr(0, colon));
    std::string rest = s.substr(colon + 1);
    size_t hat = rest.rfind(":hat");
    if (hat != std::string::npos && hat + 4 == rest.size()) {
        idx.hatted = true;
        rest = rest.substr(0, hat);
    }
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            idx.v.push_back(value);
        } catch (const std::exception&) {
            throw std::domain_error("malformed key index entry: " + item);
        }
    }
    if (idx.v.empty()) throw std::domain_error("empty key index: " + s);
    return idx;
}

std::string to_string(const KeyIndex& idx) {
    std::string out = to_string(idx.type) + ":";
    for (size_t i = 0; i < idx.v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(idx.v[i]);
    }
    if (idx.hatted) out += ":hat";
    return out;
}

bool valid_key_index(GroupType type, const VectorZ& v) {
    switch (type) {
        case GroupType::A:
            for (int x : v)
                if (x < 0) return false;
            return true;
        case GroupType::B:
        case GroupType::C:
        case GroupType::BC:
            return true;
        case GroupType::D:
            return v.size() >= 2 && vector_reachable(GroupType::D, v);
    }
    return false;
}

std::vector<VectorZ> enumerate_indices(GroupType type, int n, int degree_bound,
                                       IndexConstraint constraint) {
    std::vector<VectorZ> out;
    VectorZ v(n, 0);
    // the last-zero windows of the kernel expansions live in N^n as well
    bool nonneg = constraint != IndexConstraint::None || type == GroupType::A;
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == n) {
            if (constraint == IndexConstraint::LastZero && v[n - 1] != 0) return;
            if (!valid_key_index(type, v)) return;
            out.push_back(v);
            return;
        }
        for (int e = -budget; e <= budget; ++e) {
            if (nonneg && e < 0) continue;
            v[pos] = e;
            self(self, pos + 1, budget - std::abs(e));
        }
        v[pos] = 0;
    };
    rec(rec, 0, degree_bound);
    std::stable_sort(out.begin(), out.end(), [](const VectorZ& a, const VectorZ& b) {
        long da = 0, db = 0;
        for (int x : a) da += std::abs(x);
        for (int x : b) db += std::abs(x);
        if (da != db) return da < db;
        return a > b; // lex-descending within a degree
    });
    return out;
}

KeyTable::KeyTable(VarSetPtr vs, char block, bool reverse_generator_order)
    : vs_(std::move(vs)),
      block_(vs_->block(std::string(1, block))),
      block_name_(block),
      reversed_(reverse_generator_order) {
    if (block_.size() == 0)
        throw std::invalid_argument("varset has no block " + std::string(1, block));
}

std::vector<std::pair<Generator, VectorZ>> KeyTable::raising_path(GroupType type,
                                                                  const VectorZ& v) const {
    const int n = static_cast<int>(v.size());
    VectorZ start = dominant_representative(v);

    std::vector<Generator> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Generator::s(i));
    if (shares_bc_group(type)) gens.push_back(Generator::s(n));
    if (type == GroupType::D) gens.push_back(Generator::tau(n));
    if (reversed_) std::reverse(gens.begin(), gens.end());

    auto raising_move = [&](const VectorZ& u, const Generator& g) -> bool {
        switch (g.kind) {
            case Generator::Kind::S:
                if (g.index < n) return u[g.index - 1] > u[g.index];
                return u[n - 1] > 0;
            case Generator::Kind::Tau:
                return length_vector(GroupType::D, act_vector(GroupType::D, g, u)) >
                       length_vector(GroupType::D, u);
            default:
                return false;
        }
    };

    // Breadth-first search over raising moves; the first path found is the
    // computation path.
    std::map<VectorZ, std::pair<VectorZ, Generator>> parent;
    std::deque<VectorZ> queue{start};
    parent.emplace(start, std::make_pair(start, Generator::s(1)));
    bool found = start == v;
    while (!queue.empty() && !found) {
        VectorZ u = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            if (!raising_move(u, g)) continue;
            VectorZ w = act_vector(type, g, u);
            if (parent.count(w)) continue;
            parent.emplace(w, std::make_pair(u, g));
            if (w == v) { found = true; break; }
            queue.push_back(w);
        }
    }
    if (!found)
        throw std::domain_error("key index " + to_string(KeyIndex{type, v, false}) +
                                " is not reachable by raising moves");
    std::vector<std::pair<Generator, VectorZ>> path;
    for (VectorZ u = v; u != start;) {
        auto [prev, g] = parent.at(u);
        path.emplace_back(g, u);
        u = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

LaurentPoly KeyTable::key(const KeyIndex& idx) {
    const int n = static_cast<int>(idx.v.size());
    if (n != block_.size())
        throw std::domain_error("key index rank does not match the block size");
    if (!valid_key_index(idx.type, idx.v))
        throw std::domain_error("invalid key index " + to_string(idx));

    auto normalize = [&](const VectorZ& u) {
        // all families coincide on N^n, so those entries are shared
        bool nonneg = true;
        for (int x : u)
            if (x < 0) { nonneg = false; break; }
        return nonneg ? GroupType::A : idx.type;
    };

    {
        std::scoped_lock lock(mu_);
        auto it = cache_.find(CacheKey{normalize(idx.v), idx.v, idx.hatted});
        if (it != cache_.end()) return it->second;
    }

    VectorZ start = dominant_representative(idx.v);
    Exp e(vs_->size(), 0);
    for (int i = 0; i < n; ++i) e[block_.pos[i]] = start[i];
    LaurentPoly current = LaurentPoly::monomial(vs_, e, Rat(1));
    {
        std::scoped_lock lock(mu_);
        cache_.emplace(CacheKey{normalize(start), start, idx.hatted}, current);
    }

    for (const auto& [g, target] : raising_path(idx.type, idx.v)) {
        CacheKey ck{normalize(target), target, idx.hatted};
        {
            std::scoped_lock lock(mu_);
            auto it = cache_.find(ck);
            if (it != cache_.end()) { current = it->second; continue; }
        }
        OpWord step = opword_from_generators(idx.type, n, {g}, block_name_, idx.hatted);
        current = apply_opword(current, step);
        std::scoped_lock lock(mu_);
        cache_.emplace(std::move(ck), current);
    }
    return current;
}

} // namespace ck

#include "ck/weyl.hpp"

#include "ck/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ck {

GroupType group_type_from_string(const std::string& s) {
    if (s == "A") return GroupType::A;
    if (s == "B") return GroupType::B;
    if (s == "C") return GroupType::C;
    if (s == "D") return GroupType::D;
    if (s == "BC") return GroupType::BC;
    throw std::domain_error("unknown group type: " + s);
}

std::string to_string(GroupType t) {
    switch (t) {
        case GroupType::A: return "A";
        case GroupType::B: return "B";
        case GroupType::C: return "C";
        case GroupType::D: return "D";
        case GroupType::BC: return "BC";
    }
    return "?";
}

bool shares_bc_group(GroupType t) {
    return t == GroupType::B || t == GroupType::C || t == GroupType::BC;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (const auto& g : w) {
        if (!out.empty()) out += " ";
        switch (g.kind) {
            case Generator::Kind::S: out += "s" + std::to_string(g.index); break;
            case Generator::Kind::Tau: out += "t" + std::to_string(g.index); break;
            case Generator::Kind::Theta: out += "th" + std::to_string(g.index); break;
        }
    }
    return out;
}

void validate_generator(GroupType type, int n, const Generator& gen) {
    switch (gen.kind) {
        case Generator::Kind::S:
            if (gen.index < 1 || gen.index > n)
                throw std::domain_error("generator index out of range");
            if (gen.index == n && !shares_bc_group(type))
                throw std::domain_error("s_n is only available in types B/C/BC");
            return;
        case Generator::Kind::Tau:
            if (type != GroupType::D)
                throw std::domain_error("tau_n is only available in type D");
            if (gen.index != n || n < 2)
                throw std::domain_error("tau acts at the last node and needs n >= 2");
            return;
        case Generator::Kind::Theta:
            if (type == GroupType::A)
                throw std::domain_error("theta_i is not available in type A");
            if (gen.index < 1 || gen.index > n)
                throw std::domain_error("generator index out of range");
            return;
    }
    throw std::domain_error("invalid generator");
}

namespace {

// Pure action on an n-entry vector, bounds already validated.
void act_in_place(const Generator& gen, VectorZ& v, int n) {
    switch (gen.kind) {
        case Generator::Kind::S:
            if (gen.index < n) {
                std::swap(v[gen.index - 1], v[gen.index]);
            } else {
                v[n - 1] = -v[n - 1];
            }
            return;
        case Generator::Kind::Tau: {
            int a = v[n - 2], b = v[n - 1];
            v[n - 2] = -b;
            v[n - 1] = -a;
            return;
        }
        case Generator::Kind::Theta:
            v[gen.index - 1] = -v[gen.index - 1];
            return;
    }
}

} // namespace

VectorZ act_vector(GroupType type, const Generator& gen, VectorZ v) {
    validate_generator(type, static_cast<int>(v.size()), gen);
    act_in_place(gen, v, static_cast<int>(v.size()));
    return v;
}

VectorZ act_vector_word(GroupType type, const Word& w, VectorZ v) {
    for (const auto& g : w) v = act_vector(type, g, std::move(v));
    return v;
}

LaurentPoly act_poly(GroupType type, const Generator& gen, const LaurentPoly& f, const Block& b) {
    validate_generator(type, b.size(), gen);
    LaurentPoly r(f.varset());
    VectorZ sub(b.size());
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < b.size(); ++i) sub[i] = e[b.pos[i]];
        act_in_place(gen, sub, b.size());
        Exp t = e;
        for (int i = 0; i < b.size(); ++i) t[b.pos[i]] = sub[i];
        r.add_term(t, c);
    }
    return r;
}

LaurentPoly act_poly_word(GroupType type, const Word& w, const LaurentPoly& f, const Block& b) {
    LaurentPoly r = f;
    for (const auto& g : w) r = act_poly(type, g, r, b);
    return r;
}

VectorZ dominant_representative(const VectorZ& v) {
    VectorZ d(v.size());
    for (size_t i = 0; i < v.size(); ++i) d[i] = std::abs(v[i]);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

namespace {

std::vector<Generator> group_generators(GroupType type, int n) {
    std::vector<Generator> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Generator::s(i));
    if (shares_bc_group(type)) gens.push_back(Generator::s(n));
    if (type == GroupType::D && n >= 2) gens.push_back(Generator::tau(n));
    return gens;
}

// Orbit distances from the dominant representative, computed once per
// (group family, dominant vector) and shared under a lock.
class LengthTable {
public:
    const std::map<VectorZ, int>& orbit(GroupType type, const VectorZ& dom) {
        // A and BC reuse the tables of A and B/C respectively.
        GroupType family = type == GroupType::BC ? GroupType::B : type;
        std::scoped_lock lock(mu_);
        auto key = std::make_pair(family, dom);
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;

        const int n = static_cast<int>(dom.size());
        auto gens = group_generators(family, n);
        std::map<VectorZ, int> dist;
        dist[dom] = 0;
        std::vector<VectorZ> frontier{dom};
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            std::vector<VectorZ> next;
            for (const auto& u : frontier) {
                for (const auto& g : gens) {
                    VectorZ w = u;
                    act_in_place(g, w, n);
                    if (dist.emplace(w, depth).second) next.push_back(w);
                }
            }
            frontier = std::move(next);
        }
        return tables_.emplace(std::move(key), std::move(dist)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<GroupType, VectorZ>, std::map<VectorZ, int>> tables_;
};

LengthTable& length_table() {
    static LengthTable t;
    return t;
}

} // namespace

int length_vector(GroupType type, const VectorZ& v) {
    if (type == GroupType::A) {
        for (int x : v)
            if (x < 0)
                throw std::domain_error("type A length is defined on the S_n orbit of nonnegative "
                                        "vectors only when signs agree; got a negative entry");
    }
    const auto& dist = length_table().orbit(type, dominant_representative(v));
    auto it = dist.find(v);
    if (it == dist.end())
        throw std::domain_error("vector is not reachable from its dominant representative");
    return it->second;
}

bool vector_reachable(GroupType type, const VectorZ& v) {
    if (type == GroupType::A) {
        for (int x : v)
            if (x < 0) return false;
        return true;
    }
    const auto& dist = length_table().orbit(type, dominant_representative(v));
    return dist.count(v) > 0;
}

Word max_element_word(GroupType type, int n) {
    Word w;
    switch (type) {
        case GroupType::A:
            // (s_1)(s_2 s_1)...(s_{n-1} ... s_1)
            for (int k = 1; k < n; ++k)
                for (int i = k; i >= 1; --i) w.push_back(Generator::s(i));
            return w;
        case GroupType::B:
        case GroupType::C:
        case GroupType::BC:
            // (s_n)(s_{n-1} s_n s_{n-1}) ... (s_1 .. s_n .. s_1)
            for (int k = n; k >= 1; --k) {
                for (int i = k; i <= n; ++i) w.push_back(Generator::s(i));
                for (int i = n - 1; i >= k; --i) w.push_back(Generator::s(i));
            }
            return w;
        case GroupType::D:
            if (n < 2) throw std::domain_error("type D needs n >= 2");
            // (s_{n-1} tau_n)(s_{n-2} s_{n-1} tau_n s_{n-2}) ...
            for (int k = n - 1; k >= 1; --k) {
                for (int i = k; i <= n - 1; ++i) w.push_back(Generator::s(i));
                w.push_back(Generator::tau(n));
                for (int i = n - 2; i >= k; --i) w.push_back(Generator::s(i));
            }
            return w;
    }
    throw std::domain_error("invalid group type");
}

VectorZ apply_signed_perm(const VectorZ& image, const VectorZ& v) {
    VectorZ r(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
        int u = image[j];
        r[j] = u > 0 ? v[u - 1] : -v[-u - 1];
    }
    return r;
}

std::vector<SignedPerm> enumerate_group(GroupType type, int n, int cap) {
    if (n > cap)
        throw resource_error("group enumeration refused: n = " + std::to_string(n) +
                             " exceeds the cap " + std::to_string(cap));
    GroupType family = type == GroupType::BC ? GroupType::B : type;
    auto gens = group_generators(family, n);
    VectorZ id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;

    std::map<VectorZ, int> dist;
    dist[id] = 0;
    std::vector<VectorZ> frontier{id};
    std::vector<SignedPerm> out{{id, 0}};
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<VectorZ> next;
        for (const auto& u : frontier) {
            for (const auto& g : gens) {
                VectorZ w = u;
                act_in_place(g, w, n);
                if (dist.emplace(w, depth).second) {
                    next.push_back(w);
                    out.push_back({w, depth});
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Word reduced_word_of_permutation(const VectorZ& image) {
    // Walk back to the identity, removing one inversion per step; the
    // reversed step list is a reduced word.
    VectorZ u = image;
    const int n = static_cast<int>(u.size());
    std::vector<int> steps;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (u[i] > u[i + 1]) {
                std::swap(u[i], u[i + 1]);
                steps.push_back(i + 1);
                progress = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (u[i] != i + 1) throw std::domain_error("not a permutation image");
    Word w;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.push_back(Generator::s(*it));
    return w;
}

LaurentPoly alternating_sum_direct(GroupType type, const LaurentPoly& f, const Block& b, int cap) {
    LaurentPoly r(f.varset());
    VectorZ sub(b.size());
    for (const auto& el : enumerate_group(type, b.size(), cap)) {
        Rat sign = el.length % 2 == 0 ? Rat(1) : Rat(-1);
        for (const auto& [e, c] : f.terms()) {
            for (int i = 0; i < b.size(); ++i) sub[i] = e[b.pos[i]];
            VectorZ moved = apply_signed_perm(el.image, sub);
            Exp t = e;
            for (int i = 0; i < b.size(); ++i) t[b.pos[i]] = moved[i];
            r.add_term(t, c * sign);
        }
    }
    return r;
}

LaurentPoly alternating_sum_factored(GroupType type, const LaurentPoly& f, const Block& b, int cap) {
    if (!(shares_bc_group(type) || type == GroupType::D))
        throw std::domain_error("factored alternating sums exist for types B/C and D only");
    const int n = b.size();

    auto theta_product = [&](const LaurentPoly& g, int sgn) {
        LaurentPoly r = g;
        for (int i = 1; i <= n; ++i) {
            LaurentPoly flipped = act_poly(type, Generator::theta(i), r, b);
            r = sgn > 0 ? r + flipped : r - flipped;
        }
        return r;
    };

    // Operators act on the right: the theta factors are written first, so
    // they are applied first, then the alternating sum over S_n.
    LaurentPoly g = shares_bc_group(type)
                        ? theta_product(f, -1)
                        : (theta_product(f, -1) + theta_product(f, +1)) * rat(1, 2);
    return alternating_sum_direct(GroupType::A, g, b, cap);
}

} // namespace ck

#include "ck/scalarprod.hpp"

#include "ck/characters.hpp"
#include "ck/divdiff.hpp"
#include "ck/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

bool dominance_leq(const VectorZ& u, const VectorZ& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dominance needs equal lengths");
    long su = 0, sv = 0;
    for (size_t k = 0; k < u.size(); ++k) {
        su += u[k];
        sv += v[k];
        if (su > sv) return false;
    }
    return true;
}

namespace {

bool has_zero_entry(const VectorZ& v) {
    return std::any_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

} // namespace

// Terms of a weighted polynomial indexed by their x-exponent part.
struct ScalarProduct::XIndex {
    std::map<std::vector<int>, std::vector<std::pair<Exp, Rat>>> by_x;
    std::vector<int> min_x; // per block variable

    XIndex(const LaurentPoly& fw, const Block& xb) {
        min_x.assign(xb.size(), 0);
        bool first = true;
        std::vector<int> part(xb.size());
        for (const auto& [e, c] : fw.terms()) {
            for (int i = 0; i < xb.size(); ++i) part[i] = e[xb.pos[i]];
            by_x[part].emplace_back(e, c);
            for (int i = 0; i < xb.size(); ++i)
                if (first || part[i] < min_x[i]) min_x[i] = part[i];
            first = false;
        }
    }
};

ScalarProduct::ScalarProduct(GroupType type, int n) : type_(type), n_(n) {
    vs_ = type == GroupType::BC ? make_vars(n, false, {"beta"}) : make_vars(n);
    xb_ = vs_->block("x");

    auto x = [&](int i, int p) { return LaurentPoly::variable(vs_, "x" + std::to_string(i), p); };
    LaurentPoly one = LaurentPoly::constant(vs_, Rat(1));
    LaurentPoly w = one;

    if (type == GroupType::A) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) w *= one - x(i, 1) * x(j, -1);
    } else {
        for (int i = 1; i <= n; ++i) {
            switch (type) {
                case GroupType::B:
                    // x_i^{rho_i} (x_i^{1/2} - x_i^{-1/2}) on the integer lattice
                    w *= power(x(i, 1), n - i) * (x(i, 1) - one);
                    break;
                case GroupType::C:
                case GroupType::BC:
                    w *= power(x(i, 1), n - i + 1) * (x(i, 1) - x(i, -1));
                    break;
                case GroupType::D:
                    w *= power(x(i, 1), n - i);
                    break;
                default:
                    break;
            }
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                w *= (x(i, 1) - x(j, 1)) * (one - x(i, -1) * x(j, -1));
    }

    // The pairing of 1 with 1 must be +1; the raw weight is only defined up
    // to the alternating-sum sign convention.
    Rat c0 = w.constant_coefficient();
    if (type == GroupType::A) {
        if (c0 != 1) throw internal_error("type A weight has unexpected constant term");
    } else {
        if (c0 != 1 && c0 != -1)
            throw internal_error("weight constant term is not a unit; cannot normalize");
        if (c0 == -1) w = -w;
    }
    weight_ = w;
}

VectorZ ScalarProduct::partner(const VectorZ& v) const {
    VectorZ u(v.size());
    if (type_ == GroupType::A) {
        u.assign(v.rbegin(), v.rend());
    } else {
        for (size_t i = 0; i < v.size(); ++i) u[i] = -v[i];
    }
    return u;
}

LaurentPoly ScalarProduct::reverse_invert(const LaurentPoly& g) const {
    // g(x_n^{-1}, ..., x_1^{-1}): variable x_i receives x_{n+1-i}^{-1}
    LaurentPoly r(vs_);
    for (const auto& [e, c] : g.terms()) {
        Exp t = e;
        for (int i = 0; i < n_; ++i) t[xb_.pos[i]] = -e[xb_.pos[n_ - 1 - i]];
        r.add_term(t, c);
    }
    return r;
}

LaurentPoly ScalarProduct::ct_product(const LaurentPoly& fw, const LaurentPoly& g) const {
    XIndex idx(fw, xb_);
    return ct_with_index(idx, g);
}

LaurentPoly ScalarProduct::ct_with_index(const XIndex& idx, const LaurentPoly& g) const {
    LaurentPoly out(vs_);
    std::vector<int> want(n_);
    for (const auto& [b, cb] : g.terms()) {
        for (int i = 0; i < n_; ++i) want[i] = -b[xb_.pos[i]];
        auto hit = idx.by_x.find(want);
        if (hit == idx.by_x.end()) continue;
        for (const auto& [a, ca] : hit->second) {
            Exp e(vs_->size(), 0);
            for (int i = 0; i < vs_->size(); ++i) e[i] = a[i] + b[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly ScalarProduct::ct_bc_with_index(const XIndex& idx, const LaurentPoly& g) const {
    const int beta_pos = vs_->index_of("beta");

    // Per-variable expansion orders that provably cover every term of
    // f*g*weight with a negative exponent; anything beyond the true minimum
    // cannot reach the constant term.
    std::vector<int> order(n_, 0);
    for (int i = 0; i < n_; ++i)
        order[i] = std::max(0, -(idx.min_x[i] + g.min_exponent(xb_.pos[i])));

    LaurentPoly out(vs_);
    std::vector<int> want(n_);
    // expansion terms: prod_i (-beta x_i)^{k_i}, 0 <= k_i <= order_i
    std::vector<int> k(n_, 0);
    auto loop = [&](auto&& self, int pos) -> void {
        if (pos == n_) {
            long total = 0;
            for (int i = 0; i < n_; ++i) total += k[i];
            Rat sign = total % 2 == 0 ? Rat(1) : Rat(-1);
            for (const auto& [b, cb] : g.terms()) {
                for (int i = 0; i < n_; ++i) want[i] = -b[xb_.pos[i]] - k[i];
                auto hit = idx.by_x.find(want);
                if (hit == idx.by_x.end()) continue;
                for (const auto& [a, ca] : hit->second) {
                    Exp e(vs_->size(), 0);
                    for (int i = 0; i < vs_->size(); ++i) e[i] = a[i] + b[i];
                    for (int i = 0; i < n_; ++i) e[xb_.pos[i]] += k[i];
                    e[beta_pos] += static_cast<int>(total);
                    out.add_term(e, ca * cb * sign);
                }
            }
            return;
        }
        for (k[pos] = 0; k[pos] <= order[pos]; ++k[pos]) self(self, pos + 1);
        k[pos] = 0;
    };
    loop(loop, 0);
    return out;
}

LaurentPoly ScalarProduct::ct_product_bc(const LaurentPoly& fw, const LaurentPoly& g) const {
    XIndex idx(fw, xb_);
    return ct_bc_with_index(idx, g);
}

LaurentPoly ScalarProduct::scalar(const LaurentPoly& f, const LaurentPoly& g) const {
    LaurentPoly fp = f.varset()->same_as(*vs_) ? f : f.project(vs_);
    LaurentPoly gp = g.varset()->same_as(*vs_) ? g : g.project(vs_);
    LaurentPoly fw = fp * weight_;
    switch (type_) {
        case GroupType::A:
            return ct_product(fw, reverse_invert(gp));
        case GroupType::BC:
            return ct_product_bc(fw, gp);
        default:
            return ct_product(fw, gp);
    }
}

Rat ScalarProduct::scalar_value(const LaurentPoly& f, const LaurentPoly& g) const {
    LaurentPoly s = scalar(f, g);
    if (s.is_zero()) return Rat(0);
    if (s.term_count() != 1)
        throw std::domain_error("scalar product is not a constant; keep beta symbolic");
    return s.constant_coefficient();
}

GramMatrix ScalarProduct::gram(int bound) const {
    GramMatrix m;
    m.type = type_;
    m.n = n_;
    m.bound = bound;
    m.rows = enumerate_indices(type_, n_, bound,
                               type_ == GroupType::A ? IndexConstraint::Nonneg
                                                     : IndexConstraint::None);
    m.cols = m.rows;

    KeyTable keys(vs_, 'x');
    const bool odd_d = type_ == GroupType::D && n_ % 2 == 1;
    m.entries.resize(m.rows.size());
    for (size_t r = 0; r < m.rows.size(); ++r) {
        const VectorZ& v = m.rows[r];
        // one weighted row polynomial serves the whole row of pairings
        LaurentPoly fw = keys.key(type_, v, false) * weight_;
        XIndex idx(fw, xb_);
        m.entries[r].resize(m.cols.size());
        for (size_t c = 0; c < m.cols.size(); ++c) {
            const VectorZ& u = m.cols[c];
            if (odd_d && !has_zero_entry(u) && !has_zero_entry(v)) continue;
            LaurentPoly g = keys.key(type_, u, true);
            switch (type_) {
                case GroupType::A:
                    m.entries[r][c] = ct_with_index(idx, reverse_invert(g));
                    break;
                case GroupType::BC:
                    m.entries[r][c] = ct_bc_with_index(idx, g);
                    break;
                default:
                    m.entries[r][c] = ct_with_index(idx, g);
                    break;
            }
        }
    }
    return m;
}

VerificationReport check_theorem8(GroupType type, int n, int trials, uint64_t seed) {
    VerificationReport rep{"theorem8-" + to_string(type), n, -1};
    ScalarProduct sp(type, n);
    const auto& vs = sp.varset();
    Block xb = vs->block("x");
    Rng rng(seed);

    struct Pair {
        DivDiff left, right;
    };
    std::vector<Pair> ops;
    for (int i = 1; i < n; ++i) {
        DivDiff l = DivDiff::pi(i, 'x');
        DivDiff r = type == GroupType::A ? DivDiff::pi(n - i, 'x') : l;
        ops.push_back({l, r});
        ops.push_back({l.hat(), r.hat()});
    }
    if (type != GroupType::A) {
        DivDiff l = DivDiff::pi_last(type, n, 'x');
        ops.push_back({l, l});
        ops.push_back({l.hat(), l.hat()});
    }

    for (const auto& [l, r] : ops) {
        for (int t = 0; t < trials; ++t) {
            LaurentPoly f = random_laurent(vs, xb, rng);
            LaurentPoly g = random_laurent(vs, xb, rng);
            LaurentPoly lhs = sp.scalar(apply_divdiff(f, l), g);
            LaurentPoly rhs = sp.scalar(f, apply_divdiff(g, r));
            if (lhs != rhs) {
                rep.fail({{"operator", opword_to_string({l})},
                          {"adjoint", opword_to_string({r})},
                          {"f", f.to_pretty()},
                          {"g", g.to_pretty()},
                          {"left", lhs.to_pretty()},
                          {"right", rhs.to_pretty()}});
                return rep;
            }
        }
    }
    return rep;
}

VerificationReport check_theorem15(GroupType type, int n, int bound) {
    VerificationReport rep{"theorem15-" + to_string(type), n, bound};
    ScalarProduct sp(type, n);
    GramMatrix m = sp.gram(bound);
    for (size_t r = 0; r < m.rows.size(); ++r) {
        VectorZ expect_col = sp.partner(m.rows[r]);
        for (size_t c = 0; c < m.cols.size(); ++c) {
            if (!m.entries[r][c]) continue;
            Rat want = m.cols[c] == expect_col ? Rat(1) : Rat(0);
            if (!m.entries[r][c]->is_constant(want)) {
                rep.fail({{"v", m.rows[r]},
                          {"u", m.cols[c]},
                          {"got", m.entries[r][c]->to_pretty()},
                          {"expected", want.get_str()}});
                return rep;
            }
        }
    }
    return rep;
}

VerificationReport check_lemma10(GroupType type, int n, int window) {
    VerificationReport rep{"lemma10-" + to_string(type), n, window};
    ScalarProduct sp(type, n);
    const auto& vs = sp.varset();
    Block xb = vs->block("x");

    auto monomial_of = [&](const VectorZ& v) {
        Exp e(vs->size(), 0);
        for (int i = 0; i < n; ++i) e[xb.pos[i]] = v[i];
        return LaurentPoly::monomial(vs, e, Rat(1));
    };

    std::vector<VectorZ> box;
    VectorZ v(n, 0);
    int lo = type == GroupType::A ? 0 : -window;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) { box.push_back(v); return; }
        for (int e = lo; e <= window; ++e) {
            v[pos] = e;
            self(self, pos + 1);
        }
        v[pos] = 0;
    };
    rec(rec, 0);

    for (const auto& a : box) {
        for (const auto& b : box) {
            LaurentPoly s = sp.scalar(monomial_of(a), monomial_of(b));
            if (s.is_zero()) continue;
            bool ok;
            if (type == GroupType::A) {
                VectorZ bw(b.rbegin(), b.rend());
                long da = 0, db = 0;
                for (int x : a) da += x;
                for (int x : b) db += x;
                ok = dominance_leq(a, bw) && da == db;
            } else {
                VectorZ nb(b.size());
                for (size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
                ok = dominance_leq(a, nb);
            }
            if (!ok) {
                rep.fail({{"v", a}, {"u", b}, {"scalar", s.to_pretty()}});
                return rep;
            }
        }
    }
    return rep;
}

VerificationReport check_corollary12(GroupType type, int n, int window) {
    VerificationReport rep{"corollary12-" + to_string(type), n, window};
    ScalarProduct sp(type, n);
    const auto& vs = sp.varset();
    Block xb = vs->block("x");
    KeyTable keys(vs, 'x');

    // all partitions into <= n parts with each part <= window
    std::vector<Partition> lambdas;
    Partition p(n, 0);
    auto genp = [&](auto&& self, int pos, int hi) -> void {
        if (pos == n) {
            lambdas.push_back(p);
            return;
        }
        for (int e = hi; e >= 0; --e) {
            p[pos] = e;
            self(self, pos + 1, e);
        }
        p[pos] = 0;
    };
    genp(genp, 0, window);

    std::vector<VectorZ> box;
    VectorZ v(n, 0);
    int lo = type == GroupType::A ? 0 : -window;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            if (valid_key_index(type, v)) box.push_back(v);
            return;
        }
        for (int e = lo; e <= window; ++e) {
            v[pos] = e;
            self(self, pos + 1);
        }
        v[pos] = 0;
    };
    rec(rec, 0);

    for (const auto& lam : lambdas) {
        if (type == GroupType::D && n % 2 == 1 && !has_zero_entry(lam)) continue;
        Exp e(vs->size(), 0);
        for (int i = 0; i < n; ++i) e[xb.pos[i]] = lam[i];
        LaurentPoly xlam = LaurentPoly::monomial(vs, e, Rat(1));
        VectorZ target = sp.partner(VectorZ(lam.begin(), lam.end()));
        for (const auto& idx : box) {
            LaurentPoly s = sp.scalar(keys.key(type, idx, false), xlam);
            Rat want = idx == target ? Rat(1) : Rat(0);
            if (!s.is_constant(want)) {
                rep.fail({{"v", idx},
                          {"lambda", lam},
                          {"got", s.to_pretty()},
                          {"expected", want.get_str()}});
                return rep;
            }
        }
    }
    return rep;
}

} // namespace ck

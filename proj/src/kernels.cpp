#include "ck/kernels.hpp"

#include "ck/characters.hpp"
#include "ck/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

namespace {

int xdeg_of(const Exp& e, const Block& b) {
    int d = 0;
    for (int p : b.pos) d += e[p];
    return d;
}

nlohmann::json mismatch_json(const SliceMismatch& m, const VarSetPtr& vs) {
    nlohmann::json j;
    j["slice"] = m.slice;
    nlohmann::json mono = nlohmann::json::object();
    for (size_t i = 0; i < m.exponent.size(); ++i)
        if (m.exponent[i] != 0) mono[vs->names()[i]] = m.exponent[i];
    j["monomial"] = mono;
    j["left"] = rat_to_string(m.left);
    j["right"] = rat_to_string(m.right);
    return j;
}

} // namespace

TruncatedSeries TruncatedSeries::one(VarSetPtr vs, int maxdeg) {
    TruncatedSeries s;
    s.vs = vs;
    s.xblock = vs->block("x");
    s.maxdeg = maxdeg;
    s.slices.assign(maxdeg + 1, LaurentPoly(vs));
    s.slices[0] = LaurentPoly::constant(vs, Rat(1));
    return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return !first_mismatch(*this, o).has_value();
}

std::optional<SliceMismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    int deg = std::min(a.maxdeg, b.maxdeg);
    for (int d = 0; d <= deg; ++d) {
        LaurentPoly diff = a.slices[d] - b.slices[d];
        if (!diff.is_zero()) {
            const auto& [e, c] = *diff.terms().begin();
            auto la = a.slices[d].terms().find(e);
            auto lb = b.slices[d].terms().find(e);
            SliceMismatch m;
            m.slice = d;
            m.exponent = e;
            m.left = la == a.slices[d].terms().end() ? Rat(0) : la->second;
            m.right = lb == b.slices[d].terms().end() ? Rat(0) : lb->second;
            return m;
        }
    }
    return std::nullopt;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries c = TruncatedSeries::one(a.vs, std::min(a.maxdeg, b.maxdeg));
    c.slices[0] = LaurentPoly(a.vs);
    for (int d = 0; d <= c.maxdeg; ++d)
        for (int k = 0; k <= d; ++k) c.slices[d] += a.slices[k] * b.slices[d - k];
    return c;
}

TruncatedSeries mul_poly(const TruncatedSeries& a, const LaurentPoly& p) {
    // split p by x-degree
    std::map<int, LaurentPoly> parts;
    for (const auto& [e, c] : p.terms()) {
        int d = xdeg_of(e, a.xblock);
        if (d < 0) throw std::domain_error("series factor with negative x-degree");
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, LaurentPoly(a.vs)).first;
        it->second.add_term(e, c);
    }
    TruncatedSeries c = TruncatedSeries::one(a.vs, a.maxdeg);
    c.slices[0] = LaurentPoly(a.vs);
    for (const auto& [k, part] : parts)
        for (int d = k; d <= c.maxdeg; ++d) c.slices[d] += a.slices[d - k] * part;
    return c;
}

TruncatedSeries mul_inverse_factor(const TruncatedSeries& a, const LaurentPoly& m) {
    if (m.term_count() != 1)
        throw std::domain_error("inverse factors must be monomials");
    int k = xdeg_of(m.terms().begin()->first, a.xblock);
    if (k < 1) throw std::domain_error("inverse factor needs positive x-degree");
    TruncatedSeries c = a;
    LaurentPoly mj = m;
    for (int j = 1; j * k <= a.maxdeg; ++j) {
        for (int d = j * k; d <= a.maxdeg; ++d) c.slices[d] += a.slices[d - j * k] * mj;
        mj = mj * m;
    }
    return c;
}

TruncatedSeries substitute(const TruncatedSeries& a, const std::string& var, const Rat& value) {
    TruncatedSeries c = a;
    for (auto& s : c.slices) s = s.substitute(var, value);
    return c;
}

TruncatedSeries apply_opword_series(const TruncatedSeries& s, const OpWord& w) {
    for (const auto& op : w)
        if (op.block == 'x' && op.last != GroupType::A)
            throw std::domain_error("only type A operators preserve the x-grading");
    TruncatedSeries c = s;
    for (auto& slice : c.slices) slice = apply_opword(slice, w);
    return c;
}

TruncatedSeries apply_opsum_series(const TruncatedSeries& s, const OpSum& ops) {
    TruncatedSeries acc = TruncatedSeries::one(s.vs, s.maxdeg);
    acc.slices[0] = LaurentPoly(s.vs);
    for (const auto& w : ops) {
        TruncatedSeries part = apply_opword_series(s, w);
        for (int d = 0; d <= acc.maxdeg; ++d) acc.slices[d] += part.slices[d];
    }
    return acc;
}

VarSetPtr kernel_vars(int n) { return make_vars(n, true, {"beta"}); }

namespace {

LaurentPoly xy_monomial(const VarSetPtr& vs, int i, int j, int yexp) {
    Exp e(vs->size(), 0);
    e[vs->index_of("x" + std::to_string(i))] = 1;
    e[vs->index_of("y" + std::to_string(j))] = yexp;
    return LaurentPoly::monomial(vs, e, Rat(1));
}

LaurentPoly xx_monomial(const VarSetPtr& vs, int i, int j) {
    Exp e(vs->size(), 0);
    e[vs->index_of("x" + std::to_string(i))] += 1;
    e[vs->index_of("x" + std::to_string(j))] += 1;
    return LaurentPoly::monomial(vs, e, Rat(1));
}

TruncatedSeries grid_denominator(int n, int maxdeg, const VarSetPtr& vs, bool full_inverse_grid) {
    TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) s = mul_inverse_factor(s, xy_monomial(vs, i, j, 1));
    for (int i = 1; i <= n; ++i)
        for (int j = full_inverse_grid ? 1 : i; j <= n; ++j)
            s = mul_inverse_factor(s, xy_monomial(vs, i, j, -1));
    return s;
}

LaurentPoly numerator_poly(GroupType type, int n, const VarSetPtr& vs) {
    LaurentPoly one = LaurentPoly::constant(vs, Rat(1));
    LaurentPoly num = one;
    switch (type) {
        case GroupType::B:
        case GroupType::C:
        case GroupType::BC:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) num *= one - xx_monomial(vs, i, j);
            if (type == GroupType::B)
                for (int i = 1; i <= n; ++i)
                    num *= one + LaurentPoly::variable(vs, "x" + std::to_string(i));
            if (type == GroupType::BC)
                for (int i = 1; i <= n; ++i)
                    num *= one + LaurentPoly::variable(vs, "beta") *
                                     LaurentPoly::variable(vs, "x" + std::to_string(i));
            return num;
        case GroupType::D:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) num *= one - xx_monomial(vs, i, j);
            return num;
        case GroupType::A:
            return num;
    }
    return num;
}

} // namespace

TruncatedSeries kernel_series(GroupType type, int n, int maxdeg) {
    auto vs = kernel_vars(n);
    if (type == GroupType::A) {
        TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j + i <= n + 1; ++j) s = mul_inverse_factor(s, xy_monomial(vs, i, j, 1));
        return s;
    }
    TruncatedSeries s = grid_denominator(n, maxdeg, vs, false);
    return mul_poly(s, numerator_poly(type, n, vs));
}

TruncatedSeries kernel_series_a_restricted(int n, int maxdeg) {
    auto vs = kernel_vars(n);
    TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j + i <= n; ++j) s = mul_inverse_factor(s, xy_monomial(vs, i, j, 1));
    return s;
}

TruncatedSeries symmetric_kernel_series(GroupType type, int n, int maxdeg) {
    auto vs = kernel_vars(n);
    if (type == GroupType::A) {
        TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) s = mul_inverse_factor(s, xy_monomial(vs, i, j, 1));
        return s;
    }
    TruncatedSeries s = grid_denominator(n, maxdeg, vs, true);
    return mul_poly(s, numerator_poly(type, n, vs));
}

TruncatedSeries dominant_series(int n, int maxdeg) {
    auto vs = kernel_vars(n);
    TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
    for (int k = 1; k <= n; ++k) {
        Exp e(vs->size(), 0);
        for (int i = 1; i <= k; ++i) {
            e[vs->index_of("x" + std::to_string(i))] = 1;
            e[vs->index_of("y" + std::to_string(i))] = 1;
        }
        s = mul_inverse_factor(s, LaurentPoly::monomial(vs, e, Rat(1)));
    }
    return s;
}

OpSum xi_direct(int n) {
    OpSum sum;
    for (const auto& el : enumerate_group(GroupType::A, n)) {
        Word wx = reduced_word_of_permutation(el.image);
        VectorZ rev(el.image.rbegin(), el.image.rend());
        Word wy = reduced_word_of_permutation(rev);
        OpWord w = opword_from_generators(GroupType::A, n, wx, 'x', true);
        OpWord y = opword_from_generators(GroupType::A, n, wy, 'y', false);
        w.insert(w.end(), y.begin(), y.end());
        sum.push_back(std::move(w));
    }
    return sum;
}

OpSum xi_factor(int k) {
    OpSum sum;
    for (int i = 0; i <= k - 1; ++i) {
        OpWord w;
        for (int t = 0; t < i; ++t) w.push_back(DivDiff::pi(k - 1 - t, 'x').hat());
        for (int t = 0; t < k - 1 - i; ++t) w.push_back(DivDiff::pi(k - 1 - t, 'y'));
        sum.push_back(std::move(w));
    }
    return sum;
}

OpWord phi_bc_word(int n) {
    OpWord w;
    for (int start = 1; start <= n; ++start) {
        w.push_back(DivDiff::pi_last(GroupType::BC, n, 'y'));
        for (int i = n - 1; i >= start; --i) w.push_back(DivDiff::pi(i, 'y'));
    }
    return w;
}

OpWord phi_d_word(int n) {
    if (n < 2) throw std::domain_error("the type D pipeline needs n >= 2");
    if (n == 2) return {DivDiff::pi(1, 'y'), DivDiff::pi_last(GroupType::D, 2, 'y')};
    OpWord w = shift_indices(phi_d_word(n - 1));
    for (int i = 1; i <= n - 1; ++i) w.push_back(DivDiff::pi(i, 'y'));
    w.push_back(DivDiff::pi_last(GroupType::D, n, 'y'));
    return w;
}

TruncatedSeries theorem6_rhs(GroupType type, int n, int maxdeg) {
    auto vs = kernel_vars(n);
    KeyTable xkeys(vs, 'x');
    KeyTable ykeys(vs, 'y');

    IndexConstraint constraint =
        type == GroupType::D ? IndexConstraint::LastZero : IndexConstraint::Nonneg;
    TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
    s.slices[0] = LaurentPoly(vs);
    for (const auto& v : enumerate_indices(GroupType::A, n, maxdeg, constraint)) {
        int deg = 0;
        for (int x : v) deg += x;
        LaurentPoly xf = xkeys.key(GroupType::A, v, true);
        VectorZ target;
        GroupType ytype = type;
        switch (type) {
            case GroupType::A:
                target.assign(v.rbegin(), v.rend());
                break;
            case GroupType::BC:
            case GroupType::D:
                target.resize(v.size());
                for (size_t i = 0; i < v.size(); ++i) target[i] = -v[i];
                break;
            default:
                throw std::domain_error("theorem6_rhs supports types A, BC and D");
        }
        s.slices[deg] += xf * ykeys.key(ytype, target, false);
    }
    return s;
}

VerificationReport check_prop3(int n, int maxdeg) {
    VerificationReport rep{"prop3", n, maxdeg};
    TruncatedSeries lhs = apply_opsum_series(dominant_series(n, maxdeg), xi_direct(n));
    TruncatedSeries rhs = kernel_series(GroupType::A, n, maxdeg);
    if (auto m = first_mismatch(lhs, rhs)) rep.fail(mismatch_json(*m, lhs.vs));
    return rep;
}

VerificationReport check_lemma2(int n, int maxdeg) {
    VerificationReport rep{"lemma2", n, maxdeg};
    TruncatedSeries base = dominant_series(n, maxdeg);
    TruncatedSeries direct = apply_opsum_series(base, xi_direct(n));
    TruncatedSeries factored = base;
    for (int k = 2; k <= n; ++k) factored = apply_opsum_series(factored, xi_factor(k));
    if (auto m = first_mismatch(direct, factored)) rep.fail(mismatch_json(*m, base.vs));
    return rep;
}

VerificationReport check_lemma4(int n, int maxdeg) {
    VerificationReport rep{"lemma4", n, maxdeg};
    TruncatedSeries lhs = apply_opword_series(kernel_series(GroupType::A, n, maxdeg), phi_bc_word(n));
    TruncatedSeries rhs = kernel_series(GroupType::BC, n, maxdeg);
    if (auto m = first_mismatch(lhs, rhs)) rep.fail(mismatch_json(*m, lhs.vs));
    return rep;
}

VerificationReport check_lemma5(int n, int maxdeg) {
    VerificationReport rep{"lemma5", n, maxdeg};
    TruncatedSeries lhs = apply_opword_series(kernel_series_a_restricted(n, maxdeg), phi_d_word(n));
    // the image involves x_1..x_{n-1} only, so this is the x_n -> 0 kernel
    TruncatedSeries rhs =
        substitute(kernel_series(GroupType::D, n, maxdeg), "x" + std::to_string(n), Rat(0));
    if (auto m = first_mismatch(lhs, rhs)) rep.fail(mismatch_json(*m, lhs.vs));
    return rep;
}

VerificationReport check_theorem6(GroupType type, int n, int maxdeg) {
    VerificationReport rep{"theorem6-" + to_string(type), n, maxdeg};
    TruncatedSeries lhs = kernel_series(type, n, maxdeg);
    TruncatedSeries rhs = theorem6_rhs(type, n, maxdeg);
    if (type == GroupType::D) {
        std::string xn = "x" + std::to_string(n);
        lhs = substitute(lhs, xn, Rat(0));
        rhs = substitute(rhs, xn, Rat(0));
    }
    if (auto m = first_mismatch(lhs, rhs)) rep.fail(mismatch_json(*m, lhs.vs));
    return rep;
}

VerificationReport check_corollaries(int n, int maxdeg) {
    VerificationReport rep{"eq1-3", n, maxdeg};
    auto vs = kernel_vars(n);
    Block xb = vs->block("x");
    Block yb = vs->block("y");
    OpWord maxword = opword_from_generators(GroupType::A, n, max_element_word(GroupType::A, n), 'x');

    auto character_sum = [&](GroupType chartype, int maxlen) {
        TruncatedSeries s = TruncatedSeries::one(vs, maxdeg);
        s.slices[0] = LaurentPoly(vs);
        auto local = make_vars(n);
        Block lb = local->block("x");
        for (const auto& v : enumerate_indices(GroupType::A, n, maxdeg, IndexConstraint::Nonneg)) {
            Partition lambda(v.begin(), v.end());
            if (!is_partition(lambda)) continue;
            if (partition_length(lambda) > maxlen) continue;
            int deg = 0;
            for (int x : v) deg += x;
            LaurentPoly sx = transplant(schur_oracle(lambda, n), lb, vs, xb);
            LaurentPoly cy = transplant(character(chartype, lambda, n), lb, vs, yb);
            s.slices[deg] += sx * cy;
        }
        return s;
    };

    auto note = [&](const char* which, const SliceMismatch& m, const VarSetPtr& mvs) {
        nlohmann::json j = mismatch_json(m, mvs);
        j["check"] = which;
        rep.fail(j);
    };

    // Cauchy expansion: type A
    {
        TruncatedSeries kw = apply_opword_series(kernel_series(GroupType::A, n, maxdeg), maxword);
        TruncatedSeries sym = symmetric_kernel_series(GroupType::A, n, maxdeg);
        TruncatedSeries t6w = apply_opword_series(theorem6_rhs(GroupType::A, n, maxdeg), maxword);
        TruncatedSeries ind = character_sum(GroupType::A, n);
        if (auto m = first_mismatch(kw, sym)) note("A: kernel image vs full grid", *m, vs);
        if (auto m = first_mismatch(t6w, ind)) note("A: key sum image vs schur x schur", *m, vs);
        if (auto m = first_mismatch(sym, ind)) note("A: full grid vs schur x schur", *m, vs);
    }
    // Littlewood, symplectic: BC at beta = 0
    {
        TruncatedSeries kw = apply_opword_series(
            substitute(kernel_series(GroupType::BC, n, maxdeg), "beta", Rat(0)), maxword);
        TruncatedSeries sym = substitute(symmetric_kernel_series(GroupType::BC, n, maxdeg), "beta", Rat(0));
        TruncatedSeries t6w = apply_opword_series(
            substitute(theorem6_rhs(GroupType::BC, n, maxdeg), "beta", Rat(0)), maxword);
        TruncatedSeries ind = character_sum(GroupType::C, n);
        if (auto m = first_mismatch(kw, sym)) note("C: kernel image vs symmetric kernel", *m, vs);
        if (auto m = first_mismatch(t6w, ind)) note("C: key sum image vs schur x Sp", *m, vs);
        if (auto m = first_mismatch(sym, ind)) note("C: symmetric kernel vs schur x Sp", *m, vs);
    }
    // Littlewood, orthogonal: type D, compared after x_n -> 0
    {
        std::string xn = "x" + std::to_string(n);
        TruncatedSeries kw = apply_opword_series(kernel_series(GroupType::D, n, maxdeg), maxword);
        TruncatedSeries sym = symmetric_kernel_series(GroupType::D, n, maxdeg);
        TruncatedSeries t6w = apply_opword_series(theorem6_rhs(GroupType::D, n, maxdeg), maxword);
        TruncatedSeries ind = character_sum(GroupType::D, n - 1);
        if (auto m = first_mismatch(kw, sym)) note("D: kernel image vs symmetric kernel", *m, vs);
        if (auto m = first_mismatch(t6w, ind)) note("D: key sum image vs schur x O", *m, vs);
        if (auto m = first_mismatch(substitute(sym, xn, Rat(0)), substitute(ind, xn, Rat(0))))
            note("D: symmetric kernel vs schur x O at x_n = 0", *m, vs);
    }
    return rep;
}

} // namespace ck

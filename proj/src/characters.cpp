#include "ck/characters.hpp"

#include "ck/errors.hpp"

#include <stdexcept>

namespace ck {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_length(const Partition& p) {
    int l = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0) l = static_cast<int>(i) + 1;
    return l;
}

VectorZ rho_vector(GroupType type, int n) {
    VectorZ r(n);
    switch (type) {
        case GroupType::A:
        case GroupType::D:
            for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
            return r;
        case GroupType::B:
            // unit-2 lattice: n - i + 1/2 stored as 2(n-i) + 1
            for (int i = 0; i < n; ++i) r[i] = 2 * (n - 1 - i) + 1;
            return r;
        case GroupType::C:
        case GroupType::BC:
            for (int i = 0; i < n; ++i) r[i] = n - i;
            return r;
    }
    throw std::domain_error("invalid group type");
}

namespace {

VarSetPtr local_vars(GroupType type, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return VarSet::make(std::move(names), type == GroupType::B ? 2 : 1);
}

LaurentPoly alternating_orbit_sum(GroupType type, int n, const VectorZ& weight, int cap) {
    auto vs = local_vars(type, n);
    Block b = vs->block("x");
    Exp e(n);
    for (int i = 0; i < n; ++i) e[i] = weight[i];
    return alternating_sum_direct(type, LaurentPoly::monomial(vs, e, Rat(1)), b, cap);
}

LaurentPoly denominator_product(GroupType type, int n) {
    auto vs = local_vars(type, n);
    const int step = type == GroupType::B ? 2 : 1;
    auto xpow = [&](int i, int p) { return LaurentPoly::variable(vs, "x" + std::to_string(i), p); };
    LaurentPoly r = LaurentPoly::constant(vs, Rat(1));
    if (type == GroupType::B)
        for (int i = 1; i <= n; ++i) r *= xpow(i, 1) - xpow(i, -1); // x^{1/2} - x^{-1/2}
    if (type == GroupType::C || type == GroupType::BC)
        for (int i = 1; i <= n; ++i) r *= xpow(i, step) - xpow(i, -step);
    if (type != GroupType::A) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                LaurentPoly one = LaurentPoly::constant(vs, Rat(1));
                Exp e(n, 0);
                e[i - 1] = -step;
                e[j - 1] = -step;
                r *= (xpow(i, step) - xpow(j, step)) *
                     (one - LaurentPoly::monomial(vs, e, Rat(1)));
            }
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) r *= xpow(i, 1) - xpow(j, 1);
    }
    return r;
}

} // namespace

LaurentPoly weyl_denominator(GroupType type, int n, DenominatorForm form, int cap) {
    if (type == GroupType::BC)
        throw std::domain_error("the BC denominator carries rational factors; "
                                "the scalar product module assembles it as data");
    if (form == DenominatorForm::Product) return denominator_product(type, n);
    return alternating_orbit_sum(type, n, rho_vector(type, n), cap);
}

LaurentPoly character(GroupType type, const Partition& lambda, int n, int cap) {
    if (!is_partition(lambda)) throw std::domain_error("not a partition");
    if (static_cast<int>(lambda.size()) > n)
        throw std::domain_error("partition has more parts than the rank");
    int len = partition_length(lambda);
    if (type == GroupType::D ? len >= n : len > n)
        throw std::domain_error("partition length out of range for the type");
    if (type == GroupType::BC)
        throw std::domain_error("type BC has no classical character; use the key polynomials");

    const int step = type == GroupType::B ? 2 : 1;
    VectorZ rho = rho_vector(type, n);
    VectorZ shifted = rho;
    for (int i = 0; i < n && i < static_cast<int>(lambda.size()); ++i)
        shifted[i] += step * lambda[i];

    LaurentPoly num = alternating_orbit_sum(type, n, shifted, cap);
    LaurentPoly den = alternating_orbit_sum(type, n, rho, cap);
    LaurentPoly q = divide_exact(num, den);

    if (type != GroupType::B) return q;
    // re-express on the unit-1 lattice; surviving exponents are even
    auto vs1 = make_vars(n);
    LaurentPoly out(vs1);
    for (const auto& [e, c] : q.terms()) {
        Exp h(n);
        for (int i = 0; i < n; ++i) {
            if (e[i] % 2 != 0)
                throw internal_error("type B character kept a half-integer exponent");
            h[i] = e[i] / 2;
        }
        out.add_term(h, c);
    }
    return out;
}

LaurentPoly schur_oracle(const Partition& lambda, int n) {
    if (!is_partition(lambda)) throw std::domain_error("not a partition");
    if (partition_length(lambda) > n) return LaurentPoly::zero(make_vars(n));
    auto vs = make_vars(n);
    LaurentPoly sum(vs);

    // Fill the Young diagram cell by cell: rows weakly increase left to
    // right, columns strictly increase top to bottom.
    std::vector<std::vector<int>> rows(lambda.size());
    for (size_t r = 0; r < lambda.size(); ++r) rows[r].assign(lambda[r], 0);
    Exp content(n, 0);

    auto fill = [&](auto&& self, size_t r, int c) -> void {
        if (r == rows.size()) {
            sum.add_term(content, Rat(1));
            return;
        }
        if (c == static_cast<int>(rows[r].size())) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && c < static_cast<int>(rows[r - 1].size())) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            rows[r][c] = v;
            ++content[v - 1];
            self(self, r, c + 1);
            --content[v - 1];
        }
    };
    if (rows.empty() || rows[0].empty())
        return LaurentPoly::constant(vs, Rat(1));
    fill(fill, 0, 0);
    return sum;
}

LaurentPoly transplant(const LaurentPoly& f, const Block& from, const VarSetPtr& to_vs,
                       const Block& to) {
    if (from.size() != to.size()) throw std::invalid_argument("block sizes differ");
    std::vector<bool> inside(f.varset()->size(), false);
    for (int p : from.pos) inside[p] = true;
    LaurentPoly r(to_vs);
    for (const auto& [e, c] : f.terms()) {
        Exp t(to_vs->size(), 0);
        for (int i = 0; i < f.varset()->size(); ++i) {
            if (e[i] == 0) continue;
            if (!inside[i])
                throw std::domain_error("transplant: nonzero exponent outside the source block");
        }
        for (int i = 0; i < from.size(); ++i) t[to.pos[i]] = e[from.pos[i]];
        r.add_term(t, c);
    }
    return r;
}

} // namespace ck

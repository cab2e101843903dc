#include "ck/laurent.hpp"

#include "ck/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

VarSet::VarSet(std::vector<std::string> names, int unit) : names_(std::move(names)), unit_(unit) {}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names, int unit) {
    if (unit != 1 && unit != 2)
        throw std::invalid_argument("exponent unit must be 1 or 2");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
    return std::shared_ptr<const VarSet>(new VarSet(std::move(names), unit));
}

int VarSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

Block VarSet::block(const std::string& prefix) const {
    Block b;
    for (int k = 1;; ++k) {
        int idx = index_of(prefix + std::to_string(k));
        if (idx < 0) break;
        b.pos.push_back(idx);
    }
    return b;
}

VarSetPtr make_vars(int n, bool with_y, std::vector<std::string> extras) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (with_y)
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    for (auto& e : extras) names.push_back(std::move(e));
    return VarSet::make(std::move(names));
}

LaurentPoly LaurentPoly::constant(VarSetPtr vs, const Rat& c) {
    LaurentPoly f(std::move(vs));
    if (c != 0) f.terms_.emplace(Exp(f.vs_->size(), 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vs, Exp e, const Rat& c) {
    if (static_cast<int>(e.size()) != vs->size())
        throw std::invalid_argument("exponent vector length does not match varset");
    LaurentPoly f(std::move(vs));
    if (c != 0) f.terms_.emplace(std::move(e), c);
    return f;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vs, const std::string& name, int power) {
    int idx = vs->index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown variable: " + name);
    Exp e(vs->size(), 0);
    e[idx] = power;
    return monomial(std::move(vs), std::move(e), Rat(1));
}

void LaurentPoly::require_same_varset(const LaurentPoly& g) const {
    if (!vs_ || !g.vs_ || !vs_->same_as(*g.vs_))
        throw std::invalid_argument("operands live over different variable sets");
}

bool LaurentPoly::operator==(const LaurentPoly& g) const {
    require_same_varset(g);
    return terms_ == g.terms_;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vs_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

void LaurentPoly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    require_same_varset(g);
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    require_same_varset(g);
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    f.require_same_varset(g);
    LaurentPoly r(f.vs_);
    if (f.is_zero() || g.is_zero()) return r;
    const int m = f.vs_->size();
    Exp e(m, 0);
    for (const auto& [ef, cf] : f.terms_) {
        for (const auto& [eg, cg] : g.terms_) {
            for (int i = 0; i < m; ++i) e[i] = ef[i] + eg[i];
            r.add_term(e, cf * cg);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(vs_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

namespace {

bool invertible_monomial(const LaurentPoly& f) { return f.term_count() == 1; }

} // namespace

LaurentPoly LaurentPoly::substitute(const std::string& var, const LaurentPoly& value) const {
    require_same_varset(value);
    int p = vs_->index_of(var);
    if (p < 0) throw std::invalid_argument("unknown variable: " + var);

    int lo = min_exponent(p);
    if (lo < 0 && !invertible_monomial(value))
        throw std::domain_error("substituting a non-invertible value into negative powers of " + var);

    // Group terms by the exponent of var, then multiply by value^k.
    std::map<int, LaurentPoly> groups;
    for (const auto& [e, c] : terms_) {
        Exp rest = e;
        int k = rest[p];
        rest[p] = 0;
        auto it = groups.find(k);
        if (it == groups.end()) it = groups.emplace(k, LaurentPoly(vs_)).first;
        it->second.add_term(rest, c);
    }
    LaurentPoly r(vs_);
    for (const auto& [k, part] : groups) r += part * power(value, k);
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::string& var, const Rat& value) const {
    return substitute(var, LaurentPoly::constant(vs_, value));
}

LaurentPoly LaurentPoly::constant_term(const std::vector<int>& var_positions) const {
    LaurentPoly r(vs_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int p : var_positions)
            if (e[p] != 0) { keep = false; break; }
        if (keep) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::truncate_by_degree(const std::vector<int>& var_positions, int maxdeg) const {
    LaurentPoly r(vs_);
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int p : var_positions) d += e[p];
        if (d <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::project(const VarSetPtr& target) const {
    std::vector<int> where(vs_->size(), -1);
    for (int i = 0; i < vs_->size(); ++i)
        where[i] = target->index_of(vs_->names()[i]);
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exp t(target->size(), 0);
        for (int i = 0; i < vs_->size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw std::domain_error("projection drops variable " + vs_->names()[i] +
                                        " carrying a nonzero exponent");
            t[where[i]] = e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

int LaurentPoly::min_exponent(int p) const {
    int lo = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[p] < lo) lo = e[p];
        first = false;
    }
    return lo;
}

int LaurentPoly::max_exponent(int p) const {
    int hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[p] > hi) hi = e[p];
        first = false;
    }
    return hi;
}

int LaurentPoly::max_degree(const Block& b) const {
    int hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int p : b.pos) d += e[p];
        if (first || d > hi) hi = d;
        first = false;
    }
    return hi;
}

Rat LaurentPoly::constant_coefficient() const {
    Exp zero(vs_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::is_constant(const Rat& c) const {
    if (c == 0) return is_zero();
    return terms_.size() == 1 && constant_coefficient() == c;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw internal_error("division by the zero polynomial");
    LaurentPoly q(f.varset());
    if (f.is_zero()) return q;
    if (!f.varset()->same_as(*divisor.varset()))
        throw std::invalid_argument("operands live over different variable sets");

    const auto& dterms = divisor.terms();
    auto lead_d = dterms.rbegin(); // lex-largest term
    const int m = f.varset()->size();

    LaurentPoly r = f;
    // Each iteration cancels the lex-leading term of r, so the leading
    // exponent strictly decreases; exact divisions finish in |q| steps.
    long guard = 0;
    const long limit = 2'000'000;
    Exp me(m, 0);
    while (!r.is_zero()) {
        auto lead_r = r.terms().rbegin();
        for (int i = 0; i < m; ++i) me[i] = lead_r->first[i] - lead_d->first[i];
        Rat mc = lead_r->second / lead_d->second;
        q.add_term(me, mc);
        for (const auto& [e, c] : dterms) {
            Exp t(m);
            for (int i = 0; i < m; ++i) t[i] = e[i] + me[i];
            r.add_term(t, -c * mc);
        }
        if (++guard > limit)
            throw internal_error("polynomial division does not terminate (inexact division)");
    }
    if (q * divisor != f)
        throw internal_error("polynomial division verification failed");
    return q;
}

LaurentPoly power(const LaurentPoly& f, int k) {
    if (k < 0) {
        if (f.term_count() != 1)
            throw std::domain_error("negative power of a non-monomial");
        const auto& [e, c] = *f.terms().begin();
        Exp inv(e.size());
        for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
        return power(LaurentPoly::monomial(f.varset(), inv, Rat(1) / c), -k);
    }
    LaurentPoly r = LaurentPoly::constant(f.varset(), Rat(1));
    LaurentPoly base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::string LaurentPoly::to_pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // lex-descending: x1 before x2, higher powers first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < vs_->size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += vs_->names()[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << vars;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const VarSetPtr& vs;
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + what);
    }

    LaurentPoly expr() {
        LaurentPoly r = term(eat('-') ? -1 : (eat('+'), 1));
        for (;;) {
            skip();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                int sign = s[i] == '+' ? 1 : -1;
                ++i;
                r += term(sign);
            } else {
                break;
            }
        }
        return r;
    }

    LaurentPoly term(int sign) {
        LaurentPoly r = factor();
        while (eat('*')) r = r * factor();
        if (sign < 0) r = r * Rat(-1);
        return r;
    }

    LaurentPoly factor() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        LaurentPoly base(vs);
        if (s[i] == '(') {
            ++i;
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            base = LaurentPoly::constant(vs, number());
        } else if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            base = LaurentPoly::variable(vs, ident());
        } else {
            fail(std::string("unexpected character '") + s[i] + "'");
        }
        if (eat('^')) {
            skip();
            int sign = eat('-') ? -1 : 1;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("expected exponent");
            base = power(base, sign * static_cast<int>(integer()));
        }
        return base;
    }

    long integer() {
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return v;
    }

    Rat number() {
        long num = integer();
        if (eat('/')) {
            skip();
            long den = integer();
            if (den == 0) fail("zero denominator");
            return rat(num, den);
        }
        return Rat(num);
    }

    std::string ident() {
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::string name = s.substr(start, i - start);
        if (vs->index_of(name) < 0) fail("unknown variable '" + name + "'");
        return name;
    }
};

} // namespace

LaurentPoly parse_poly(const VarSetPtr& vs, const std::string& text) {
    Parser p{vs, text};
    LaurentPoly r = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

} // namespace ck

#include "ck/divdiff.hpp"

#include "ck/errors.hpp"

#include <stdexcept>

namespace ck {

std::string opword_to_string(const OpWord& w) {
    std::string out;
    char blk = 0;
    for (const auto& op : w) {
        if (op.block != blk) {
            if (!out.empty()) out += " ";
            out += op.block;
            out += ":";
            blk = op.block;
        }
        out += " ";
        if (op.hatted) out += "h";
        out += "pi";
        if (op.last == GroupType::A)
            out += std::to_string(op.index);
        else
            out += to_string(op.last);
    }
    return out;
}

namespace {

LaurentPoly var_at(const VarSetPtr& vs, const Block& b, int i /*1-based*/, int pow = 1) {
    Exp e(vs->size(), 0);
    e[b.pos[i - 1]] = pow;
    return LaurentPoly::monomial(vs, std::move(e), Rat(1));
}

} // namespace

LaurentPoly apply_divdiff(const LaurentPoly& f, const DivDiff& op) {
    const auto& vs = f.varset();
    Block b = vs->block(std::string(1, op.block));
    const int n = b.size();
    if (n == 0) throw std::invalid_argument("varset has no block " + std::string(1, op.block));
    if (op.index < 1 || op.index > n) throw std::domain_error("operator index out of range");

    LaurentPoly num(vs), den(vs);
    if (op.index < n || (op.index == n && op.last == GroupType::A)) {
        if (op.index >= n) throw std::domain_error("pi_i needs i < n");
        // (x_i f - x_{i+1} f^{s_i}) / (x_i - x_{i+1})
        LaurentPoly xi = var_at(vs, b, op.index);
        LaurentPoly xj = var_at(vs, b, op.index + 1);
        LaurentPoly fs = act_poly(GroupType::A, Generator::s(op.index), f, b);
        num = xi * f - xj * fs;
        den = xi - xj;
    } else {
        if (op.index != n)
            throw std::domain_error("exceptional operators act at the last node only");
        switch (op.last) {
            case GroupType::C: {
                LaurentPoly xn = var_at(vs, b, n);
                LaurentPoly xni = var_at(vs, b, n, -1);
                LaurentPoly fs = act_poly(GroupType::C, Generator::s(n), f, b);
                num = xn * f - xni * fs;
                den = xn - xni;
                break;
            }
            case GroupType::B: {
                LaurentPoly xn = var_at(vs, b, n);
                LaurentPoly one = LaurentPoly::constant(vs, Rat(1));
                LaurentPoly fs = act_poly(GroupType::B, Generator::s(n), f, b);
                num = xn * f - fs;
                den = xn - one;
                break;
            }
            case GroupType::BC: {
                if (!vs->has("beta"))
                    throw std::domain_error("BC operators need a beta variable in the varset");
                LaurentPoly xn = var_at(vs, b, n);
                LaurentPoly xni = var_at(vs, b, n, -1);
                LaurentPoly beta = LaurentPoly::variable(vs, "beta");
                LaurentPoly fs = act_poly(GroupType::BC, Generator::s(n), f, b);
                num = (xn + beta) * f - (xni + beta) * fs;
                den = xn - xni;
                break;
            }
            case GroupType::D: {
                if (n < 2) throw std::domain_error("the type D operator needs n >= 2");
                LaurentPoly m = var_at(vs, b, n - 1, -1) * var_at(vs, b, n, -1);
                LaurentPoly one = LaurentPoly::constant(vs, Rat(1));
                LaurentPoly ft = act_poly(GroupType::D, Generator::tau(n), f, b);
                num = f - m * ft;
                den = one - m;
                break;
            }
            default:
                throw std::domain_error("no last-node operator for this type");
        }
    }
    LaurentPoly q = divide_exact(num, den);
    if (op.hatted) q -= f;
    return q;
}

LaurentPoly apply_opword(const LaurentPoly& f, const OpWord& w) {
    LaurentPoly r = f;
    for (const auto& op : w) r = apply_divdiff(r, op);
    return r;
}

LaurentPoly apply_opsum(const LaurentPoly& f, const OpSum& s) {
    LaurentPoly r(f.varset());
    for (const auto& w : s) r += apply_opword(f, w);
    return r;
}

OpWord opword_from_generators(GroupType type, int n, const Word& w, char block, bool hatted) {
    OpWord out;
    for (const auto& g : w) {
        DivDiff op;
        op.block = block;
        op.hatted = hatted;
        op.index = g.index;
        switch (g.kind) {
            case Generator::Kind::S:
                if (g.index == n && shares_bc_group(type))
                    op.last = type;
                else if (g.index >= n)
                    throw std::domain_error("generator s_n has no divided difference in this type");
                break;
            case Generator::Kind::Tau:
                if (type != GroupType::D)
                    throw std::domain_error("tau has a divided difference in type D only");
                op.last = GroupType::D;
                break;
            case Generator::Kind::Theta:
                throw std::domain_error("theta has no divided difference");
        }
        out.push_back(op);
    }
    return out;
}

OpWord shift_indices(const OpWord& w) {
    OpWord out = w;
    for (auto& op : out) ++op.index;
    return out;
}

} // namespace ck

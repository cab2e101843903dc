#include "ck/rng.hpp"

namespace ck {

LaurentPoly random_laurent(const VarSetPtr& vs, const Block& b, Rng& rng, int max_terms,
                           int exp_bound, int coef_bound) {
    LaurentPoly f(vs);
    int terms = rng.range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exp e(vs->size(), 0);
        for (int p : b.pos) e[p] = rng.range(-exp_bound, exp_bound);
        int c = 0;
        while (c == 0) c = rng.range(-coef_bound, coef_bound);
        f.add_term(e, Rat(c));
    }
    return f;
}

} // namespace ck

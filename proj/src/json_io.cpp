#include "ck/json_io.hpp"

#include <stdexcept>

namespace ck {

nlohmann::json poly_to_json(const LaurentPoly& f) {
    nlohmann::json j;
    j["vars"] = f.varset()->names();
    j["unit"] = f.varset()->unit();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({e, rat_to_string(c)});
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs 'vars' and 'terms'");
    auto vs = VarSet::make(j.at("vars").get<std::vector<std::string>>(),
                           j.value("unit", 1));
    LaurentPoly f(vs);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("each term must be [[exponents], \"num/den\"]");
        Exp e = t.at(0).get<Exp>();
        if (static_cast<int>(e.size()) != vs->size())
            throw std::invalid_argument("exponent vector length mismatch");
        f.add_term(e, rat_from_string(t.at(1).get<std::string>()));
    }
    return f;
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["maxdeg"] = s.maxdeg;
    nlohmann::json slices = nlohmann::json::array();
    for (const auto& slice : s.slices) slices.push_back(poly_to_json(slice));
    j["slices"] = std::move(slices);
    return j;
}

nlohmann::json gram_to_json(const GramMatrix& m) {
    nlohmann::json j;
    j["type"] = to_string(m.type);
    j["n"] = m.n;
    j["bound"] = m.bound;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : m.entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            if (!cell) {
                r.push_back(nullptr);
            } else if (cell->is_zero() || cell->term_count() == 1) {
                bool constant = cell->is_zero();
                if (!constant) {
                    const auto& e = cell->terms().begin()->first;
                    constant = true;
                    for (int x : e)
                        if (x != 0) { constant = false; break; }
                }
                if (constant)
                    r.push_back(rat_to_string(cell->constant_coefficient()));
                else
                    r.push_back(poly_to_json(*cell));
            } else {
                r.push_back(poly_to_json(*cell));
            }
        }
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace ck

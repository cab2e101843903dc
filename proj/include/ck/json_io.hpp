#pragma once

#include "ck/kernels.hpp"
#include "ck/laurent.hpp"
#include "ck/scalarprod.hpp"

#include <json.hpp>

namespace ck {

// {"vars": [names], "unit": 1|2, "terms": [[[e1,...,em], "num/den"], ...]}
// with terms in canonical (lexicographic) exponent order.
nlohmann::json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TruncatedSeries& s);

nlohmann::json gram_to_json(const GramMatrix& m);

} // namespace ck

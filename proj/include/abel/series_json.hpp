#ifndef ABEL_SERIES_JSON_HPP
#define ABEL_SERIES_JSON_HPP

#include <json.hpp>

#include "abel/plaurent.hpp"
#include "abel/qseries.hpp"
#include "abel/useries.hpp"

namespace abel {

// Canonical JSON forms. Rationals are "num/den" strings; PLaurent
// coefficients are maps from doubled-w exponent strings to rationals.
// Round-trips are bit-exact (including kind/window/validity metadata).

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PLaurent& f);
nlohmann::json to_json(const USeries& s);
nlohmann::json to_json(const QSeries<Rational>& s);
nlohmann::json to_json(const QSeries<PLaurent>& s);
nlohmann::json to_json(const QSeries<USeries>& s);

Rational rational_from_json(const nlohmann::json& j);
PLaurent plaurent_from_json(const nlohmann::json& j);
USeries useries_from_json(const nlohmann::json& j);
QSeries<Rational> qseries_rational_from_json(const nlohmann::json& j);
QSeries<PLaurent> qseries_plaurent_from_json(const nlohmann::json& j);
QSeries<USeries> qseries_useries_from_json(const nlohmann::json& j);

}  // namespace abel

#endif

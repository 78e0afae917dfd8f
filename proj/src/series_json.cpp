#include "abel/series_json.hpp"

#include <string>

#include "abel/error.hpp"

namespace abel {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const PLaurent& f) {
    json c = json::object();
    for (const auto& [e, v] : f.support()) c[std::to_string(e)] = v.str();
    json j;
    j["kind"] = f.is_window() ? "window" : "finite";
    if (f.is_window()) {
        j["window"] = f.window_bound();
        j["validity"] = f.validity();
    }
    j["c"] = c;
    return j;
}

json to_json(const USeries& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s[k].str());
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

namespace {
template <typename C, typename Fn>
json qseries_to_json(const QSeries<C>& s, const char* var, Fn&& cell) {
    json coeffs = json::array();
    for (int d = 0; d <= s.order(); ++d) coeffs.push_back(cell(s[d]));
    return json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

void expect(bool cond, const char* what) {
    if (!cond) throw precondition_error(std::string("series JSON: ") + what);
}
}  // namespace

json to_json(const QSeries<Rational>& s) {
    return qseries_to_json(s, "q", [](const Rational& r) { return to_json(r); });
}

json to_json(const QSeries<PLaurent>& s) {
    return qseries_to_json(s, "pq", [](const PLaurent& f) { return to_json(f); });
}

json to_json(const QSeries<USeries>& s) {
    return qseries_to_json(s, "uq", [](const USeries& u) { return to_json(u); });
}

Rational rational_from_json(const json& j) {
    expect(j.is_string(), "rational must be a num/den string");
    return Rational::parse(j.get<std::string>());
}

PLaurent plaurent_from_json(const json& j) {
    expect(j.is_object() && j.contains("kind") && j.contains("c"),
           "PLaurent needs kind and c");
    PLaurent f;
    std::string kind = j["kind"].get<std::string>();
    if (kind == "window") {
        expect(j.contains("window") && j.contains("validity"),
               "window PLaurent needs window and validity");
        f = PLaurent::window(j["window"].get<int>(), j["validity"].get<int>());
    } else {
        expect(kind == "finite", "unknown PLaurent kind");
    }
    for (const auto& [key, val] : j["c"].items())
        f.set(std::stoi(key), Rational::parse(val.get<std::string>()));
    return f;
}

USeries useries_from_json(const json& j) {
    expect(j.is_object() && j.contains("order") && j.contains("coeffs"),
           "USeries needs order and coeffs");
    int order = j["order"].get<int>();
    const json& coeffs = j["coeffs"];
    expect(coeffs.is_array() && (int)coeffs.size() == order + 1,
           "USeries coefficient count mismatch");
    USeries s(order);
    for (int k = 0; k <= order; ++k)
        s.set(k, Rational::parse(coeffs[k].get<std::string>()));
    return s;
}

namespace {
template <typename C, typename Fn>
QSeries<C> qseries_from_json(const json& j, const char* var, const C& zero,
                             Fn&& cell) {
    expect(j.is_object() && j.contains("var") && j.contains("order") &&
               j.contains("coeffs"),
           "QSeries needs var, order, coeffs");
    if (j["var"].get<std::string>() != var)
        throw regime_error("series JSON: expected variable regime '" +
                           std::string(var) + "', got '" +
                           j["var"].get<std::string>() + "'");
    int order = j["order"].get<int>();
    const json& coeffs = j["coeffs"];
    expect(coeffs.is_array() && (int)coeffs.size() == order + 1,
           "QSeries coefficient count mismatch");
    QSeries<C> s(order, zero);
    for (int d = 0; d <= order; ++d) s.set(d, cell(coeffs[d]));
    return s;
}
}  // namespace

QSeries<Rational> qseries_rational_from_json(const json& j) {
    return qseries_from_json(j, "q", Rational(0),
                             [](const json& c) { return rational_from_json(c); });
}

QSeries<PLaurent> qseries_plaurent_from_json(const json& j) {
    return qseries_from_json(j, "pq", PLaurent(),
                             [](const json& c) { return plaurent_from_json(c); });
}

QSeries<USeries> qseries_useries_from_json(const json& j) {
    expect(j.contains("coeffs") && j["coeffs"].is_array() && !j["coeffs"].empty(),
           "uq series needs at least the constant coefficient");
    USeries zero(j["coeffs"][0]["order"].get<int>());
    return qseries_from_json(j, "uq", zero,
                             [](const json& c) { return useries_from_json(c); });
}

}  // namespace abel

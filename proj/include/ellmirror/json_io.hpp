#pragma once
// JSON and CSV forms of QSeries.

#include "ellmirror/qseries.hpp"
#include "ellmirror/walls.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace ellmirror {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExponentLattice& lat) {
    return Json{{"labels", lat.labels()}, {"weights", lat.weights()}};
}

// Terms come out in lexicographic exponent order (the map order).
inline Json to_json(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_string(c)}});
    return Json{{"lattice", to_json(s.lattice())}, {"truncation", s.truncation()}, {"terms", terms}};
}

inline QSeries series_from_json(const Json& j) {
    auto lat = make_lattice(j.at("lattice").at("labels").get<std::vector<std::string>>(),
                            j.at("lattice").at("weights").get<std::vector<std::int64_t>>());
    QSeries s(lat, j.at("truncation").get<std::int64_t>());
    for (const auto& t : j.at("terms"))
        s.add_term(t.at("exp").get<Exponent>(), parse_rational(t.at("coeff").get<std::string>()));
    return s;
}

// One row per term: exponent components, numerator, denominator.
inline std::string to_csv(const QSeries& s) {
    std::ostringstream out;
    for (const auto& l : s.lattice().labels()) out << l << ",";
    out << "numerator,denominator\n";
    for (const auto& [e, c] : s.terms()) {
        for (auto x : e) out << x << ",";
        out << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    }
    return out.str();
}

// Human-readable form, terms by increasing grade: "2*D1^2*S1 - 1/3*v^4".
inline std::string to_text(const QSeries& s) {
    const auto& lat = s.lattice();
    std::vector<std::pair<std::int64_t, const Exponent*>> order;
    for (const auto& kv : s.terms()) order.push_back({lat.grade(kv.first), &kv.first});
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& entry : order) {
        const Exponent* e = entry.second;
        Rational c = s.coefficient(*e);
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += lat.labels()[i];
            if ((*e)[i] != 1) mono += "^" + std::to_string((*e)[i]);
        }
        bool neg = sgn(c) < 0;
        std::string mag = to_string(neg ? Rational(-c) : c);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (mono.empty()) out << mag;
        else if (mag == "1") out << mono;
        else out << mag << "*" << mono;
        first = false;
    }
    if (first) out << "0";
    out << " + O(grade " << s.truncation() + 1 << ")";
    return out.str();
}

inline Json to_json(const WallTable& t) {
    Json tags = Json::object();
    for (const auto& [k, g] : t.tag_grades) tags[k] = g;
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back(Json{{"ray", e.ray.str()},
                               {"tangency", e.tangency},
                               {"class", e.class_tag},
                               {"fibre_steps", e.fibre_steps},
                               {"count", to_string(e.count)}});
    return Json{{"tag_grades", tags}, {"entries", entries}};
}

inline std::string to_csv(const WallTable& t) {
    std::ostringstream out;
    out << "ray,tangency,class,fibre_steps,numerator,denominator\n";
    for (const auto& e : t.entries)
        out << '"' << e.ray.str() << "\"," << e.tangency << "," << e.class_tag << "," << e.fibre_steps << ","
            << e.count.get_num().get_str() << "," << e.count.get_den().get_str() << "\n";
    return out.str();
}

}  // namespace ellmirror

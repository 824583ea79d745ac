#pragma once

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "wgcalc/hurwitz.hpp"
#include "wgcalc/partitions.hpp"
#include "wgcalc/ratfrac.hpp"
#include "wgcalc/symfunc.hpp"

namespace wgcalc {

using Json = nlohmann::ordered_json;

// {"vars": [...], "terms": [{"exp": [e_1..e_v], "coef": "p/q"}]}
// Terms are kept in the map's lexicographic order, so serialisation is
// deterministic and round-trips bit-exactly.
inline Json to_json(const MPoly& f) {
    Json vars = Json::array();
    for (int i = 0; i < kNumVars; ++i) vars.push_back(var_name(static_cast<Var>(i)));
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json term;
        term["exp"] = e;
        term["coef"] = to_string(c);
        terms.push_back(term);
    }
    return Json{{"vars", vars}, {"terms", terms}};
}

inline MPoly mpoly_from_json(const Json& j) {
    const auto& vars = j.at("vars");
    std::vector<int> slot(vars.size());
    for (size_t i = 0; i < vars.size(); ++i)
        slot[i] = static_cast<int>(var_from_name(vars[i].get<std::string>()));
    MPoly f;
    for (const auto& term : j.at("terms")) {
        const auto& exp = term.at("exp");
        if (exp.size() != vars.size()) throw ParseError("mpoly_from_json: exponent arity");
        Exponents e(kNumVars, 0);
        for (size_t i = 0; i < exp.size(); ++i) e[slot[i]] = exp[i].get<int>();
        f.add_term(e, rat_from_string(term.at("coef").get<std::string>()));
    }
    return f;
}

inline Json to_json(const RatFrac& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFrac ratfrac_from_json(const Json& j) {
    return RatFrac(mpoly_from_json(j.at("num")), mpoly_from_json(j.at("den")));
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline Json to_json(const Tableau& t) { return Json(t.rows()); }

inline Json to_json(const SymFunc& f) {
    Json out = Json::array();
    for (const auto& [mu, c] : f.terms())
        out.push_back(Json{{"partition", to_json(mu)}, {"coef", to_json(c)}});
    return out;
}

inline SymFunc symfunc_from_json(const Json& j) {
    SymFunc f;
    for (const auto& term : j)
        f.add_term(partition_from_json(term.at("partition")),
                   ratfrac_from_json(term.at("coef")));
    return f;
}

// Comma-separated positive integers, e.g. "2,1,1".
inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// Genus as an integer or half-integer literal: "0", "1/2", "3/2", "2".
// Returns the doubled genus.
inline int parse_genus2(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * std::stoi(s);
    if (s.substr(slash + 1) != "2") throw ParseError("genus must be a half-integer: " + s);
    return std::stoi(s.substr(0, slash));
}

inline std::string genus_string(int g2) {
    if (g2 % 2 == 0) return std::to_string(g2 / 2);
    return std::to_string(g2) + "/2";
}

// One CSV row per Hurwitz value: g, n, mu, polynomial.
inline std::string hurwitz_csv_row(int g2, const Partition& mu, const MPoly& value) {
    std::string mu_str;
    for (int i = 0; i < mu.length(); ++i) {
        if (i) mu_str += " ";
        mu_str += std::to_string(mu.parts()[i]);
    }
    return genus_string(g2) + "," + std::to_string(mu.length()) + "," + mu_str + ",\"" +
           value.str() + "\"";
}

} // namespace wgcalc

#ifndef OVERQ_SERIALIZATION_HPP
#define OVERQ_SERIALIZATION_HPP

// JSON persistence. Big integers travel as decimal strings so no precision is
// lost; load(save(x)) == x bit-exactly for every table type.

#include <string>

#include <json.hpp>

#include "overq/congruence.hpp"
#include "overq/frac_series.hpp"
#include "overq/overpartitions.hpp"

namespace overq {

using Json = nlohmann::json;

template <typename Coef>
Json to_json(const FracSeries<Coef>& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, to_decimal(c)}));
    return Json{{"denom", s.denom()}, {"trunc", s.trunc()}, {"terms", terms}};
}

inline ZSeries zseries_from_json(const Json& j) {
    ZSeries s(j.at("denom").get<std::int64_t>(), j.at("trunc").get<std::int64_t>());
    for (const auto& t : j.at("terms"))
        s.set(t.at(0).get<std::int64_t>(), int_from_decimal(t.at(1).get<std::string>()));
    return s;
}

inline QSeries qseries_from_json(const Json& j) {
    QSeries s(j.at("denom").get<std::int64_t>(), j.at("trunc").get<std::int64_t>());
    for (const auto& t : j.at("terms"))
        s.set(t.at(0).get<std::int64_t>(), rat_from_decimal(t.at(1).get<std::string>()));
    return s;
}

inline Json to_json(const RankTable& t) {
    Json rows = Json::array();
    for (std::int64_t n = 0; n <= t.max_n(); ++n) {
        Json row = Json::array();
        for (std::int64_t m = -n; m <= n; ++m) row.push_back(to_decimal(t.count(m, n)));
        rows.push_back(std::move(row));
    }
    return Json{{"type", "rank_table"}, {"method", t.method()}, {"max_n", t.max_n()}, {"rows", rows}};
}

inline RankTable rank_table_from_json(const Json& j) {
    RankTable t(j.at("max_n").get<std::int64_t>(), j.value("method", "loaded"));
    const auto& rows = j.at("rows");
    for (std::int64_t n = 0; n <= t.max_n(); ++n) {
        const auto& row = rows.at(static_cast<std::size_t>(n));
        for (std::int64_t m = -n; m <= n; ++m) {
            Int v = int_from_decimal(row.at(static_cast<std::size_t>(m + n)).get<std::string>());
            if (!is_zero(v)) t.add(m, n, v);
        }
    }
    return t;
}

inline Json to_json(const ResidueTable& t) {
    Json rows = Json::array();
    for (std::int64_t r = 0; r < t.modulus(); ++r) {
        Json row = Json::array();
        for (std::int64_t n = 0; n <= t.max_n(); ++n) row.push_back(to_decimal(t.count(r, n)));
        rows.push_back(std::move(row));
    }
    return Json{{"type", "residue_table"}, {"t", t.modulus()}, {"max_n", t.max_n()}, {"rows", rows}};
}

inline ResidueTable residue_table_from_json(const Json& j) {
    ResidueTable t(j.at("t").get<std::int64_t>(), j.at("max_n").get<std::int64_t>());
    const auto& rows = j.at("rows");
    for (std::int64_t r = 0; r < t.modulus(); ++r)
        for (std::int64_t n = 0; n <= t.max_n(); ++n) {
            Int v = int_from_decimal(rows.at(static_cast<std::size_t>(r))
                                         .at(static_cast<std::size_t>(n)).get<std::string>());
            if (!is_zero(v)) t.add(r, n, v);
        }
    return t;
}

inline std::string status_string(const ClaimReport& rep) {
    switch (rep.status) {
        case ClaimStatus::PassToBound: return "PASS_TO_BOUND";
        case ClaimStatus::Empirical: return "EMPIRICAL";
        case ClaimStatus::Fail:
            return "FAIL(" + std::to_string(rep.fail_n.value_or(-1)) + ")";
    }
    return "UNKNOWN";
}

inline Json to_json(const ClaimReport& rep) {
    Json j{{"A", rep.claim.A}, {"B", rep.claim.B}, {"t", rep.claim.t},
           {"ell", rep.claim.ell}, {"j", rep.claim.j},
           {"status", status_string(rep)}, {"checked_to", rep.checked_to},
           {"aggregate_pbar_ok", rep.aggregate_pbar_ok}};
    if (rep.fail_n) j["fail_n"] = *rep.fail_n;
    if (rep.fail_r) j["fail_r"] = *rep.fail_r;
    return j;
}

/// Residual report with the shared schema the CLI emits.
inline Json residual_report(const std::string& check_id, const Json& params, double residual,
                            double tolerance) {
    return Json{{"check_id", check_id}, {"params", params}, {"residual", residual},
                {"tolerances", Json{{"abs", tolerance}}}, {"converged", residual < tolerance}};
}

} // namespace overq

#endif

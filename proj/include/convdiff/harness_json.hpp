#ifndef CONVDIFF_HARNESS_JSON_HPP
#define CONVDIFF_HARNESS_JSON_HPP

#include "convdiff/harness.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace convdiff {

/// Same rows and field names as render_csv; absent values become null.
inline nlohmann::ordered_json to_json(const std::vector<ConvergenceRow>& rows)
{
    auto opt = [](const std::optional<double>& v) -> nlohmann::ordered_json {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["problem"] = r.problem;
        j["method"] = std::string(to_string(r.method));
        j["n"] = r.n;
        j["h"] = r.h;
        j["err_max"] = opt(r.err_max);
        j["err_l2"] = opt(r.err_l2);
        j["order_max"] = opt(r.order_max);
        j["order_l2"] = opt(r.order_l2);
        j["peclet"] = r.peclet;
        j["oscillations"] = r.oscillations;
        j["cond_estimate"] = opt(r.cond_estimate);
        j["error"] = r.error;
        out.push_back(std::move(j));
    }
    return out;
}

inline std::string render_json(const std::vector<ConvergenceRow>& rows) { return to_json(rows).dump(2) + "\n"; }

} // namespace convdiff

#endif // CONVDIFF_HARNESS_JSON_HPP

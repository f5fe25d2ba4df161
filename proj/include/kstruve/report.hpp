#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "identities.hpp"

namespace kstruve {

// 17 significant digits: lossless double round-trip.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline void append_worst_point(std::string& out, const TheoremCase& kind_ref,
                               const WorstPoint& wp) {
    out += "{\"eta\":" + format_g17(wp.eta);
    out += ",\"alpha\":" + format_g17(wp.alpha);
    out += ",\"a\":" + format_g17(wp.a);
    out += ",\"rho\":" + format_g17(wp.rho);
    out += ",\"x\":" + format_g17(wp.x);
    out += ",\"k\":" + format_g17(wp.k);
    if (is_series_case(kind_ref.case_id)) {
        out += ",\"nu\":" + format_g17(wp.nu);
        out += ",\"c\":" + format_g17(wp.c);
    } else {
        out += ",\"gamma\":" + format_g17(wp.gamma);
    }
    out += "}";
}

} // namespace detail

// One report as a single JSON object (no trailing newline).  Key order is
// fixed so that repeated runs compare byte-for-byte.
inline std::string report_to_json(const VerificationReport& rep) {
    TheoremCase kind_ref{};
    kind_ref.case_id = rep.case_id;
    std::string out = "{\"case\":\"";
    out += case_name(rep.case_id);
    out += "\",\"grid\":{\"name\":\"" + rep.grid_name + "\",\"points\":"
         + std::to_string(rep.points) + "}";
    out += ",\"max_rel_err_printed\":" + format_g17(rep.max_rel_err_printed);
    out += ",\"max_rel_err_corrected\":" + format_g17(rep.max_rel_err_corrected);
    out += ",\"worst_point\":";
    detail::append_worst_point(out, kind_ref, rep.worst_point);
    out += ",\"status\":\"";
    out += status_name(rep.status);
    out += "\"}";
    return out;
}

inline std::string reports_to_json(const std::vector<VerificationReport>& reps) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        out += "  " + report_to_json(reps[i]);
        if (i + 1 < reps.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

// Human-readable summary, one line per case.
inline std::string report_table(const std::vector<VerificationReport>& reps) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-6s %-8s %8s %14s %14s  %s\n", "case",
                  "grid", "points", "err(printed)", "err(corrected)", "status");
    out += line;
    for (const auto& rep : reps) {
        std::snprintf(line, sizeof(line), "%-6s %-8s %8lld %14.3e %14.3e  %s\n",
                      case_name(rep.case_id), rep.grid_name.c_str(),
                      static_cast<long long>(rep.points), rep.max_rel_err_printed,
                      rep.max_rel_err_corrected, status_name(rep.status));
        out += line;
        if (rep.eval_failures > 0) {
            std::snprintf(line, sizeof(line), "       %lld point(s) failed to evaluate; first: %.150s\n",
                          static_cast<long long>(rep.eval_failures), rep.first_failure.c_str());
            out += line;
        }
    }
    return out;
}

} // namespace kstruve

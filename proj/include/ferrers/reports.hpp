#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/audit.hpp"
#include "ferrers/diagonal.hpp"
#include "ferrers/max_packing.hpp"
#include "ferrers/packing_io.hpp"
#include "ferrers/tiling.hpp"

namespace ferrers {

/// 12 significant digits, as used in every CSV report.
inline std::string format_real(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline constexpr const char* kDensityCsvHeader = "n,offered,packed,width_used,density,density_times_logn,seed";

inline std::string density_csv_row(const DensityReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.offered << ',' << r.packed << ',' << r.width_used << ',' << format_real(r.density)
       << ',' << format_real(r.density_times_logn) << ',' << r.seed;
    return os.str();
}

inline std::string density_csv(const std::vector<DensityReport>& reports) {
    std::string out = std::string(kDensityCsvHeader) + "\n";
    for (const auto& r : reports)
        out += density_csv_row(r) + "\n";
    return out;
}

inline Json density_to_json(const DensityReport& r) {
    return Json{{"n", r.n},
                {"offered", r.offered},
                {"packed", r.packed},
                {"width_used", r.width_used},
                {"density", r.density},
                {"density_times_logn", r.density_times_logn},
                {"seed", r.seed}};
}

inline constexpr const char* kLemmaOneCsvHeader =
    "n,sample_size,method,seed,c1,c2,c3,epsilon,frac_violating_I,frac_violating_III,"
    "mean_area_outside_Q,max_area_outside_Q,exhaustive";

inline std::string lemma1_csv(const LemmaOneReport& r) {
    std::ostringstream os;
    os << kLemmaOneCsvHeader << '\n'
       << r.n << ',' << r.sample_size << ',' << r.method << ',' << r.seed << ',' << format_real(r.constants.c1)
       << ',' << format_real(r.constants.c2) << ',' << format_real(r.constants.c3) << ','
       << format_real(r.constants.epsilon) << ',' << format_real(r.frac_violating_I) << ','
       << format_real(r.frac_violating_III) << ',' << format_real(r.mean_area_outside_Q) << ','
       << format_real(r.max_area_outside_Q) << ',' << (r.exhaustive ? "true" : "false") << '\n';
    return os.str();
}

inline Json lemma1_to_json(const LemmaOneReport& r) {
    return Json{{"n", r.n},
                {"sample_size", r.sample_size},
                {"method", r.method},
                {"seed", r.seed},
                {"constants",
                 Json{{"c1", r.constants.c1},
                      {"c2", r.constants.c2},
                      {"c3", r.constants.c3},
                      {"epsilon", r.constants.epsilon}}},
                {"frac_violating_I", r.frac_violating_I},
                {"frac_violating_III", r.frac_violating_III},
                {"mean_area_outside_Q", r.mean_area_outside_Q},
                {"max_area_outside_Q", r.max_area_outside_Q},
                {"exhaustive", r.exhaustive}};
}

// {"n", "policy", "status", "nodes", "elapsed_ms", "witness"}
inline Json solve_result_to_json(const SolveResult& r) {
    return Json{{"n", r.n},
                {"policy", std::string(to_string(r.policy))},
                {"status", std::string(to_string(r.status))},
                {"nodes", r.nodes},
                {"elapsed_ms", r.elapsed.count()},
                {"witness", r.witness ? packing_to_json(*r.witness) : Json(nullptr)}};
}

inline Json max_pack_to_json(const MaxPackResult& r) {
    return Json{{"n", r.best.n},
                {"policy", std::string(to_string(r.best.policy))},
                {"count", r.best.placements.size()},
                {"optimal", r.optimal},
                {"nodes", r.nodes},
                {"elapsed_ms", r.elapsed.count()},
                {"packing", packing_to_json(r.best)}};
}

inline Json window_audit_to_json(const WindowAudit& a, int n, double c1, std::uint64_t seed) {
    return Json{{"n", n},
                {"c1", c1},
                {"side", a.side},
                {"windows_checked", a.windows_checked},
                {"max_covered", a.max_covered},
                {"argmax", Json{{"row", a.argmax.row}, {"col", a.argmax.col}}},
                {"gamma_hat", a.gamma_hat},
                {"seed", seed}};
}

} // namespace ferrers

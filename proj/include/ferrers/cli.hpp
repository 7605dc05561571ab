#pragma once

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ferrers/audit.hpp"
#include "ferrers/counting.hpp"
#include "ferrers/diagonal.hpp"
#include "ferrers/max_packing.hpp"
#include "ferrers/packing_io.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/render.hpp"
#include "ferrers/reports.hpp"
#include "ferrers/tiling.hpp"

namespace ferrers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Settings {
    // shared
    int n = 0;
    std::uint64_t seed = 1;
    std::string policy = "free";
    std::string out_path;
    std::string format;
    unsigned threads = 1;

    // caps and budgets
    int enum_cap = kDefaultEnumerationCap;
    int solver_cap = kDefaultSolverCap;
    int exact_cap = kDefaultExactSamplerCap;
    std::uint64_t max_nodes = Budget{}.max_nodes;
    long long time_limit_ms = 0;

    // rectangles
    Coord height = 0;
    Coord width = 0;

    // constants
    double c1 = 0.1;
    double c2 = 4.0;
    double c3 = 0.001;
    double epsilon = 0.25;
    double stride_slack = 1.0;
    Coord max_width = 0;

    // populations
    std::size_t samples = 0;
    std::string method;
    bool exhaustive = false;
    std::vector<int> ns{100, 400, 1600};
    std::uint64_t windows = 1000;
    std::string packing_path;

    // rendering
    std::string parts;
    bool conjugate = false;
    int cell_px = 10;
    bool diagonals = false;
    bool labels = false;
};

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Budget budget_of(const Settings& s) {
    Budget b;
    b.max_nodes = s.max_nodes;
    if (s.time_limit_ms > 0)
        b.time_limit = std::chrono::milliseconds(s.time_limit_ms);
    return b;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void require(const CLI::App* sub, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        const CLI::Option* opt = nullptr;
        for (const CLI::App* app = sub; app && !opt; app = app->get_parent()) {
            try {
                opt = app->get_option(name);
            } catch (const CLI::OptionNotFound&) {
            }
        }
        if (!opt || opt->count() == 0)
            throw UsageError(std::string(name) + " is required for '" + sub->get_name() + "'");
    }
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                           const std::string& command) {
    for (const char* a : allowed)
        if (format == a)
            return;
    throw UsageError("--format " + format + " is not supported by '" + command + "'");
}

inline PackerConfig packer_config(const Settings& s) {
    PackerConfig cfg;
    cfg.c1 = s.c1;
    cfg.c2 = s.c2;
    cfg.stride_slack = s.stride_slack;
    cfg.enumeration_cap = s.enum_cap;
    cfg.exact_sampler_cap = s.exact_cap;
    if (s.max_width > 0)
        cfg.max_width = s.max_width;
    if (s.samples == 0)
        cfg.source = ShapeSource{ShapeSource::Kind::enumerated, 0, s.seed};
    else
        cfg.source = ShapeSource{ShapeSource::Kind::sampled, s.samples, s.seed};
    return cfg;
}

inline LemmaOneConstants lemma_constants(const Settings& s) {
    if (!(s.c1 > 0 && s.c2 > 0 && s.c3 >= 0 && s.epsilon > 0))
        throw DomainError("constants must satisfy c1 > 0, c2 > 0, c3 >= 0, epsilon > 0");
    return LemmaOneConstants{s.c1, s.c2, s.c3, s.epsilon};
}

/// name = value for the shared flags and those of the chosen subcommand,
/// defaults included.
inline void log_resolved(const CLI::App& app, std::ostream& err) {
    err << "# resolved config\n";
    auto dump = [&](const CLI::App* a, const std::string& prefix) {
        for (const CLI::Option* opt : a->get_options()) {
            const std::string name = opt->get_single_name();
            if (name == "help" || name == "config" || name == "help-all")
                continue;
            std::string value = opt->get_default_str();
            if (opt->count() > 0) {
                value.clear();
                for (const auto& r : opt->results())
                    value += (value.empty() ? "" : ",") + r;
            }
            err << "#   " << prefix << name << " = " << (value.empty() && opt->get_expected_max() == 0 ? "false" : value) << "\n";
        }
    };
    dump(&app, "");
    for (const CLI::App* sub : app.get_subcommands())
        dump(sub, sub->get_name() + ".");
}

} // namespace detail

/// Executes one command. Exit codes: 0 success, 1 domain error (caps,
/// degenerate configuration, invalid input files), 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Settings s;
    CLI::App app{"Ferrers shape tiling, packing and audit toolkit", "ferrers"};
    app.fallthrough();
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.set_config("--config", "", "TOML file mirroring the flags; flags on the command line win");
    app.add_option("--n", s.n, "shape size")->check(CLI::Range(1, std::numeric_limits<int>::max()));
    app.add_option("--seed", s.seed, "random seed");
    app.add_option("--policy", s.policy, "orientation policy")
        ->check(CLI::IsMember({"fixed", "rot180", "free", "all"}));
    app.add_option("--out", s.out_path, "output path (default stdout)");
    app.add_option("--format", s.format, "json | csv | svg | ascii")
        ->check(CLI::IsMember({"json", "csv", "svg", "ascii"}));
    app.add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--enum-cap", s.enum_cap, "partition enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--exact-cap", s.exact_cap, "exact sampler cap")->check(CLI::PositiveNumber);
    app.add_option("--samples", s.samples, "sample count (0 = enumerate)");
    app.add_option("--c1", s.c1, "lower first-row constant");
    app.add_option("--c2", s.c2, "upper first-row constant");

    auto* enumerate = app.add_subcommand("enumerate", "list the partitions of n");
    auto* count = app.add_subcommand("count", "exact p(n)");
    auto* estimate = app.add_subcommand("estimate", "Hardy-Ramanujan estimate against exact p(n)");

    auto* solve = app.add_subcommand("solve", "decide whether the n x p(n) rectangle can be tiled");
    for (auto* sub : {solve}) {
        sub->add_option("--solver-cap", s.solver_cap, "largest n accepted (at most 7)")
            ->check(CLI::Range(1, kHardSolverCap));
    }
    auto* maxpack = app.add_subcommand("maxpack", "most distinct shapes packable in a rectangle");
    for (auto* sub : {solve, maxpack}) {
        sub->add_option("--max-nodes", s.max_nodes, "search node budget");
        sub->add_option("--time-limit-ms", s.time_limit_ms, "wall clock budget (0 = none)");
    }
    maxpack->add_option("--height", s.height, "rectangle height (default n)");
    maxpack->add_option("--width", s.width, "rectangle width (default p(n))");

    auto* pack = app.add_subcommand("pack", "diagonal chain packing of the reduced shapes");
    auto* lemma1 = app.add_subcommand("audit-lemma1", "first row/column, square and big-part statistics");
    auto* lemma2 = app.add_subcommand("audit-lemma2", "largest covered area in square windows");
    auto* curve = app.add_subcommand("density-curve", "density of diagonal packings across n");
    for (auto* sub : {pack, lemma2, curve}) {
        sub->add_option("--stride-slack", s.stride_slack, "multiplier on the chain stride");
        sub->add_option("--max-width", s.max_width, "stop packing beyond this column (0 = unbounded)");
    }
    lemma1->add_flag("--exhaustive", s.exhaustive, "audit every partition of n");
    lemma1->add_option("--method", s.method, "sampler")->check(CLI::IsMember({"exact_dp", "boltzmann"}));
    lemma1->add_option("--c3", s.c3, "big-part constant");
    lemma1->add_option("--epsilon", s.epsilon, "apex square constant");
    lemma2->add_option("--packing", s.packing_path, "packing JSON to audit (default: build one)");
    lemma2->add_option("--windows", s.windows, "random windows on top of the grid sweep");
    curve->add_option("--ns", s.ns, "sizes to measure")->delimiter(',');

    auto* render = app.add_subcommand("render", "draw a shape or a packing");
    render->add_option("--parts", s.parts, "partition, e.g. 4,2,1");
    render->add_flag("--conjugate", s.conjugate, "draw the conjugate shape");
    render->add_option("--packing", s.packing_path, "packing JSON");
    render->add_option("--cell-px", s.cell_px, "pixels per box")->check(CLI::PositiveNumber);
    render->add_flag("--diagonals", s.diagonals, "draw diagonal guides");
    render->add_flag("--labels", s.labels, "number the shapes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    detail::log_resolved(app, err);

    std::ostringstream buffer;
    auto emit = [&](const std::string& text) { buffer << text; };
    auto emit_json = [&](const Json& j) { buffer << j.dump(2) << '\n'; };

    try {
        const std::string& format = s.format;
        if (s.policy == "all" && !solve->parsed())
            throw detail::UsageError("--policy all is only accepted by 'solve'");

        if (enumerate->parsed()) {
            detail::require(enumerate, {"--n"});
            const auto parts = enumerate_partitions(s.n, s.enum_cap);
            if (format.empty() || format == "ascii") {
                for (const auto& p : parts)
                    emit(to_string(p) + "\n");
            } else if (format == "csv") {
                emit("n,index,parts\n");
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    std::string joined;
                    for (int x : parts[i].parts())
                        joined += (joined.empty() ? "" : " ") + std::to_string(x);
                    emit(std::to_string(s.n) + "," + std::to_string(i) + "," + joined + "\n");
                }
            } else if (format == "json") {
                Json list = Json::array();
                for (const auto& p : parts)
                    list.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
                emit_json(Json{{"n", s.n}, {"count", parts.size()}, {"partitions", std::move(list)}});
            } else {
                detail::require_format(format, {"ascii", "csv", "json"}, "enumerate");
            }
        } else if (count->parsed()) {
            detail::require(count, {"--n"});
            const auto p = exact_p(s.n);
            if (format == "json")
                emit_json(Json{{"n", s.n}, {"p", p.str()}});
            else if (format.empty() || format == "ascii")
                emit(p.str() + "\n");
            else
                detail::require_format(format, {"ascii", "json"}, "count");
        } else if (estimate->parsed()) {
            detail::require(estimate, {"--n"});
            if (!format.empty())
                detail::require_format(format, {"json"}, "estimate");
            const auto est = hardy_ramanujan_estimate(s.n);
            const auto exact = exact_p(s.n);
            const HighPrecision ratio = est / HighPrecision(exact);
            emit_json(Json{{"n", s.n},
                           {"estimate", est.str(30, std::ios_base::scientific)},
                           {"exact", exact.str()},
                           {"ratio", ratio.str(30, std::ios_base::fixed)}});
        } else if (solve->parsed()) {
            detail::require(solve, {"--n"});
            if (!format.empty())
                detail::require_format(format, {"json"}, "solve");
            std::vector<OrientationPolicy> policies;
            if (s.policy == "all")
                policies = {OrientationPolicy::fixed, OrientationPolicy::rot180, OrientationPolicy::free};
            else
                policies = {parse_policy(s.policy)};
            Json results = Json::array();
            for (auto policy : policies) {
                const auto inst = build_cover_instance(s.n, policy, s.solver_cap);
                results.push_back(solve_result_to_json(solve_exact_tiling(inst, detail::budget_of(s), s.threads)));
            }
            emit_json(results.size() == 1 ? results[0] : results);
        } else if (maxpack->parsed()) {
            detail::require(maxpack, {"--n"});
            if (!format.empty())
                detail::require_format(format, {"json", "svg"}, "maxpack");
            if (s.policy == "all")
                throw detail::UsageError("--policy all is only accepted by 'solve'");
            Rect rect{s.height > 0 ? s.height : s.n, s.width};
            if (rect.width <= 0) {
                if (s.n > s.enum_cap)
                    throw CapacityError("default width p(n) needs n within the enumeration cap", s.n, s.enum_cap);
                rect.width = static_cast<Coord>(exact_p(s.n));
            }
            const auto result = max_packing(s.n, rect, parse_policy(s.policy), detail::budget_of(s));
            if (format == "svg")
                emit(render_packing_svg(result.best, RenderSpec{s.cell_px, false, true}));
            else
                emit_json(max_pack_to_json(result));
        } else if (pack->parsed()) {
            detail::require(pack, {"--n"});
            if (!format.empty())
                detail::require_format(format, {"json", "csv", "svg"}, "pack");
            const auto run = density_run(s.n, detail::packer_config(s));
            if (format == "csv")
                emit(std::string(kDensityCsvHeader) + "\n" + density_csv_row(run.report) + "\n");
            else if (format == "svg")
                emit(render_packing_svg(run.packing, RenderSpec{s.cell_px, true, false}));
            else
                emit_json(Json{{"report", density_to_json(run.report)}, {"packing", packing_to_json(run.packing)}});
        } else if (lemma1->parsed()) {
            detail::require(lemma1, {"--n"});
            if (!format.empty())
                detail::require_format(format, {"json", "csv"}, "audit-lemma1");
            const auto constants = detail::lemma_constants(s);
            LemmaOneReport report;
            if (s.exhaustive) {
                report = audit_lemma1_exhaustive(s.n, constants, s.enum_cap);
            } else {
                const auto method = s.method.empty() ? default_method(s.n, s.exact_cap) : parse_sampler_method(s.method);
                const std::uint64_t draws = s.samples > 0 ? s.samples : 10000;
                report = audit_lemma1_sampled(SamplerSpec{s.n, method, s.seed}, draws, constants, s.exact_cap);
            }
            if (format == "csv")
                emit(lemma1_csv(report));
            else
                emit_json(lemma1_to_json(report));
        } else if (lemma2->parsed()) {
            if (!format.empty())
                detail::require_format(format, {"json"}, "audit-lemma2");
            Packing pk;
            int n = s.n;
            if (!s.packing_path.empty()) {
                pk = parse_packing(detail::read_file(s.packing_path));
                if (n == 0)
                    n = pk.n;
            } else {
                detail::require(lemma2, {"--n"});
                pk = density_run(n, detail::packer_config(s)).packing;
            }
            const auto audit = audit_lemma2_windows(pk, n, s.c1, s.windows, s.seed);
            emit_json(window_audit_to_json(audit, n, s.c1, s.seed));
        } else if (curve->parsed()) {
            if (!format.empty())
                detail::require_format(format, {"csv", "json"}, "density-curve");
            for (int n : s.ns)
                if (n < 1)
                    throw detail::UsageError("--ns entries must be positive");
            const std::size_t per_n = s.samples > 0 ? s.samples : 2000;
            const auto reports = measure_density_curve(s.ns, per_n, detail::packer_config(s), s.seed, s.threads);
            if (format == "json") {
                Json list = Json::array();
                for (const auto& r : reports)
                    list.push_back(density_to_json(r));
                emit_json(list);
            } else {
                emit(density_csv(reports));
            }
        } else if (render->parsed()) {
            const RenderSpec spec{s.cell_px, s.diagonals, s.labels};
            if (!s.packing_path.empty()) {
                if (!format.empty())
                    detail::require_format(format, {"svg"}, "render --packing");
                emit(render_packing_svg(parse_packing(detail::read_file(s.packing_path)), spec));
            } else {
                detail::require(render, {"--parts"});
                Partition p;
                try {
                    p = parse_partition(s.parts);
                } catch (const std::invalid_argument& e) {
                    throw detail::UsageError(std::string("--parts: ") + e.what());
                }
                if (s.conjugate)
                    p = conjugate(p);
                if (format == "svg")
                    emit(render_shape_svg(p, spec));
                else if (format.empty() || format == "ascii")
                    emit(render_shape_ascii(p));
                else
                    detail::require_format(format, {"ascii", "svg"}, "render");
            }
        }
    } catch (const detail::UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDomain;
    }

    if (s.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(s.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << s.out_path << "'\n";
            return kExitDomain;
        }
        file << buffer.str();
    }
    return kExitOk;
}

} // namespace ferrers::cli

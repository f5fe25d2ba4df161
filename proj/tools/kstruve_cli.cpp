// Command-line front end: series/Wright evaluation, pathway integration, and
// identity verification with machine-readable CSV/JSON output.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kstruve/kstruve.hpp>

namespace {

using kstruve::format_g17;

struct Field {
    std::string key;
    std::string value;
    bool quoted; // strings stay quoted in JSON and escaped in CSV
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// One OutputRecord, either as a header+row CSV pair or a single JSON object.
void print_record(const std::vector<Field>& fields, const std::string& format) {
    if (format == "json") {
        std::string out = "{";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ",";
            out += "\"" + fields[i].key + "\":";
            if (fields[i].quoted)
                out += nlohmann::json(fields[i].value).dump();
            else
                out += fields[i].value;
        }
        out += "}";
        std::cout << out << "\n";
        return;
    }
    std::string header, row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            header += ",";
            row += ",";
        }
        header += fields[i].key;
        row += csv_escape(fields[i].value);
    }
    std::cout << header << "\n" << row << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int fail_eval(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
}

int fail_params(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}

int cmd_eval_struve(double k, double nu, double c, double x, double tol,
                    const std::string& format) {
    const auto t0 = std::chrono::steady_clock::now();
    kstruve::EvalResult r;
    try {
        r = kstruve::eval_k_struve({k, nu, c}, x, tol);
    } catch (const kstruve::error& e) {
        return fail_eval(e);
    }
    print_record({{"command", "eval-struve", true},
                  {"k", format_g17(k), false},
                  {"nu", format_g17(nu), false},
                  {"c", format_g17(c), false},
                  {"x", format_g17(x), false},
                  {"tol", format_g17(tol), false},
                  {"value", format_g17(r.value), false},
                  {"err_estimate", format_g17(r.err_estimate), false},
                  {"work", std::to_string(r.work), false},
                  {"wall_time_ms", format_g17(elapsed_ms(t0)), false}},
                 format);
    return 0;
}

int cmd_eval_wright(const std::string& spec_json, double z, bool have_z, double tol,
                    bool have_tol, const std::string& format) {
    kstruve::FoxWrightSpec spec;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(spec_json);
        for (const auto& p : j.at("upper"))
            spec.upper.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        for (const auto& p : j.at("lower"))
            spec.lower.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        if (!have_z) {
            if (!j.contains("z")) throw std::runtime_error("eval-wright: no z given");
            z = j.at("z").get<double>();
        }
        if (!have_tol && j.contains("tol")) tol = j.at("tol").get<double>();
    } catch (const std::exception& e) {
        return fail_params(e);
    }
    const auto t0 = std::chrono::steady_clock::now();
    kstruve::EvalResult r;
    try {
        r = kstruve::eval_fox_wright(spec, z, tol);
    } catch (const kstruve::error& e) {
        return fail_eval(e);
    }
    nlohmann::json echo;
    echo["upper"] = j.at("upper");
    echo["lower"] = j.at("lower");
    print_record({{"command", "eval-wright", true},
                  {"spec", echo.dump(), true},
                  {"z", format_g17(z), false},
                  {"tol", format_g17(tol), false},
                  {"value", format_g17(r.value), false},
                  {"err_estimate", format_g17(r.err_estimate), false},
                  {"work", std::to_string(r.work), false},
                  {"wall_time_ms", format_g17(elapsed_ms(t0)), false}},
                 format);
    return 0;
}

struct PathwayArgs {
    std::string family;
    double eta = 0, alpha = 0, a = 0, x = 0, tol = 1e-8;
    double beta = 0;            // power
    double k = 1, nu = 0, c = 0; // struve
    double gamma = 0, rho = 1;   // struve + trig
};

int cmd_pathway(const PathwayArgs& args, const std::string& format) {
    const kstruve::PathwayParams pw{args.eta, args.alpha, args.a};
    try {
        kstruve::validate(pw);
        if (!(args.x > 0.0)) throw kstruve::domain_error("pathway: requires x > 0");
        if (!(args.tol > 0.0)) throw kstruve::domain_error("pathway: tol must be positive");
        if (args.family == "power" && !(args.beta > 0.0))
            throw kstruve::domain_error("pathway: power family requires beta > 0");
        if (args.family == "struve") {
            if (!(args.k > 0.0)) throw kstruve::domain_error("pathway: requires k > 0");
            if (!(args.nu > -1.5 * args.k))
                throw kstruve::domain_error("pathway: requires nu > -(3/2)k");
        }
        if (args.family != "power" && args.family != "struve" && !(args.k > 0.0))
            throw kstruve::domain_error("pathway: requires k > 0");
        if (!(args.rho > 0.0)) throw kstruve::domain_error("pathway: requires rho > 0");
    } catch (const kstruve::error& e) {
        return fail_params(e);
    }

    const auto t0 = std::chrono::steady_clock::now();
    kstruve::EvalResult r;
    double closed = 0.0, gap = 0.0;
    std::vector<Field> fields = {{"command", "pathway", true},
                                 {"family", args.family, true},
                                 {"eta", format_g17(args.eta), false},
                                 {"alpha", format_g17(args.alpha), false},
                                 {"a", format_g17(args.a), false}};
    try {
        if (args.family == "power") {
            r = kstruve::pathway_integral(
                pw, [&args](double t) { return std::pow(t, args.beta - 1.0); }, args.x,
                args.tol);
            fields.push_back({"beta", format_g17(args.beta), false});
        } else if (args.family == "struve") {
            const kstruve::KStruveParams sp{args.k, args.nu, args.c};
            const double series_tol = args.tol / 10.0;
            r = kstruve::pathway_integral(
                pw,
                [&](double t) {
                    return std::pow(t, args.rho - 1.0)
                         * kstruve::eval_k_struve(sp, t, series_tol).value;
                },
                args.x, args.tol);
            fields.push_back({"k", format_g17(args.k), false});
            fields.push_back({"nu", format_g17(args.nu), false});
            fields.push_back({"c", format_g17(args.c), false});
            fields.push_back({"rho", format_g17(args.rho), false});
        } else {
            kstruve::TrigKind kind{kstruve::TrigKind::SIN, args.gamma};
            if (args.family == "cos1m") kind.kind = kstruve::TrigKind::ONE_MINUS_COS;
            else if (args.family == "cosh1m") kind.kind = kstruve::TrigKind::COSH_MINUS_ONE;
            else if (args.family == "sinh") kind.kind = kstruve::TrigKind::SINH;
            r = kstruve::pathway_integral(
                pw,
                [&](double t) {
                    return std::pow(t, args.rho - 1.0)
                         * kstruve::trig_closed_form(kind, args.k, t);
                },
                args.x, args.tol);
            fields.push_back({"gamma", format_g17(args.gamma), false});
            fields.push_back({"k", format_g17(args.k), false});
            fields.push_back({"rho", format_g17(args.rho), false});
        }
        if (args.family == "power") {
            closed = kstruve::pathway_power_closed(pw, args.beta, args.x);
            gap = std::fabs(r.value - closed) / std::max(1.0, std::fabs(closed));
        }
    } catch (const kstruve::error& e) {
        return fail_eval(e);
    }

    fields.push_back({"x", format_g17(args.x), false});
    fields.push_back({"tol", format_g17(args.tol), false});
    fields.push_back({"value", format_g17(r.value), false});
    fields.push_back({"err_estimate", format_g17(r.err_estimate), false});
    fields.push_back({"work", std::to_string(r.work), false});
    if (args.family == "power") {
        fields.push_back({"closed", format_g17(closed), false});
        fields.push_back({"rel_gap", format_g17(gap), false});
    }
    fields.push_back({"wall_time_ms", format_g17(elapsed_ms(t0)), false});
    print_record(fields, format);
    return 0;
}

int cmd_verify(const std::string& case_arg, const std::string& grid_arg, double tol,
               const std::string& format, const std::string& out_path) {
    std::vector<kstruve::CaseId> ids;
    if (case_arg == "all") {
        ids.assign(std::begin(kstruve::all_case_ids), std::end(kstruve::all_case_ids));
    } else {
        kstruve::CaseId id{};
        if (!kstruve::parse_case_name(case_arg, id)) {
            std::cerr << "error: unknown case '" << case_arg << "'\n";
            return 2;
        }
        ids.push_back(id);
    }

    std::vector<kstruve::VerificationReport> reports;
    try {
        for (kstruve::CaseId id : ids) {
            const auto grid = (grid_arg == "dense") ? kstruve::dense_grid(id)
                                                    : kstruve::default_grid(id);
            reports.push_back(kstruve::verify(id, grid, tol));
        }
    } catch (const kstruve::error& e) {
        return fail_eval(e);
    }

    const std::string json = kstruve::reports_to_json(reports);
    if (format == "json")
        std::cout << json;
    else
        std::cout << kstruve::report_table(reports);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << json;
    }
    for (const auto& rep : reports)
        if (rep.status == kstruve::Status::FAIL) return 4;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-Struve / Fox-Wright / pathway-integral calculator and identity verifier"};
    app.require_subcommand(1);

    // eval-struve
    double s_k = 0, s_nu = 0, s_c = 0, s_x = 0, s_tol = 1e-10;
    std::string s_format = "csv";
    auto* es = app.add_subcommand("eval-struve", "Evaluate the k-Struve series");
    es->add_option("--k", s_k, "deformation parameter (> 0)")->required();
    es->add_option("--nu", s_nu, "order (> -(3/2)k)")->required();
    es->add_option("--c", s_c, "series sign/scale parameter")->required();
    es->add_option("--x", s_x, "argument")->required();
    es->add_option("--tol", s_tol, "relative tolerance");
    es->add_option("--format", s_format)->check(CLI::IsMember({"csv", "json"}));

    // eval-wright
    std::string w_spec;
    double w_z = 0, w_tol = 1e-10;
    std::string w_format = "csv";
    auto* ew = app.add_subcommand("eval-wright", "Evaluate a Fox-Wright series");
    ew->add_option("--spec", w_spec,
                   R"(JSON {"upper":[[a,alpha],...],"lower":[[b,beta],...]} (may carry z/tol))")
        ->required();
    auto* wz = ew->add_option("--z", w_z, "argument");
    auto* wt = ew->add_option("--tol", w_tol, "relative tolerance");
    ew->add_option("--format", w_format)->check(CLI::IsMember({"csv", "json"}));

    // pathway
    PathwayArgs pa;
    std::string p_format = "csv";
    auto* pp = app.add_subcommand("pathway", "Apply the pathway integral operator");
    pp->add_option("--family", pa.family, "integrand family")
        ->required()
        ->check(CLI::IsMember({"power", "struve", "cos1m", "cosh1m", "sin", "sinh"}));
    pp->add_option("--eta", pa.eta)->required();
    pp->add_option("--alpha", pa.alpha)->required();
    pp->add_option("--a", pa.a)->required();
    pp->add_option("--x", pa.x)->required();
    pp->add_option("--tol", pa.tol);
    pp->add_option("--beta", pa.beta, "power family exponent offset");
    pp->add_option("--k", pa.k, "deformation parameter (struve/trig families)");
    pp->add_option("--nu", pa.nu, "series order (struve family)");
    pp->add_option("--c", pa.c, "series parameter (struve family)");
    pp->add_option("--gamma", pa.gamma, "trig scale (trig families)");
    pp->add_option("--rho", pa.rho, "power weight t^(rho-1) (struve/trig families)");
    pp->add_option("--format", p_format)->check(CLI::IsMember({"csv", "json"}));

    // verify
    std::string v_case, v_grid = "default", v_format = "table", v_out;
    double v_tol = 1e-6;
    auto* vf = app.add_subcommand("verify", "Verify the closed-form identities");
    vf->add_option("--case", v_case, "th1..th5, cor1..cor5, or all")
        ->required()
        ->check(CLI::IsMember({"th1", "cor1", "th2", "cor2", "th3", "cor3", "th4", "cor4",
                               "th5", "cor5", "all"}));
    vf->add_option("--grid", v_grid)->check(CLI::IsMember({"default", "dense"}));
    vf->add_option("--tol", v_tol, "acceptance tolerance")->check(CLI::PositiveNumber);
    vf->add_option("--format", v_format)->check(CLI::IsMember({"table", "json"}));
    vf->add_option("--out", v_out, "also write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (es->parsed()) return cmd_eval_struve(s_k, s_nu, s_c, s_x, s_tol, s_format);
    if (ew->parsed())
        return cmd_eval_wright(w_spec, w_z, wz->count() > 0, w_tol, wt->count() > 0,
                               w_format);
    if (pp->parsed()) return cmd_pathway(pa, p_format);
    return cmd_verify(v_case, v_grid, v_tol, v_format, v_out);
}

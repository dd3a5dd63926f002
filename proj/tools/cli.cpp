#include "cli.hpp"

#include <CLI11.hpp>

#include <fuzzylt/errors.hpp>
#include <fuzzylt/fde_solver.hpp>
#include <fuzzylt/json_io.hpp>
#include <fuzzylt/oracle.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fuzzylt::cli
{

namespace
{

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string format_roots(const root_set &rs)
{
    std::string s;
    for (const auto &r : rs.roots) {
        if (!s.empty()) {
            s += ' ';
        }
        s += fmt(r.value.real());
        if (r.value.imag() != 0) {
            s += (r.value.imag() > 0 ? "+" : "-") + fmt(std::abs(r.value.imag())) + "i";
        }
        if (r.multiplicity > 1) {
            s += "^" + std::to_string(r.multiplicity);
        }
    }
    return s;
}

std::string derivative_name(int k)
{
    if (k < 4) {
        return "y" + std::string(static_cast<std::size_t>(k), '\'');
    }
    return "y^(" + std::to_string(k) + ")";
}

double resolve_tolerance(double requested)
{
    if (requested >= 0) {
        return requested;
    }
    if (const char *env = std::getenv(tolerance_env)) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) {
            return v;
        }
    }
    return default_tolerance;
}

// Shared error-to-exit-code mapping.
template <typename F>
int guarded(std::ostream &err, F &&body)
{
    try {
        return body();
    } catch (const schema_error &e) {
        err << "input error at " << e.what() << '\n';
        return exit_input_error;
    } catch (const invalid_spec &e) {
        err << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const domain_error &e) {
        err << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const degenerate_problem &e) {
        err << "solver failure: " << e.what() << '\n';
        return exit_numeric_failure;
    } catch (const numeric_failure &e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric_failure;
    } catch (const divergence_error &e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric_failure;
    } catch (const contract_error &e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric_failure;
    }
}

fuzzy_solution solve_case(const problem_file &pf, const case_vector &cs)
{
    try {
        return solve_fivp(pf.problem, cs, pf.grid, {pf.t_end, pf.t_steps, {}});
    } catch (const numeric_failure &e) {
        throw numeric_failure("case " + to_string(cs) + ": " + e.what(), e.residual());
    }
}

} // namespace

int cmd_solve(const std::string &problem_path, const std::string &out_dir, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const auto pf = load_problem(problem_path);
        std::filesystem::create_directories(out_dir);
        std::ostringstream summary;
        summary << "case\tvalidity_T\troots\n";
        for (const auto &cs : pf.cases) {
            const auto sol = solve_case(pf, cs);
            const auto file = std::filesystem::path(out_dir) / ("solution_" + to_string(cs) + ".json");
            std::ofstream os(file);
            if (!os) {
                throw invalid_spec("cannot write " + file.string());
            }
            os << solution_to_json(sol).dump(2) << '\n';
            summary << to_string(cs) << '\t' << (sol.validity_unbounded ? std::string("inf") : fmt(sol.validity_T))
                    << '\t' << format_roots(sol.denominator_roots) << '\n';
        }
        std::ofstream(std::filesystem::path(out_dir) / "summary.tsv") << summary.str();
        out << summary.str();
        return exit_ok;
    });
}

int cmd_verify(const verify_args &args, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const auto pf = load_problem(args.problem_path);
        const double tol = resolve_tolerance(args.tol);
        if (args.steps < 1) {
            throw invalid_spec("--steps must be at least 1");
        }

        std::vector<fuzzy_solution> sols;
        if (!args.solution_path.empty()) {
            std::ifstream in(args.solution_path);
            if (!in) {
                throw schema_error("$", "cannot open solution file '" + args.solution_path + "'");
            }
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::parse_error &e) {
                throw schema_error("$", std::string("malformed solution JSON: ") + e.what());
            }
            sols.push_back(solution_from_json(j));
            if (sols.back().cs.size() != static_cast<std::size_t>(pf.problem.order)) {
                throw schema_error("$.case", "case length does not match the problem order");
            }
        } else {
            const auto cases = args.case_selector.empty() || args.case_selector == "all"
                                   ? pf.cases
                                   : std::vector<case_vector>{parse_case(args.case_selector)};
            for (const auto &cs : cases) {
                sols.push_back(solve_case(pf, cs));
            }
        }

        bool all_ok = true;
        out << "case\tr\terr_lower\terr_upper\tstatus\n";
        for (const auto &sol : sols) {
            for (double r : sol.r) {
                const auto traj = rk4_integrate(build_endpoint_ode(pf.problem, sol.cs, r), pf.t_end, args.steps);
                const auto c = compare_solution(sol, traj, r);
                const bool ok = c.max() <= tol;
                all_ok = all_ok && ok;
                out << to_string(sol.cs) << '\t' << fmt(r) << '\t' << fmt_short(c.lower) << '\t' << fmt_short(c.upper)
                    << '\t' << (ok ? "ok" : "FAIL") << '\n';
            }
        }
        out << (all_ok ? "all errors within " : "errors exceed ") << fmt_short(tol) << '\n';
        return all_ok ? exit_ok : exit_verification_failed;
    });
}

int cmd_cases(int order, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        if (order < 1) {
            throw invalid_spec("--order must be at least 1");
        }
        const auto cases = enumerate_cases(order);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            out << '(' << (i + 1) << ")\t" << to_string(cases[i]) << '\t';
            for (std::size_t k = 0; k < cases[i].size(); ++k) {
                out << (k ? " " : "") << derivative_name(static_cast<int>(k)) << ":("
                    << (cases[i][k] == diff_type::one ? 1 : 2) << ')';
            }
            out << '\n';
        }
        return exit_ok;
    });
}

int cmd_bands(const std::string &problem_path, const std::string &case_selector, int samples, std::ostream &out,
              std::ostream &err)
{
    return guarded(err, [&] {
        const auto pf = load_problem(problem_path);
        if (samples < 2) {
            throw invalid_spec("--samples must be at least 2");
        }
        const auto cs = parse_case(case_selector);
        if (cs.size() != static_cast<std::size_t>(pf.problem.order)) {
            throw invalid_spec("case vector length must equal the problem order");
        }
        const auto sol = solve_case(pf, cs);
        const bool truncated = !sol.validity_unbounded && sol.validity_T < pf.t_end;
        const std::string label = to_string(cs);
        out << "case,r,t,y_lower,y_upper\n";
        for (std::size_t j = 0; j < sol.r.size(); ++j) {
            for (int i = 0; i < samples; ++i) {
                const double t = pf.t_end * static_cast<double>(i) / static_cast<double>(samples - 1);
                if (truncated && t > sol.validity_T + 1e-12) {
                    break;
                }
                const auto v = sol.at(j, t);
                out << label << ',' << fmt(sol.r[j]) << ',' << fmt(t) << ',' << fmt(v.lower) << ',' << fmt(v.upper)
                    << '\n';
            }
        }
        if (truncated) {
            out << "# truncated at validity_T=" << fmt(sol.validity_T) << '\n';
        }
        return exit_ok;
    });
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Closed-form solver for linear fuzzy initial value problems", "fuzzylt"};
    app.require_subcommand(1);

    std::string problem, out_dir, case_sel, solution;
    int steps = 10000, order = 0, samples = 101;
    double tol = -1;

    auto *solve = app.add_subcommand("solve", "Solve every requested case and write solution records");
    solve->add_option("--problem", problem, "Problem file (JSON)")->required();
    solve->add_option("--out", out_dir, "Output directory")->required();

    auto *verify = app.add_subcommand("verify", "Compare closed forms with the RK4 endpoint oracle");
    verify->add_option("--problem", problem, "Problem file (JSON)")->required();
    verify->add_option("--case", case_sel, "Case vector such as 1212, or 'all'");
    verify->add_option("--steps", steps, "RK4 steps on [0, t_end]");
    verify->add_option("--tol", tol, "Maximum accepted endpoint error");
    verify->add_option("--solution", solution, "Verify a saved solution record instead of solving");

    auto *cases = app.add_subcommand("cases", "List the differentiability case vectors");
    cases->add_option("--order", order, "Problem order")->required();

    auto *bands = app.add_subcommand("bands", "Emit r-level bands as CSV");
    bands->add_option("--problem", problem, "Problem file (JSON)")->required();
    bands->add_option("--case", case_sel, "Case vector such as 1111")->required();
    bands->add_option("--samples", samples, "Time samples on [0, t_end]");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return exit_input_error;
    }

    if (solve->parsed()) {
        return cmd_solve(problem, out_dir, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify({problem, case_sel, solution, steps, tol}, out, err);
    }
    if (cases->parsed()) {
        return cmd_cases(order, out, err);
    }
    return cmd_bands(problem, case_sel, samples, out, err);
}

} // namespace fuzzylt::cli

#include <fuzzylt/errors.hpp>
#include <fuzzylt/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace fuzzylt
{

endpoint_ode_system build_endpoint_ode(const fivp_problem &problem, const case_vector &cs, double r)
{
    if (cs.size() != static_cast<std::size_t>(problem.order)
        || problem.coefficients.size() != cs.size() || problem.initial_conditions.size() != cs.size()) {
        throw invalid_spec("build_endpoint_ode: problem and case sizes disagree");
    }
    const auto n = cs.size();
    const auto u = [](std::size_t k) { return k; };
    const auto v = [n](std::size_t k) { return n + k; };

    endpoint_ode_system sys;
    sys.order = problem.order;
    sys.cs = cs;
    sys.r = r;
    auto &ode = sys.ode;
    ode.matrix.assign(2 * n, std::vector<double>(2 * n, 0.0));
    ode.forcing_weight.assign(2 * n, 0.0);
    ode.forcing = problem.forcing;

    // Rows of u_n and v_n in terms of the state, with the sign rule
    // routing negative coefficients to the opposite endpoint.
    std::vector<double> row_un(2 * n, 0.0), row_vn(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = problem.coefficients[i];
        if (a >= 0) {
            row_un[u(i)] += a;
            row_vn[v(i)] += a;
        } else {
            row_un[v(i)] += a;
            row_vn[u(i)] += a;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        // Under type two, u_k' = v_{k+1} and v_k' = u_{k+1}.
        const bool swap = cs[k] == diff_type::two;
        const std::size_t target_u = swap ? v(k + 1) : u(k + 1);
        const std::size_t target_v = swap ? u(k + 1) : v(k + 1);
        auto wire = [&](std::size_t row, std::size_t target) {
            const bool is_top_u = target == u(n);
            const bool is_top_v = target == v(n);
            if (is_top_u || is_top_v) {
                ode.matrix[row] = is_top_u ? row_un : row_vn;
                ode.forcing_weight[row] = 1.0;
            } else {
                ode.matrix[row][target] = 1.0;
            }
        };
        wire(u(k), target_u);
        wire(v(k), target_v);
    }

    const auto ics = evaluate_ics(problem, r);
    ode.initial = ics.lower;
    ode.initial.insert(ode.initial.end(), ics.upper.begin(), ics.upper.end());
    return sys;
}

namespace
{

std::vector<double> rhs(const linear_ode &ode, double t, const std::vector<double> &z)
{
    const double g = ode.forcing.empty() ? 0.0 : ode.forcing(t);
    std::vector<double> out(z.size(), 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        double acc = ode.forcing_weight[i] * g;
        const auto &row = ode.matrix[i];
        for (std::size_t j = 0; j < z.size(); ++j) {
            acc += row[j] * z[j];
        }
        out[i] = acc;
    }
    return out;
}

std::vector<double> axpy(const std::vector<double> &z, double h, const std::vector<double> &k)
{
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = z[i] + h * k[i];
    }
    return out;
}

} // namespace

trajectory rk4_integrate(const linear_ode &ode, double t_end, int steps)
{
    if (steps < 1) {
        throw invalid_spec("rk4_integrate needs at least one step");
    }
    const double h = t_end / steps;
    trajectory traj;
    traj.t.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    auto z = ode.initial;
    traj.t.push_back(0.0);
    traj.states.push_back(z);
    for (int i = 0; i < steps; ++i) {
        const double t = h * i;
        const auto k1 = rhs(ode, t, z);
        const auto k2 = rhs(ode, t + h / 2, axpy(z, h / 2, k1));
        const auto k3 = rhs(ode, t + h / 2, axpy(z, h / 2, k2));
        const auto k4 = rhs(ode, t + h, axpy(z, h, k3));
        for (std::size_t j = 0; j < z.size(); ++j) {
            z[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        }
        const double t_next = h * (i + 1);
        if (!std::all_of(z.begin(), z.end(), [](double x) { return std::isfinite(x); })) {
            std::ostringstream oss;
            oss << "rk4_integrate: state became non-finite at t = " << t_next;
            throw divergence_error(oss.str(), t_next);
        }
        traj.t.push_back(t_next);
        traj.states.push_back(z);
    }
    return traj;
}

trajectory rk4_integrate(const endpoint_ode_system &sys, double t_end, int steps)
{
    return rk4_integrate(sys.ode, t_end, steps);
}

void trajectory::write_csv(std::ostream &os, int order) const
{
    os << "t";
    for (int k = 0; k < order; ++k) {
        os << ",u_" << k;
    }
    for (int k = 0; k < order; ++k) {
        os << ",v_" << k;
    }
    os << '\n';
    char buf[32];
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", t[i]);
        os << buf;
        for (double x : states[i]) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            os << ',' << buf;
        }
        os << '\n';
    }
}

comparison compare_solution(const fuzzy_solution &sol, const trajectory &traj, double r)
{
    const auto it = std::find_if(sol.r.begin(), sol.r.end(), [r](double x) { return std::abs(x - r) <= 1e-12; });
    if (it == sol.r.end()) {
        throw invalid_spec("compare_solution: r is not a level of the solution grid");
    }
    const auto idx = static_cast<std::size_t>(it - sol.r.begin());
    if (traj.states.empty()) {
        return {};
    }
    const std::size_t n = traj.states.front().size() / 2;
    comparison c;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const double t = traj.t[i];
        if (!sol.validity_unbounded && t > sol.validity_T + 1e-12) {
            break;
        }
        const auto v = sol.at(idx, t);
        c.lower = std::max(c.lower, std::abs(v.lower - traj.states[i][0]));
        c.upper = std::max(c.upper, std::abs(v.upper - traj.states[i][n]));
    }
    return c;
}

} // namespace fuzzylt

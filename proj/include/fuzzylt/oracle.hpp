#ifndef FUZZYLT_ORACLE_HPP
#define FUZZYLT_ORACLE_HPP

#include <iosfwd>
#include <vector>

#include <fuzzylt/fde_solver.hpp>
#include <fuzzylt/signal.hpp>

namespace fuzzylt
{

// z' = A z + forcing_weight * g(t)
struct linear_ode {
    std::vector<std::vector<double>> matrix;
    std::vector<double> forcing_weight;
    closed_form_signal forcing;
    std::vector<double> initial;

    std::size_t dimension() const noexcept
    {
        return initial.size();
    }
};

// Crisp endpoint form of one (problem, case, r): state
// (u_0..u_{n-1}, v_0..v_{n-1}) with u_k, v_k the lower/upper endpoints of y^(k).
struct endpoint_ode_system {
    int order = 0;
    case_vector cs;
    double r = 0;
    linear_ode ode;
};

endpoint_ode_system build_endpoint_ode(const fivp_problem &problem, const case_vector &cs, double r);

struct trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> states;

    // Columns t, u_0..u_{n-1}, v_0..v_{n-1}.
    void write_csv(std::ostream &os, int order) const;
};

// Classical fixed-step RK4 storing every state. Throws divergence_error on
// a non-finite state.
trajectory rk4_integrate(const linear_ode &ode, double t_end, int steps);
trajectory rk4_integrate(const endpoint_ode_system &sys, double t_end, int steps);

struct comparison {
    double lower = 0;
    double upper = 0;

    double max() const noexcept
    {
        return lower > upper ? lower : upper;
    }
};

// Max |closed form - trajectory| for y_lower (u_0) and y_upper (v_0) over
// the trajectory samples with t <= the solution's validity window. r must
// be one of the solution's grid levels.
comparison compare_solution(const fuzzy_solution &sol, const trajectory &traj, double r);

} // namespace fuzzylt

#endif

#ifndef FUZZYLT_FDE_SOLVER_HPP
#define FUZZYLT_FDE_SOLVER_HPP

#include <string>
#include <vector>

#include <fuzzylt/fuzzy_number.hpp>
#include <fuzzylt/laplace.hpp>
#include <fuzzylt/polynomial.hpp>
#include <fuzzylt/roots.hpp>
#include <fuzzylt/signal.hpp>

namespace fuzzylt
{

// gH-differentiability type of one derivative step.
enum class diff_type { one, two };

// Entry k is the type of the step from y^(k) to y^(k+1); index 0 is the
// first derivative.
using case_vector = std::vector<diff_type>;

// "1212"-style label.
std::string to_string(const case_vector &cs);
// Accepts digits 1/2 with optional ',' or ' ' separators. Throws invalid_spec.
case_vector parse_case(const std::string &text);

// All 2^n vectors in lexicographic order with one < two.
std::vector<case_vector> enumerate_cases(int n);

// y^(n) = sum_i coefficients[i] * y^(i) + forcing(t), with fuzzy
// y^(k)(0) for k = 0..n-1 and crisp coefficients and forcing.
struct fivp_problem {
    int order = 0;
    std::vector<double> coefficients;
    closed_form_signal forcing;
    std::vector<fuzzy_number> initial_conditions;

    // Throws invalid_spec on inconsistent sizes or invalid initial conditions.
    void validate(const r_grid &grid = r_grid::uniform()) const;
    bool has_crisp_initial_conditions() const;
};

enum class endpoint { lower, upper };

// coeff(p) * (y^(derivative))_side(0)
struct ic_term {
    int derivative;
    endpoint side;
    polynomial coeff;
};

// Initial endpoint values of y, y', ..., y^(n-1) at one r.
struct ic_values {
    std::vector<double> lower;
    std::vector<double> upper;
};

ic_values evaluate_ics(const fivp_problem &problem, double r);

// Transform of one endpoint function, linear in the unknowns L[y_lower],
// L[y_upper] plus initial-value terms:
//   coef_lower * L[y_lower] + coef_upper * L[y_upper] + sum ic_terms.
struct endpoint_expr {
    polynomial coef_lower;
    polynomial coef_upper;
    std::vector<ic_term> ic_terms;

    rational_function known(const ic_values &ics) const;

    endpoint_expr &add_scaled(double s, const endpoint_expr &o);
};

struct endpoint_pair {
    endpoint_expr lower;
    endpoint_expr upper;
};

// Transforms of the lower/upper endpoints of y^(k) under the given case
// (k <= case length).
endpoint_pair derivative_transform(int k, const case_vector &cs);

// a11 X + a12 Y = b1, a21 X + a22 Y = b2 with X = L[y_lower], Y = L[y_upper].
struct endpoint_system {
    polynomial a11, a12, a21, a22;
    rational_function b1, b2;

    polynomial determinant() const;
};

// Symbolic form of the two equations (initial values not yet substituted):
// lhs.lower/upper == transform of forcing.
endpoint_pair assemble_equations(const fivp_problem &problem, const case_vector &cs);
endpoint_system assemble_system(const fivp_problem &problem, const case_vector &cs, double r);

struct fuzzy_solution {
    case_vector cs;
    std::vector<double> r;
    std::vector<closed_form_signal> lower;
    std::vector<closed_form_signal> upper;
    root_set denominator_roots;
    double validity_T = 0;
    // Crisp initial data: lower == upper for all t, so the window is unbounded.
    bool validity_unbounded = false;

    interval at(std::size_t r_index, double t) const;
};

struct solve_options {
    double t_end = 1.0;
    int t_steps = 100;
    root_options roots;
};

// Closed-form solution per grid r. Throws degenerate_problem for an
// identically zero determinant; root-finding failures propagate.
fuzzy_solution solve_fivp(const fivp_problem &problem, const case_vector &cs, const r_grid &grid,
                          const solve_options &opts = {});

// Largest sampled T <= t_end on which every grid level is a valid fuzzy
// interval: lower <= upper + 1e-9, lower nondecreasing and upper
// nonincreasing in r.
double validity_window(const fuzzy_solution &sol, double t_end, int t_steps, double tol = default_validity_tol);

struct derivative_check {
    double max_discrepancy = 0;
    double worst_p = 0;
};

// Compares the quadrature transform of the case-appropriate n-th derivative
// endpoints of f against the transform formula built from L[f] and the
// initial values, over p_samples (n = cs.size()).
derivative_check check_derivative_theorem(const closed_form_signal &f_lower, const closed_form_signal &f_upper,
                                          const case_vector &cs, const std::vector<double> &p_samples,
                                          const flt_options &opts = {});

// Same comparison done exactly on rational functions by cross
// multiplication; returns the largest residual coefficient.
double derivative_identity_residual(const closed_form_signal &f_lower, const closed_form_signal &f_upper,
                                    const case_vector &cs);

} // namespace fuzzylt

#endif

#include <fuzzylt/errors.hpp>
#include <fuzzylt/fde_solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzylt
{

namespace
{

const polynomial p_var{0.0, 1.0};

void check_shape(const fivp_problem &problem)
{
    if (problem.order < 1) {
        throw invalid_spec("problem order must be at least 1");
    }
    const auto n = static_cast<std::size_t>(problem.order);
    if (problem.coefficients.size() != n) {
        std::ostringstream oss;
        oss << "expected " << n << " coefficients, got " << problem.coefficients.size();
        throw invalid_spec(oss.str());
    }
    if (problem.initial_conditions.size() != n) {
        std::ostringstream oss;
        oss << "expected " << n << " initial conditions, got " << problem.initial_conditions.size();
        throw invalid_spec(oss.str());
    }
}

void check_case(const fivp_problem &problem, const case_vector &cs)
{
    if (cs.size() != static_cast<std::size_t>(problem.order)) {
        throw invalid_spec("case vector length " + std::to_string(cs.size()) + " does not match problem order "
                           + std::to_string(problem.order));
    }
}

void merge_ic_term(std::vector<ic_term> &terms, ic_term t)
{
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const ic_term &x) { return x.derivative == t.derivative && x.side == t.side; });
    if (it == terms.end()) {
        terms.push_back(std::move(t));
    } else {
        it->coeff += t.coeff;
    }
}

endpoint_expr times_p(const endpoint_expr &e)
{
    endpoint_expr out{e.coef_lower * p_var, e.coef_upper * p_var, {}};
    for (const auto &t : e.ic_terms) {
        out.ic_terms.push_back({t.derivative, t.side, t.coeff * p_var});
    }
    return out;
}

// Derivative endpoints of f under the case vector, with the initial values
// of each intermediate derivative.
struct derivative_chain {
    closed_form_signal lower;
    closed_form_signal upper;
    ic_values ics;
};

derivative_chain differentiate_by_case(const closed_form_signal &f_lower, const closed_form_signal &f_upper,
                                       const case_vector &cs)
{
    derivative_chain ch{f_lower, f_upper, {}};
    for (auto c : cs) {
        ch.ics.lower.push_back(ch.lower(0.0));
        ch.ics.upper.push_back(ch.upper(0.0));
        auto dl = ch.lower.derivative();
        auto du = ch.upper.derivative();
        if (c == diff_type::one) {
            ch.lower = std::move(dl);
            ch.upper = std::move(du);
        } else {
            ch.lower = std::move(du);
            ch.upper = std::move(dl);
        }
    }
    return ch;
}

rational_function expr_value(const endpoint_expr &e, const rational_function &fl, const rational_function &fu,
                             const ic_values &ics)
{
    return rational_function(e.coef_lower) * fl + rational_function(e.coef_upper) * fu + e.known(ics);
}

} // namespace

std::string to_string(const case_vector &cs)
{
    std::string s;
    for (auto c : cs) {
        s += (c == diff_type::one) ? '1' : '2';
    }
    return s;
}

case_vector parse_case(const std::string &text)
{
    case_vector cs;
    for (char ch : text) {
        if (ch == '1') {
            cs.push_back(diff_type::one);
        } else if (ch == '2') {
            cs.push_back(diff_type::two);
        } else if (ch != ',' && ch != ' ') {
            throw invalid_spec("case vector may contain only 1, 2 and separators: '" + text + "'");
        }
    }
    if (cs.empty()) {
        throw invalid_spec("empty case vector");
    }
    return cs;
}

std::vector<case_vector> enumerate_cases(int n)
{
    if (n < 1 || n > 24) {
        throw invalid_spec("case enumeration needs 1 <= n <= 24");
    }
    std::vector<case_vector> out;
    const unsigned long total = 1UL << n;
    out.reserve(total);
    for (unsigned long i = 0; i < total; ++i) {
        case_vector cs(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            cs[static_cast<std::size_t>(k)] = ((i >> (n - 1 - k)) & 1UL) ? diff_type::two : diff_type::one;
        }
        out.push_back(std::move(cs));
    }
    return out;
}

void fivp_problem::validate(const r_grid &grid) const
{
    check_shape(*this);
    for (std::size_t k = 0; k < initial_conditions.size(); ++k) {
        const auto rep = is_valid(initial_conditions[k], grid);
        if (!rep) {
            throw invalid_spec("initial condition " + std::to_string(k) + " is not a fuzzy number: " + rep.violation);
        }
    }
}

bool fivp_problem::has_crisp_initial_conditions() const
{
    return std::all_of(initial_conditions.begin(), initial_conditions.end(),
                       [](const fuzzy_number &x) { return x.is_crisp(); });
}

ic_values evaluate_ics(const fivp_problem &problem, double r)
{
    ic_values v;
    for (const auto &ic : problem.initial_conditions) {
        const auto [lo, up] = level_set(ic, r);
        v.lower.push_back(lo);
        v.upper.push_back(up);
    }
    return v;
}

rational_function endpoint_expr::known(const ic_values &ics) const
{
    polynomial acc;
    for (const auto &t : ic_terms) {
        const auto &vals = (t.side == endpoint::lower) ? ics.lower : ics.upper;
        acc += t.coeff * vals.at(static_cast<std::size_t>(t.derivative));
    }
    return rational_function(acc);
}

endpoint_expr &endpoint_expr::add_scaled(double s, const endpoint_expr &o)
{
    coef_lower += o.coef_lower * s;
    coef_upper += o.coef_upper * s;
    for (const auto &t : o.ic_terms) {
        merge_ic_term(ic_terms, {t.derivative, t.side, t.coeff * s});
    }
    return *this;
}

endpoint_pair derivative_transform(int k, const case_vector &cs)
{
    if (k < 0 || static_cast<std::size_t>(k) > cs.size()) {
        throw invalid_spec("derivative order out of range for the case vector");
    }
    const auto one = polynomial::constant(1.0);
    endpoint_pair cur{{one, {}, {}}, {{}, one, {}}};
    for (int j = 0; j < k; ++j) {
        const auto minus_one = polynomial::constant(-1.0);
        if (cs[static_cast<std::size_t>(j)] == diff_type::one) {
            // L[(y^(j+1))_L] = p L[(y^(j))_L] - (y^(j))_L(0), likewise upper.
            endpoint_pair next{times_p(cur.lower), times_p(cur.upper)};
            merge_ic_term(next.lower.ic_terms, {j, endpoint::lower, minus_one});
            merge_ic_term(next.upper.ic_terms, {j, endpoint::upper, minus_one});
            cur = std::move(next);
        } else {
            // Endpoints swap: the lower endpoint of y^(j+1) is the derivative
            // of the upper endpoint of y^(j), and vice versa.
            endpoint_pair next{times_p(cur.upper), times_p(cur.lower)};
            merge_ic_term(next.lower.ic_terms, {j, endpoint::upper, minus_one});
            merge_ic_term(next.upper.ic_terms, {j, endpoint::lower, minus_one});
            cur = std::move(next);
        }
    }
    return cur;
}

polynomial endpoint_system::determinant() const
{
    return a11 * a22 - a12 * a21;
}

endpoint_pair assemble_equations(const fivp_problem &problem, const case_vector &cs)
{
    check_shape(problem);
    check_case(problem, cs);
    auto eqs = derivative_transform(problem.order, cs);
    for (int i = 0; i < problem.order; ++i) {
        const double a = problem.coefficients[static_cast<std::size_t>(i)];
        if (a == 0) {
            continue;
        }
        const auto d = derivative_transform(i, cs);
        // Lower endpoint of a*z is a*lower(z) for a >= 0 and a*upper(z) otherwise.
        eqs.lower.add_scaled(-a, a >= 0 ? d.lower : d.upper);
        eqs.upper.add_scaled(-a, a >= 0 ? d.upper : d.lower);
    }
    return eqs;
}

endpoint_system assemble_system(const fivp_problem &problem, const case_vector &cs, double r)
{
    const auto eqs = assemble_equations(problem, cs);
    const auto ics = evaluate_ics(problem, r);
    const auto g = forward_laplace(problem.forcing);
    return {eqs.lower.coef_lower, eqs.lower.coef_upper, eqs.upper.coef_lower, eqs.upper.coef_upper,
            g - eqs.lower.known(ics),  g - eqs.upper.known(ics)};
}

interval fuzzy_solution::at(std::size_t r_index, double t) const
{
    return {lower.at(r_index)(t), upper.at(r_index)(t)};
}

fuzzy_solution solve_fivp(const fivp_problem &problem, const case_vector &cs, const r_grid &grid,
                          const solve_options &opts)
{
    const auto eqs = assemble_equations(problem, cs);
    const auto g = forward_laplace(problem.forcing);

    const auto &a11 = eqs.lower.coef_lower;
    const auto &a12 = eqs.lower.coef_upper;
    const auto &a21 = eqs.upper.coef_lower;
    const auto &a22 = eqs.upper.coef_upper;
    const polynomial det = a11 * a22 - a12 * a21;
    if (det.is_zero()) {
        throw degenerate_problem("endpoint system for case " + to_string(cs) + " has an identically zero determinant");
    }
    // The determinant does not depend on r, so the roots are shared by all levels.
    const polynomial den = det * g.denominator();

    fuzzy_solution sol;
    sol.cs = cs;
    sol.denominator_roots = find_roots(den, opts.roots);
    for (double r : grid.points) {
        const auto ics = evaluate_ics(problem, r);
        // b_i = g - known_i over the forcing denominator.
        const polynomial b1 = g.numerator() - eqs.lower.known(ics).numerator() * g.denominator();
        const polynomial b2 = g.numerator() - eqs.upper.known(ics).numerator() * g.denominator();
        const rational_function x(b1 * a22 - a12 * b2, den);
        const rational_function y(a11 * b2 - a21 * b1, den);
        sol.r.push_back(r);
        sol.lower.push_back(inverse_laplace(x, sol.denominator_roots));
        sol.upper.push_back(inverse_laplace(y, sol.denominator_roots));
    }
    sol.validity_unbounded = problem.has_crisp_initial_conditions();
    sol.validity_T = validity_window(sol, opts.t_end, opts.t_steps);
    return sol;
}

double validity_window(const fuzzy_solution &sol, double t_end, int t_steps, double tol)
{
    if (t_steps < 1) {
        throw invalid_spec("validity_window needs at least one step");
    }
    double last_ok = 0;
    for (int i = 0; i <= t_steps; ++i) {
        const double t = t_end * static_cast<double>(i) / static_cast<double>(t_steps);
        for (std::size_t j = 0; j < sol.r.size(); ++j) {
            const auto v = sol.at(j, t);
            bool ok = std::isfinite(v.lower) && std::isfinite(v.upper) && v.lower <= v.upper + tol;
            if (ok && j > 0) {
                const auto prev = sol.at(j - 1, t);
                ok = v.lower >= prev.lower - tol && v.upper <= prev.upper + tol;
            }
            if (!ok) {
                return last_ok;
            }
        }
        last_ok = t;
    }
    return t_end;
}

derivative_check check_derivative_theorem(const closed_form_signal &f_lower, const closed_form_signal &f_upper,
                                          const case_vector &cs, const std::vector<double> &p_samples,
                                          const flt_options &opts)
{
    const auto ch = differentiate_by_case(f_lower, f_upper, cs);
    const auto expr = derivative_transform(static_cast<int>(cs.size()), cs);
    const auto fl = forward_laplace(f_lower);
    const auto fu = forward_laplace(f_upper);
    const auto formula_lower = expr_value(expr.lower, fl, fu, ch.ics);
    const auto formula_upper = expr_value(expr.upper, fl, fu, ch.ics);

    derivative_check out;
    for (double p : p_samples) {
        const auto q = numeric_flt([&](double t, double) { return ch.lower(t); },
                                   [&](double t, double) { return ch.upper(t); }, p, 0.0, opts);
        const double d = std::max(std::abs(q.lower - formula_lower(p)), std::abs(q.upper - formula_upper(p)));
        if (d >= out.max_discrepancy) {
            out.max_discrepancy = d;
            out.worst_p = p;
        }
    }
    return out;
}

double derivative_identity_residual(const closed_form_signal &f_lower, const closed_form_signal &f_upper,
                                    const case_vector &cs)
{
    const auto ch = differentiate_by_case(f_lower, f_upper, cs);
    const auto expr = derivative_transform(static_cast<int>(cs.size()), cs);
    const auto fl = forward_laplace(f_lower);
    const auto fu = forward_laplace(f_upper);

    auto cross = [](const rational_function &a, const rational_function &b) {
        const polynomial diff = a.numerator() * b.denominator() - b.numerator() * a.denominator();
        return diff.max_abs_coefficient();
    };
    return std::max(cross(forward_laplace(ch.lower), expr_value(expr.lower, fl, fu, ch.ics)),
                    cross(forward_laplace(ch.upper), expr_value(expr.upper, fl, fu, ch.ics)));
}

} // namespace fuzzylt

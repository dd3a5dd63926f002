#ifndef FUZZYLT_LAPLACE_HPP
#define FUZZYLT_LAPLACE_HPP

#include <complex>
#include <functional>
#include <vector>

#include <fuzzylt/fuzzy_number.hpp>
#include <fuzzylt/polynomial.hpp>
#include <fuzzylt/roots.hpp>
#include <fuzzylt/signal.hpp>

namespace fuzzylt
{

// coeff / (p - root)^power
struct partial_fraction_term {
    std::complex<double> root;
    int power;
    std::complex<double> coeff;
};

// Expansion of a strictly proper rational function over the roots of its
// denominator. Throws contract_error for improper input.
std::vector<partial_fraction_term> partial_fractions(const rational_function &f, const root_options &opts = {});
// Same, reusing roots already computed for f's denominator.
std::vector<partial_fraction_term> partial_fractions(const rational_function &f, const root_set &den_roots);

// Sum of the terms over the common denominator prod (p - root)^max_power.
// Imaginary parts of the resulting coefficients are discarded.
rational_function recombine(const std::vector<partial_fraction_term> &terms);

closed_form_signal inverse_laplace(const std::vector<partial_fraction_term> &terms);
closed_form_signal inverse_laplace(const rational_function &f, const root_options &opts = {});
closed_form_signal inverse_laplace(const rational_function &f, const root_set &den_roots);

// Term-wise transform table, summed over the least common denominator of
// terms sharing the same (alpha, beta).
rational_function forward_laplace(const closed_form_signal &s);

// Endpoint function f(t; r).
using endpoint_fn = std::function<double(double t, double r)>;

struct flt_options {
    // Declared growth rate s with |f(t)| <= M exp(s t).
    double exponential_order = 0;
    // Largest tolerated |exp(-pT) f(T)| at the truncation point.
    double tail_tol = 1e-10;
    double rel_tol = 1e-13;
};

// Lower and upper transforms at (p, r) by adaptive Gauss-Kronrod quadrature
// on [0, T], T = max(40 / (p - s), 40). Throws divergence_error when p does
// not exceed the declared order or the integrand has not decayed at T.
interval numeric_flt(const endpoint_fn &lower, const endpoint_fn &upper, double p, double r,
                     const flt_options &opts = {});

enum class absolute_class { absolute1, absolute2, neither };

// Fuzzy-valued function sampled as its level interval at (t, r).
using fuzzy_fn = std::function<interval(double t, double r)>;

// absolute1: lower >= 0 on every sample; absolute2: upper <= 0 on every
// sample. Ties go to absolute1.
absolute_class classify_absolute(const fuzzy_fn &f, const std::vector<double> &t_samples, const r_grid &grid);

} // namespace fuzzylt

#endif

#ifndef FUZZYLT_ROOTS_HPP
#define FUZZYLT_ROOTS_HPP

#include <complex>
#include <vector>

#include <fuzzylt/polynomial.hpp>

namespace fuzzylt
{

struct root {
    std::complex<double> value;
    int multiplicity = 1;
};

// Distinct roots with multiplicities. Complex roots come in conjugate pairs
// whose members are exact mirror images; real roots have a zero imaginary part.
struct root_set {
    std::vector<root> roots;

    int total_multiplicity() const noexcept;
};

struct root_options {
    // Two raw roots merge when they are closer than cluster_tol * (1 + |root|).
    // Numerically split m-fold roots separate by about eps^(1/m), so this has
    // to sit well above 1e-8 for double roots to be recognised.
    double cluster_tol = 1e-6;
    int max_iterations = 2000;
    // Accepted |P(root)| relative to sum |c_i| |root|^i.
    double residual_tol = 1e-8;
};

// All complex roots of a degree >= 1 polynomial via Aberth-Ehrlich
// simultaneous iteration, followed by clustering into multiple roots.
// Exact zero roots are deflated first. Throws contract_error for degree < 1
// and numeric_failure (carrying the unresolved polynomial) when the iteration
// does not converge.
root_set find_roots(const polynomial &poly, const root_options &opts = {});

} // namespace fuzzylt

#endif

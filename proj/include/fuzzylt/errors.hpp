#ifndef FUZZYLT_ERRORS_HPP
#define FUZZYLT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzylt
{

// Bad constructor input, e.g. a triangular triple with l > c.
class invalid_spec : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (r not in [0,1]).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Precondition of an operation violated by the caller (improper rational input).
class contract_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Iterative numerics gave up. Carries the polynomial that could not be
// resolved (ascending coefficients).
class numeric_failure : public std::runtime_error
{
public:
    numeric_failure(const std::string &what, std::vector<double> residual)
        : std::runtime_error(what), m_residual(std::move(residual))
    {
    }

    const std::vector<double> &residual() const noexcept
    {
        return m_residual;
    }

private:
    std::vector<double> m_residual;
};

// Quadrature or time integration blew up.
class divergence_error : public std::runtime_error
{
public:
    divergence_error(const std::string &what, double where)
        : std::runtime_error(what), m_where(where)
    {
    }

    // Transform variable or time at which divergence was detected.
    double where() const noexcept
    {
        return m_where;
    }

private:
    double m_where;
};

// The Laplace-domain endpoint system has an identically zero determinant.
class degenerate_problem : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace fuzzylt

#endif

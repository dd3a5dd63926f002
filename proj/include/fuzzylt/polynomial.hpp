#ifndef FUZZYLT_POLYNOMIAL_HPP
#define FUZZYLT_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace fuzzylt
{

// Real polynomial in the Laplace variable p, ascending coefficients.
// Trailing exact zeros are stripped, so the zero polynomial has no
// coefficients and degree -1.
class polynomial
{
public:
    polynomial() = default;
    explicit polynomial(std::vector<double> coeffs);
    polynomial(std::initializer_list<double> coeffs);

    static polynomial constant(double c);
    // c * p^k
    static polynomial monomial(int k, double c = 1.0);

    int degree() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    const std::vector<double> &coefficients() const noexcept
    {
        return m_coeffs;
    }
    // Zero beyond the degree.
    double operator[](int i) const noexcept;
    double leading() const noexcept;
    double max_abs_coefficient() const noexcept;

    double operator()(double p) const;
    std::complex<double> operator()(std::complex<double> p) const;

    polynomial derivative() const;
    // Drops leading coefficients below rel_tol * max|coefficient|.
    polynomial trimmed(double rel_tol) const;

    polynomial &operator+=(const polynomial &o);
    polynomial &operator-=(const polynomial &o);
    polynomial &operator*=(const polynomial &o);
    polynomial &operator*=(double s);

    friend polynomial operator+(polynomial a, const polynomial &b)
    {
        return a += b;
    }
    friend polynomial operator-(polynomial a, const polynomial &b)
    {
        return a -= b;
    }
    friend polynomial operator*(polynomial a, const polynomial &b)
    {
        return a *= b;
    }
    friend polynomial operator*(polynomial a, double s)
    {
        return a *= s;
    }
    friend polynomial operator*(double s, polynomial a)
    {
        return a *= s;
    }
    friend polynomial operator-(polynomial a)
    {
        return a *= -1.0;
    }
    friend bool operator==(const polynomial &, const polynomial &) = default;

private:
    void strip();

    std::vector<double> m_coeffs;
};

polynomial pow(const polynomial &base, unsigned e);

// Max coefficient difference divided by the larger of the two coefficient
// magnitudes (1 when both are zero polynomials scale-free).
double relative_coefficient_error(const polynomial &a, const polynomial &b);

// num / den with a monic denominator.
class rational_function
{
public:
    rational_function() : m_den(polynomial::constant(1.0)) {}
    // Throws invalid_spec when den is the zero polynomial.
    rational_function(polynomial num, polynomial den);
    // Polynomial with unit denominator.
    rational_function(polynomial num);

    const polynomial &numerator() const noexcept
    {
        return m_num;
    }
    const polynomial &denominator() const noexcept
    {
        return m_den;
    }

    bool is_strictly_proper() const noexcept
    {
        return m_num.degree() < m_den.degree();
    }

    double operator()(double p) const;
    std::complex<double> operator()(std::complex<double> p) const;

    rational_function &operator+=(const rational_function &o);
    rational_function &operator-=(const rational_function &o);
    rational_function &operator*=(const rational_function &o);
    rational_function &operator*=(double s);

    friend rational_function operator+(rational_function a, const rational_function &b)
    {
        return a += b;
    }
    friend rational_function operator-(rational_function a, const rational_function &b)
    {
        return a -= b;
    }
    friend rational_function operator*(rational_function a, const rational_function &b)
    {
        return a *= b;
    }
    friend rational_function operator*(double s, rational_function a)
    {
        return a *= s;
    }

private:
    void normalize();

    polynomial m_num;
    polynomial m_den;
};

// Coefficient-wise comparison after both sides are monic in the denominator.
// Numerators and denominators must have matching degrees up to negligible
// leading terms; the result is the larger of the two relative errors.
double relative_coefficient_error(const rational_function &a, const rational_function &b);

} // namespace fuzzylt

#endif

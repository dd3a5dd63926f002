#include <fuzzylt/errors.hpp>
#include <fuzzylt/polynomial.hpp>

#include <algorithm>
#include <cmath>

namespace fuzzylt
{

polynomial::polynomial(std::vector<double> coeffs) : m_coeffs(std::move(coeffs))
{
    strip();
}

polynomial::polynomial(std::initializer_list<double> coeffs) : m_coeffs(coeffs)
{
    strip();
}

polynomial polynomial::constant(double c)
{
    return polynomial(std::vector<double>{c});
}

polynomial polynomial::monomial(int k, double c)
{
    std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return polynomial(std::move(v));
}

void polynomial::strip()
{
    while (!m_coeffs.empty() && m_coeffs.back() == 0.0) {
        m_coeffs.pop_back();
    }
}

double polynomial::operator[](int i) const noexcept
{
    return (i >= 0 && i < static_cast<int>(m_coeffs.size())) ? m_coeffs[static_cast<std::size_t>(i)] : 0.0;
}

double polynomial::leading() const noexcept
{
    return m_coeffs.empty() ? 0.0 : m_coeffs.back();
}

double polynomial::max_abs_coefficient() const noexcept
{
    double m = 0;
    for (double c : m_coeffs) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

double polynomial::operator()(double p) const
{
    double acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * p + *it;
    }
    return acc;
}

std::complex<double> polynomial::operator()(std::complex<double> p) const
{
    std::complex<double> acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * p + *it;
    }
    return acc;
}

polynomial polynomial::derivative() const
{
    if (m_coeffs.size() <= 1) {
        return {};
    }
    std::vector<double> d(m_coeffs.size() - 1);
    for (std::size_t i = 1; i < m_coeffs.size(); ++i) {
        d[i - 1] = static_cast<double>(i) * m_coeffs[i];
    }
    return polynomial(std::move(d));
}

polynomial polynomial::trimmed(double rel_tol) const
{
    const double cutoff = rel_tol * max_abs_coefficient();
    auto c = m_coeffs;
    while (!c.empty() && std::abs(c.back()) <= cutoff) {
        c.pop_back();
    }
    return polynomial(std::move(c));
}

polynomial &polynomial::operator+=(const polynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size(), 0.0);
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    strip();
    return *this;
}

polynomial &polynomial::operator-=(const polynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size(), 0.0);
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    strip();
    return *this;
}

polynomial &polynomial::operator*=(const polynomial &o)
{
    if (is_zero() || o.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    std::vector<double> out(m_coeffs.size() + o.m_coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        for (std::size_t j = 0; j < o.m_coeffs.size(); ++j) {
            out[i + j] += m_coeffs[i] * o.m_coeffs[j];
        }
    }
    m_coeffs = std::move(out);
    strip();
    return *this;
}

polynomial &polynomial::operator*=(double s)
{
    for (auto &c : m_coeffs) {
        c *= s;
    }
    strip();
    return *this;
}

polynomial pow(const polynomial &base, unsigned e)
{
    polynomial out = polynomial::constant(1.0);
    for (unsigned i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

double relative_coefficient_error(const polynomial &a, const polynomial &b)
{
    const int n = std::max(a.degree(), b.degree());
    const double scale = std::max(a.max_abs_coefficient(), b.max_abs_coefficient());
    double err = 0;
    for (int i = 0; i <= n; ++i) {
        err = std::max(err, std::abs(a[i] - b[i]));
    }
    return scale > 0 ? err / scale : err;
}

rational_function::rational_function(polynomial num, polynomial den) : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw invalid_spec("rational function with zero denominator");
    }
    normalize();
}

rational_function::rational_function(polynomial num) : m_num(std::move(num)), m_den(polynomial::constant(1.0)) {}

void rational_function::normalize()
{
    const double lc = m_den.leading();
    if (lc != 1.0) {
        m_num *= 1.0 / lc;
        m_den *= 1.0 / lc;
    }
}

double rational_function::operator()(double p) const
{
    return m_num(p) / m_den(p);
}

std::complex<double> rational_function::operator()(std::complex<double> p) const
{
    return m_num(p) / m_den(p);
}

rational_function &rational_function::operator+=(const rational_function &o)
{
    if (m_den == o.m_den) {
        m_num += o.m_num;
    } else {
        m_num = m_num * o.m_den + o.m_num * m_den;
        m_den *= o.m_den;
    }
    normalize();
    return *this;
}

rational_function &rational_function::operator-=(const rational_function &o)
{
    if (m_den == o.m_den) {
        m_num -= o.m_num;
    } else {
        m_num = m_num * o.m_den - o.m_num * m_den;
        m_den *= o.m_den;
    }
    normalize();
    return *this;
}

rational_function &rational_function::operator*=(const rational_function &o)
{
    m_num *= o.m_num;
    m_den *= o.m_den;
    normalize();
    return *this;
}

rational_function &rational_function::operator*=(double s)
{
    m_num *= s;
    return *this;
}

double relative_coefficient_error(const rational_function &a, const rational_function &b)
{
    return std::max(relative_coefficient_error(a.numerator(), b.numerator()),
                    relative_coefficient_error(a.denominator(), b.denominator()));
}

} // namespace fuzzylt

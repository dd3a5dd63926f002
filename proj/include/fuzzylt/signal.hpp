#ifndef FUZZYLT_SIGNAL_HPP
#define FUZZYLT_SIGNAL_HPP

#include <vector>

namespace fuzzylt
{

enum class phase { none, cos, sin };

// c * t^m * exp(alpha t) * {1 | cos(beta t) | sin(beta t)}
struct signal_term {
    double c = 0;
    int m = 0;
    double alpha = 0;
    double beta = 0;
    phase ph = phase::none;

    friend bool operator==(const signal_term &, const signal_term &) = default;
};

// Finite sum of exponential-polynomial terms. Terms are normalized on
// construction: zero coefficients are dropped, beta is made nonnegative,
// beta == 0 implies phase::none (sin terms with beta == 0 vanish).
class closed_form_signal
{
public:
    closed_form_signal() = default;
    explicit closed_form_signal(std::vector<signal_term> terms);

    static closed_form_signal constant(double c);
    // c * t^m * exp(alpha t)
    static closed_form_signal power_exp(double c, int m, double alpha);

    const std::vector<signal_term> &terms() const noexcept
    {
        return m_terms;
    }
    bool empty() const noexcept
    {
        return m_terms.empty();
    }

    // Left-to-right summation over the terms.
    double operator()(double t) const;

    closed_form_signal derivative() const;

    closed_form_signal &operator+=(const closed_form_signal &o);
    closed_form_signal &operator*=(double s);

    friend closed_form_signal operator+(closed_form_signal a, const closed_form_signal &b)
    {
        return a += b;
    }
    friend closed_form_signal operator*(double s, closed_form_signal a)
    {
        return a *= s;
    }
    friend bool operator==(const closed_form_signal &, const closed_form_signal &) = default;

private:
    std::vector<signal_term> m_terms;
};

inline double evaluate_signal(const closed_form_signal &s, double t)
{
    return s(t);
}

} // namespace fuzzylt

#endif

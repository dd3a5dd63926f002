#include <fuzzylt/errors.hpp>
#include <fuzzylt/signal.hpp>

#include <cmath>

namespace fuzzylt
{

namespace
{

void push_normalized(std::vector<signal_term> &out, signal_term t)
{
    if (t.m < 0) {
        throw invalid_spec("signal term power must be nonnegative");
    }
    if (t.beta < 0) {
        t.beta = -t.beta;
        if (t.ph == phase::sin) {
            t.c = -t.c;
        }
    }
    if (t.beta == 0) {
        if (t.ph == phase::sin) {
            return;
        }
        t.ph = phase::none;
    } else if (t.ph == phase::none) {
        // A frequency without a phase carries no meaning.
        t.beta = 0;
    }
    if (t.c == 0) {
        return;
    }
    out.push_back(t);
}

} // namespace

closed_form_signal::closed_form_signal(std::vector<signal_term> terms)
{
    m_terms.reserve(terms.size());
    for (const auto &t : terms) {
        push_normalized(m_terms, t);
    }
}

closed_form_signal closed_form_signal::constant(double c)
{
    return closed_form_signal({signal_term{c, 0, 0, 0, phase::none}});
}

closed_form_signal closed_form_signal::power_exp(double c, int m, double alpha)
{
    return closed_form_signal({signal_term{c, m, alpha, 0, phase::none}});
}

double closed_form_signal::operator()(double t) const
{
    double acc = 0;
    for (const auto &term : m_terms) {
        double v = term.c * std::exp(term.alpha * t);
        if (term.m > 0) {
            v *= std::pow(t, term.m);
        }
        switch (term.ph) {
            case phase::cos:
                v *= std::cos(term.beta * t);
                break;
            case phase::sin:
                v *= std::sin(term.beta * t);
                break;
            case phase::none:
                break;
        }
        acc += v;
    }
    return acc;
}

closed_form_signal closed_form_signal::derivative() const
{
    std::vector<signal_term> out;
    for (const auto &t : m_terms) {
        if (t.m > 0) {
            out.push_back({t.c * t.m, t.m - 1, t.alpha, t.beta, t.ph});
        }
        out.push_back({t.c * t.alpha, t.m, t.alpha, t.beta, t.ph});
        // d/dt cos(bt) = -b sin(bt), d/dt sin(bt) = b cos(bt)
        if (t.ph == phase::cos) {
            out.push_back({-t.c * t.beta, t.m, t.alpha, t.beta, phase::sin});
        } else if (t.ph == phase::sin) {
            out.push_back({t.c * t.beta, t.m, t.alpha, t.beta, phase::cos});
        }
    }
    return closed_form_signal(std::move(out));
}

closed_form_signal &closed_form_signal::operator+=(const closed_form_signal &o)
{
    m_terms.insert(m_terms.end(), o.m_terms.begin(), o.m_terms.end());
    return *this;
}

closed_form_signal &closed_form_signal::operator*=(double s)
{
    std::vector<signal_term> scaled;
    for (auto t : m_terms) {
        t.c *= s;
        push_normalized(scaled, t);
    }
    m_terms = std::move(scaled);
    return *this;
}

} // namespace fuzzylt

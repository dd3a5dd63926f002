#include <fuzzylt/errors.hpp>
#include <fuzzylt/laplace.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzylt
{

namespace
{

using cplx = std::complex<double>;
using cpoly = std::vector<cplx>;

double factorial(int n)
{
    double f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

cpoly cmul(const cpoly &a, const cpoly &b)
{
    cpoly out(a.size() + b.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Taylor coefficients of p around z, orders 0..count-1.
std::vector<cplx> taylor_at(const polynomial &p, cplx z, int count)
{
    cpoly c(p.coefficients().begin(), p.coefficients().end());
    std::vector<cplx> out;
    for (int k = 0; k < count; ++k) {
        if (c.empty()) {
            out.push_back(0.0);
            continue;
        }
        // Synthetic division by (x - z): remainder is the current Taylor coefficient.
        cpoly q(c.size() > 1 ? c.size() - 1 : 0);
        cplx acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            acc = acc * z + c[i];
            if (i > 0) {
                q[i - 1] = acc;
            }
        }
        out.push_back(acc);
        c = std::move(q);
    }
    return out;
}

void require_proper(const rational_function &f)
{
    if (!f.is_strictly_proper()) {
        std::ostringstream oss;
        oss << "rational function must be strictly proper (numerator degree " << f.numerator().degree()
            << ", denominator degree " << f.denominator().degree() << ")";
        throw contract_error(oss.str());
    }
}

bool same_key(double a, double b)
{
    return std::abs(a - b) <= 1e-12 * (1 + std::max(std::abs(a), std::abs(b)));
}

} // namespace

std::vector<partial_fraction_term> partial_fractions(const rational_function &f, const root_options &opts)
{
    require_proper(f);
    if (f.numerator().is_zero()) {
        return {};
    }
    return partial_fractions(f, find_roots(f.denominator(), opts));
}

std::vector<partial_fraction_term> partial_fractions(const rational_function &f, const root_set &den_roots)
{
    require_proper(f);
    if (den_roots.total_multiplicity() != f.denominator().degree()) {
        throw contract_error("partial_fractions: root set does not match the denominator degree");
    }
    std::vector<partial_fraction_term> out;
    if (f.numerator().is_zero()) {
        return out;
    }
    for (const auto &rho : den_roots.roots) {
        const int m = rho.multiplicity;
        // Cofactor prod_{sigma != rho} (p - sigma)^m_sigma as a series in h = p - rho.
        std::vector<cplx> q(static_cast<std::size_t>(m), cplx{});
        q[0] = 1.0;
        for (const auto &sigma : den_roots.roots) {
            if (&sigma == &rho) {
                continue;
            }
            const cplx d = rho.value - sigma.value;
            for (int rep = 0; rep < sigma.multiplicity; ++rep) {
                for (std::size_t k = q.size(); k-- > 0;) {
                    q[k] = q[k] * d + (k > 0 ? q[k - 1] : cplx{});
                }
            }
        }
        const auto n = taylor_at(f.numerator(), rho.value, m);
        std::vector<cplx> s(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < s.size(); ++k) {
            cplx acc = n[k];
            for (std::size_t i = 1; i <= k; ++i) {
                acc -= q[i] * s[k - i];
            }
            s[k] = acc / q[0];
        }
        for (int k = 0; k < m; ++k) {
            out.push_back({rho.value, m - k, s[static_cast<std::size_t>(k)]});
        }
    }
    return out;
}

rational_function recombine(const std::vector<partial_fraction_term> &terms)
{
    // Distinct roots and their highest powers.
    std::vector<std::pair<cplx, int>> roots;
    for (const auto &t : terms) {
        auto it = std::find_if(roots.begin(), roots.end(), [&](const auto &r) { return r.first == t.root; });
        if (it == roots.end()) {
            roots.emplace_back(t.root, t.power);
        } else {
            it->second = std::max(it->second, t.power);
        }
    }
    cpoly den{1.0};
    for (const auto &[rho, m] : roots) {
        for (int i = 0; i < m; ++i) {
            den = cmul(den, cpoly{-rho, 1.0});
        }
    }
    cpoly num(den.size(), cplx{});
    for (const auto &t : terms) {
        cpoly part{t.coeff};
        for (const auto &[rho, m] : roots) {
            const int reps = (rho == t.root) ? m - t.power : m;
            for (int i = 0; i < reps; ++i) {
                part = cmul(part, cpoly{-rho, 1.0});
            }
        }
        for (std::size_t i = 0; i < part.size(); ++i) {
            num[i] += part[i];
        }
    }
    std::vector<double> nr, dr;
    for (auto c : num) {
        nr.push_back(c.real());
    }
    for (auto c : den) {
        dr.push_back(c.real());
    }
    return {polynomial(std::move(nr)), polynomial(std::move(dr))};
}

closed_form_signal inverse_laplace(const std::vector<partial_fraction_term> &terms)
{
    std::vector<signal_term> out;
    for (const auto &t : terms) {
        const double scale = 1.0 / factorial(t.power - 1);
        const int m = t.power - 1;
        const double alpha = t.root.real();
        const double beta = t.root.imag();
        if (beta == 0) {
            out.push_back({t.coeff.real() * scale, m, alpha, 0, phase::none});
        } else if (beta > 0) {
            // C e^{rho t} + conj(C) e^{conj(rho) t} = 2 e^{alpha t} (Re C cos(beta t) - Im C sin(beta t))
            out.push_back({2 * t.coeff.real() * scale, m, alpha, beta, phase::cos});
            out.push_back({-2 * t.coeff.imag() * scale, m, alpha, beta, phase::sin});
        }
    }
    return closed_form_signal(std::move(out));
}

closed_form_signal inverse_laplace(const rational_function &f, const root_options &opts)
{
    return inverse_laplace(partial_fractions(f, opts));
}

closed_form_signal inverse_laplace(const rational_function &f, const root_set &den_roots)
{
    return inverse_laplace(partial_fractions(f, den_roots));
}

rational_function forward_laplace(const closed_form_signal &s)
{
    struct group {
        double alpha;
        double beta;
        int max_m = 0;
        std::vector<signal_term> terms;
    };
    std::vector<group> groups;
    for (const auto &t : s.terms()) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const group &g) { return same_key(g.alpha, t.alpha) && same_key(g.beta, t.beta); });
        if (it == groups.end()) {
            groups.push_back({t.alpha, t.beta, t.m, {t}});
        } else {
            it->max_m = std::max(it->max_m, t.m);
            it->terms.push_back(t);
        }
    }

    rational_function total(polynomial{}, polynomial::constant(1.0));
    for (const auto &g : groups) {
        const bool oscillatory = g.beta != 0;
        const polynomial base = oscillatory ? polynomial{g.alpha * g.alpha + g.beta * g.beta, -2 * g.alpha, 1.0}
                                            : polynomial{-g.alpha, 1.0};
        polynomial num;
        for (const auto &t : g.terms) {
            polynomial part;
            if (!oscillatory) {
                part = polynomial::constant(t.c * factorial(t.m));
            } else {
                // 1/(p - rho)^(m+1) = (p - conj rho)^(m+1) / base^(m+1); cos takes the
                // real part, sin the imaginary part.
                cpoly w{1.0};
                for (int i = 0; i <= t.m; ++i) {
                    w = cmul(w, cpoly{cplx(-g.alpha, g.beta), 1.0});
                }
                std::vector<double> c;
                for (auto z : w) {
                    c.push_back(t.ph == phase::cos ? z.real() : z.imag());
                }
                part = polynomial(std::move(c)) * (t.c * factorial(t.m));
            }
            num += part * pow(base, static_cast<unsigned>(g.max_m - t.m));
        }
        total += rational_function(num, pow(base, static_cast<unsigned>(g.max_m + 1)));
    }
    return total;
}

interval numeric_flt(const endpoint_fn &lower, const endpoint_fn &upper, double p, double r, const flt_options &opts)
{
    const double s = opts.exponential_order;
    if (!(p > s)) {
        std::ostringstream oss;
        oss << "numeric_flt: p = " << p << " does not exceed the exponential order " << s
            << "; the transform integral grows without bound";
        throw divergence_error(oss.str(), p);
    }
    const double T = std::max(40.0 / (p - s), 40.0);

    auto transform = [&](const endpoint_fn &f) {
        auto integrand = [&](double t) { return std::exp(-p * t) * f(t, r); };
        const double tail = std::abs(integrand(T));
        if (!(tail <= opts.tail_tol)) {
            std::ostringstream oss;
            oss << "numeric_flt: integrand has not decayed at T = " << T << " (|e^{-pT} f(T)| = " << tail << ")";
            throw divergence_error(oss.str(), p);
        }
        // Geometrically growing panels keep resolution where exp(-pt) is largest.
        double acc = 0;
        double a = 0;
        double b = std::min(1.0 / p, T);
        while (a < T) {
            acc += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, a, b, 15, opts.rel_tol);
            a = b;
            b = std::min(2 * b, T);
        }
        if (!std::isfinite(acc)) {
            throw divergence_error("numeric_flt: non-finite transform value", p);
        }
        return acc;
    };
    return {transform(lower), transform(upper)};
}

absolute_class classify_absolute(const fuzzy_fn &f, const std::vector<double> &t_samples, const r_grid &grid)
{
    bool nonneg_lower = true;
    bool nonpos_upper = true;
    for (double t : t_samples) {
        for (double r : grid.points) {
            const auto v = f(t, r);
            nonneg_lower = nonneg_lower && v.lower >= 0;
            nonpos_upper = nonpos_upper && v.upper <= 0;
        }
    }
    if (nonneg_lower) {
        return absolute_class::absolute1;
    }
    return nonpos_upper ? absolute_class::absolute2 : absolute_class::neither;
}

} // namespace fuzzylt

#include <fuzzylt/errors.hpp>
#include <fuzzylt/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace fuzzylt
{

namespace
{

using cplx = std::complex<double>;

constexpr double eps = std::numeric_limits<double>::epsilon();

// Horner evaluation of p and p' together with the rounding-error bound
// sum |c_i| |z|^i.
struct horner_result {
    cplx value;
    cplx deriv;
    double bound;
};

horner_result horner(const std::vector<double> &c, cplx z)
{
    cplx v = 0, d = 0;
    double b = 0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
        b = b * az + std::abs(*it);
    }
    return {v, d, b};
}

std::vector<cplx> aberth(const std::vector<double> &c, int max_iterations)
{
    const auto n = c.size() - 1;
    std::vector<cplx> z(n);

    // Start on a circle around the centroid of the roots, with a radius
    // bounding the root moduli (Fujiwara-style).
    const cplx center = -c[n - 1] / (static_cast<double>(n) * c[n]);
    double radius = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        radius = std::max(radius, std::pow(std::abs(c[n - k] / c[n]), 1.0 / static_cast<double>(k)));
    }
    radius = std::max(2 * radius, 1e-3);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = center + std::polar(radius, theta);
    }

    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    for (int it = 0; it < max_iterations && remaining > 0; ++it) {
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) {
                continue;
            }
            const auto h = horner(c, z[k]);
            if (std::abs(h.value) <= 4 * eps * h.bound) {
                done[k] = true;
                --remaining;
                continue;
            }
            if (h.deriv == 0.0) {
                z[k] += cplx(radius * 1e-3, radius * 1e-3);
                continue;
            }
            const cplx w = h.value / h.deriv;
            cplx s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    s += 1.0 / (z[k] - z[j]);
                }
            }
            z[k] -= w / (1.0 - w * s);
        }
    }
    if (remaining > 0) {
        // Accept roots that are within a loose multiple of the rounding bound.
        for (std::size_t k = 0; k < n; ++k) {
            const auto h = horner(c, z[k]);
            if (!done[k] && std::abs(h.value) > 1e6 * eps * h.bound) {
                throw numeric_failure("find_roots: Aberth iteration did not converge", c);
            }
        }
    }
    return z;
}

// Newton on the (m-1)th derivative, where an m-fold root is simple.
cplx refine(const polynomial &q, cplx z, int m)
{
    polynomial d = q;
    for (int i = 1; i < m; ++i) {
        d = d.derivative();
    }
    const polynomial dd = d.derivative();
    double prev_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 20; ++it) {
        const cplx f = d(z);
        const cplx fp = dd(z);
        if (fp == 0.0) {
            break;
        }
        const cplx step = f / fp;
        if (!(std::abs(step) < prev_step)) {
            break;
        }
        z -= step;
        prev_step = std::abs(step);
        if (prev_step <= 4 * eps * (1 + std::abs(z))) {
            break;
        }
    }
    return z;
}

cplx centroid_of(const std::vector<cplx> &g)
{
    cplx c = 0;
    for (auto z : g) {
        c += z;
    }
    return c / static_cast<double>(g.size());
}

// Rounding noise eps * sum |c_i| |z|^i perturbs an m-fold root at c by about
// (m! eps B / |q^(m)(c)|)^(1/m).
bool plausible_multiple_root(const polynomial &q, const std::vector<cplx> &g)
{
    const int m = static_cast<int>(g.size());
    const cplx c = refine(q, centroid_of(g), m);
    polynomial d = q;
    double fact = 1;
    for (int i = 1; i <= m; ++i) {
        d = d.derivative();
        fact *= i;
    }
    const double top = std::abs(d(c));
    if (top == 0) {
        return false;
    }
    const double bound = horner(q.coefficients(), c).bound;
    const double radius = std::pow(fact * eps * bound / top, 1.0 / m);
    for (auto z : g) {
        if (std::abs(z - c) > 100 * radius) {
            return false;
        }
    }
    return true;
}

} // namespace

int root_set::total_multiplicity() const noexcept
{
    return std::accumulate(roots.begin(), roots.end(), 0, [](int acc, const root &r) { return acc + r.multiplicity; });
}

root_set find_roots(const polynomial &poly, const root_options &opts)
{
    if (poly.degree() < 1) {
        throw contract_error("find_roots: polynomial degree must be at least 1");
    }

    // Deflate zero roots (negligible trailing low-order coefficients).
    const auto &all = poly.coefficients();
    const double zero_cut = 1e-14 * poly.max_abs_coefficient();
    std::size_t zeros = 0;
    while (std::abs(all[zeros]) <= zero_cut) {
        ++zeros;
    }
    const polynomial q(std::vector<double>(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end()));

    std::vector<cplx> raw;
    if (q.degree() == 1) {
        raw.push_back(-q[0] / q[1]);
    } else if (q.degree() > 1) {
        raw = aberth(q.coefficients(), opts.max_iterations);
    }

    // Union-find clustering.
    const auto n = raw.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            i = parent[i] = parent[parent[i]];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = 1 + std::max(std::abs(raw[i]), std::abs(raw[j]));
            if (std::abs(raw[i] - raw[j]) <= opts.cluster_tol * scale) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<cplx>> groups;
    {
        std::vector<std::vector<cplx>> by_parent(n);
        for (std::size_t i = 0; i < n; ++i) {
            by_parent[find(i)].push_back(raw[i]);
        }
        for (auto &g : by_parent) {
            if (!g.empty()) {
                groups.push_back(std::move(g));
            }
        }
    }

    // Higher multiplicities split further than cluster_tol (about eps^(1/m)),
    // so nearby groups are merged whenever the merged group is consistent
    // with a single m-fold root under rounding noise.
    for (bool merged = true; merged && groups.size() > 1;) {
        merged = false;
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                const double d = std::abs(centroid_of(groups[i]) - centroid_of(groups[j]));
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        const double scale = 1 + std::abs(centroid_of(groups[bi]));
        if (best > 1e-2 * scale) {
            break;
        }
        std::vector<cplx> joint = groups[bi];
        joint.insert(joint.end(), groups[bj].begin(), groups[bj].end());
        if (plausible_multiple_root(q, joint)) {
            groups[bi] = std::move(joint);
            groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
            merged = true;
        }
    }

    std::vector<root> clusters;
    for (const auto &g : groups) {
        const int m = static_cast<int>(g.size());
        clusters.push_back({refine(q, centroid_of(g), m), m});
    }

    // Symmetrize conjugates.
    root_set out;
    std::vector<bool> used(clusters.size(), false);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (used[i]) {
            continue;
        }
        auto &ci = clusters[i];
        const double tol = opts.cluster_tol * (1 + std::abs(ci.value));
        if (std::abs(ci.value.imag()) <= tol) {
            used[i] = true;
            out.roots.push_back({cplx(ci.value.real(), 0.0), ci.multiplicity});
            continue;
        }
        std::size_t best = clusters.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (j == i || used[j] || clusters[j].multiplicity != ci.multiplicity) {
                continue;
            }
            const double d = std::abs(clusters[j].value - std::conj(ci.value));
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == clusters.size() || best_dist > 1e3 * tol) {
            throw numeric_failure("find_roots: complex root without a conjugate partner", q.coefficients());
        }
        used[i] = used[best] = true;
        const double re = 0.5 * (ci.value.real() + clusters[best].value.real());
        const double im = 0.5 * (std::abs(ci.value.imag()) + std::abs(clusters[best].value.imag()));
        out.roots.push_back({cplx(re, im), ci.multiplicity});
        out.roots.push_back({cplx(re, -im), ci.multiplicity});
    }
    if (zeros > 0) {
        out.roots.push_back({cplx(0.0, 0.0), static_cast<int>(zeros)});
    }

    for (const auto &r : out.roots) {
        const auto h = horner(all, r.value);
        if (std::abs(h.value) > opts.residual_tol * std::max(h.bound, 1.0)) {
            throw numeric_failure("find_roots: root residual above tolerance", q.coefficients());
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const root &a, const root &b) {
        if (a.value.real() != b.value.real()) {
            return a.value.real() < b.value.real();
        }
        return a.value.imag() < b.value.imag();
    });
    return out;
}

} // namespace fuzzylt

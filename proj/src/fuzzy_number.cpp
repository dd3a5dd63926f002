#include <fuzzylt/errors.hpp>
#include <fuzzylt/fuzzy_number.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace fuzzylt
{

namespace
{

double interpolate(const std::vector<double> &xs, const std::vector<double> &ys, double x)
{
    if (xs.size() == 1 || x <= xs.front()) {
        return ys.front();
    }
    if (x >= xs.back()) {
        return ys.back();
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

// Nodes of every sampled operand, merged; empty when no operand is sampled.
std::vector<double> merged_nodes(std::initializer_list<const fuzzy_number *> xs)
{
    std::vector<double> nodes;
    for (const auto *x : xs) {
        if (const auto *s = std::get_if<sampled_endpoints>(&x->repr())) {
            nodes.insert(nodes.end(), s->r.begin(), s->r.end());
        }
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

template <typename F>
fuzzy_number sample_binary(const std::vector<double> &nodes, F &&f)
{
    sampled_endpoints s;
    s.r = nodes;
    for (double r : nodes) {
        const auto [lo, up] = f(r);
        s.lower.push_back(lo);
        s.upper.push_back(up);
    }
    return fuzzy_number(std::move(s));
}

std::vector<double> check_points(const fuzzy_number &x, const r_grid &grid)
{
    auto pts = grid.points;
    if (const auto *s = std::get_if<sampled_endpoints>(&x.repr())) {
        pts.insert(pts.end(), s->r.begin(), s->r.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

r_grid r_grid::uniform(std::size_t n)
{
    if (n < 2) {
        throw invalid_spec("r_grid::uniform needs at least two points");
    }
    return range(0.0, 1.0, n - 1);
}

r_grid r_grid::range(double start, double end, std::size_t intervals)
{
    if (!(start >= 0.0 && end <= 1.0 && start <= end)) {
        throw invalid_spec("r-grid must satisfy 0 <= start <= end <= 1");
    }
    r_grid g;
    if (intervals == 0 || start == end) {
        g.points.push_back(start);
        return g;
    }
    g.points.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        // Computed from the index so that 0.1-style steps land on the exact endpoint.
        g.points.push_back(i == intervals ? end
                                          : start + (end - start) * static_cast<double>(i)
                                                        / static_cast<double>(intervals));
    }
    return g;
}

fuzzy_number::fuzzy_number(triangular_spec t) : m_repr(t)
{
    if (!(t.l <= t.c && t.c <= t.u)) {
        std::ostringstream oss;
        oss << "triangular fuzzy number requires l <= c <= u, got (" << t.l << ", " << t.c << ", " << t.u << ")";
        throw invalid_spec(oss.str());
    }
}

fuzzy_number::fuzzy_number(affine_endpoints a) : m_repr(a) {}

fuzzy_number::fuzzy_number(sampled_endpoints s)
{
    if (s.r.empty() || s.r.size() != s.lower.size() || s.r.size() != s.upper.size()) {
        throw invalid_spec("sampled fuzzy number needs matching, non-empty node and endpoint arrays");
    }
    for (std::size_t i = 1; i < s.r.size(); ++i) {
        if (!(s.r[i] > s.r[i - 1])) {
            throw invalid_spec("sampled fuzzy number nodes must be strictly increasing");
        }
    }
    m_repr = std::move(s);
}

fuzzy_number fuzzy_number::crisp(double v)
{
    return fuzzy_number(triangular_spec{v, v, v});
}

double fuzzy_number::lower(double r) const
{
    return std::visit(
        [r](const auto &x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, triangular_spec>) {
                return (1 - r) * x.l + r * x.c;
            } else if constexpr (std::is_same_v<T, affine_endpoints>) {
                return x.a + x.b * r;
            } else {
                return interpolate(x.r, x.lower, r);
            }
        },
        m_repr);
}

double fuzzy_number::upper(double r) const
{
    return std::visit(
        [r](const auto &x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, triangular_spec>) {
                return (1 - r) * x.u + r * x.c;
            } else if constexpr (std::is_same_v<T, affine_endpoints>) {
                return x.g + x.h * r;
            } else {
                return interpolate(x.r, x.upper, r);
            }
        },
        m_repr);
}

fuzzy_kind fuzzy_number::kind() const noexcept
{
    return static_cast<fuzzy_kind>(m_repr.index());
}

std::optional<affine_endpoints> fuzzy_number::as_affine() const
{
    if (const auto *t = std::get_if<triangular_spec>(&m_repr)) {
        return affine_endpoints{t->l, t->c - t->l, t->u, t->c - t->u};
    }
    if (const auto *a = std::get_if<affine_endpoints>(&m_repr)) {
        return *a;
    }
    return std::nullopt;
}

bool fuzzy_number::is_crisp() const
{
    if (const auto a = as_affine()) {
        return a->b == 0 && a->h == 0 && a->a == a->g;
    }
    const auto &s = std::get<sampled_endpoints>(m_repr);
    for (std::size_t i = 0; i < s.r.size(); ++i) {
        if (s.lower[i] != s.lower.front() || s.upper[i] != s.lower.front()) {
            return false;
        }
    }
    return true;
}

fuzzy_number make_triangular(const triangular_spec &spec)
{
    return fuzzy_number(spec);
}

interval level_set(const fuzzy_number &x, double r)
{
    if (!(r >= 0.0 && r <= 1.0)) {
        std::ostringstream oss;
        oss << "level_set: r = " << r << " is outside [0, 1]";
        throw domain_error(oss.str());
    }
    return {x.lower(r), x.upper(r)};
}

fuzzy_number add(const fuzzy_number &x, const fuzzy_number &y)
{
    const auto *tx = std::get_if<triangular_spec>(&x.repr());
    const auto *ty = std::get_if<triangular_spec>(&y.repr());
    if (tx && ty) {
        return fuzzy_number(triangular_spec{tx->l + ty->l, tx->c + ty->c, tx->u + ty->u});
    }
    const auto ax = x.as_affine();
    const auto ay = y.as_affine();
    if (ax && ay) {
        return fuzzy_number(affine_endpoints{ax->a + ay->a, ax->b + ay->b, ax->g + ay->g, ax->h + ay->h});
    }
    return sample_binary(merged_nodes({&x, &y}), [&](double r) {
        return std::pair{x.lower(r) + y.lower(r), x.upper(r) + y.upper(r)};
    });
}

fuzzy_number scalar_mul(double j, const fuzzy_number &x)
{
    return std::visit(
        [j](const auto &v) -> fuzzy_number {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, triangular_spec>) {
                return j >= 0 ? fuzzy_number(triangular_spec{j * v.l, j * v.c, j * v.u})
                              : fuzzy_number(triangular_spec{j * v.u, j * v.c, j * v.l});
            } else if constexpr (std::is_same_v<T, affine_endpoints>) {
                return j >= 0 ? fuzzy_number(affine_endpoints{j * v.a, j * v.b, j * v.g, j * v.h})
                              : fuzzy_number(affine_endpoints{j * v.g, j * v.h, j * v.a, j * v.b});
            } else {
                sampled_endpoints s{v.r, {}, {}};
                for (std::size_t i = 0; i < v.r.size(); ++i) {
                    s.lower.push_back(j * (j >= 0 ? v.lower[i] : v.upper[i]));
                    s.upper.push_back(j * (j >= 0 ? v.upper[i] : v.lower[i]));
                }
                return fuzzy_number(std::move(s));
            }
        },
        x.repr());
}

namespace
{

// First violation of each kind, in scan order.
std::vector<validity_report> violations(const fuzzy_number &x, const r_grid &grid, double tol)
{
    std::vector<validity_report> out;
    bool crossed = false, lower_dec = false, upper_inc = false;
    const auto pts = check_points(x, grid);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double r = pts[i];
        const double lo = x.lower(r);
        const double up = x.upper(r);
        if (!std::isfinite(lo) || !std::isfinite(up)) {
            out.push_back({false, "non-finite endpoint", r});
            return out;
        }
        if (!crossed && lo > up + tol) {
            crossed = true;
            std::ostringstream oss;
            oss << "lower(" << r << ") = " << lo << " exceeds upper = " << up;
            out.push_back({false, oss.str(), r});
        }
        if (i > 0) {
            const double rp = pts[i - 1];
            if (!lower_dec && lo < x.lower(rp) - tol) {
                lower_dec = true;
                std::ostringstream oss;
                oss << "lower endpoint decreases between r = " << rp << " and r = " << r;
                out.push_back({false, oss.str(), r});
            }
            if (!upper_inc && up > x.upper(rp) + tol) {
                upper_inc = true;
                std::ostringstream oss;
                oss << "upper endpoint increases between r = " << rp << " and r = " << r;
                out.push_back({false, oss.str(), r});
            }
        }
    }
    return out;
}

} // namespace

h_difference_result h_difference(const fuzzy_number &x, const fuzzy_number &y, const r_grid &grid, double tol)
{
    const auto ax = x.as_affine();
    const auto ay = y.as_affine();
    std::optional<fuzzy_number> candidate;
    if (ax && ay) {
        candidate.emplace(affine_endpoints{ax->a - ay->a, ax->b - ay->b, ax->g - ay->g, ax->h - ay->h});
    } else {
        candidate.emplace(sample_binary(merged_nodes({&x, &y}), [&](double r) {
            return std::pair{x.lower(r) - y.lower(r), x.upper(r) - y.upper(r)};
        }));
    }
    const auto found = violations(*candidate, grid, tol);
    if (!found.empty()) {
        std::string reason = "H-difference does not exist: ";
        for (std::size_t i = 0; i < found.size(); ++i) {
            reason += (i ? "; " : "") + found[i].violation;
        }
        return {std::nullopt, reason};
    }
    return {std::move(candidate), {}};
}

double hausdorff_distance(const fuzzy_number &x, const fuzzy_number &y, const r_grid &grid)
{
    auto pts = grid.points;
    const auto nodes = merged_nodes({&x, &y});
    pts.insert(pts.end(), nodes.begin(), nodes.end());
    double d = 0;
    for (double r : pts) {
        d = std::max({d, std::abs(x.lower(r) - y.lower(r)), std::abs(x.upper(r) - y.upper(r))});
    }
    return d;
}

validity_report is_valid(const fuzzy_number &x, const r_grid &grid, double tol)
{
    auto v = violations(x, grid, tol);
    return v.empty() ? validity_report{} : v.front();
}

} // namespace fuzzylt

#ifndef FUZZYLT_FUZZY_NUMBER_HPP
#define FUZZYLT_FUZZY_NUMBER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fuzzylt
{

// Tolerance used when checking the monotonicity/ordering conditions of an
// r-parametric pair.
inline constexpr double default_validity_tol = 1e-9;

// Points in [0, 1] on which r-dependent properties are checked.
struct r_grid {
    std::vector<double> points;

    // n equally spaced points from 0 to 1 inclusive (n >= 2).
    static r_grid uniform(std::size_t n = 11);
    static r_grid range(double start, double end, std::size_t intervals);
};

struct interval {
    double lower;
    double upper;
};

// (l, c, u) with l <= c <= u.
struct triangular_spec {
    double l;
    double c;
    double u;
};

// lower(r) = a + b*r, upper(r) = g + h*r.
struct affine_endpoints {
    double a;
    double b;
    double g;
    double h;
};

// Endpoint values at increasing nodes in [0, 1], linearly interpolated.
struct sampled_endpoints {
    std::vector<double> r;
    std::vector<double> lower;
    std::vector<double> upper;
};

enum class fuzzy_kind { triangular, affine, sampled };

// A fuzzy number in parametric form: the pair of r-level endpoint functions.
// Immutable once built.
class fuzzy_number
{
public:
    using repr_type = std::variant<triangular_spec, affine_endpoints, sampled_endpoints>;

    // Throws invalid_spec unless l <= c <= u.
    explicit fuzzy_number(triangular_spec t);
    // Not validated: use is_valid() to check the parametric conditions.
    explicit fuzzy_number(affine_endpoints a);
    // Throws invalid_spec on size mismatch or non-increasing nodes.
    explicit fuzzy_number(sampled_endpoints s);

    static fuzzy_number crisp(double v);

    double lower(double r) const;
    double upper(double r) const;

    fuzzy_kind kind() const noexcept;
    const repr_type &repr() const noexcept
    {
        return m_repr;
    }

    // Affine coefficients for the triangular and affine kinds.
    std::optional<affine_endpoints> as_affine() const;

    // True when lower and upper are the same constant.
    bool is_crisp() const;

private:
    repr_type m_repr;
};

fuzzy_number make_triangular(const triangular_spec &spec);

// Throws domain_error when r is outside [0, 1].
interval level_set(const fuzzy_number &x, double r);

fuzzy_number add(const fuzzy_number &x, const fuzzy_number &y);
fuzzy_number scalar_mul(double j, const fuzzy_number &x);

// Outcome of x (-) y. Nonexistence is an ordinary result.
struct h_difference_result {
    std::optional<fuzzy_number> value;
    std::string reason;

    explicit operator bool() const noexcept
    {
        return value.has_value();
    }
};

h_difference_result h_difference(const fuzzy_number &x, const fuzzy_number &y, const r_grid &grid = r_grid::uniform(),
                                 double tol = default_validity_tol);

// sup over the grid (and any sampled nodes) of the larger endpoint gap.
double hausdorff_distance(const fuzzy_number &x, const fuzzy_number &y, const r_grid &grid = r_grid::uniform());

struct validity_report {
    bool valid = true;
    std::string violation;
    double r = 0;

    explicit operator bool() const noexcept
    {
        return valid;
    }
};

validity_report is_valid(const fuzzy_number &x, const r_grid &grid = r_grid::uniform(),
                         double tol = default_validity_tol);

} // namespace fuzzylt

#endif

#include <doctest.h>

#include <fuzzylt/errors.hpp>
#include <fuzzylt/polynomial.hpp>
#include <fuzzylt/roots.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace fuzzylt;

namespace
{

const double golden = (1 + std::sqrt(5.0)) / 2;
const double golden_conj = (1 - std::sqrt(5.0)) / 2;

bool has_root(const root_set &rs, std::complex<double> z, int mult, double tol = 1e-12)
{
    return std::any_of(rs.roots.begin(), rs.roots.end(),
                       [&](const root &r) { return std::abs(r.value - z) <= tol && r.multiplicity == mult; });
}

polynomial from_roots(const std::vector<std::complex<double>> &zs)
{
    // Real polynomial: zs must be closed under conjugation.
    polynomial p = polynomial::constant(1.0);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (zs[i].imag() == 0) {
            p *= polynomial{-zs[i].real(), 1.0};
        } else if (zs[i].imag() > 0) {
            p *= polynomial{std::norm(zs[i]), -2 * zs[i].real(), 1.0};
        }
    }
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    const polynomial a{1, 2};      // 1 + 2p
    const polynomial b{-1, 0, 1};  // p^2 - 1
    CHECK((a * b) == polynomial{-1, -2, 1, 2});
    CHECK((a + b) == polynomial{0, 2, 1});
    CHECK((b - b).is_zero());
    CHECK((b - b).degree() == -1);
    CHECK(b.derivative() == polynomial{0, 2});
    CHECK(b(3.0) == 8);
    CHECK(pow(a, 2) == polynomial{1, 4, 4});
    CHECK(polynomial{1, 1e-20}.trimmed(1e-14).degree() == 0);
}

TEST_CASE("rational function normalizes to a monic denominator")
{
    const rational_function f(polynomial{2}, polynomial{0, 0, 2});
    CHECK(f.denominator() == polynomial{0, 0, 1});
    CHECK(f.numerator() == polynomial{1});
    CHECK(f.is_strictly_proper());
    CHECK(f(2.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(rational_function(polynomial{1}, polynomial{}), invalid_spec);

    const rational_function g(polynomial{1}, polynomial{-1, 1});
    const auto s = f + g;
    CHECK(s(3.0) == doctest::Approx(1.0 / 9 + 0.5));
    CHECK((f * g)(3.0) == doctest::Approx(1.0 / 9 * 0.5));
}

TEST_CASE("find_roots: quadratic with golden-ratio roots")
{
    const auto rs = find_roots(polynomial{-1, -1, 1});
    CHECK(rs.total_multiplicity() == 2);
    CHECK(has_root(rs, golden, 1));
    CHECK(has_root(rs, golden_conj, 1));
}

TEST_CASE("find_roots: p^4 - p^3 - p^2 has a double zero")
{
    const auto rs = find_roots(polynomial{0, 0, -1, -1, 1});
    CHECK(rs.roots.size() == 3);
    CHECK(rs.total_multiplicity() == 4);
    CHECK(has_root(rs, 0.0, 2));
    CHECK(has_root(rs, golden, 1));
    CHECK(has_root(rs, golden_conj, 1));
}

TEST_CASE("find_roots: conjugate pair")
{
    const auto rs = find_roots(polynomial{1, 0, 1});
    REQUIRE(rs.roots.size() == 2);
    CHECK(has_root(rs, {0, 1}, 1));
    CHECK(has_root(rs, {0, -1}, 1));
    CHECK(rs.roots[0].value == std::conj(rs.roots[1].value));
}

TEST_CASE("find_roots: repeated nonzero roots are clustered")
{
    // (p^2 - p - 1)^2 (p^2 - p + 1)^2
    const polynomial q = pow(polynomial{-1, -1, 1}, 2) * pow(polynomial{1, -1, 1}, 2);
    const auto rs = find_roots(q);
    CHECK(rs.total_multiplicity() == 8);
    CHECK(rs.roots.size() == 4);
    CHECK(has_root(rs, golden, 2, 1e-10));
    CHECK(has_root(rs, {0.5, std::sqrt(3.0) / 2}, 2, 1e-10));
    // Triple root.
    const auto rs3 = find_roots(pow(polynomial{2, 1}, 3));
    REQUIRE(rs3.roots.size() == 1);
    CHECK(rs3.roots[0].multiplicity == 3);
    CHECK(std::abs(rs3.roots[0].value + 2.0) <= 1e-9);
}

TEST_CASE("find_roots: error paths")
{
    CHECK_THROWS_AS(find_roots(polynomial{3}), contract_error);
    CHECK_THROWS_AS(find_roots(polynomial{}), contract_error);
    root_options opts;
    opts.max_iterations = 0;
    try {
        find_roots(polynomial{-1, 0.3, 2, 0.5, 1}, opts);
        FAIL("expected numeric_failure");
    } catch (const numeric_failure &e) {
        CHECK(e.residual().size() == 5);
    }
}

TEST_CASE("find_roots invariants on random polynomials")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_int_distribution<int> deg(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto &x : c) {
            x = u(rng);
        }
        const polynomial p(c);
        const auto rs = find_roots(p);
        REQUIRE(rs.total_multiplicity() == p.degree());
        for (const auto &r : rs.roots) {
            double scale = 0;
            for (int i = 0; i <= p.degree(); ++i) {
                scale += std::abs(p[i]) * std::pow(std::abs(r.value), i);
            }
            REQUIRE(std::abs(p(r.value)) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("find_roots recovers prescribed roots")
{
    const std::vector<std::complex<double>> zs{{-1, 0}, {-0.5, 2}, {-0.5, -2}, {-3, 0}, {0.25, 0}};
    const auto rs = find_roots(from_roots(zs));
    for (const auto &z : zs) {
        CHECK(has_root(rs, z, 1, 1e-11));
    }
}

TEST_CASE("find_roots: close simple roots stay apart, high multiplicities merge")
{
    const auto close = find_roots(polynomial{-1, 1} * polynomial{-1.0001, 1});
    REQUIRE(close.roots.size() == 2);
    CHECK(std::abs(close.roots[0].value - 1.0) <= 1e-9);
    CHECK(std::abs(close.roots[1].value - 1.0001) <= 1e-9);

    const auto quad = find_roots(pow(polynomial{1, 1}, 4) * polynomial{-3, 1});
    REQUIRE(quad.roots.size() == 2);
    CHECK(quad.roots[0].multiplicity == 4);
    CHECK(std::abs(quad.roots[0].value + 1.0) <= 1e-6);
}

#include "frogpr/circles.hpp"

#include <cmath>
#include <limits>

#include "frogpr/error.hpp"

namespace frogpr {

namespace {

constexpr double kSingularSine = 1e-12;
constexpr double kClamp = 1e-12;
constexpr double kSolverCheck = 1e-7;

double clamped_sqrt(double d, double scale)
{
    if (d >= 0)
        return std::sqrt(d);
    if (d >= -kClamp * std::max(scale, 1.0))
        return 0.0;
    throw NoSolution("circle system has a negative discriminant");
}

}  // namespace

cplx solve_three_circles(cplx v1, cplx v2, cplx v3, double n1, double n2, double n3)
{
    const cplx d12 = v1 - v2;
    const cplx d13 = v1 - v3;
    const double l12 = std::abs(d12), l13 = std::abs(d13);
    if (l12 == 0 || l13 == 0 || std::abs(v2 - v3) == 0)
        throw SingularConfiguration("three-circle system: coincident centers");
    const double sine = std::imag(d12 * std::conj(d13)) / (l12 * l13);
    if (std::abs(sine) < kSingularSine)
        throw SingularConfiguration("three-circle system: collinear centers");

    // v1 - v2 = c - i d, v1 - v3 = e - i f
    const double c = d12.real(), d = -d12.imag();
    const double e = d13.real(), f = -d13.imag();
    const double r1 = n1 * n1 - n2 * n2 + std::norm(v2) - std::norm(v1);
    const double r2 = n1 * n1 - n3 * n3 + std::norm(v3) - std::norm(v1);
    // [[c, -d], [e, -f]] (a, b) = (r1, r2) / 2
    const double det = -c * f + d * e;
    const double a = 0.5 * (-f * r1 + d * r2) / det;
    const double b = 0.5 * (-e * r1 + c * r2) / det;
    const cplx z{a, b};

    const double scale = std::max({std::abs(v1) + n1, std::abs(v2) + n2, std::abs(v3) + n3});
    for (auto [v, n] : {std::pair{v1, n1}, std::pair{v2, n2}, std::pair{v3, n3}})
        if (std::abs(std::abs(z + v) - n) > kSolverCheck * scale)
            throw NoSolution("three-circle system: no common point");
    return z;
}

std::pair<cplx, cplx> solve_two_circles_real(double v1, double v2, double m, double n1, double n2)
{
    if (v1 == v2)
        throw SingularConfiguration("two-circle system: coincident centers");
    if (m == 0)
        throw InvalidArgument("two-circle system: m must be nonzero");
    // (a + m v_j)^2 + b^2 = n_j^2
    const double a = (n1 * n1 - n2 * n2) / (2 * m * (v1 - v2)) - m * (v1 + v2) / 2;
    const double t = a + m * v1;
    const double b = clamped_sqrt(n1 * n1 - t * t, n1 * n1 + t * t);
    return {{a, b}, {a, -b}};
}

std::pair<cplx, cplx> solve_two_circles_scaled(double v1, double v2, cplx m, double n1, double n2)
{
    if (v1 == v2)
        throw SingularConfiguration("two-circle system: coincident centers");
    if (m == 0.0)
        throw InvalidArgument("two-circle system: m must be nonzero");
    // With z / m = a + ib: (a + v_j)^2 + b^2 = |n_j / m|^2
    const double q1 = std::norm(n1 / m), q2 = std::norm(n2 / m);
    const double a = (q1 - q2) / (2 * (v1 - v2)) - (v1 + v2) / 2;
    const double t = a + v1;
    const double b = clamped_sqrt(q1 - t * t, q1 + t * t);
    return {m * cplx{a, b}, m * cplx{a, -b}};
}

double circle_residual(cplx p, std::span<const Circle> circles)
{
    double worst = 0;
    for (auto& c : circles) {
        double scale = std::abs(c.center) + c.radius;
        double d = std::abs(std::abs(p - c.center) - c.radius);
        if (d == 0)
            continue;
        worst = std::max(worst, scale > 0 ? d / scale : std::numeric_limits<double>::infinity());
    }
    return worst;
}

std::vector<cplx> circle_pair_points(const Circle& a, const Circle& b)
{
    const cplx dc = b.center - a.center;
    const double d = std::abs(dc);
    if (d == 0)
        return {};
    const cplx u = dc / d;
    // Foot of the chord along the line of centers.
    double x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2 * d);
    double h2 = a.radius * a.radius - x * x;
    if (h2 <= 0) {
        // No crossing: take the point on circle a closest to circle b.
        double s = x >= 0 ? a.radius : -a.radius;
        return {a.center + s * u};
    }
    const double h = std::sqrt(h2);
    const cplx base = a.center + x * u;
    const cplx perp = u * cplx{0, 1};
    return {base + h * perp, base - h * perp};
}

cplx refine_point(cplx p, std::span<const Circle> circles, int max_iter)
{
    auto cost = [&](cplx q) {
        double s = 0;
        for (auto& c : circles) {
            double f = std::abs(q - c.center) - c.radius;
            s += f * f;
        }
        return s;
    };
    double cur = cost(p);
    for (int it = 0; it < max_iter && cur > 0; ++it) {
        // Normal equations of the 2-parameter problem.
        double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
        for (auto& c : circles) {
            cplx dv = p - c.center;
            double dist = std::abs(dv);
            if (dist == 0)
                continue;
            double jx = dv.real() / dist, jy = dv.imag() / dist;
            double f = dist - c.radius;
            a11 += jx * jx;
            a12 += jx * jy;
            a22 += jy * jy;
            g1 += jx * f;
            g2 += jy * f;
        }
        double det = a11 * a22 - a12 * a12;
        if (!(std::abs(det) > 1e-300))
            break;
        cplx step{-(a22 * g1 - a12 * g2) / det, -(a11 * g2 - a12 * g1) / det};
        bool improved = false;
        for (int half = 0; half < 8; ++half) {
            cplx q = p + step;
            double c = cost(q);
            if (c < cur) {
                p = q;
                cur = c;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved || std::abs(step) <= 1e-16 * std::abs(p))
            break;
    }
    return p;
}

cplx nearest_common_point(std::span<const Circle> circles)
{
    std::vector<cplx> cands;
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j)
            for (cplx p : circle_pair_points(circles[i], circles[j]))
                cands.push_back(p);
    if (cands.empty())
        throw SingularConfiguration("all circles are concentric");

    cplx best = cands.front();
    double best_res = std::numeric_limits<double>::infinity();
    for (cplx p : cands) {
        double r = circle_residual(p, circles);
        if (r < best_res) {
            best_res = r;
            best = p;
        }
    }
    return refine_point(best, circles);
}

std::optional<cplx> circles_common_point(std::span<const Circle> circles, double tol)
{
    if (circles.size() < 3)
        throw InvalidArgument("circles_common_point needs at least 3 circles");
    if (tol < 0)
        throw InvalidArgument("circles_common_point: negative tolerance");
    cplx p;
    try {
        p = nearest_common_point(circles);
    } catch (const SingularConfiguration&) {
        return std::nullopt;
    }
    if (circle_residual(p, circles) <= tol)
        return p;
    return std::nullopt;
}

}  // namespace frogpr

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "frogpr/spectral.hpp"

namespace frogpr {

struct Circle {
    cplx center;
    double radius;
};

// |z + v_j| = n_j, j = 1..3. Unique point when the centers -v_j are not
// collinear. Throws SingularConfiguration or NoSolution.
cplx solve_three_circles(cplx v1, cplx v2, cplx v3, double n1, double n2, double n3);

// |z + m v_j| = n_j with real m, v_j. Returns {a + ib, a - ib}, b >= 0.
std::pair<cplx, cplx> solve_two_circles_real(double v1, double v2, double m, double n1, double n2);

// |z + m v_j| = n_j with complex m != 0 and real v_j. Returns m(a + ib) and
// m(a - ib), b >= 0.
std::pair<cplx, cplx> solve_two_circles_scaled(double v1, double v2, cplx m, double n1, double n2);

// Largest | |p - c| - rho | / (|c| + rho) over the circles.
double circle_residual(cplx p, std::span<const Circle> circles);

// Intersection points of two circles. Near misses and near tangencies are
// projected onto the line of centers; concentric pairs give nothing.
std::vector<cplx> circle_pair_points(const Circle& a, const Circle& b);

// Gauss-Newton on sum_j (|p - c_j| - rho_j)^2 starting at p.
cplx refine_point(cplx p, std::span<const Circle> circles, int max_iter = 20);

// Best pairwise intersection, refined against all circles. Throws
// SingularConfiguration when every pair is concentric.
cplx nearest_common_point(std::span<const Circle> circles);

// A point on every circle within tol * (|c| + rho), or nothing.
std::optional<cplx> circles_common_point(std::span<const Circle> circles, double tol);

}  // namespace frogpr

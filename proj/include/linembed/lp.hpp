#pragma once

// Exact two-phase simplex for  maximize c.x  subject to  A x = b, x >= 0.

#include "linembed/rational.hpp"

#include <vector>

namespace linembed {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPProblem
{
    std::vector<std::vector<Rational>> a; // rows x cols
    std::vector<Rational> b;
    std::vector<Rational> c;

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return c.size(); }
};

/// Certificates, all exactly checkable:
///  optimal     x feasible, y with A^T y >= c and b.y = c.x = value;
///  infeasible  y with A^T y >= 0 and b.y < 0 (Farkas);
///  unbounded   x feasible, ray >= 0 with A ray = 0 and c.ray > 0.
struct LPResult
{
    LPStatus status = LPStatus::infeasible;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> y;
    std::vector<Rational> ray;
};

/// Bland's smallest-index rule in both phases, so the pivot sequence is deterministic
/// and terminates. Throws DimensionError on inconsistent shapes.
LPResult lp_solve(const LPProblem& problem);

} // namespace linembed

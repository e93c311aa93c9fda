#include "linembed/lp.hpp"

#include "linembed/geometry.hpp"

namespace linembed {

namespace {

// Dense tableau over [x | artificials]. Artificial columns start as the identity
// and are kept through phase 2, so they always hold B^{-1}.
class Tableau
{
public:
    explicit Tableau(const LPProblem& p) : m_(p.rows()), n_(p.cols()), total_(p.cols() + p.rows())
    {
        sign_.resize(m_);
        t_.assign(m_, std::vector<Rational>(total_));
        rhs_.resize(m_);
        basis_.resize(m_);
        basic_.assign(total_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            sign_[i] = p.b[i] < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] * p.a[i][j];
            t_[i][n_ + i] = 1;
            rhs_[i] = sign_[i] * p.b[i];
            basis_[i] = n_ + i;
            basic_[n_ + i] = true;
        }
    }

    enum class Stop { optimal, unbounded };

    // Maximizes cost over the current basis. Only columns below `enter_limit` may enter.
    Stop run(const std::vector<Rational>& cost, std::size_t enter_limit, std::size_t* unbounded_col)
    {
        for (;;) {
            std::size_t entering = total_;
            for (std::size_t j = 0; j < enter_limit; ++j) {
                if (basic_[j]) continue;
                Rational d = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (t_[i][j] != 0) d -= cost[basis_[i]] * t_[i][j];
                if (d > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == total_) return Stop::optimal;

            std::size_t leaving = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][entering] <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][entering];
                if (leaving == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = std::move(ratio);
                }
            }
            if (leaving == m_) {
                *unbounded_col = entering;
                return Stop::unbounded;
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational inv = 1 / t_[r][c];
        for (Rational& v : t_[r]) v *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j < total_; ++j)
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        basic_[basis_[r]] = false;
        basis_[r] = c;
        basic_[c] = true;
    }

    // Pivots basic artificials out wherever their row still touches an original column.
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!basic_[j] && t_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs_[i];
        return v;
    }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        return x;
    }

    // y = S (c_B^T B^{-1})^T, mapped back through the row sign flips.
    std::vector<Rational> dual(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> y(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            Rational v = 0;
            for (std::size_t i = 0; i < m_; ++i)
                if (t_[i][n_ + k] != 0) v += cost[basis_[i]] * t_[i][n_ + k];
            y[k] = sign_[k] * v;
        }
        return y;
    }

    std::vector<Rational> ray(std::size_t entering) const
    {
        std::vector<Rational> r(n_);
        r[entering] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) r[basis_[i]] = -t_[i][entering];
        return r;
    }

private:
    std::size_t m_, n_, total_;
    std::vector<int> sign_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<bool> basic_;
};

} // namespace

LPResult lp_solve(const LPProblem& problem)
{
    const std::size_t m = problem.rows(), n = problem.cols();
    if (problem.b.size() != m) throw DimensionError("LP: b has " + std::to_string(problem.b.size()) + " entries for " +
                                                    std::to_string(m) + " rows");
    for (const auto& row : problem.a)
        if (row.size() != n) throw DimensionError("LP: constraint row length does not match objective length");

    Tableau tab(problem);
    LPResult result;

    std::vector<Rational> phase1(n + m);
    for (std::size_t k = 0; k < m; ++k) phase1[n + k] = -1;
    std::size_t col = 0;
    tab.run(phase1, n + m, &col);
    if (tab.objective(phase1) < 0) {
        result.status = LPStatus::infeasible;
        result.y = tab.dual(phase1);
        return result;
    }
    tab.drive_out_artificials();

    std::vector<Rational> phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = problem.c[j];
    const auto stop = tab.run(phase2, n, &col);
    result.x = tab.primal();
    result.value = tab.objective(phase2);
    if (stop == Tableau::Stop::unbounded) {
        result.status = LPStatus::unbounded;
        result.ray = tab.ray(col);
    } else {
        result.status = LPStatus::optimal;
        result.y = tab.dual(phase2);
    }
    return result;
}

} // namespace linembed

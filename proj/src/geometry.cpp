#include "linembed/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace linembed {

namespace {

struct Echelon
{
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the rationals, in place.
Echelon reduce(std::vector<std::vector<Rational>> m, std::size_t cols)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(m);
    return e;
}

} // namespace

std::string Point::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << format_rational(coords[i]);
    os << ')';
    return os.str();
}

const Point& EmbeddingMap::at(Vertex v) const
{
    auto it = points.find(v);
    if (it == points.end()) throw std::out_of_range("embedding has no point for vertex " + std::to_string(v));
    return it->second;
}

std::vector<Point> EmbeddingMap::images(const Simplex& s) const
{
    std::vector<Point> out;
    out.reserve(s.size());
    for (Vertex v : s.vertices()) out.push_back(at(v));
    return out;
}

void require_same_dimension(std::span<const Point> points, std::size_t dim)
{
    for (const Point& p : points)
        if (p.dim() != dim)
            throw DimensionError("point of dimension " + std::to_string(p.dim()) + " where " + std::to_string(dim) +
                                 " was expected");
}

int affine_rank(std::span<const Point> points)
{
    if (points.empty()) throw DimensionError("affine rank of an empty point list");
    const std::size_t m = points.front().dim();
    require_same_dimension(points, m);

    // Difference rows scaled to integers by the lcm of their denominators.
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> diff(m);
        Integer scale = 1;
        for (std::size_t j = 0; j < m; ++j) {
            diff[j] = points[i][j] - points[0][j];
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), diff[j].get_den_mpz_t());
        }
        std::vector<Integer> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = diff[j].get_num() * (scale / diff[j].get_den());
        rows.push_back(std::move(row));
    }

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const Integer& pivot = rows[rank][col];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            for (std::size_t j = col + 1; j < m; ++j) {
                Integer t = pivot * rows[i][j] - rows[i][col] * rows[rank][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<Rational>> affine_dependency(std::span<const Point> points)
{
    if (points.empty()) throw DimensionError("affine dependency of an empty point list");
    const std::size_t m = points.front().dim();
    require_same_dimension(points, m);
    const std::size_t k = points.size();

    std::vector<std::vector<Rational>> mat(m + 1, std::vector<Rational>(k));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < m; ++i) mat[i][j] = points[j][i];
        mat[m][j] = 1;
    }
    Echelon e = reduce(std::move(mat), k);
    if (e.pivot_cols.size() == k) return std::nullopt;

    std::size_t free_col = 0;
    for (std::size_t c = 0, p = 0; c < k; ++c) {
        if (p < e.pivot_cols.size() && e.pivot_cols[p] == c) {
            ++p;
        } else {
            free_col = c;
            break;
        }
    }
    std::vector<Rational> coeffs(k);
    coeffs[free_col] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) coeffs[e.pivot_cols[r]] = -e.rows[r][free_col];
    return coeffs;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                                  int* rank)
{
    if (m.size() != rhs.size()) throw DimensionError("right-hand side length does not match row count");
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw DimensionError("ragged matrix");
        m[i].push_back(rhs[i]);
    }
    Echelon e = reduce(std::move(m), cols);
    if (rank) *rank = static_cast<int>(e.pivot_cols.size());
    for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r)
        if (e.rows[r][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.rows[r][cols];
    return x;
}

} // namespace linembed

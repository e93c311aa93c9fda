#include "linembed/tverberg.hpp"

#include "linembed/lp.hpp"

#include <algorithm>

namespace linembed {

std::uint64_t tverberg_bound(int r, int d)
{
    if (r < 1 || d < 1) throw std::invalid_argument("tverberg_bound needs r >= 1 and d >= 1");
    return static_cast<std::uint64_t>(r - 1) * (2 * static_cast<std::uint64_t>(d) + 1) + 1;
}

std::optional<HullIntersection> hulls_common_point(const std::vector<std::vector<Point>>& parts)
{
    if (parts.empty()) throw std::invalid_argument("no parts");
    for (const auto& part : parts)
        if (part.empty()) throw std::invalid_argument("empty part");
    const std::size_t m = parts.front().front().dim();
    for (const auto& part : parts) require_same_dimension(part, m);

    std::vector<std::size_t> offset(parts.size() + 1, 0);
    for (std::size_t j = 0; j < parts.size(); ++j) offset[j + 1] = offset[j] + parts[j].size();
    const std::size_t vars = offset.back();
    const std::size_t r = parts.size();

    // sum_i w_ji = 1 for every part j; sum_i w_0i p_i = sum_i w_ji p_i for j >= 1.
    LPProblem lp;
    lp.c.assign(vars, Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Rational> row(vars);
        for (std::size_t i = offset[j]; i < offset[j + 1]; ++i) row[i] = 1;
        lp.a.push_back(std::move(row));
        lp.b.emplace_back(1);
    }
    for (std::size_t j = 1; j < r; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rational> row(vars);
            for (std::size_t i = 0; i < parts[0].size(); ++i) row[offset[0] + i] = parts[0][i][k];
            for (std::size_t i = 0; i < parts[j].size(); ++i) row[offset[j] + i] = -parts[j][i][k];
            lp.a.push_back(std::move(row));
            lp.b.emplace_back(0);
        }
    }

    const LPResult res = lp_solve(lp);
    if (res.status != LPStatus::optimal) return std::nullopt;

    HullIntersection out;
    out.point = Point(std::vector<Rational>(m));
    for (std::size_t j = 0; j < r; ++j)
        out.weights.emplace_back(res.x.begin() + static_cast<long>(offset[j]),
                                 res.x.begin() + static_cast<long>(offset[j + 1]));
    for (std::size_t i = 0; i < parts[0].size(); ++i)
        for (std::size_t k = 0; k < m; ++k) out.point[k] += out.weights[0][i] * parts[0][i][k];
    return out;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, int r) : n_(n), r_(r), rgs_(n, 0)
{
    if (r < 1 || static_cast<std::size_t>(r) > n) {
        done_ = true;
        return;
    }
    if (r > 1) advance();
}

bool PartitionEnumerator::step()
{
    // Rightmost position that can grow without breaking the growth condition or the block bound.
    int prefix_max = 0;
    std::vector<int> max_before(n_, 0);
    for (std::size_t i = 1; i < n_; ++i) {
        prefix_max = std::max(prefix_max, rgs_[i - 1]);
        max_before[i] = prefix_max;
    }
    for (std::size_t i = n_; i-- > 1;) {
        if (rgs_[i] <= max_before[i] && rgs_[i] < r_ - 1) {
            ++rgs_[i];
            std::fill(rgs_.begin() + static_cast<long>(i) + 1, rgs_.end(), 0);
            return true;
        }
    }
    return false;
}

void PartitionEnumerator::advance()
{
    while (step()) {
        if (*std::max_element(rgs_.begin(), rgs_.end()) == r_ - 1) return;
    }
    done_ = true;
}

namespace {

void check_instance(std::span<const Point> points, int r, const TverbergOptions& opts)
{
    if (points.empty()) throw std::invalid_argument("empty point set");
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (static_cast<std::size_t>(r) > points.size())
        throw std::invalid_argument("r = " + std::to_string(r) + " exceeds the number of points");
    require_same_dimension(points, points.front().dim());
    if (!opts.allow_large && r >= 3 && points.size() > 14)
        throw InstanceTooLarge("refusing " + std::to_string(points.size()) + " points with r >= 3 (limit 14)");
}

std::vector<Part> parts_of(const std::vector<int>& rgs, int r)
{
    std::vector<Part> parts(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < rgs.size(); ++i) parts[static_cast<std::size_t>(rgs[i])].push_back(i);
    return parts;
}

std::optional<TverbergCertificate> try_partition(std::span<const Point> points, const std::vector<int>& rgs, int r)
{
    std::vector<Part> parts = parts_of(rgs, r);
    std::vector<std::vector<Point>> groups;
    groups.reserve(parts.size());
    for (const Part& part : parts) {
        std::vector<Point> g;
        for (std::size_t i : part) g.push_back(points[i]);
        groups.push_back(std::move(g));
    }
    auto hit = hulls_common_point(groups);
    if (!hit) return std::nullopt;
    return TverbergCertificate{std::move(parts), std::move(hit->point), std::move(hit->weights)};
}

} // namespace

std::optional<TverbergCertificate> find_tverberg_partition_serial(std::span<const Point> points, int r,
                                                                  const TverbergOptions& opts)
{
    check_instance(points, r, opts);
    for (PartitionEnumerator it(points.size(), r); !it.done(); it.advance())
        if (auto cert = try_partition(points, it.current(), r)) return cert;
    return std::nullopt;
}

std::optional<TverbergCertificate> find_tverberg_partition(std::span<const Point> points, int r,
                                                           const TverbergOptions& opts)
{
    check_instance(points, r, opts);
    constexpr std::size_t kBatch = 64;
    PartitionEnumerator it(points.size(), r);
    while (!it.done()) {
        std::vector<std::vector<int>> batch;
        for (; !it.done() && batch.size() < kBatch; it.advance()) batch.push_back(it.current());
        std::vector<std::optional<TverbergCertificate>> found(batch.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(batch.size()); ++i)
            found[static_cast<std::size_t>(i)] = try_partition(points, batch[static_cast<std::size_t>(i)], r);
        for (auto& f : found)
            if (f) return std::move(f);
    }
    return std::nullopt;
}

} // namespace linembed

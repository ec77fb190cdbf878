#include "skab/order_bound.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace skab {

std::optional<Int> StepCache::find(Point at, Int a, Int b) const
{
    const Key key{a, b, at};
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end())
        return std::nullopt;
    return it->second;
}

void StepCache::store(Point at, Int a, Int b, Int value)
{
    const Key key{a, b, at};
    Shard& s = shard(key);
    std::lock_guard lock(s.mu);
    s.map.insert_or_assign(key, value);
}

std::size_t StepCache::size() const
{
    std::size_t n = 0;
    for (const Shard& s : shards_) {
        std::lock_guard lock(s.mu);
        n += s.map.size();
    }
    return n;
}

OrderBound::OrderBound(const TwoPointSemigroup& semigroup)
    : semigroup_(semigroup)
{
}

Int OrderBound::horizon(DivisorSpec d) const
{
    return std::max<Int>(0, saturation_degree() - d.degree());
}

Int OrderBound::step_value(Point at, DivisorSpec d) const
{
    if (auto hit = cache_.find(at, d.a, d.b))
        return *hit;
    const Int value =
        semigroup_.increases_dimension(at, d) ? semigroup_.nu(at, d) : kNoConstraint;
    cache_.store(at, d.a, d.b, value);
    return value;
}

Int OrderBound::pinf_continuation(DivisorSpec d) const
{
    Int value = tail_floor();
    for (Int b = d.b; d.a + b < saturation_degree(); ++b)
        value = std::min(value, step_value(Point::Pinf, {d.a, b}));
    return value;
}

Int OrderBound::order_bound(DivisorSpec d, std::optional<Int> horizon_override) const
{
    if (d.a < 0 || d.b < 0)
        throw std::domain_error("order bound needs nonnegative divisor coefficients");
    if (d.degree() == 0)
        throw std::domain_error("order bound needs a nonzero divisor");
    if (d.degree() >= saturation_degree())
        return goppa_dual(d);

    const Int natural = horizon(d);
    Int steps = natural;
    if (horizon_override) {
        if (*horizon_override < 0)
            throw std::domain_error("horizon must be nonnegative");
        steps = std::min(natural, *horizon_override);
    }

    // best[u] holds the value of state (u, t - u) after t free steps.
    std::vector<Int> best(static_cast<std::size_t>(steps) + 1);
    for (Int u = 0; u <= steps; ++u) {
        const DivisorSpec end{d.a + u, d.b + steps - u};
        best[static_cast<std::size_t>(u)] =
            steps == natural ? tail_floor() : pinf_continuation(end);
    }
    for (Int t = steps - 1; t >= 0; --t) {
        for (Int u = 0; u <= t; ++u) {
            const DivisorSpec here{d.a + u, d.b + t - u};
            const Int via_p =
                std::min(step_value(Point::P, here), best[static_cast<std::size_t>(u) + 1]);
            const Int via_pinf =
                std::min(step_value(Point::Pinf, here), best[static_cast<std::size_t>(u)]);
            best[static_cast<std::size_t>(u)] = std::max(via_p, via_pinf);
        }
    }
    return best[0];
}

Int OrderBound::dual_dimension(DivisorSpec d) const
{
    if (d.degree() >= params().code_length)
        throw std::domain_error("dual dimension needs deg G < code length (got degree " +
                                std::to_string(d.degree()) + ")");
    return params().code_length - semigroup_.rr_dim(d);
}

BoundReport OrderBound::report(DivisorSpec d, std::optional<Int> horizon_override) const
{
    BoundReport r;
    r.a = d.a;
    r.b = d.b;
    r.degree = d.degree();
    r.rr_dimension = semigroup_.rr_dim(d);
    r.dual_dimension = dual_dimension(d);
    r.goppa_dual = goppa_dual(d);
    r.order_bound = order_bound(d, horizon_override);
    r.horizon = horizon_override ? std::min(horizon(d), *horizon_override) : horizon(d);
    return r;
}

OnePointBest OrderBound::best_one_point(Int k) const
{
    const Int n = params().code_length;
    const Int target = n - k;
    auto unreachable = [&] {
        return std::domain_error("dimension " + std::to_string(k) +
                                 " not achievable by one-point divisor");
    };
    if (target < 1)
        throw unreachable();

    // dim L(b' P_inf) steps by 0 or 1, so matching b' form one run.
    Int dim = semigroup_.rr_dim({0, 1});
    Int first = -1;
    Int last = -1;
    for (Int bp = 1; bp < n && dim <= target; ++bp) {
        if (dim == target) {
            if (first < 0)
                first = bp;
            last = bp;
        }
        if (semigroup_.increases_dimension(Point::Pinf, {0, bp}))
            ++dim;
    }
    if (first < 0)
        throw unreachable();

    OnePointBest best{first, order_bound({0, first})};
    for (Int bp = first + 1; bp <= last; ++bp) {
        const Int d1 = order_bound({0, bp});
        if (d1 > best.d1)
            best = {bp, d1};
    }
    return best;
}

OrderBoundLattice::OrderBoundLattice(const OrderBound& bound, unsigned jobs)
    : bound_(bound)
    , max_degree_(bound.saturation_degree())
{
    jobs = std::max(1u, jobs);
    const Int top = max_degree_;
    diagonals_.resize(static_cast<std::size_t>(top) + 1);
    diagonals_[static_cast<std::size_t>(top)].assign(static_cast<std::size_t>(top) + 1,
                                                     static_cast<std::int32_t>(bound.tail_floor()));

    for (Int deg = top - 1; deg >= 0; --deg) {
        auto& row = diagonals_[static_cast<std::size_t>(deg)];
        const auto& above = diagonals_[static_cast<std::size_t>(deg) + 1];
        row.resize(static_cast<std::size_t>(deg) + 1);

        auto fill = [&](Int lo, Int hi) {
            for (Int a = lo; a < hi; ++a) {
                const DivisorSpec here{a, deg - a};
                const Int via_p = std::min<Int>(bound_.step_value(Point::P, here),
                                                above[static_cast<std::size_t>(a) + 1]);
                const Int via_pinf = std::min<Int>(bound_.step_value(Point::Pinf, here),
                                                   above[static_cast<std::size_t>(a)]);
                row[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(std::max(via_p, via_pinf));
            }
        };

        const Int cells = deg + 1;
        const Int workers = std::min<Int>(jobs, std::max<Int>(1, cells / 32));
        if (workers <= 1) {
            fill(0, cells);
            continue;
        }
        std::vector<std::jthread> pool;
        const Int chunk = (cells + workers - 1) / workers;
        for (Int w = 0; w < workers; ++w) {
            const Int lo = w * chunk;
            const Int hi = std::min(cells, lo + chunk);
            if (lo < hi)
                pool.emplace_back(fill, lo, hi);
        }
    }
}

Int OrderBoundLattice::at(DivisorSpec d) const
{
    if (d.a < 0 || d.b < 0 || d.degree() == 0)
        throw std::domain_error("lattice lookup needs a, b >= 0 and a + b >= 1");
    if (d.degree() >= max_degree_)
        return bound_.goppa_dual(d);
    return diagonals_[static_cast<std::size_t>(d.degree())][static_cast<std::size_t>(d.a)];
}

} // namespace skab

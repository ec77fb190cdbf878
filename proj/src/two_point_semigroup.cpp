#include "skab/two_point_semigroup.hpp"

#include <stdexcept>

namespace skab {

TwoPointSemigroup::TwoPointSemigroup(const CurveParams& params)
    : table_(params)
    , weierstrass_(weierstrass_semigroup(params))
{
}

Int TwoPointSemigroup::rr_dim(DivisorSpec d) const
{
    if (d.a < 0 || d.b < 0)
        throw std::domain_error("rr_dim needs nonnegative divisor coefficients");
    // tau(i) >= -i > b below -b, so only [-b, a] can contribute.
    Int count = 0;
    for (Int i = -d.b; i <= d.a; ++i)
        if (tau(i) <= d.b)
            ++count;
    return count;
}

template <typename Accept>
Int TwoPointSemigroup::count_pairs(Int target, Int floor, Accept accept) const
{
    // i ranges over H with j = target - i >= -floor, i.e. i <= target + floor.
    const Int top = target + floor;
    Int count = 0;
    for (Int i : weierstrass_.small_elements()) {
        if (i > top)
            return count;
        if (accept(target - i))
            ++count;
    }
    for (Int i = weierstrass_.conductor(); i <= top; ++i)
        if (accept(target - i))
            ++count;
    return count;
}

Int TwoPointSemigroup::nu_P(DivisorSpec d) const
{
    return count_pairs(d.a + 1, d.b, [&](Int j) { return tau(j) <= d.b; });
}

Int TwoPointSemigroup::nu_Pinf(DivisorSpec d) const
{
    return count_pairs(d.b + 1, d.a, [&](Int j) { return tau_inv(j) <= d.a; });
}

std::vector<std::pair<Int, Int>> TwoPointSemigroup::figure_points(Int window_multiple) const
{
    std::vector<std::pair<Int, Int>> out;
    if (window_multiple <= 0)
        return out;
    const Int bound = window_multiple * params().period;
    for (Int i = -bound + 1; i < bound; ++i)
        for (Int j = -bound + 1; j < bound; ++j)
            if (in_semigroup(i, j))
                out.emplace_back(i, j);
    return out;
}

} // namespace skab

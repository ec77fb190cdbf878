#include "skab/tau_map.hpp"

#include <stdexcept>
#include <string>

namespace skab {

Decomposition decompose(const CurveParams& params, Int i)
{
    const Int rho = params.period;
    const Int m = params.m;
    const Int q0 = params.q0;

    Decomposition d;
    d.i = i;
    d.k = floor_div(i - 1, rho);
    d.r = i - d.k * rho - 1;
    d.case_low = d.r < m * (q0 + 1);

    // c = a_t + m (a_x + (q0 + 1) a_y + (2 q0 + 1) a_z), in [0, rho - 1]
    const Int c = (d.k + 1) * rho - i;
    d.a_t = c % m;
    const Int rest = c / m;
    if (d.case_low) {
        d.a_z = q0;
        d.a_y = 0;
        d.a_x = rest - (2 * q0 + 1) * q0;
    } else {
        // a_x + (q0 + 1) a_y covers [0, 2 q0] exactly once
        d.a_z = rest / (2 * q0 + 1);
        const Int xy = rest % (2 * q0 + 1);
        d.a_y = xy > q0 ? 1 : 0;
        d.a_x = xy - (q0 + 1) * d.a_y;
    }
    return d;
}

Int reconstruct(const CurveParams& params, const Decomposition& d)
{
    const Int m = params.m;
    const Int q0 = params.q0;
    return (d.k + 1) * params.period -
           (d.a_t + m * d.a_x + (q0 + 1) * m * d.a_y + (2 * q0 + 1) * m * d.a_z);
}

Int tau(const CurveParams& params, Int i)
{
    const Decomposition d = decompose(params, i);
    const Int q = params.q;
    const Int q0 = params.q0;
    const Int q2 = q * q;
    return d.a_t * q2 + d.a_z * (q2 - q + 2 * q0) + d.a_y * (q2 - q * q0 + q0) +
           d.a_x * (q2 - 2 * q * q0 + q) - (d.k + 1) * params.period;
}

Int tau_inv_naive(const CurveParams& params, Int j, Int lo, Int hi)
{
    for (Int i = lo; i <= hi; ++i)
        if (tau(params, i) == j)
            return i;
    throw std::out_of_range("tau preimage of " + std::to_string(j) + " not found in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Int period_sum(const CurveParams& params, Int c)
{
    Int acc = 0;
    for (Int i = c; i < c + params.period; ++i)
        acc += i + tau(params, i);
    return acc;
}

TauTable::TauTable(const CurveParams& params)
    : params_(params)
    , values_(static_cast<std::size_t>(params.period))
    , inv_anchor_(static_cast<std::size_t>(params.period), -1)
{
    const Int rho = params.period;
    for (Int i = 0; i < rho; ++i) {
        const Int v = skab::tau(params, i);
        values_[static_cast<std::size_t>(i)] = v;
        Int& slot = inv_anchor_[static_cast<std::size_t>(floor_mod(v, rho))];
        if (slot != -1)
            throw std::logic_error("tau is not injective modulo the period");
        slot = i;
    }
}

} // namespace skab

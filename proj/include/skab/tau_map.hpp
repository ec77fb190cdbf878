#pragma once

#include <vector>

#include "skab/curve_params.hpp"

namespace skab {

// Unique representation
//   i = (k + 1) rho - (a_t + m a_x + (q0 + 1) m a_y + (2 q0 + 1) m a_z)
// with k = floor((i - 1) / rho) and r = i - k rho - 1. In the low case
// (r < m (q0 + 1)) a_y = 0 and a_z = q0; otherwise a_y <= 1,
// a_x <= q0 - a_y and a_z <= q0 - 1.
struct Decomposition {
    Int i = 0;
    Int k = 0;
    Int r = 0;
    bool case_low = false;
    Int a_t = 0;
    Int a_x = 0;
    Int a_y = 0;
    Int a_z = 0;

    bool operator==(const Decomposition&) const = default;
};

/// Mathematical floor of num / den for den > 0.
constexpr Int floor_div(Int num, Int den)
{
    Int quot = num / den;
    if ((num % den != 0) && (num < 0))
        --quot;
    return quot;
}

/// Least nonnegative residue of num modulo den > 0.
constexpr Int floor_mod(Int num, Int den)
{
    return num - floor_div(num, den) * den;
}

Decomposition decompose(const CurveParams& params, Int i);

/// Right-hand side of the decomposition identity; equals d.i for every valid d.
Int reconstruct(const CurveParams& params, const Decomposition& d);

/// tau_{P,P_inf}(i): the least j such that some function regular outside
/// {P, P_inf} has pole orders (i, j) there.
Int tau(const CurveParams& params, Int i);

/// Linear scan over [lo, hi] for the preimage of j. Throws std::out_of_range if
/// the window misses it. The window [-j - 1, 2g - j + rho] always suffices.
Int tau_inv_naive(const CurveParams& params, Int j, Int lo, Int hi);

/// Sum of i + tau(i) over one period starting at c; equals period * genus.
Int period_sum(const CurveParams& params, Int c);

// One period of tau cached at construction, with an anchor per residue class of
// tau values mod rho. Everything outside the cached window is answered through
// tau(i + rho) = tau(i) - rho.
class TauTable {
public:
    explicit TauTable(const CurveParams& params);

    const CurveParams& params() const { return params_; }
    Int window_lo() const { return 0; }
    Int window_hi() const { return params_.period - 1; }

    Int tau(Int i) const
    {
        const Int rho = params_.period;
        const Int shift = floor_div(i, rho);
        return values_[static_cast<std::size_t>(i - shift * rho)] - shift * rho;
    }

    /// tau^{-1}(j) = tau_{P_inf,P}(j).
    Int tau_inv(Int j) const
    {
        const Int rho = params_.period;
        const Int i0 = inv_anchor_[static_cast<std::size_t>(floor_mod(j, rho))];
        return i0 + (values_[static_cast<std::size_t>(i0)] - j) / rho * rho;
    }

    /// Anchor i0 in [0, rho - 1] whose tau value is congruent to residue mod rho.
    Int inv_anchor(Int residue) const { return inv_anchor_.at(static_cast<std::size_t>(residue)); }

private:
    CurveParams params_;
    std::vector<Int> values_;
    std::vector<Int> inv_anchor_;
};

} // namespace skab

#pragma once

#include <utility>
#include <vector>

#include "skab/numerical_semigroup.hpp"
#include "skab/tau_map.hpp"

namespace skab {

// G = a P + b P_inf. Pairs (i, j) are always (pole order at P, pole order at P_inf).
struct DivisorSpec {
    Int a = 0;
    Int b = 0;

    Int degree() const { return a + b; }
    bool operator==(const DivisorSpec&) const = default;
};

enum class Point { P, Pinf };

// H(P, P_inf) and the quantities derived from tau: Riemann-Roch dimensions,
// G-non-gaps and the nu counts of the order bound.
class TwoPointSemigroup {
public:
    explicit TwoPointSemigroup(const CurveParams& params);

    const CurveParams& params() const { return table_.params(); }
    const TauTable& tau_table() const { return table_; }
    /// H(P) = H(P_inf).
    const NumericalSemigroup& weierstrass() const { return weierstrass_; }

    Int tau(Int i) const { return table_.tau(i); }
    Int tau_inv(Int j) const { return table_.tau_inv(j); }

    bool in_semigroup(Int i, Int j) const { return tau(i) <= j && tau_inv(j) <= i; }

    /// dim L(aP + bP_inf) for a, b >= 0; throws std::domain_error otherwise.
    Int rr_dim(DivisorSpec d) const;

    /// i in H(P; G) with b the coefficient of P_inf in G.
    bool g_nongap_P(Int b, Int i) const { return tau(i) <= b; }
    /// i in H(P_inf; G) with a the coefficient of P in G.
    bool g_nongap_Pinf(Int a, Int i) const { return tau_inv(i) <= a; }

    Int nu_P(DivisorSpec d) const;
    Int nu_Pinf(DivisorSpec d) const;
    Int nu(Point at, DivisorSpec d) const { return at == Point::P ? nu_P(d) : nu_Pinf(d); }

    /// Whether L(G) != L(G + R) for R = `at`.
    bool increases_dimension(Point at, DivisorSpec d) const
    {
        return at == Point::P ? tau(d.a + 1) <= d.b : tau_inv(d.b + 1) <= d.a;
    }

    /// Every (i, j) in H(P, P_inf) with -w rho < i, j < w rho, lexicographic.
    std::vector<std::pair<Int, Int>> figure_points(Int window_multiple) const;

private:
    // #{(i, j) : i in H, j = target - i, accept(j)} with j >= -floor.
    template <typename Accept>
    Int count_pairs(Int target, Int floor, Accept accept) const;

    TauTable table_;
    NumericalSemigroup weierstrass_;
};

} // namespace skab

#pragma once

#include <array>
#include <cstdint>

namespace skab {

using Int = std::int64_t;

// Numeric invariants of the Skabelund maximal curve over F_{q^4}, q = 2 q0^2,
// q0 = 2^s. Immutable once built by make_params().
struct CurveParams {
    Int s = 0;
    Int q0 = 0;
    Int q = 0;
    Int m = 0;           // q - 2 q0 + 1, degree of the Kummer cover
    Int genus = 0;       // q (q - 1)^2 / 2
    Int period = 0;      // q^2 + 1, period of H(P, P_inf)
    Int num_points = 0;  // F_{q^4}-rational points
    Int code_length = 0; // num_points - 2
    // Generators of the Weierstrass semigroup at P_inf (and at P).
    std::array<Int, 5> semigroup_generators{};

    bool operator==(const CurveParams&) const = default;
};

/// Builds every derived parameter from s. Throws std::domain_error for s < 1
/// and std::range_error when a derived value does not fit in 64 bits.
CurveParams make_params(Int s);

/// 16 q0^10 - 16 q0^8 + 8 q0^6 - 4 q0^4 + q0^2; equals period * genus.
Int period_genus_polynomial(Int q0);

} // namespace skab

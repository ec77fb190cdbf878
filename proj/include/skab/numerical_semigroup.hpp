#pragma once

#include <span>
#include <vector>

#include "skab/curve_params.hpp"

namespace skab {

// A numerical semigroup given by generators with gcd 1. Membership is tabulated
// once over [0, conductor + max generator]; beyond the conductor every integer
// is a member.
class NumericalSemigroup {
public:
    /// Throws std::domain_error on an empty list, a non-positive generator, or
    /// generators whose gcd is not 1.
    static NumericalSemigroup from_generators(std::vector<Int> gens);

    bool contains(Int n) const
    {
        if (n < 0)
            return false;
        if (n >= conductor_)
            return true;
        return member_[static_cast<std::size_t>(n)] != 0;
    }

    /// Members in [0, n], ascending.
    std::vector<Int> elements_up_to(Int n) const;

    /// Members strictly below the conductor, ascending.
    std::span<const Int> small_elements() const { return small_elements_; }

    std::span<const Int> generators() const { return generators_; }
    std::span<const Int> gaps() const { return gaps_; }
    Int conductor() const { return conductor_; }
    Int genus() const { return static_cast<Int>(gaps_.size()); }
    Int multiplicity() const { return generators_.front(); }
    /// Upper end (inclusive) of the tabulated range.
    Int table_limit() const { return static_cast<Int>(member_.size()) - 1; }

private:
    NumericalSemigroup() = default;

    std::vector<Int> generators_;
    std::vector<char> member_;
    std::vector<Int> gaps_;
    std::vector<Int> small_elements_;
    Int conductor_ = 0;
};

/// The Weierstrass semigroup H(P_inf) = H(P) of the curve.
NumericalSemigroup weierstrass_semigroup(const CurveParams& params);

} // namespace skab

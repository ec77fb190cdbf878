#include "skab/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skab {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens)
{
    if (gens.empty())
        throw std::domain_error("numerical semigroup needs at least one generator");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() <= 0)
        throw std::domain_error("semigroup generators must be positive");
    Int g = 0;
    for (Int x : gens)
        g = std::gcd(g, x);
    if (g != 1)
        throw std::domain_error("not a numerical semigroup: generators have gcd " + std::to_string(g));

    NumericalSemigroup out;
    out.generators_ = std::move(gens);
    const Int smallest = out.generators_.front();
    const Int largest = out.generators_.back();

    // Additive closure, grown until `smallest` consecutive members are seen;
    // the first member of that run is the conductor.
    std::vector<char>& member = out.member_;
    member.push_back(1);
    Int run = 1;
    Int n = 0;
    while (run < smallest) {
        ++n;
        char in = 0;
        for (Int g_ : out.generators_) {
            if (g_ > n)
                break;
            if (member[static_cast<std::size_t>(n - g_)]) {
                in = 1;
                break;
            }
        }
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    out.conductor_ = n - run + 1;
    if (smallest == 1)
        out.conductor_ = 0;

    const Int limit = out.conductor_ + largest;
    member.resize(static_cast<std::size_t>(std::max<Int>(limit, n) + 1), 1);

    for (Int i = 0; i < out.conductor_; ++i) {
        if (member[static_cast<std::size_t>(i)])
            out.small_elements_.push_back(i);
        else
            out.gaps_.push_back(i);
    }
    return out;
}

std::vector<Int> NumericalSemigroup::elements_up_to(Int n) const
{
    std::vector<Int> out;
    for (Int x : small_elements_) {
        if (x > n)
            return out;
        out.push_back(x);
    }
    for (Int x = conductor_; x <= n; ++x)
        out.push_back(x);
    return out;
}

NumericalSemigroup weierstrass_semigroup(const CurveParams& params)
{
    return NumericalSemigroup::from_generators(
        {params.semigroup_generators.begin(), params.semigroup_generators.end()});
}

} // namespace skab

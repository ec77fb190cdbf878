#include "skab/curve_params.hpp"

#include <stdexcept>
#include <string>

namespace skab {

namespace {

Int checked_mul(Int x, Int y)
{
    Int out = 0;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::range_error("curve parameter overflows 64-bit integers");
    return out;
}

Int checked_add(Int x, Int y)
{
    Int out = 0;
    if (__builtin_add_overflow(x, y, &out))
        throw std::range_error("curve parameter overflows 64-bit integers");
    return out;
}

Int checked_pow(Int base, int exp)
{
    Int out = 1;
    for (int e = 0; e < exp; ++e)
        out = checked_mul(out, base);
    return out;
}

} // namespace

Int period_genus_polynomial(Int q0)
{
    const Int q0_2 = checked_mul(q0, q0);
    const Int q0_4 = checked_mul(q0_2, q0_2);
    const Int q0_6 = checked_mul(q0_4, q0_2);
    const Int q0_8 = checked_mul(q0_6, q0_2);
    const Int q0_10 = checked_mul(q0_8, q0_2);
    Int acc = checked_mul(16, q0_10);
    acc = checked_add(acc, -checked_mul(16, q0_8));
    acc = checked_add(acc, checked_mul(8, q0_6));
    acc = checked_add(acc, -checked_mul(4, q0_4));
    return checked_add(acc, q0_2);
}

CurveParams make_params(Int s)
{
    if (s < 1)
        throw std::domain_error("s must be >= 1");
    if (s > 7)
        throw std::range_error("s = " + std::to_string(s) + " overflows 64-bit curve parameters");

    CurveParams p;
    p.s = s;
    p.q0 = Int{1} << s;
    p.q = checked_mul(2, checked_mul(p.q0, p.q0));
    p.m = p.q - 2 * p.q0 + 1;

    const Int q = p.q;
    const Int q2 = checked_mul(q, q);
    p.genus = checked_mul(q, checked_mul(q - 1, q - 1)) / 2;
    p.period = checked_add(q2, 1);

    // q^5 - q^4 + q^3 + 1 = q^3 (q^2 - q + 1) + 1
    p.num_points = checked_add(checked_mul(checked_pow(q, 3), q2 - q + 1), 1);
    p.code_length = p.num_points - 2;

    const Int qq0 = checked_mul(q, p.q0);
    p.semigroup_generators = {q2 - 2 * qq0 + q, q2 - qq0 + p.q0, q2 - q + 2 * p.q0, q2, q2 + 1};
    return p;
}

} // namespace skab

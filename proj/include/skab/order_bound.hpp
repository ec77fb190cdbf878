#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skab/two_point_semigroup.hpp"

namespace skab {

struct BoundReport {
    Int a = 0;
    Int b = 0;
    Int degree = 0;
    Int rr_dimension = 0;
    Int dual_dimension = 0; // k = code_length - dim L(G)
    Int goppa_dual = 0;     // deg G - 2g + 2
    Int order_bound = 0;
    Int horizon = 0;        // max(0, 4g - 1 - deg G)
};

struct OnePointBest {
    Int b_prime = 0;
    Int d1 = 0;
};

// Memo of per-step order-bound values keyed by (point, a, b). Concurrent fills
// are allowed: a key always maps to the same value, so the last writer wins
// harmlessly.
class StepCache {
public:
    std::optional<Int> find(Point at, Int a, Int b) const;
    void store(Point at, Int a, Int b, Int value);
    std::size_t size() const;

private:
    struct Key {
        Int a;
        Int b;
        Point at;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            std::uint64_t h = static_cast<std::uint64_t>(k.a) * 0x9E3779B97F4A7C15ULL;
            h ^= static_cast<std::uint64_t>(k.b) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(k.at));
        }
    };
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<Key, Int, KeyHash> map;
    };
    Shard& shard(const Key& k) const { return shards_[KeyHash{}(k) % kShards]; }

    mutable std::array<Shard, kShards> shards_;
};

// Generalized order bound for G = aP + bP_inf, maximized over point sequences
// in {P, P_inf}. Only the first 4g - 1 - deg G steps are free; past that every
// dimension-increasing step has nu = deg + 2 - 2g >= 2g + 1, which is applied as
// a floor to every sequence.
class OrderBound {
public:
    // Marks a step that leaves L(G) unchanged; it never lowers a minimum.
    static constexpr Int kNoConstraint = std::numeric_limits<Int>::max();

    explicit OrderBound(const TwoPointSemigroup& semigroup);

    const TwoPointSemigroup& semigroup() const { return semigroup_; }
    const CurveParams& params() const { return semigroup_.params(); }

    /// 4g - 1: the degree at which the bound meets the Goppa bound.
    Int saturation_degree() const { return 4 * params().genus - 1; }
    Int tail_floor() const { return saturation_degree() - 2 * params().genus + 2; }
    Int horizon(DivisorSpec d) const;

    /// nu(at; G) when adding `at` to G increases dim L(G), else kNoConstraint.
    Int step_value(Point at, DivisorSpec d) const;

    /// Maximin over sequences. With `horizon` below the natural one only that
    /// many leading steps are free and the rest of the sequence is P_inf, which
    /// keeps the result a valid lower bound. Larger values are clamped.
    /// Throws std::domain_error for negative coefficients or a zero divisor.
    Int order_bound(DivisorSpec d, std::optional<Int> horizon = std::nullopt) const;

    Int goppa_dual(DivisorSpec d) const { return d.degree() - 2 * params().genus + 2; }

    /// code_length - dim L(G); requires deg G < code_length.
    Int dual_dimension(DivisorSpec d) const;

    BoundReport report(DivisorSpec d, std::optional<Int> horizon = std::nullopt) const;

    /// Best one-point code C_L(D, b' P_inf)^perp of dual dimension k: largest d1,
    /// then smallest b'. Throws std::domain_error if no b' >= 1 reaches k.
    OnePointBest best_one_point(Int k) const;

    const StepCache& cache() const { return cache_; }

private:
    // Value of the sequence that continues with P_inf only from d up to the
    // saturation degree, floored by tail_floor().
    Int pinf_continuation(DivisorSpec d) const;

    const TwoPointSemigroup& semigroup_;
    mutable StepCache cache_;
};

// The maximin recursion solved once over the whole triangle a, b >= 0,
// a + b <= 4g - 1. Because every sequence ends at the same saturation degree,
// the value at a lattice point does not depend on where the sequence started,
// so cell (a, b) is exactly order_bound({a, b}). Anti-diagonals (degree classes)
// are filled from the top down, each split across `jobs` workers.
class OrderBoundLattice {
public:
    OrderBoundLattice(const OrderBound& bound, unsigned jobs);

    /// order_bound for a, b >= 0 and 1 <= a + b; closed form past 4g - 1.
    Int at(DivisorSpec d) const;
    Int max_degree() const { return max_degree_; }

private:
    const OrderBound& bound_;
    Int max_degree_ = 0;
    std::vector<std::vector<std::int32_t>> diagonals_; // [degree][a]
};

} // namespace skab

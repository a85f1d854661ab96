#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobgram/integer.hpp"

namespace frobgram {

struct FeasibilityProblem {
    Integer q;
    unsigned g = 0;
    unsigned m = 2;  // 1..3
    /// N_j >= N_1 with N_j = N_1 (mod j) for j = 2, 3: nonnegative place counts.
    bool place_constraints = true;
};

struct FeasibilityResult {
    Integer max_n1;
    std::vector<Integer> witness;  // N_1..N_m
    std::uint64_t scanned = 0;     // count vectors tested
};

/// Exact PSD of gram_absolute(q, g, counts, m) plus, when enabled, the place-count
/// constraints and membership of each N_j in its Weil interval.
bool feasible_counts(const Integer& q, unsigned g, std::span<const Integer> counts, bool place_constraints = true);

inline constexpr unsigned kMaxFeasibilityQ = 64;

/// Largest N_1 admitting an integer completion N_2..N_m; descending exhaustive scan.
FeasibilityResult max_n1(const FeasibilityProblem& problem);

/// q + 1 + (sqrt(radicand) - g) / 2, radicand = g^2 (8q + 1) + 4 g q (q - 1).
struct IharaBound {
    Integer radicand;
    Rational linear;  // q + 1 - g/2
    Integer floor;

    double approximate() const;
};

IharaBound ihara_closed_form(const Integer& q, unsigned g);

}  // namespace frobgram

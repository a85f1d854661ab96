#include "frobgram/feasibility.hpp"

#include <cmath>

#include "frobgram/bounds.hpp"
#include "frobgram/error.hpp"
#include "frobgram/finite_field.hpp"
#include "frobgram/gram.hpp"

namespace frobgram {

namespace {

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    while (q % p == 0) q /= p;
    return q == 1;
}

bool place_counts_ok(std::span<const Integer> counts) {
    if (counts[0] < 0) return false;
    for (std::size_t j = 2; j <= counts.size(); ++j) {
        const Integer gap = counts[j - 1] - counts[0];
        if (gap < 0 || gap % static_cast<unsigned>(j) != 0) return false;
    }
    return true;
}

}  // namespace

bool feasible_counts(const Integer& q, unsigned g, std::span<const Integer> counts, bool place_constraints) {
    if (counts.empty()) throw Error(Errc::InvalidArgument, "need at least N_1");
    if (counts.size() > 3) throw Error(Errc::TooLarge, "feasibility order is limited to 3");
    const auto m = static_cast<unsigned>(counts.size());
    if (place_constraints) {
        for (unsigned j = 1; j <= m; ++j)
            if (!weil_interval(q, g, j).contains(counts[j - 1])) return false;
        if (!place_counts_ok(counts)) return false;
    }
    return psd_check(gram_absolute(q, g, counts, m)).psd;
}

FeasibilityResult max_n1(const FeasibilityProblem& problem) {
    const Integer& q = problem.q;
    if (q > kMaxFeasibilityQ)
        throw Error(Errc::BudgetExceeded, "q = " + q.str() + " exceeds the scan limit " +
                                              std::to_string(kMaxFeasibilityQ));
    if (!is_prime_power(q.convert_to<std::uint64_t>()))
        throw Error(Errc::InvalidArgument, "q = " + q.str() + " is not a prime power");
    if (problem.m < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
    if (problem.m > 3) throw Error(Errc::TooLarge, "feasibility order is limited to 3");

    const unsigned m = problem.m;
    const bool place = problem.place_constraints;
    const WeilInterval i1 = weil_interval(q, problem.g, 1);
    const WeilInterval i2 = weil_interval(q, problem.g, 2);
    const WeilInterval i3 = weil_interval(q, problem.g, 3);

    FeasibilityResult result;
    std::vector<Integer> counts(m);
    const auto test = [&]() {
        ++result.scanned;
        return feasible_counts(q, problem.g, counts, place);
    };
    // Smallest value >= lo congruent to base mod step.
    const auto first_at_least = [](const Integer& lo, const Integer& base, unsigned step) {
        Integer r = (lo - base) % step;
        if (r < 0) r += step;
        return r == 0 ? lo : lo + (step - r);
    };

    for (Integer n1 = i1.hi; n1 >= i1.lo; --n1) {
        counts[0] = n1;
        bool found = false;
        if (m == 1) {
            found = test();
        } else {
            const unsigned step2 = place ? 2 : 1;
            const Integer start2 = place ? first_at_least(std::max(i2.lo, n1), n1, 2) : i2.lo;
            for (Integer n2 = start2; n2 <= i2.hi && !found; n2 += step2) {
                counts[1] = n2;
                if (m == 2) {
                    found = test();
                    continue;
                }
                // The leading 3x3 block does not involve N_3.
                ++result.scanned;
                if (!feasible_counts(q, problem.g, std::span<const Integer>(counts).first(2), place)) continue;
                const unsigned step3 = place ? 3 : 1;
                const Integer start3 = place ? first_at_least(std::max(i3.lo, n1), n1, 3) : i3.lo;
                for (Integer n3 = start3; n3 <= i3.hi && !found; n3 += step3) {
                    counts[2] = n3;
                    found = test();
                }
            }
        }
        if (found) {
            result.max_n1 = n1;
            result.witness = counts;
            return result;
        }
    }
    throw Error(Errc::InvalidArgument, "no feasible count vector in the Weil interval");
}

double IharaBound::approximate() const {
    return linear.convert_to<double>() + std::sqrt(radicand.convert_to<double>()) / 2.0;
}

IharaBound ihara_closed_form(const Integer& q, unsigned g) {
    if (g == 0) throw Error(Errc::ZeroGenus, "the closed form needs g >= 1");
    const Integer gg = g;
    IharaBound bound;
    bound.radicand = gg * gg * (8 * q + 1) + 4 * gg * q * (q - 1);
    bound.linear = Rational(q + 1) - Rational(gg, Integer(2));
    const Integer numerator = 2 * q + 2 - gg + isqrt(bound.radicand);
    bound.floor = numerator / 2;  // numerator > 0, so truncation is the floor
    return bound;
}

}  // namespace frobgram

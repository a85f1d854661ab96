#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "frobgram/integer.hpp"

namespace frobgram {

/// Numerator L(T) = c_0 + c_1 T + ... + c_{2g} T^{2g} of the zeta function.
struct LPolynomial {
    Integer q;
    unsigned genus = 0;
    std::vector<Integer> coefficients;  // ascending, size 2g + 1

    bool operator==(const LPolynomial&) const = default;
};

/// Newton identities on t_j = q^j + 1 - N_j for j <= g, then the functional equation.
/// Needs exactly g counts.
LPolynomial l_from_counts(const Integer& q, unsigned genus, std::span<const Integer> counts);

/// N_j = q^j + 1 - t_j with t_j from the integer Newton recurrence.
Integer extrapolate(const LPolynomial& l, unsigned j);

bool check_functional_equation(const LPolynomial& l);

struct RiemannHypothesisOptions {
    double tolerance = 1e-9;
    double residual = 1e-12;
};

struct RiemannHypothesisReport {
    double max_deviation = 0.0;
    bool pass = true;
    /// Distinct inverse roots (the squarefree part is solved), in solver order.
    std::vector<std::complex<double>> inverse_roots;
};

/// Locates the inverse roots numerically and compares their moduli with sqrt(q).
///
/// The monic reversed polynomial T^{2g} L(1/T) is first reduced to its squarefree
/// part with exact rational arithmetic so repeated roots (common for supersingular
/// curves) stay well conditioned. Roots come from the eigenvalues of the companion
/// matrix (Hessenberg reduction plus shifted QR with deflation) and are then
/// Newton-polished; each must reach the relative residual in `options`.
RiemannHypothesisReport check_riemann_hypothesis(const LPolynomial& l, const RiemannHypothesisOptions& options = {});

/// Smallest g <= m/2 whose L-polynomial built from N_1..N_g has integer coefficients,
/// satisfies the Riemann hypothesis check and reproduces N_{g+1}..N_m.
std::optional<unsigned> infer_genus(const Integer& q, std::span<const Integer> counts,
                                    const RiemannHypothesisOptions& options = {});

}  // namespace frobgram

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace frobgram {

/// Dense univariate polynomial over F_p, coefficients ascending by degree.
/// Normalized form carries no trailing zeros; the zero polynomial is empty.
using PrimePoly = std::vector<std::uint32_t>;

namespace prime_poly {

void trim(PrimePoly& a);
PrimePoly normalized(std::span<const std::int64_t> coefficients, std::uint32_t p);

/// -1 for the zero polynomial.
int degree(const PrimePoly& a) noexcept;
std::uint32_t leading(const PrimePoly& a) noexcept;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

PrimePoly add(const PrimePoly& a, const PrimePoly& b, std::uint32_t p);
PrimePoly sub(const PrimePoly& a, const PrimePoly& b, std::uint32_t p);
PrimePoly mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p);
PrimePoly scale(const PrimePoly& a, std::uint32_t s, std::uint32_t p);

/// (quotient, remainder); divisor must be nonzero.
std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b, std::uint32_t p);

PrimePoly derivative(const PrimePoly& a, std::uint32_t p);

/// Monic gcd; gcd(0, 0) = 0.
PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p);

/// Nonzero and gcd(a, a') constant. A p-th power (a' = 0, deg a >= 1) is not squarefree.
bool is_squarefree(const PrimePoly& a, std::uint32_t p);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const PrimePoly& a, std::uint32_t p);

std::uint32_t evaluate(const PrimePoly& a, std::uint32_t x, std::uint32_t p);

}  // namespace prime_poly
}  // namespace frobgram

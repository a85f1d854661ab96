#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "frobgram/error.hpp"
#include "frobgram/integer.hpp"

namespace frobgram {

/// A finite field F_q, q = p^k, presented as F_p[t]/(modulus).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial of
/// degree k (coefficients compared from the constant term upwards), so two
/// constructions with the same (p, k) always agree.
struct FieldSpec {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::vector<std::uint32_t> modulus;  // ascending, size k + 1, monic
    Integer q;

    bool operator==(const FieldSpec& other) const { return p == other.p && k == other.k && modulus == other.modulus; }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(std::uint64_t n) noexcept;

FieldPtr construct_field(std::uint32_t p, unsigned k);

/// F_{q^j} built as a fresh degree k*j extension of F_p.
FieldPtr extension_of(const FieldPtr& field, unsigned j);

class FieldElement {
   public:
    FieldElement(FieldPtr field, std::vector<std::uint32_t> coefficients);

    static FieldElement zero(const FieldPtr& field);
    static FieldElement one(const FieldPtr& field);
    /// Image of c mod p under F_p -> F_q.
    static FieldElement constant(const FieldPtr& field, std::int64_t c);
    /// The element whose coefficient tuple, read little-endian in base p, equals index.
    static FieldElement from_index(const FieldPtr& field, std::uint64_t index);

    const FieldPtr& field() const noexcept { return field_; }
    std::span<const std::uint32_t> coefficients() const noexcept { return coefficients_; }
    std::uint64_t index() const noexcept;
    bool is_zero() const noexcept;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    bool operator==(const FieldElement& rhs) const;

   private:
    void require_same_field(const FieldElement& rhs) const;

    FieldPtr field_;
    std::vector<std::uint32_t> coefficients_;
};

enum class ArithOp { add, sub, mul };

FieldElement arithmetic(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Inverse by the extended Euclidean algorithm on polynomial representatives.
FieldElement invert(const FieldElement& a);

/// Square-and-multiply; 0^0 = 1.
FieldElement power(const FieldElement& a, const Integer& n);

/// All q elements, index order (0 first).
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

/// Euler's criterion. Requires odd characteristic and a != 0.
bool is_square(const FieldElement& a);

}  // namespace frobgram

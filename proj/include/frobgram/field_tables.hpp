#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "frobgram/finite_field.hpp"

namespace frobgram {

/// Zech-logarithm tables for a finite field small enough to enumerate.
///
/// Elements are addressed by their index (coefficient tuple read little-endian in
/// base p), the same order enumerate_elements() uses; the constants 0..p-1 of the
/// prime field are indices 0..p-1. Every operation is a couple of table lookups.
class FieldTables {
   public:
    using Element = std::uint32_t;

    explicit FieldTables(FieldPtr field);

    /// Shared, process-wide cache keyed by (p, k). Thread-safe.
    static std::shared_ptr<const FieldTables> get(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t size() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    Element generator() const noexcept { return exp_[1]; }

    Element from_prime(std::uint32_t c) const noexcept { return c % p_; }

    Element add(Element a, Element b) const noexcept {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a];
        const std::uint32_t diff = log_[b] >= la ? log_[b] - la : log_[b] + order_ - la;
        const std::uint32_t z = zech_[diff];
        return z == kNoLog ? 0 : exp_[la + z];
    }
    Element neg(Element a) const noexcept { return mul(a, minus_one_); }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// a must be nonzero.
    Element inv(Element a) const noexcept { return exp_[order_ - log_[a]]; }
    Element pow(Element a, std::uint64_t n) const noexcept {
        if (n == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (n % order_)) % order_)];
    }
    /// Odd characteristic, a nonzero.
    bool is_square(Element a) const noexcept { return (log_[a] & 1u) == 0; }

   private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    FieldPtr field_;
    std::uint32_t p_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t order_ = 0;  // q - 1
    Element minus_one_ = 0;
    std::vector<std::uint32_t> log_;   // indexed by element, log_[0] unused
    std::vector<Element> exp_;         // length 2(q-1) so sums of two logs need no reduction
    std::vector<std::uint32_t> zech_;  // log(1 + g^n), kNoLog when 1 + g^n = 0
};

}  // namespace frobgram

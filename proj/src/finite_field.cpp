#include "frobgram/finite_field.hpp"

#include <string>

#include "frobgram/prime_poly.hpp"

namespace frobgram {

namespace {

// Multiply two reduced representatives and reduce by the monic modulus.
std::vector<std::uint32_t> mul_reduce(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                      const FieldSpec& spec) {
    const unsigned k = spec.k;
    const std::uint64_t p = spec.p;
    std::vector<std::uint64_t> acc(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + a[i] * static_cast<std::uint64_t>(b[j])) % p;
    }
    // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
    for (unsigned d = 2 * k - 1; d-- > k;) {
        const std::uint64_t c = acc[d];
        if (c == 0) continue;
        acc[d] = 0;
        for (unsigned i = 0; i < k; ++i)
            acc[d - k + i] = (acc[d - k + i] + (p - spec.modulus[i]) * c) % p;
    }
    return {acc.begin(), acc.begin() + k};
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldPtr construct_field(std::uint32_t p, unsigned k) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(Errc::InvalidDegree, "extension degree must be at least 1");

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->k = k;
    spec->q = ipow(Integer(p), k);

    // Lexicographic search with c_0 most significant: the last coefficient varies fastest.
    PrimePoly candidate(k + 1, 0);
    candidate[k] = 1;
    while (true) {
        if (prime_poly::is_irreducible(candidate, p)) break;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && ++candidate[i] == p) candidate[i--] = 0;
        if (i < 0) throw Error(Errc::InvalidDegree, "no irreducible polynomial found");  // unreachable
    }
    spec->modulus = std::move(candidate);
    return spec;
}

FieldPtr extension_of(const FieldPtr& field, unsigned j) {
    if (j < 1) throw Error(Errc::InvalidDegree, "extension degree must be at least 1");
    if (j == 1) return field;
    return construct_field(field->p, field->k * j);
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint32_t> coefficients)
    : field_(std::move(field)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != field_->k)
        throw Error(Errc::InvalidArgument, "element needs exactly k coefficients");
    for (auto& c : coefficients_) c %= field_->p;
}

FieldElement FieldElement::zero(const FieldPtr& field) {
    return FieldElement(field, std::vector<std::uint32_t>(field->k, 0));
}

FieldElement FieldElement::one(const FieldPtr& field) { return constant(field, 1); }

FieldElement FieldElement::constant(const FieldPtr& field, std::int64_t c) {
    std::vector<std::uint32_t> coefficients(field->k, 0);
    const auto p = static_cast<std::int64_t>(field->p);
    coefficients[0] = static_cast<std::uint32_t>(((c % p) + p) % p);
    return FieldElement(field, std::move(coefficients));
}

FieldElement FieldElement::from_index(const FieldPtr& field, std::uint64_t index) {
    std::vector<std::uint32_t> coefficients(field->k, 0);
    for (unsigned i = 0; i < field->k; ++i) {
        coefficients[i] = static_cast<std::uint32_t>(index % field->p);
        index /= field->p;
    }
    return FieldElement(field, std::move(coefficients));
}

std::uint64_t FieldElement::index() const noexcept {
    std::uint64_t index = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) index = index * field_->p + coefficients_[i];
    return index;
}

bool FieldElement::is_zero() const noexcept {
    for (auto c : coefficients_)
        if (c != 0) return false;
    return true;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_ && !(*field_ == *rhs.field_))
        throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto& c : out.coefficients_) c = (field_->p - c) % field_->p;
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    for (unsigned i = 0; i < field_->k; ++i) coefficients_[i] = (coefficients_[i] + rhs.coefficients_[i]) % field_->p;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    for (unsigned i = 0; i < field_->k; ++i)
        coefficients_[i] = (coefficients_[i] + field_->p - rhs.coefficients_[i]) % field_->p;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    coefficients_ = mul_reduce(coefficients_, rhs.coefficients_, *field_);
    return *this;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(rhs);
    return coefficients_ == rhs.coefficients_;
}

FieldElement arithmetic(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw Error(Errc::InvalidArgument, "unknown arithmetic operation");
}

FieldElement invert(const FieldElement& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no inverse");
    const FieldSpec& spec = *a.field();
    const std::uint32_t p = spec.p;

    // Invariant: s * a == r (mod modulus).
    PrimePoly r0 = spec.modulus, r1(a.coefficients().begin(), a.coefficients().end());
    prime_poly::trim(r1);
    PrimePoly s0, s1{1};
    while (prime_poly::degree(r1) > 0) {
        auto [quot, rem] = prime_poly::divmod(r0, r1, p);
        PrimePoly s2 = prime_poly::sub(s0, prime_poly::mul(quot, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    PrimePoly inverse = prime_poly::scale(s1, prime_poly::inverse_mod(r1[0], p), p);
    inverse.resize(spec.k, 0);
    return FieldElement(a.field(), std::move(inverse));
}

FieldElement power(const FieldElement& a, const Integer& n) {
    if (n < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    FieldElement result = FieldElement::one(a.field());
    FieldElement base = a;
    const unsigned bits = n == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    for (unsigned i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(n, i)) result *= base;
        if (i + 1 < bits) base *= base;
    }
    return result;
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
    const auto q = field->q.convert_to<std::uint64_t>();
    std::vector<FieldElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(FieldElement::from_index(field, i));
    return out;
}

bool is_square(const FieldElement& a) {
    if (a.field()->p == 2) throw Error(Errc::EvenCharacteristic, "quadratic character needs odd characteristic");
    if (a.is_zero()) throw Error(Errc::ZeroInput, "is_square is defined for nonzero elements");
    return power(a, (a.field()->q - 1) / 2) == FieldElement::one(a.field());
}

}  // namespace frobgram

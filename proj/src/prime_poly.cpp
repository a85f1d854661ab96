#include "frobgram/prime_poly.hpp"

#include <algorithm>

#include "frobgram/error.hpp"

namespace frobgram::prime_poly {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

}  // namespace

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly normalized(std::span<const std::int64_t> coefficients, std::uint32_t p) {
    PrimePoly out;
    out.reserve(coefficients.size());
    const auto sp = static_cast<std::int64_t>(p);
    for (std::int64_t c : coefficients) out.push_back(static_cast<std::uint32_t>(((c % sp) + sp) % sp));
    trim(out);
    return out;
}

int degree(const PrimePoly& a) noexcept { return static_cast<int>(a.size()) - 1; }

std::uint32_t leading(const PrimePoly& a) noexcept { return a.empty() ? 0 : a.back(); }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    if (new_r == 0) throw Error(Errc::DivisionByZero, "zero has no inverse mod p");
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

PrimePoly add(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    PrimePoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = (i < a.size() ? a[i] : 0u);
        const std::uint64_t y = (i < b.size() ? b[i] : 0u);
        out[i] = static_cast<std::uint32_t>((x + y) % p);
    }
    trim(out);
    return out;
}

PrimePoly sub(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    PrimePoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = (i < a.size() ? a[i] : 0u);
        const std::uint64_t y = (i < b.size() ? b[i] : 0u);
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    trim(out);
    return out;
}

PrimePoly mul(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    PrimePoly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

PrimePoly scale(const PrimePoly& a, std::uint32_t s, std::uint32_t p) {
    PrimePoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod(a[i], s, p);
    trim(out);
    return out;
}

std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
    if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    PrimePoly rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {{}, rem};
    PrimePoly quot(rem.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inverse_mod(b.back(), p);
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        const std::uint32_t c = mulmod(rem[i], lead_inv, p);
        if (c == 0) continue;
        const std::size_t shift = i + 1 - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = static_cast<std::uint32_t>((rem[shift + j] + p - mulmod(c, b[j], p)) % p);
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

PrimePoly derivative(const PrimePoly& a, std::uint32_t p) {
    if (a.size() <= 1) return {};
    PrimePoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod(a[i], static_cast<std::uint32_t>(i % p), p);
    trim(out);
    return out;
}

PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto rem = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.empty()) a = scale(a, inverse_mod(a.back(), p), p);
    return a;
}

bool is_squarefree(const PrimePoly& a, std::uint32_t p) {
    if (a.empty()) return false;
    return degree(gcd(a, derivative(a, p), p)) == 0;
}

bool is_irreducible(const PrimePoly& a, std::uint32_t p) {
    const int n = degree(a);
    if (n < 1) return false;
    if (n == 1) return true;
    // Enumerate monic divisors of each degree d <= n/2 by counting in base p.
    for (int d = 1; d <= n / 2; ++d) {
        PrimePoly divisor(static_cast<std::size_t>(d) + 1, 0);
        divisor[d] = 1;
        while (true) {
            if (divmod(a, divisor, p).second.empty()) return false;
            int i = 0;
            while (i < d && ++divisor[i] == p) divisor[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::uint32_t evaluate(const PrimePoly& a, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
    return static_cast<std::uint32_t>(acc);
}

}  // namespace frobgram::prime_poly

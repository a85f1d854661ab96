// Emptiness of the singular locus of a plane curve over the algebraic closure.
//
// On each affine chart the singular points are the common zeros of F and its
// three partials. By the weak Nullstellensatz that set is empty over F_p-bar
// exactly when 1 lies in the ideal, which a Groebner basis decides.

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "frobgram/curves.hpp"

namespace frobgram::detail {

namespace {

struct Term {
    std::array<unsigned, 2> e{};
    std::uint32_t c = 0;
};

// Sorted by grevlex, largest first; no zero coefficients.
using Poly = std::vector<Term>;

bool grevlex_greater(const std::array<unsigned, 2>& a, const std::array<unsigned, 2>& b) {
    const unsigned da = a[0] + a[1], db = b[0] + b[1];
    if (da != db) return da > db;
    return a[1] < b[1];
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return prime_poly::inverse_mod(a, p); }

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

Poly make_monic(Poly f, std::uint32_t p) {
    if (f.empty()) return f;
    const std::uint32_t s = inv_mod(f.front().c, p);
    for (auto& t : f) t.c = mul_mod(t.c, s, p);
    return f;
}

// f - c * x^shift * g
Poly sub_scaled(const Poly& f, std::uint32_t c, const std::array<unsigned, 2>& shift, const Poly& g,
                std::uint32_t p) {
    Poly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        Term gj;
        if (j < g.size()) gj = {{g[j].e[0] + shift[0], g[j].e[1] + shift[1]}, (p - mul_mod(c, g[j].c, p)) % p};
        if (j >= g.size() || (i < f.size() && grevlex_greater(f[i].e, gj.e))) {
            out.push_back(f[i++]);
        } else if (i >= f.size() || grevlex_greater(gj.e, f[i].e)) {
            if (gj.c != 0) out.push_back(gj);
            ++j;
        } else {
            const std::uint32_t sum = (f[i].c + gj.c) % p;
            if (sum != 0) out.push_back({f[i].e, sum});
            ++i;
            ++j;
        }
    }
    return out;
}

bool divides(const std::array<unsigned, 2>& a, const std::array<unsigned, 2>& b) {
    return a[0] <= b[0] && a[1] <= b[1];
}

// Reduce until the leading term is not divisible by any leading term of the basis.
Poly top_reduce(Poly f, const std::vector<Poly>& basis, std::uint32_t p) {
    bool progress = true;
    while (!f.empty() && progress) {
        progress = false;
        for (const auto& g : basis) {
            if (!divides(g.front().e, f.front().e)) continue;
            const std::array<unsigned, 2> shift{f.front().e[0] - g.front().e[0], f.front().e[1] - g.front().e[1]};
            f = sub_scaled(f, mul_mod(f.front().c, inv_mod(g.front().c, p), p), shift, g, p);
            progress = true;
            break;
        }
    }
    return f;
}

Poly s_polynomial(const Poly& a, const Poly& b, std::uint32_t p) {
    const auto& ea = a.front().e;
    const auto& eb = b.front().e;
    const std::array<unsigned, 2> lcm{std::max(ea[0], eb[0]), std::max(ea[1], eb[1])};
    Poly shifted_a;
    for (const auto& t : a) shifted_a.push_back({{t.e[0] + lcm[0] - ea[0], t.e[1] + lcm[1] - ea[1]}, t.c});
    return sub_scaled(shifted_a, 1, {lcm[0] - eb[0], lcm[1] - eb[1]}, b, p);
}

bool contains_one(std::vector<Poly> generators, std::uint32_t p) {
    std::vector<Poly> basis;
    for (auto& g : generators) {
        g = make_monic(top_reduce(std::move(g), basis, p), p);
        if (g.empty()) continue;
        if (g.front().e == std::array<unsigned, 2>{0, 0}) return true;
        basis.push_back(std::move(g));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        const auto [i, j] = pairs.back();
        pairs.pop_back();
        const auto& ei = basis[i].front().e;
        const auto& ej = basis[j].front().e;
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if (std::min(ei[0], ej[0]) == 0 && std::min(ei[1], ej[1]) == 0) continue;
        Poly r = make_monic(top_reduce(s_polynomial(basis[i], basis[j], p), basis, p), p);
        if (r.empty()) continue;
        if (r.front().e == std::array<unsigned, 2>{0, 0}) return true;
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
    return false;
}

// Set variable `fixed` to 1 and keep the other two in order.
Poly dehomogenize(const PlanePoly& f, unsigned fixed, std::uint32_t p) {
    Poly out;
    for (const auto& m : f) {
        std::array<unsigned, 2> e{};
        unsigned slot = 0;
        for (unsigned v = 0; v < 3; ++v)
            if (v != fixed) e[slot++] = m.exponents[v];
        out.push_back({e, m.coefficient % p});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.e, b.e); });
    Poly merged;
    for (const auto& t : out) {
        if (!merged.empty() && merged.back().e == t.e)
            merged.back().c = (merged.back().c + t.c) % p;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.c == 0; });
    return merged;
}

}  // namespace

PlanePoly plane_partial(const PlanePoly& poly, unsigned variable, std::uint32_t p) {
    std::vector<Monomial> out;
    for (const auto& m : poly) {
        if (m.exponents[variable] == 0) continue;
        Monomial d = m;
        d.coefficient = mul_mod(m.coefficient, m.exponents[variable] % p, p);
        d.exponents[variable] -= 1;
        out.push_back(d);
    }
    return canonical_plane_poly(std::move(out), p);
}

bool plane_singular_locus_empty(const PlanePoly& poly, std::uint32_t p) {
    const std::array<PlanePoly, 4> system{poly, plane_partial(poly, 0, p), plane_partial(poly, 1, p),
                                          plane_partial(poly, 2, p)};
    for (unsigned chart = 0; chart < 3; ++chart) {
        std::vector<Poly> generators;
        for (const auto& component : system) {
            Poly g = dehomogenize(component, chart, p);
            if (!g.empty()) generators.push_back(std::move(g));
        }
        if (!contains_one(std::move(generators), p)) return false;
    }
    return true;
}

}  // namespace frobgram::detail

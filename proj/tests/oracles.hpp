#pragma once

// Slow reference implementations used as independent oracles. They only use
// FieldElement arithmetic (polynomial representatives), never the log tables.

#include <cstdint>
#include <vector>

#include "frobgram/corpus.hpp"
#include "frobgram/curves.hpp"
#include "frobgram/finite_field.hpp"

namespace oracle {

using namespace frobgram;

inline FieldElement eval(const PrimePoly& f, const FieldElement& x) {
    FieldElement acc = FieldElement::zero(x.field());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + FieldElement::constant(x.field(), f[i]);
    return acc;
}

inline FieldElement eval(const PlanePoly& f, const std::array<FieldElement, 3>& pt) {
    const FieldPtr& field = pt[0].field();
    FieldElement acc = FieldElement::zero(field);
    for (const auto& m : f) {
        FieldElement term = FieldElement::constant(field, m.coefficient);
        for (int v = 0; v < 3; ++v) term = term * power(pt[v], Integer(m.exponents[v]));
        acc = acc + term;
    }
    return acc;
}

// #{y : y^2 = a}, by scanning every y.
inline unsigned root_count(const std::vector<FieldElement>& elements, const FieldElement& a) {
    unsigned n = 0;
    for (const auto& y : elements) n += (y * y == a) ? 1 : 0;
    return n;
}

inline unsigned infinity_points(const PrimePoly& f, const FieldPtr& ext) {
    if (prime_poly::degree(f) % 2 == 1) return 1;
    return is_square(FieldElement::constant(ext, f.back())) ? 2 : 0;
}

/// Scans every pair (x, y) in F_{q^j}^2.
inline std::uint64_t hyperelliptic_count(const PrimePoly& f, const FieldPtr& base, unsigned j) {
    const auto ext = extension_of(base, j);
    const auto elements = enumerate_elements(ext);
    std::uint64_t n = 0;
    for (const auto& x : elements) n += root_count(elements, eval(f, x));
    return n + infinity_points(f, ext);
}

inline std::uint64_t biquadratic_count(const PrimePoly& f, const PrimePoly& g, const FieldPtr& base, unsigned j) {
    const auto ext = extension_of(base, j);
    const auto elements = enumerate_elements(ext);
    std::uint64_t n = 0;
    for (const auto& x : elements) n += root_count(elements, eval(f, x)) * root_count(elements, eval(g, x));
    return n + (is_square(FieldElement::constant(ext, g.back())) ? 2 : 0);
}

inline std::vector<std::array<FieldElement, 3>> projective_plane(const FieldPtr& field) {
    const auto elements = enumerate_elements(field);
    const auto zero = FieldElement::zero(field), one = FieldElement::one(field);
    std::vector<std::array<FieldElement, 3>> points;
    for (const auto& y : elements)
        for (const auto& z : elements) points.push_back({one, y, z});
    for (const auto& z : elements) points.push_back({zero, one, z});
    points.push_back({zero, zero, one});
    return points;
}

/// Evaluates F at every point of P^2(F_{q^j}).
inline std::uint64_t plane_count(const PlanePoly& f, const FieldPtr& base, unsigned j) {
    std::uint64_t n = 0;
    for (const auto& pt : projective_plane(extension_of(base, j))) n += eval(f, pt).is_zero() ? 1 : 0;
    return n;
}

/// True iff some point of P^2(F_{q^j}) is a common zero of F and its partials.
inline bool has_singular_point(const PlanePoly& f, const FieldPtr& base, unsigned j) {
    const std::uint32_t p = base->p;
    const std::array<PlanePoly, 4> system{f, detail::plane_partial(f, 0, p), detail::plane_partial(f, 1, p),
                                          detail::plane_partial(f, 2, p)};
    for (const auto& pt : projective_plane(extension_of(base, j))) {
        bool all = true;
        for (const auto& component : system) all = all && eval(component, pt).is_zero();
        if (all) return true;
    }
    return false;
}

inline PrimePoly random_poly(Lcg& rng, unsigned degree, std::uint32_t p) {
    PrimePoly f(degree + 1);
    for (unsigned i = 0; i < degree; ++i) f[i] = rng.below(p);
    f[degree] = rng.between(1, p - 1);
    return f;
}

inline PlanePoly random_form(Lcg& rng, unsigned d, std::uint32_t p) {
    std::vector<Monomial> terms;
    for (unsigned ex = 0; ex <= d; ++ex)
        for (unsigned ey = 0; ex + ey <= d; ++ey) terms.push_back({rng.below(p), {ex, ey, d - ex - ey}});
    return canonical_plane_poly(std::move(terms), p);
}

inline std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace oracle

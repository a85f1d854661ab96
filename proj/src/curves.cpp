#include "frobgram/curves.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "frobgram/field_tables.hpp"

namespace frobgram {

namespace {

using Element = FieldTables::Element;
using TablePoly = std::vector<Element>;  // ascending, over the tabulated field

std::string field_label(const FieldPtr& field) { return "F_" + field->q.str(); }

std::string format_poly(const PrimePoly& f, char var) {
    if (f.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (f[i] != 1 || i == 0) out << f[i];
        if (i >= 1) out << var;
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

std::string format_plane(const PlanePoly& poly) {
    std::ostringstream out;
    bool first = true;
    const char vars[3] = {'x', 'y', 'z'};
    for (const auto& m : poly) {
        if (!first) out << "+";
        first = false;
        const bool constant = m.total_degree() == 0;
        if (m.coefficient != 1 || constant) out << m.coefficient;
        for (int v = 0; v < 3; ++v) {
            if (m.exponents[v] == 0) continue;
            out << vars[v];
            if (m.exponents[v] > 1) out << "^" << m.exponents[v];
        }
    }
    return out.str();
}

void trim(TablePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod h, h monic-normalizable and nonzero.
void reduce(TablePoly& a, const TablePoly& h, const FieldTables& t) {
    trim(a);
    const std::size_t dh = h.size() - 1;
    const Element lead_inv = t.inv(h.back());
    while (a.size() > dh) {
        const Element c = t.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dh;
        for (std::size_t i = 0; i <= dh; ++i) a[shift + i] = t.sub(a[shift + i], t.mul(c, h[i]));
        trim(a);
    }
}

TablePoly mulmod(const TablePoly& a, const TablePoly& b, const TablePoly& h, const FieldTables& t) {
    if (a.empty() || b.empty()) return {};
    TablePoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = t.add(out[i + j], t.mul(a[i], b[j]));
    }
    reduce(out, h, t);
    return out;
}

std::size_t gcd_degree(TablePoly a, TablePoly b, const FieldTables& t) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        reduce(a, b, t);
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Number of distinct roots of h in the tabulated field F_Q: deg gcd(h, z^Q - z).
std::uint64_t distinct_roots(TablePoly h, const FieldTables& t) {
    trim(h);
    if (h.empty()) return t.size();
    if (h.size() == 1) return 0;
    if (h.size() == 2) return 1;
    TablePoly result{1};
    TablePoly base{0, 1};
    reduce(base, h, t);
    for (std::uint64_t e = t.size(); e > 0; e >>= 1) {
        if (e & 1u) result = mulmod(result, base, h, t);
        if (e > 1) base = mulmod(base, base, h, t);
    }
    // result - z
    if (result.size() < 2) result.resize(2, 0);
    result[1] = t.sub(result[1], 1);
    return gcd_degree(h, result, t);
}

Element horner(const PrimePoly& f, Element x, const FieldTables& t) {
    Element acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = t.add(t.mul(acc, x), t.from_prime(f[i]));
    return acc;
}

Element eval_plane(const PlanePoly& poly, const std::array<Element, 3>& point, const FieldTables& t) {
    Element acc = 0;
    for (const auto& m : poly) {
        Element term = t.from_prime(m.coefficient);
        for (int v = 0; v < 3; ++v) term = t.mul(term, t.pow(point[v], m.exponents[v]));
        acc = t.add(acc, term);
    }
    return acc;
}

std::uint64_t count_hyperelliptic(const PrimePoly& f, const FieldTables& t) {
    std::uint64_t total = 0;
    for (Element x = 0; x < t.size(); ++x) {
        const Element v = horner(f, x, t);
        total += v == 0 ? 1 : (t.is_square(v) ? 2 : 0);
    }
    if (prime_poly::degree(f) % 2 == 1) return total + 1;
    return total + (t.is_square(t.from_prime(prime_poly::leading(f))) ? 2 : 0);
}

std::uint64_t count_biquadratic(const PrimePoly& f, const PrimePoly& g, const FieldTables& t) {
    std::uint64_t total = 0;
    const auto fiber = [&](Element v) -> std::uint64_t { return v == 0 ? 1 : (t.is_square(v) ? 2 : 0); };
    for (Element x = 0; x < t.size(); ++x) {
        const std::uint64_t a = fiber(horner(f, x, t));
        if (a == 0) continue;
        total += a * fiber(horner(g, x, t));
    }
    // deg f odd ramifies infinity in Y1; the two points of X over infinity are
    // rational exactly when infinity splits in Y2.
    return total + (t.is_square(t.from_prime(prime_poly::leading(g))) ? 2 : 0);
}

std::uint64_t count_plane(const PlanePoly& poly, unsigned d, const FieldTables& t) {
    std::uint64_t total = 0;
    // (1 : y : z)
    for (Element y = 0; y < t.size(); ++y) {
        TablePoly h(d + 1, 0);
        for (const auto& m : poly) {
            const Element c = t.mul(t.from_prime(m.coefficient), t.pow(y, m.exponents[1]));
            h[m.exponents[2]] = t.add(h[m.exponents[2]], c);
        }
        total += distinct_roots(std::move(h), t);
    }
    // (0 : 1 : z)
    TablePoly h(d + 1, 0);
    for (const auto& m : poly)
        if (m.exponents[0] == 0) h[m.exponents[2]] = t.add(h[m.exponents[2]], t.from_prime(m.coefficient));
    total += distinct_roots(std::move(h), t);
    // (0 : 0 : 1)
    if (eval_plane(poly, {0, 0, 1}, t) == 0) ++total;
    return total;
}

void require_odd(const FieldPtr& field) {
    if (field->p == 2) throw Error(Errc::EvenCharacteristic, "quadratic covers need odd characteristic");
}

unsigned hyperelliptic_genus(int degree) {
    return degree % 2 == 1 ? static_cast<unsigned>((degree - 1) / 2) : static_cast<unsigned>(degree / 2 - 1);
}

std::optional<std::pair<std::array<FieldElement, 3>, unsigned>> find_singular_point(const FieldPtr& base,
                                                                                      const PlanePoly& poly,
                                                                                      unsigned d,
                                                                                      std::uint64_t budget) {
    const std::uint32_t p = base->p;
    const std::array<PlanePoly, 4> system{poly, detail::plane_partial(poly, 0, p), detail::plane_partial(poly, 1, p),
                                          detail::plane_partial(poly, 2, p)};
    const unsigned max_j = (d - 1) * (d - 1);
    for (unsigned j = 1; j <= std::max(1u, max_j); ++j) {
        const Integer q = ipow(base->q, j);
        if (q * q + q + 1 > budget) break;
        const auto ext = extension_of(base, j);
        const auto tables = FieldTables::get(ext);
        const auto& t = *tables;
        const auto singular_at = [&](const std::array<Element, 3>& pt) {
            return std::all_of(system.begin(), system.end(),
                               [&](const PlanePoly& component) { return eval_plane(component, pt, t) == 0; });
        };
        const auto witness = [&](const std::array<Element, 3>& pt) {
            return std::make_pair(std::array<FieldElement, 3>{FieldElement::from_index(ext, pt[0]),
                                                              FieldElement::from_index(ext, pt[1]),
                                                              FieldElement::from_index(ext, pt[2])},
                                  j);
        };
        for (Element y = 0; y < t.size(); ++y)
            for (Element z = 0; z < t.size(); ++z)
                if (singular_at({1, y, z})) return witness({1, y, z});
        for (Element z = 0; z < t.size(); ++z)
            if (singular_at({0, 1, z})) return witness({0, 1, z});
        if (singular_at({0, 0, 1})) return witness({0, 0, 1});
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(CurveKind kind) noexcept {
    switch (kind) {
        case CurveKind::projective_line: return "projective_line";
        case CurveKind::hyperelliptic: return "hyperelliptic";
        case CurveKind::smooth_plane: return "smooth_plane";
        case CurveKind::biquadratic_total_space: return "biquadratic_total_space";
    }
    return "unknown";
}

std::string_view to_string(CoverConstruction construction) noexcept {
    switch (construction) {
        case CoverConstruction::hyperelliptic_over_line: return "hyperelliptic_over_line";
        case CoverConstruction::diagram_x_over_y1: return "diagram_x_over_y1";
        case CoverConstruction::diagram_x_over_y2: return "diagram_x_over_y2";
        case CoverConstruction::diagram_y1_over_z: return "diagram_y1_over_z";
        case CoverConstruction::diagram_y2_over_z: return "diagram_y2_over_z";
        case CoverConstruction::diagram_x_over_z: return "diagram_x_over_z";
    }
    return "unknown";
}

PlanePoly canonical_plane_poly(std::vector<Monomial> terms, std::uint32_t p) {
    for (auto& m : terms) m.coefficient %= p;
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; });
    PlanePoly out;
    for (const auto& m : terms) {
        if (!out.empty() && out.back().exponents == m.exponents)
            out.back().coefficient = (out.back().coefficient + m.coefficient) % p;
        else
            out.push_back(m);
    }
    std::erase_if(out, [](const Monomial& m) { return m.coefficient == 0; });
    return out;
}

bool CurveModel::operator==(const CurveModel& other) const {
    return kind_ == other.kind_ && *base_ == *other.base_ && f_ == other.f_ && g_ == other.g_ &&
           plane_ == other.plane_ && plane_degree_ == other.plane_degree_ && genus_ == other.genus_ &&
           label_ == other.label_;
}

CurveModel make_projective_line(const FieldPtr& field) {
    CurveModel curve;
    curve.kind_ = CurveKind::projective_line;
    curve.base_ = field;
    curve.genus_ = 0;
    curve.label_ = "P1 over " + field_label(field);
    return curve;
}

CurveModel make_hyperelliptic(const FieldPtr& field, PrimePoly f) {
    require_odd(field);
    for (auto& c : f) c %= field->p;
    prime_poly::trim(f);
    if (f.empty()) throw Error(Errc::ZeroPolynomial, "f must be nonzero");
    if (prime_poly::degree(f) < 1) throw Error(Errc::InvalidDegree, "f must have degree at least 1");
    if (!prime_poly::is_squarefree(f, field->p))
        throw Error(Errc::NotSquarefree, "f = " + format_poly(f, 'x') + " is not squarefree");

    CurveModel curve;
    curve.kind_ = CurveKind::hyperelliptic;
    curve.base_ = field;
    curve.genus_ = hyperelliptic_genus(prime_poly::degree(f));
    curve.label_ = "y^2=" + format_poly(f, 'x') + " over " + field_label(field);
    curve.f_ = std::move(f);
    return curve;
}

CurveModel make_smooth_plane(const FieldPtr& field, PlanePoly poly, unsigned degree, std::uint64_t witness_budget) {
    if (degree < 1) throw Error(Errc::InvalidDegree, "plane curve degree must be at least 1");
    poly = canonical_plane_poly(std::move(poly), field->p);
    if (poly.empty()) throw Error(Errc::ZeroPolynomial, "F must be nonzero");
    for (const auto& m : poly)
        if (m.total_degree() != degree)
            throw Error(Errc::NotHomogeneous, "monomial of degree " + std::to_string(m.total_degree()) +
                                                  " in a degree-" + std::to_string(degree) + " form");

    if (!detail::plane_singular_locus_empty(poly, field->p)) {
        const auto found = find_singular_point(field, poly, degree, witness_budget);
        const std::string what = format_plane(poly) + "=0 over " + field_label(field) + " is singular";
        if (found) {
            throw SingularCurveError(what + " (witness over extension of degree " + std::to_string(found->second) + ")",
                                     found->first, found->second);
        }
        throw SingularCurveError(what + " (no witness within budget)", std::nullopt, 0);
    }

    CurveModel curve;
    curve.kind_ = CurveKind::smooth_plane;
    curve.base_ = field;
    curve.plane_degree_ = degree;
    curve.genus_ = (degree - 1) * (degree - 2) / 2;
    curve.label_ = format_plane(poly) + "=0 over " + field_label(field);
    curve.plane_ = std::move(poly);
    return curve;
}

DiagramData make_biquadratic(const FieldPtr& field, PrimePoly f, PrimePoly g) {
    require_odd(field);
    const std::uint32_t p = field->p;
    for (auto& c : f) c %= p;
    for (auto& c : g) c %= p;
    prime_poly::trim(f);
    prime_poly::trim(g);
    if (f.empty() || g.empty()) throw Error(Errc::ZeroPolynomial, "f and g must be nonzero");
    if (!prime_poly::is_squarefree(f, p) || !prime_poly::is_squarefree(g, p))
        throw Error(Errc::NotSquarefree, "f and g must be squarefree");
    const int df = prime_poly::degree(f);
    const int dg = prime_poly::degree(g);
    if (df % 2 == 0 || dg % 2 == 1 || dg < 2)
        throw Error(Errc::DegreeParity, "need deg f odd and deg g even >= 2, got " + std::to_string(df) + ", " +
                                            std::to_string(dg));
    if (prime_poly::degree(prime_poly::gcd(f, g, p)) != 0)
        throw Error(Errc::NotCoprime, "f and g share a factor; the fiber product is reducible");

    DiagramData d;
    d.z = make_projective_line(field);
    d.y1 = make_hyperelliptic(field, f);
    d.y2 = make_hyperelliptic(field, g);

    CurveModel& x = d.x;
    x.kind_ = CurveKind::biquadratic_total_space;
    x.base_ = field;
    x.genus_ = d.y1.genus() + d.y2.genus() + hyperelliptic_genus(df + dg);
    x.label_ = "X(f=" + format_poly(f, 'x') + ",g=" + format_poly(g, 'x') + ") over " + field_label(field);
    x.f_ = std::move(f);
    x.g_ = std::move(g);

    d.edges = {CoverData{d.x, d.y1, 2, CoverConstruction::diagram_x_over_y1},
               CoverData{d.x, d.y2, 2, CoverConstruction::diagram_x_over_y2},
               CoverData{d.y1, d.z, 2, CoverConstruction::diagram_y1_over_z},
               CoverData{d.y2, d.z, 2, CoverConstruction::diagram_y2_over_z}};
    d.certificate = {true, true};
    return d;
}

CurveModel third_quotient(const DiagramData& diagram) {
    const auto p = diagram.x.base()->p;
    return make_hyperelliptic(diagram.x.base(), prime_poly::mul(diagram.x.f(), diagram.x.g(), p));
}

Integer field_size(const CurveModel& curve, unsigned j) { return ipow(curve.base()->q, j); }

Integer count_points(const CurveModel& curve, unsigned j, const CountOptions& options) {
    if (j < 1) throw Error(Errc::InvalidDegree, "extension degree must be at least 1");
    const Integer q = field_size(curve, j);
    if (curve.kind() == CurveKind::projective_line) return q + 1;
    if (q > options.budget)
        throw Error(Errc::BudgetExceeded, "q^j = " + q.str() + " exceeds budget " + std::to_string(options.budget));

    const auto tables = FieldTables::get(extension_of(curve.base(), j));
    switch (curve.kind()) {
        case CurveKind::hyperelliptic: return Integer(count_hyperelliptic(curve.f(), *tables));
        case CurveKind::biquadratic_total_space: return Integer(count_biquadratic(curve.f(), curve.g(), *tables));
        case CurveKind::smooth_plane: return Integer(count_plane(curve.plane(), curve.plane_degree(), *tables));
        case CurveKind::projective_line: break;
    }
    return q + 1;
}

PointCountSeries count_series(const CurveModel& curve, unsigned m, const CountOptions& options) {
    PointCountSeries series{curve.base()->q, {}};
    series.counts.reserve(m);
    for (unsigned j = 1; j <= m; ++j) series.counts.push_back(count_points(curve, j, options));
    return series;
}

const std::array<CoverData, 4>& covers_of(const DiagramData& diagram) { return diagram.edges; }

CoverData hyperelliptic_cover(const CurveModel& curve) {
    if (curve.kind() != CurveKind::hyperelliptic)
        throw Error(Errc::WrongKind, "expected a hyperelliptic curve, got " + std::string(to_string(curve.kind())));
    return CoverData{curve, make_projective_line(curve.base()), 2, CoverConstruction::hyperelliptic_over_line};
}

CoverData composite_cover(const DiagramData& diagram) {
    return CoverData{diagram.x, diagram.z, 4, CoverConstruction::diagram_x_over_z};
}

}  // namespace frobgram

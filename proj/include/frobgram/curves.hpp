#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobgram/finite_field.hpp"
#include "frobgram/prime_poly.hpp"

namespace frobgram {

enum class CurveKind { projective_line, hyperelliptic, smooth_plane, biquadratic_total_space };

std::string_view to_string(CurveKind kind) noexcept;

/// c * x^ex * y^ey * z^ez with c in F_p.
struct Monomial {
    std::uint32_t coefficient = 0;
    std::array<unsigned, 3> exponents{};

    unsigned total_degree() const noexcept { return exponents[0] + exponents[1] + exponents[2]; }
    bool operator==(const Monomial&) const = default;
};

/// Homogeneous trivariate polynomial over F_p in canonical form: like terms merged,
/// zero terms dropped, exponent tuples strictly decreasing lexicographically.
using PlanePoly = std::vector<Monomial>;

PlanePoly canonical_plane_poly(std::vector<Monomial> terms, std::uint32_t p);

struct DiagramData;

/// One of the four explicit curve families, always the smooth projective model.
/// Coefficients live in the prime field F_p of the base field.
class CurveModel {
   public:
    CurveKind kind() const noexcept { return kind_; }
    const FieldPtr& base() const noexcept { return base_; }
    unsigned genus() const noexcept { return genus_; }
    const std::string& label() const noexcept { return label_; }

    /// hyperelliptic: y^2 = f; biquadratic: y1^2 = f, y2^2 = g.
    const PrimePoly& f() const noexcept { return f_; }
    const PrimePoly& g() const noexcept { return g_; }
    /// smooth_plane only.
    const PlanePoly& plane() const noexcept { return plane_; }
    unsigned plane_degree() const noexcept { return plane_degree_; }

    void set_label(std::string label) { label_ = std::move(label); }

    bool operator==(const CurveModel& other) const;

   private:
    friend CurveModel make_projective_line(const FieldPtr&);
    friend CurveModel make_hyperelliptic(const FieldPtr&, PrimePoly);
    friend CurveModel make_smooth_plane(const FieldPtr&, PlanePoly, unsigned, std::uint64_t);
    friend DiagramData make_biquadratic(const FieldPtr&, PrimePoly, PrimePoly);

    CurveKind kind_ = CurveKind::projective_line;
    FieldPtr base_;
    PrimePoly f_, g_;
    PlanePoly plane_;
    unsigned plane_degree_ = 0;
    unsigned genus_ = 0;
    std::string label_;
};

enum class CoverConstruction {
    hyperelliptic_over_line,
    diagram_x_over_y1,
    diagram_x_over_y2,
    diagram_y1_over_z,
    diagram_y2_over_z,
    diagram_x_over_z,
};

std::string_view to_string(CoverConstruction construction) noexcept;

struct CoverData {
    CurveModel source;
    CurveModel target;
    unsigned degree = 0;
    CoverConstruction construction = CoverConstruction::hyperelliptic_over_line;
};

struct DiagramCertificate {
    bool absolutely_irreducible = false;
    bool smooth = false;

    bool valid() const noexcept { return absolutely_irreducible && smooth; }
};

/// X -> Y1, Y2 -> Z with X the fiber product Y1 x_Z Y2.
struct DiagramData {
    CurveModel x, y1, y2, z;
    std::array<CoverData, 4> edges;  // X->Y1, X->Y2, Y1->Z, Y2->Z
    DiagramCertificate certificate;
};

/// PointCountSeries: counts[j-1] = #X(F_{q^j}).
struct PointCountSeries {
    Integer q;
    std::vector<Integer> counts;
};

struct CountOptions {
    /// Maximum number of field elements scanned for one count.
    std::uint64_t budget = 1'000'000;
};

class SingularCurveError : public Error {
   public:
    /// extension_degree == 0 means the singular locus is nonempty but no witness
    /// was located within the enumeration budget.
    SingularCurveError(const std::string& what, std::optional<std::array<FieldElement, 3>> witness,
                       unsigned extension_degree)
        : Error(Errc::SingularCurve, what), witness_(std::move(witness)), extension_degree_(extension_degree) {}

    const std::optional<std::array<FieldElement, 3>>& witness() const noexcept { return witness_; }
    unsigned extension_degree() const noexcept { return extension_degree_; }

   private:
    std::optional<std::array<FieldElement, 3>> witness_;
    unsigned extension_degree_;
};

CurveModel make_projective_line(const FieldPtr& field);
CurveModel make_hyperelliptic(const FieldPtr& field, PrimePoly f);
/// Rejects singular forms. `witness_budget` bounds the point scan that looks for an
/// explicit singular point once smoothness has been refuted (0 skips the search).
CurveModel make_smooth_plane(const FieldPtr& field, PlanePoly poly, unsigned degree,
                             std::uint64_t witness_budget = CountOptions{}.budget);
DiagramData make_biquadratic(const FieldPtr& field, PrimePoly f, PrimePoly g);

/// Y3: y^2 = f*g, the third quadratic subcover of a biquadratic diagram.
CurveModel third_quotient(const DiagramData& diagram);

/// Exact #X(F_{q^j}) on the smooth projective model.
Integer count_points(const CurveModel& curve, unsigned j, const CountOptions& options = {});
PointCountSeries count_series(const CurveModel& curve, unsigned m, const CountOptions& options = {});

const std::array<CoverData, 4>& covers_of(const DiagramData& diagram);
CoverData hyperelliptic_cover(const CurveModel& curve);
/// The degree-4 composite X -> Z.
CoverData composite_cover(const DiagramData& diagram);

/// q^j as an exact integer.
Integer field_size(const CurveModel& curve, unsigned j);

namespace detail {

/// True iff F, dF/dx, dF/dy, dF/dz have no common zero in P^2 over the algebraic
/// closure of F_p (weak Nullstellensatz on the three affine charts).
bool plane_singular_locus_empty(const PlanePoly& poly, std::uint32_t p);

PlanePoly plane_partial(const PlanePoly& poly, unsigned variable, std::uint32_t p);

}  // namespace detail
}  // namespace frobgram

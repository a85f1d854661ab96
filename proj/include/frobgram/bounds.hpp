#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frobgram/curves.hpp"
#include "frobgram/integer.hpp"

namespace frobgram {

struct WeilInterval {
    Integer lo, hi;

    bool contains(const Integer& n) const { return lo <= n && n <= hi; }
};

/// [q^j + 1 - isqrt(4 g^2 q^j), q^j + 1 + isqrt(4 g^2 q^j)].
WeilInterval weil_interval(const Integer& q, unsigned g, unsigned j);

/// One exact comparison lhs <= rhs. Margins live in the scale named by `scale`:
///   "squared"  both sides of |a| <= b*sqrt(q) squared,
///   "cleared"  denominators cleared (margin divided back by the genus gap),
///   "minor"    lhs = 0 and rhs = smallest principal minor of a Gram matrix.
struct CheckRecord {
    std::string name;
    Integer lhs, rhs;
    bool holds = false;
    Rational margin;
    std::string scale;

    bool operator==(const CheckRecord&) const = default;
};

struct BoundReport {
    std::string subject;
    std::vector<CheckRecord> checks;

    bool all_hold() const;
};

/// (N - q^j - 1)^2 <= 4 g^2 q^j.
CheckRecord check_weil(const Integer& q, unsigned g, unsigned j, const Integer& n);

/// (N1X - N1Y)^2 <= 4 (gX - gY)^2 q.
CheckRecord check_relative(const Integer& q, unsigned g_x, unsigned g_y, const Integer& n1_x, const Integer& n1_y);

/// (N2X - N2Y)(gX - gY) <= 2 (gX - gY)^2 q - (N1X - N1Y)^2, margin (rhs - lhs) / (gX - gY).
CheckRecord check_relative_second(const Integer& q, unsigned g_x, unsigned g_y,
                                  const std::pair<Integer, Integer>& counts_x,
                                  const std::pair<Integer, Integer>& counts_y);

/// (NX - NY1 - NY2 + NZ)^2 <= 4 G^2 q, G = gX - gY1 - gY2 + gZ.
CheckRecord check_diagram(const Integer& q, const std::array<unsigned, 4>& genera,
                          const std::array<Integer, 4>& counts, const DiagramCertificate& certificate);

using Subject = std::variant<CurveModel, CoverData, DiagramData>;

std::string subject_label(const Subject& subject);

/// Counts every curve involved up to max(m, 2) and runs all applicable checks in a fixed order.
BoundReport full_report(const Subject& subject, unsigned m, const CountOptions& options = {});

}  // namespace frobgram

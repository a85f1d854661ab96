#include <gtest/gtest.h>

#include "frobgram/bounds.hpp"
#include "frobgram/corpus.hpp"
#include "frobgram/gram.hpp"
#include "oracles.hpp"

using namespace frobgram;
using oracle::ints;

namespace {

const DiagramCertificate kValid{true, true};

const CheckRecord* find(const BoundReport& report, const std::string& name) {
    for (const auto& c : report.checks)
        if (c.name == name) return &c;
    return nullptr;
}

// Curves with genus >= 1 over small prime fields, paired with their line covers.
std::vector<CurveModel> random_hyperelliptic(std::uint64_t seed, int wanted) {
    Lcg rng(seed);
    const std::vector<FieldPtr> fields{construct_field(3, 1), construct_field(5, 1), construct_field(7, 1)};
    std::vector<CurveModel> out;
    while (static_cast<int>(out.size()) < wanted) {
        const FieldPtr& field = fields[rng.below(3)];
        const PrimePoly f = oracle::random_poly(rng, rng.between(3, 6), field->p);
        if (prime_poly::is_squarefree(f, field->p)) out.push_back(make_hyperelliptic(field, f));
    }
    return out;
}

std::vector<DiagramData> random_diagrams(std::uint64_t seed, int wanted) {
    Lcg rng(seed);
    const std::vector<FieldPtr> fields{construct_field(3, 1), construct_field(5, 1), construct_field(7, 1)};
    std::vector<DiagramData> out;
    while (static_cast<int>(out.size()) < wanted) {
        const FieldPtr& field = fields[rng.below(3)];
        const PrimePoly f = oracle::random_poly(rng, 2 * rng.between(0, 2) + 1, field->p);
        const PrimePoly g = oracle::random_poly(rng, 2 * rng.between(1, 2), field->p);
        try {
            out.push_back(make_biquadratic(field, f, g));
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

TEST(WeilInterval, WorkedExamples) {
    const auto a = weil_interval(3, 1, 1);
    EXPECT_EQ(a.lo, 1);
    EXPECT_EQ(a.hi, 7);
    const auto b = weil_interval(4, 1, 1);
    EXPECT_EQ(b.lo, 1);
    EXPECT_EQ(b.hi, 9);
    for (long q : {2, 3, 7, 25})
        for (unsigned j = 1; j <= 3; ++j) {
            const auto c = weil_interval(q, 0, j);
            EXPECT_EQ(c.lo, c.hi);
            EXPECT_EQ(c.lo, ipow(q, j) + 1);
        }
    const auto d = weil_interval(3, 1, 2);
    EXPECT_EQ(d.lo, 4);
    EXPECT_EQ(d.hi, 16);
}

TEST(CheckWeil, SupersingularAttainsUpperEnd) {
    const auto c = check_weil(3, 1, 2, 16);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.margin, 0);
    EXPECT_EQ(c.scale, "squared");
    EXPECT_FALSE(check_weil(3, 1, 2, 17).holds);
}

TEST(CheckRelative, WorkedExamples) {
    const auto a = check_relative(3, 1, 0, 4, 4);
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.margin, 12);
    const auto b = check_relative(3, 1, 0, 7, 4);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.margin, 3);
    EXPECT_EQ(b.lhs, 9);
    EXPECT_EQ(b.rhs, 12);
    const auto c = check_relative(5, 2, 2, 8, 8);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.margin, 0);
    try {
        check_relative(3, 0, 1, 4, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::GenusOrder);
    }
}

TEST(CheckRelativeSecond, WorkedExamples) {
    const auto a = check_relative_second(3, 1, 0, {4, 16}, {4, 10});
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.margin, 0);
    EXPECT_EQ(a.scale, "cleared");
    const auto b = check_relative_second(3, 1, 0, {7, 7}, {4, 10});
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.margin, 0);
    try {
        check_relative_second(3, 1, 1, {4, 16}, {4, 16});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EqualGenera);
    }
}

TEST(CheckRelativeSecond, MarginIsDividedByGenusGap) {
    // gap 2: lhs = (N2X - N2Y) * 2, rhs = 8q - (N1X - N1Y)^2.
    const auto c = check_relative_second(3, 2, 0, {4, 10}, {4, 10});
    EXPECT_EQ(c.lhs, 0);
    EXPECT_EQ(c.rhs, 24);
    EXPECT_EQ(c.margin, 12);
}

TEST(CheckDiagram, WorkedExamples) {
    const auto a = check_diagram(3, {3, 1, 0, 0}, {2, 4, 4, 4}, kValid);
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.lhs, 4);
    EXPECT_EQ(a.rhs, 48);
    EXPECT_EQ(a.margin, 44);
    const auto b = check_diagram(7, {0, 0, 0, 0}, {8, 8, 8, 8}, kValid);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.margin, 0);
    for (const DiagramCertificate bad : {DiagramCertificate{false, true}, DiagramCertificate{true, false}}) {
        try {
            check_diagram(3, {3, 1, 0, 0}, {2, 4, 4, 4}, bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::InvalidDiagram);
        }
    }
}

TEST(FullReport, HyperellipticWeilChecks) {
    const auto curve = make_hyperelliptic(construct_field(3, 1), {0, 1, 0, 1});
    const auto report = full_report(curve, 2);
    EXPECT_TRUE(report.all_hold());
    ASSERT_EQ(report.checks.size(), 3u);
    EXPECT_EQ(report.checks[0].name, "weil[j=1]");
    EXPECT_EQ(report.checks[0].margin, 12);
    EXPECT_EQ(report.checks[1].name, "weil[j=2]");
    EXPECT_EQ(report.checks[1].margin, 0);
    EXPECT_EQ(report.checks[2].name, "psd[absolute]");
}

TEST(FullReport, ProjectiveLineHasZeroMargins) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {5, 2}}) {
        const auto report = full_report(make_projective_line(construct_field(p, k)), 3);
        EXPECT_TRUE(report.all_hold());
        for (const auto& c : report.checks) EXPECT_EQ(c.margin, 0) << c.name;
    }
}

TEST(FullReport, CoverChecks) {
    const auto curve = make_hyperelliptic(construct_field(3, 1), {0, 1, 0, 1});
    const auto report = full_report(hyperelliptic_cover(curve), 2);
    EXPECT_TRUE(report.all_hold());
    ASSERT_NE(find(report, "relative[X/Y]"), nullptr);
    EXPECT_EQ(find(report, "relative[X/Y]")->margin, 12);
    ASSERT_NE(find(report, "relative_second[X/Y]"), nullptr);
    EXPECT_EQ(find(report, "relative_second[X/Y]")->margin, 0);
    EXPECT_NE(find(report, "psd[relative,X/Y]"), nullptr);
}

TEST(FullReport, DiagramComposesPriorChecks) {
    const auto d = make_biquadratic(construct_field(3, 1), {0, 1, 0, 1}, {2, 1, 1});
    const auto report = full_report(d, 3);
    EXPECT_TRUE(report.all_hold());
    const CheckRecord* diagram = nullptr;
    int weil_j1 = 0;
    for (const auto& c : report.checks) {
        if (c.name.rfind("diagram", 0) == 0) diagram = &c;
        if (c.name.rfind("weil[", 0) == 0 && c.name.find("j=1]") != std::string::npos) ++weil_j1;
    }
    ASSERT_NE(diagram, nullptr);
    EXPECT_EQ(diagram->margin, 44);
    EXPECT_EQ(weil_j1, 4);
    EXPECT_NE(find(report, "psd[diagram]"), nullptr);
    EXPECT_EQ(report.checks.back().name, "psd[diagram]");
}

TEST(BoundsProperties, HoldsFlagMatchesStoredValues) {
    for (const auto& curve : random_hyperelliptic(3, 15)) {
        const auto report = full_report(hyperelliptic_cover(curve), 3);
        for (const auto& c : report.checks) {
            EXPECT_EQ(c.holds, c.lhs <= c.rhs) << c.name;
            EXPECT_EQ(c.holds, c.margin >= 0) << c.name;
            EXPECT_TRUE(c.holds) << report.subject << " " << c.name;
        }
    }
}

// The absolute Weil check is the relative check against the line over F_{q^j}.
TEST(BoundsProperties, WeilEqualsRelativeOverLine) {
    Lcg rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const long q = std::vector<long>{2, 3, 4, 5, 7, 9}[rng.below(6)];
        const unsigned g = rng.below(5), j = rng.between(1, 3);
        const Integer qj = ipow(q, j);
        const Integer n = qj + 1 + Integer(static_cast<long>(rng.below(4 * g * j + 9)) - 2 * static_cast<long>(g * j) - 4);
        const auto w = check_weil(q, g, j, n);
        const auto r = check_relative(qj, g, 0, n, qj + 1);
        EXPECT_EQ(w.lhs, r.lhs);
        EXPECT_EQ(w.rhs, r.rhs);
        EXPECT_EQ(w.holds, r.holds);
        EXPECT_EQ(w.margin, r.margin);
    }
}

TEST(BoundsProperties, RelativeAgreesWithSchwarzAndCombinedGram) {
    for (const auto& curve : random_hyperelliptic(13, 20)) {
        const auto cover = hyperelliptic_cover(curve);
        const auto q = curve.base()->q;
        const auto cx = count_series(cover.source, 2).counts, cy = count_series(cover.target, 2).counts;
        const unsigned gx = cover.source.genus(), gy = cover.target.genus();
        const auto rel = check_relative(q, gx, gy, cx[0], cy[0]);
        const auto g1 = gram_relative(q, gx, gy, cx, cy, 1);
        EXPECT_EQ(rel.margin, Rational(schwarz_margin(g1, 0, 1)));

        const auto second = check_relative_second(q, gx, gy, {cx[0], cx[1]}, {cy[0], cy[1]});
        const auto g2 = gram_relative(q, gx, gy, cx, cy, 2);
        const auto combined =
            combined_vector_gram(g2, std::vector<std::vector<Integer>>{{q, 0, 1}, {0, 1, 0}});
        const Integer det = bareiss_determinant(combined.entries);
        EXPECT_EQ(Rational(det), Rational(4 * q * q * (gx - gy)) * second.margin);
        EXPECT_EQ(second.holds, det >= 0);
    }
}

TEST(BoundsProperties, DiagramAgreesWithSchwarz) {
    for (const auto& d : random_diagrams(19, 20)) {
        const auto q = d.x.base()->q;
        const std::array<unsigned, 4> genera{d.x.genus(), d.y1.genus(), d.y2.genus(), d.z.genus()};
        const auto cx = count_series(d.x, 1).counts, c1 = count_series(d.y1, 1).counts,
                   c2 = count_series(d.y2, 1).counts, cz = count_series(d.z, 1).counts;
        const auto check = check_diagram(q, genera, {cx[0], c1[0], c2[0], cz[0]}, d.certificate);
        const auto gram = gram_diagram(q, genera, {cx, c1, c2, cz}, 1);
        EXPECT_TRUE(check.holds);
        EXPECT_EQ(check.margin, Rational(schwarz_margin(gram, 0, 1)));
    }
}

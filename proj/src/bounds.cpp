#include "frobgram/bounds.hpp"

#include <algorithm>

#include "frobgram/gram.hpp"

namespace frobgram {

namespace {

CheckRecord make_record(std::string name, Integer lhs, Integer rhs, std::string scale) {
    CheckRecord r;
    r.name = std::move(name);
    r.holds = lhs <= rhs;
    r.margin = Rational(rhs - lhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.scale = std::move(scale);
    return r;
}

CheckRecord psd_record(std::string name, const GramMatrix& gram) {
    const auto verdict = psd_check(gram);
    CheckRecord r = make_record(std::move(name), 0, verdict.min_minor, "minor");
    r.holds = verdict.psd;
    return r;
}

struct Counted {
    const CurveModel* curve;
    std::string tag;
    std::vector<Integer> counts;
};

Counted count(const CurveModel& curve, std::string tag, unsigned m, const CountOptions& options) {
    return Counted{&curve, std::move(tag), count_series(curve, m, options).counts};
}

void add_weil(BoundReport& report, const Counted& c, unsigned m, bool tagged) {
    const Integer& q = c.curve->base()->q;
    for (unsigned j = 1; j <= m; ++j) {
        auto r = check_weil(q, c.curve->genus(), j, c.counts[j - 1]);
        r.name = tagged ? "weil[" + c.tag + ",j=" + std::to_string(j) + "]" : "weil[j=" + std::to_string(j) + "]";
        report.checks.push_back(std::move(r));
    }
}

void add_absolute_psd(BoundReport& report, const Counted& c, unsigned m, bool tagged) {
    const auto gram = gram_absolute(c.curve->base()->q, c.curve->genus(), c.counts, m);
    report.checks.push_back(psd_record(tagged ? "psd[absolute," + c.tag + "]" : "psd[absolute]", gram));
}

void add_cover(BoundReport& report, const Counted& x, const Counted& y, unsigned m) {
    const Integer& q = x.curve->base()->q;
    const unsigned gx = x.curve->genus(), gy = y.curve->genus();
    const std::string pair = x.tag + "/" + y.tag;

    auto rel = check_relative(q, gx, gy, x.counts[0], y.counts[0]);
    rel.name = "relative[" + pair + "]";
    report.checks.push_back(std::move(rel));
    if (gx != gy) {
        auto second = check_relative_second(q, gx, gy, {x.counts[0], x.counts[1]}, {y.counts[0], y.counts[1]});
        second.name = "relative_second[" + pair + "]";
        report.checks.push_back(std::move(second));
    }
    report.checks.push_back(
        psd_record("psd[relative," + pair + "]", gram_relative(q, gx, gy, x.counts, y.counts, m)));
}

}  // namespace

WeilInterval weil_interval(const Integer& q, unsigned g, unsigned j) {
    const Integer qj = ipow(q, j);
    const Integer width = isqrt(Integer(4) * g * g * qj);
    return {qj + 1 - width, qj + 1 + width};
}

bool BoundReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.holds; });
}

CheckRecord check_weil(const Integer& q, unsigned g, unsigned j, const Integer& n) {
    const Integer qj = ipow(q, j);
    const Integer t = n - qj - 1;
    return make_record("weil[j=" + std::to_string(j) + "]", t * t, Integer(4) * g * g * qj, "squared");
}

CheckRecord check_relative(const Integer& q, unsigned g_x, unsigned g_y, const Integer& n1_x, const Integer& n1_y) {
    if (g_x < g_y)
        throw Error(Errc::GenusOrder, "g_X = " + std::to_string(g_x) + " < g_Y = " + std::to_string(g_y));
    const Integer gap = g_x - g_y;
    const Integer delta = n1_x - n1_y;
    return make_record("relative", delta * delta, 4 * gap * gap * q, "squared");
}

CheckRecord check_relative_second(const Integer& q, unsigned g_x, unsigned g_y,
                                  const std::pair<Integer, Integer>& counts_x,
                                  const std::pair<Integer, Integer>& counts_y) {
    if (g_x == g_y) throw Error(Errc::EqualGenera, "the second-order bound needs g_X != g_Y");
    if (g_x < g_y)
        throw Error(Errc::GenusOrder, "g_X = " + std::to_string(g_x) + " < g_Y = " + std::to_string(g_y));
    const Integer gap = g_x - g_y;
    const Integer delta1 = counts_x.first - counts_y.first;
    const Integer delta2 = counts_x.second - counts_y.second;
    CheckRecord r = make_record("relative_second", delta2 * gap, 2 * gap * gap * q - delta1 * delta1, "cleared");
    r.margin /= Rational(gap);
    return r;
}

CheckRecord check_diagram(const Integer& q, const std::array<unsigned, 4>& genera,
                          const std::array<Integer, 4>& counts, const DiagramCertificate& certificate) {
    if (!certificate.valid())
        throw Error(Errc::InvalidDiagram, std::string("fiber product not certified") +
                                              (certificate.absolutely_irreducible ? "" : " absolutely irreducible") +
                                              (certificate.smooth ? "" : " smooth"));
    const long big_g = static_cast<long>(genera[0]) - genera[1] - genera[2] + genera[3];
    if (big_g < 0)
        throw Error(Errc::NegativeRelativeGenus, "g_X - g_Y1 - g_Y2 + g_Z = " + std::to_string(big_g));
    const Integer d = counts[0] - counts[1] - counts[2] + counts[3];
    return make_record("diagram", d * d, 4 * Integer(big_g) * Integer(big_g) * q, "squared");
}

std::string subject_label(const Subject& subject) {
    struct Visitor {
        std::string operator()(const CurveModel& c) const { return c.label(); }
        std::string operator()(const CoverData& c) const { return c.source.label() + " -> " + c.target.label(); }
        std::string operator()(const DiagramData& d) const { return d.x.label(); }
    };
    return std::visit(Visitor{}, subject);
}

BoundReport full_report(const Subject& subject, unsigned m, const CountOptions& options) {
    if (m < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
    BoundReport report;
    report.subject = subject_label(subject);
    const unsigned depth = std::max(m, 2u);

    if (const auto* curve = std::get_if<CurveModel>(&subject)) {
        const auto c = count(*curve, "X", depth, options);
        add_weil(report, c, m, false);
        add_absolute_psd(report, c, m, false);
    } else if (const auto* cover = std::get_if<CoverData>(&subject)) {
        const auto x = count(cover->source, "X", depth, options);
        const auto y = count(cover->target, "Y", depth, options);
        add_weil(report, x, m, true);
        add_weil(report, y, m, true);
        add_cover(report, x, y, m);
        add_absolute_psd(report, x, m, true);
        add_absolute_psd(report, y, m, true);
    } else {
        const auto& d = std::get<DiagramData>(subject);
        if (!d.certificate.valid())
            check_diagram(d.x.base()->q, {}, {}, d.certificate);  // throws InvalidDiagram
        const std::array<Counted, 4> c{count(d.x, "X", depth, options), count(d.y1, "Y1", depth, options),
                                       count(d.y2, "Y2", depth, options), count(d.z, "Z", depth, options)};
        for (const auto& curve : c) add_weil(report, curve, m, true);
        add_cover(report, c[0], c[1], m);
        add_cover(report, c[0], c[2], m);
        add_cover(report, c[1], c[3], m);
        add_cover(report, c[2], c[3], m);
        add_cover(report, c[0], c[3], m);

        const Integer& q = d.x.base()->q;
        const std::array<unsigned, 4> genera{d.x.genus(), d.y1.genus(), d.y2.genus(), d.z.genus()};
        report.checks.push_back(
            check_diagram(q, genera, {c[0].counts[0], c[1].counts[0], c[2].counts[0], c[3].counts[0]}, d.certificate));
        for (const auto& curve : c) add_absolute_psd(report, curve, m, true);
        report.checks.push_back(psd_record(
            "psd[diagram]", gram_diagram(q, genera, {c[0].counts, c[1].counts, c[2].counts, c[3].counts}, m)));
    }
    return report;
}

}  // namespace frobgram

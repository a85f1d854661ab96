// frobgram: point counts, zeta data, Frobenius Gram matrices and bound reports
// for curves over finite fields.
//
// Exit codes: 0 success, 1 a check failed (or no consistent genus),
//             2 invalid input, 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frobgram/bounds.hpp"
#include "frobgram/corpus.hpp"
#include "frobgram/feasibility.hpp"
#include "frobgram/gram.hpp"
#include "frobgram/io.hpp"
#include "frobgram/zeta.hpp"

using namespace frobgram;

namespace {

struct Globals {
    std::uint64_t budget = CountOptions{}.budget;
    double tol = RiemannHypothesisOptions{}.tolerance;
    std::string format = "text";
};

std::string join(const std::vector<Integer>& values, const char* open = "[", const char* close = "]") {
    std::string out = open;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
    return out + close;
}

const CurveModel& primary_curve(const ManifestSubject& subject) {
    if (const auto* c = std::get_if<CurveModel>(&subject)) return *c;
    return std::get<DiagramData>(subject).x;
}

std::string format_matrix(const IntMatrix& m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r ? ",[" : "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) out += (c ? "," : "") + m(r, c).str();
        out += "]";
    }
    return out + "]";
}

int cmd_count(const Globals& globals, const std::string& path, unsigned ext) {
    const auto subject = read_manifest(path);
    const Integer n = count_points(primary_curve(subject), ext, CountOptions{globals.budget});
    std::cout << "N_" << ext << "=" << n.str() << "\n";
    return 0;
}

int cmd_zeta(const Globals& globals, const std::string& path, unsigned max_ext, const std::string& q_text,
             const std::vector<std::string>& count_text) {
    Integer q;
    std::vector<Integer> counts;
    if (!path.empty()) {
        const auto subject = read_manifest(path);
        const CurveModel& curve = primary_curve(subject);
        q = curve.base()->q;
        const unsigned m = max_ext ? max_ext : 2 * curve.genus() + 2;
        counts = count_series(curve, m, CountOptions{globals.budget}).counts;
    } else {
        if (q_text.empty() || count_text.empty())
            throw Error(Errc::InvalidArgument, "zeta needs a manifest or --q with --counts");
        try {
            q = Integer(q_text);
            for (const auto& c : count_text) counts.emplace_back(c);
        } catch (const std::exception&) {
            throw Error(Errc::ParseError, "--q and --counts must be integers");
        }
        if (q < 2) throw Error(Errc::InvalidArgument, "q must be at least 2");
    }

    RiemannHypothesisOptions rh;
    rh.tolerance = globals.tol;
    std::cout << "q=" << q.str() << "\n" << "counts=" << join(counts) << "\n";
    const auto genus = infer_genus(q, counts, rh);
    if (!genus) {
        std::cout << "genus=none\n";
        return 1;
    }
    const auto l = l_from_counts(q, *genus, std::span<const Integer>(counts).first(*genus));
    const auto report = check_riemann_hypothesis(l, rh);
    char deviation[64];
    std::snprintf(deviation, sizeof deviation, "%.3e", report.max_deviation);
    std::cout << "L=" << join(l.coefficients) << "\n"
              << "rh=" << (report.pass ? "pass" : "fail") << "\n"
              << "rh_max_deviation=" << deviation << "\n"
              << "genus=" << *genus << "\n";
    return report.pass ? 0 : 1;
}

GramMatrix build_gram(const ManifestSubject& subject, unsigned m, bool cover, const CountOptions& options) {
    if (const auto* d = std::get_if<DiagramData>(&subject)) {
        const Integer& q = d->x.base()->q;
        const auto cx = count_series(d->x, m, options).counts;
        const auto c1 = count_series(d->y1, m, options).counts;
        const auto c2 = count_series(d->y2, m, options).counts;
        const auto cz = count_series(d->z, m, options).counts;
        return gram_diagram(q, {d->x.genus(), d->y1.genus(), d->y2.genus(), d->z.genus()}, {cx, c1, c2, cz}, m);
    }
    const auto& curve = std::get<CurveModel>(subject);
    const auto cx = count_series(curve, m, options).counts;
    if (!cover) return gram_absolute(curve.base()->q, curve.genus(), cx, m);
    const CoverData data = hyperelliptic_cover(curve);
    const auto cy = count_series(data.target, m, options).counts;
    return gram_relative(curve.base()->q, curve.genus(), 0, cx, cy, m);
}

int cmd_gram(const Globals& globals, const std::string& path, unsigned m, bool cover) {
    const auto subject = read_manifest(path);
    const GramMatrix gram = build_gram(subject, m, cover, CountOptions{globals.budget});
    const auto verdict = psd_check(gram);
    const Integer det = bareiss_determinant(gram.entries);
    if (globals.format == "json") {
        Json doc;
        doc["kind"] = std::string(to_string(gram.kind));
        doc["q"] = gram.q.str();
        doc["labels"] = gram.labels;
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < gram.size(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < gram.size(); ++c) row.push_back(gram.entries(r, c).str());
            rows.push_back(std::move(row));
        }
        doc["entries"] = std::move(rows);
        doc["determinant"] = det.str();
        doc["psd"] = verdict.psd;
        if (verdict.witness) doc["witness"] = *verdict.witness;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "kind=" << to_string(gram.kind) << "\n"
                  << "gram=" << format_matrix(gram.entries) << "\n"
                  << "det=" << det.str() << "\n"
                  << "psd=" << (verdict.psd ? "true" : "false") << "\n";
        if (verdict.witness) {
            std::string w = "{";
            for (std::size_t i = 0; i < verdict.witness->size(); ++i)
                w += (i ? "," : "") + std::to_string((*verdict.witness)[i]);
            std::cout << "witness=" << w << "}\n";
        }
    }
    return verdict.psd ? 0 : 1;
}

int cmd_bounds(const Globals& globals, const std::string& path, unsigned m, bool cover, const std::string& out) {
    const auto subject = read_manifest(path);
    Subject target = std::visit([](const auto& s) -> Subject { return s; }, subject);
    if (cover) {
        const auto* curve = std::get_if<CurveModel>(&subject);
        if (!curve) throw Error(Errc::WrongKind, "--cover applies to hyperelliptic manifests");
        target = hyperelliptic_cover(*curve);
    }
    const BoundReport report = full_report(target, m, CountOptions{globals.budget});

    std::string text;
    if (globals.format == "csv") {
        text = csv_header() + csv_rows(report);
    } else if (globals.format == "json") {
        text = report_json(report).dump(2) + "\n";
    } else {
        text = "subject=" + report.subject + "\n";
        for (const auto& c : report.checks)
            text += c.name + " " + (c.holds ? "holds" : "FAILS") + " lhs=" + c.lhs.str() + " rhs=" + c.rhs.str() +
                    " margin=" + to_string(c.margin) + " (" + c.scale + ")\n";
        text += std::string("all_hold=") + (report.all_hold() ? "true" : "false") + "\n";
    }
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw Error(Errc::InvalidArgument, "cannot write " + out);
        file << text;
    }
    return report.all_hold() ? 0 : 1;
}

int cmd_feasibility(const std::string& q_text, unsigned g, unsigned m, bool no_place) {
    Integer q;
    try {
        q = Integer(q_text);
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, "q must be an integer");
    }
    FeasibilityProblem problem{q, g, m, !no_place};
    const auto result = max_n1(problem);
    std::cout << "max_N1=" << result.max_n1.str() << "\n"
              << "witness=" << join(result.witness, "(", ")") << "\n"
              << "scanned=" << result.scanned << "\n"
              << "weil_hi=" << weil_interval(q, g, 1).hi.str() << "\n";
    if (g >= 1) {
        const auto ihara = ihara_closed_form(q, g);
        char approx[64];
        std::snprintf(approx, sizeof approx, "%.6f", ihara.approximate());
        std::cout << "ihara_floor=" << ihara.floor.str() << "\n"
                  << "ihara_value=" << approx << "\n"
                  << "ihara_radicand=" << ihara.radicand.str() << "\n";
    }
    return 0;
}

int cmd_corpus(const Globals& globals, const std::string& spec_path, const std::string& out, unsigned jobs,
               bool budget_given) {
    CorpusSpec spec = read_corpus_spec(spec_path);
    if (budget_given) spec.budget = globals.budget;
    RiemannHypothesisOptions rh;
    rh.tolerance = globals.tol;
    const auto results = run_corpus(spec, jobs, rh);
    write_corpus(out, spec, results);
    std::size_t passing = 0;
    for (const auto& r : results) passing += r.all_hold() ? 1 : 0;
    std::cout << "instances=" << results.size() << "\n" << "passing=" << passing << "\n";
    return passing == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts, zeta data, Frobenius Gram matrices and bounds for curves over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited by subcommands: global flags may follow them
    Globals globals;
    auto* budget_opt = app.add_option("--budget", globals.budget, "Maximum field size enumerated per count");
    app.add_option("--tol", globals.tol, "Riemann hypothesis tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    std::string manifest, spec_path, out, q_text;
    unsigned ext = 1, max_ext = 0, order = 3, g = 0, m = 2, jobs = 1;
    bool cover = false, no_place = false;
    std::vector<std::string> counts;

    auto* count = app.add_subcommand("count", "Print N_j for a manifest");
    count->add_option("manifest", manifest)->required();
    count->add_option("--ext", ext, "Extension degree j")->check(CLI::Range(1u, 64u));

    auto* zeta = app.add_subcommand("zeta", "L-polynomial, Riemann hypothesis check and genus");
    zeta->add_option("manifest", manifest);
    zeta->add_option("--max-ext", max_ext, "Number of counts to use (default 2g + 2)")->check(CLI::Range(1u, 64u));
    zeta->add_option("--q", q_text, "Field size, with --counts instead of a manifest");
    zeta->add_option("--counts", counts, "N_1,N_2,...")->delimiter(',');

    auto* gram = app.add_subcommand("gram", "Frobenius Gram matrix and PSD verdict");
    gram->add_option("manifest", manifest)->required();
    gram->add_option("--order", order, "Highest Frobenius power m")->check(CLI::Range(1u, 7u));
    gram->add_flag("--cover", cover, "Relative Gram matrix of y^2 = f over the line");

    auto* bounds = app.add_subcommand("bounds", "Bound report for a curve, cover or diagram");
    bounds->add_option("manifest", manifest)->required();
    bounds->add_option("--order", order, "Highest extension degree checked")->check(CLI::Range(1u, 7u));
    bounds->add_option("--out", out, "Write the report to a file");
    bounds->add_flag("--cover", cover, "Treat a hyperelliptic curve as a double cover of the line");

    auto* feas = app.add_subcommand("feasibility", "Largest N_1 compatible with the Gram constraints");
    feas->add_option("q", q_text)->required();
    feas->add_option("g", g)->required();
    feas->add_option("m", m)->required();
    feas->add_flag("--no-place-constraints", no_place, "Use the PSD condition alone");

    auto* corpus = app.add_subcommand("corpus", "Seeded corpus runs");
    auto* run = corpus->add_subcommand("run", "Generate a corpus and check every bound and invariant");
    corpus->require_subcommand(1);
    run->add_option("spec", spec_path)->required();
    run->add_option("--out", out, "Output directory")->required();
    run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) return cmd_count(globals, manifest, ext);
        if (*zeta) return cmd_zeta(globals, manifest, max_ext, q_text, counts);
        if (*gram) return cmd_gram(globals, manifest, order, cover);
        if (*bounds) return cmd_bounds(globals, manifest, order, cover, out);
        if (*feas) return cmd_feasibility(q_text, g, m, no_place);
        if (*run) return cmd_corpus(globals, spec_path, out, jobs, budget_opt->count() > 0);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

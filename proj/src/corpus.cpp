#include "frobgram/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "frobgram/gram.hpp"

namespace frobgram {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

DegreeRange parse_range(const Json& v, const std::string& name) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned())
        parse_error("degrees." + name + " must be [lo, hi] with nonnegative integers");
    DegreeRange r{v[0].get<unsigned>(), v[1].get<unsigned>()};
    if (r.lo > r.hi) throw Error(Errc::InvalidArgument, "degrees." + name + " has lo > hi");
    if (r.hi > 64) throw Error(Errc::InvalidArgument, "degrees." + name + " is too large");
    return r;
}

unsigned hyperelliptic_genus(unsigned d) { return d % 2 == 1 ? (d - 1) / 2 : (d >= 2 ? d / 2 - 1 : 0); }
unsigned plane_genus(unsigned d) { return d >= 2 ? (d - 1) * (d - 2) / 2 : 0; }

// Largest extension degree a curve of genus g needs: the zeta check goes to 2g + 2.
unsigned depth_for(unsigned g, unsigned order) { return std::max({2 * g + 2, order, 2u}); }

bool fits(const Integer& q, unsigned depth, std::uint64_t budget) { return ipow(q, depth) <= budget; }

struct FamilyPlan {
    std::vector<FieldPtr> fields;
    std::vector<unsigned> max_degree;  // per field, already capped by the budget
};

template <typename GenusOf>
FamilyPlan plan_curves(const std::vector<FieldPtr>& fields, DegreeRange range, const CorpusSpec& spec, bool odd_only,
                       GenusOf genus_of, const char* family) {
    FamilyPlan plan;
    bool any_char = false;
    for (const auto& f : fields) {
        if (odd_only && f->p == 2) continue;
        any_char = true;
        unsigned best = 0;
        bool ok = false;
        for (unsigned d = range.lo; d <= range.hi; ++d) {
            if (!fits(f->q, depth_for(genus_of(d), spec.order), spec.budget)) break;
            best = d;
            ok = true;
        }
        if (ok) {
            plan.fields.push_back(f);
            plan.max_degree.push_back(best);
        }
    }
    if (!any_char)
        throw Error(Errc::EvenCharacteristic, std::string(family) + " instances need a field of odd characteristic");
    if (plan.fields.empty())
        throw Error(Errc::BudgetExceeded,
                    std::string("no field admits ") + family + " degree " + std::to_string(range.lo) + " within budget");
    return plan;
}

PrimePoly random_poly(Lcg& rng, unsigned degree, std::uint32_t p) {
    PrimePoly f(degree + 1);
    for (unsigned i = 0; i < degree; ++i) f[i] = rng.below(p);
    f[degree] = rng.between(1, p - 1);
    return f;
}

unsigned random_degree_with_parity(Lcg& rng, DegreeRange range, unsigned parity, unsigned minimum) {
    std::vector<unsigned> options;
    for (unsigned d = std::max(range.lo, minimum); d <= range.hi; ++d)
        if (d % 2 == parity) options.push_back(d);
    if (options.empty()) throw Error(Errc::InvalidArgument, "biquadratic degree range has no admissible degree");
    return options[rng.below(static_cast<std::uint32_t>(options.size()))];
}

template <typename Make>
auto with_rejection(Make make, const char* family) {
    for (unsigned attempt = 0; attempt < kMaxRejections; ++attempt) {
        try {
            return make();
        } catch (const Error& e) {
            if (e.code() == Errc::BudgetExceeded) throw;
        }
    }
    throw Error(Errc::BudgetExceeded, std::string("no valid ") + family + " instance after " +
                                          std::to_string(kMaxRejections) + " attempts");
}

std::string check_family(const std::string& name) { return name.substr(0, name.find('[')); }

bool relative_equivalence(const Integer& q, unsigned gx, unsigned gy, const std::vector<Integer>& cx,
                          const std::vector<Integer>& cy) {
    const auto record = check_relative(q, gx, gy, cx[0], cy[0]);
    const Integer margin = schwarz_margin(gram_relative(q, gx, gy, cx, cy, 1), 0, 1);
    return record.holds == (margin >= 0) && record.margin == Rational(margin);
}

// det Gram(q gamma^0 + gamma^2, gamma^1) = 4 q^2 (gX - gY) * margin of the second-order bound.
bool second_equivalence(const Integer& q, unsigned gx, unsigned gy, const std::vector<Integer>& cx,
                        const std::vector<Integer>& cy) {
    const auto record = check_relative_second(q, gx, gy, {cx[0], cx[1]}, {cy[0], cy[1]});
    const auto combined =
        combined_vector_gram(gram_relative(q, gx, gy, cx, cy, 2), std::vector<std::vector<Integer>>{{q, 0, 1}, {0, 1, 0}});
    const Integer det = bareiss_determinant(combined.entries);
    return record.holds == (det >= 0) && Rational(det) == Rational(4 * q * q * Integer(gx - gy)) * record.margin;
}

void add_cover_equivalences(InstanceResult& out, const std::string& pair, const Integer& q, unsigned gx, unsigned gy,
                            const std::vector<Integer>& cx, const std::vector<Integer>& cy) {
    out.invariants.push_back({"gram_schwarz_relative[" + pair + "]", relative_equivalence(q, gx, gy, cx, cy)});
    if (gx != gy)
        out.invariants.push_back({"gram_combined_second[" + pair + "]", second_equivalence(q, gx, gy, cx, cy)});
}

void evaluate_curve(InstanceResult& out, const CurveModel& curve, const CorpusSpec& spec,
                    const RiemannHypothesisOptions& rh) {
    const CountOptions options{spec.budget};
    const unsigned g = curve.genus();
    const unsigned depth = depth_for(g, spec.order);
    out.genus = g;
    out.q = curve.base()->q;
    out.counts = count_series(curve, depth, options).counts;
    const Integer& q = out.q;

    bool weil = true;
    for (unsigned j = 1; j <= depth; ++j) weil = weil && check_weil(q, g, j, out.counts[j - 1]).holds;
    out.invariants.push_back({"weil_all_j", weil});

    std::optional<LPolynomial> l;
    try {
        l = l_from_counts(q, g, std::span<const Integer>(out.counts).first(g));
    } catch (const Error& e) {
        if (e.code() != Errc::NonIntegerCoefficient) throw;
    }
    out.invariants.push_back({"l_integral", l.has_value()});
    if (l) {
        out.l_coefficients = l->coefficients;
        bool consistent = true;
        for (unsigned j = 1; j <= depth; ++j) consistent = consistent && extrapolate(*l, j) == out.counts[j - 1];
        out.invariants.push_back({"zeta_extrapolation", consistent});
        out.invariants.push_back({"functional_equation", check_functional_equation(*l)});
        bool rh_ok = false;
        try {
            rh_ok = check_riemann_hypothesis(*l, rh).pass;
        } catch (const Error& e) {
            if (e.code() != Errc::RootFindingFailure) throw;
        }
        out.invariants.push_back({"riemann_hypothesis", rh_ok});
    }
    const auto inferred = infer_genus(q, out.counts, rh);
    out.invariants.push_back({"genus_inference", inferred && *inferred == g});

    if (curve.kind() == CurveKind::hyperelliptic) {
        const CoverData cover = hyperelliptic_cover(curve);
        const auto line = count_series(cover.target, depth, options).counts;
        add_cover_equivalences(out, "X/Y", q, g, 0, out.counts, line);
        out.report = full_report(cover, spec.order, options);
    } else {
        out.report = full_report(curve, spec.order, options);
    }
}

void evaluate_diagram(InstanceResult& out, const DiagramData& d, const CorpusSpec& spec) {
    const CountOptions options{spec.budget};
    const unsigned depth = std::max(spec.order, 2u);
    const Integer& q = d.x.base()->q;
    const CurveModel y3 = third_quotient(d);
    const auto cx = count_series(d.x, depth, options).counts;
    const auto c1 = count_series(d.y1, depth, options).counts;
    const auto c2 = count_series(d.y2, depth, options).counts;
    const auto cz = count_series(d.z, depth, options).counts;
    const auto c3 = count_series(y3, 2, options).counts;
    out.genus = d.x.genus();
    out.q = q;
    out.counts = cx;

    for (unsigned j = 1; j <= 2; ++j) {
        const bool ok = cx[j - 1] == c1[j - 1] + c2[j - 1] + c3[j - 1] - 2 * (ipow(q, j) + 1);
        out.invariants.push_back({"trace_identity[j=" + std::to_string(j) + "]", ok});
    }
    const unsigned gx = d.x.genus(), g1 = d.y1.genus(), g2 = d.y2.genus(), gz = d.z.genus();
    add_cover_equivalences(out, "X/Y1", q, gx, g1, cx, c1);
    add_cover_equivalences(out, "X/Y2", q, gx, g2, cx, c2);
    add_cover_equivalences(out, "Y1/Z", q, g1, gz, c1, cz);
    add_cover_equivalences(out, "Y2/Z", q, g2, gz, c2, cz);
    add_cover_equivalences(out, "X/Z", q, gx, gz, cx, cz);

    const std::array<unsigned, 4> genera{gx, g1, g2, gz};
    const auto record = check_diagram(q, genera, {cx[0], c1[0], c2[0], cz[0]}, d.certificate);
    const Integer margin = schwarz_margin(gram_diagram(q, genera, {cx, c1, c2, cz}, 1), 0, 1);
    out.invariants.push_back(
        {"gram_schwarz_diagram", record.holds == (margin >= 0) && record.margin == Rational(margin)});

    out.report = full_report(d, spec.order, options);
}

}  // namespace

CorpusSpec parse_corpus_spec(const Json& doc) {
    if (!doc.is_object()) parse_error("corpus spec must be a JSON object");
    CorpusSpec spec;
    if (!doc.contains("seed")) parse_error("corpus spec needs a \"seed\"");
    if (!doc["seed"].is_number_unsigned()) parse_error("\"seed\" must be an unsigned 64-bit integer");
    spec.seed = doc["seed"].get<std::uint64_t>();

    if (doc.contains("fields")) {
        if (!doc["fields"].is_array()) parse_error("\"fields\" must be an array of [p, k]");
        for (const auto& f : doc["fields"]) {
            if (!f.is_array() || f.size() != 2 || !f[0].is_number_unsigned() || !f[1].is_number_unsigned())
                parse_error("each field must be [p, k]");
            spec.fields.emplace_back(f[0].get<std::uint32_t>(), f[1].get<unsigned>());
        }
    }
    if (doc.contains("mix")) {
        const Json& mix = doc["mix"];
        if (!mix.is_object()) parse_error("\"mix\" must be an object");
        for (const auto& [key, target] : {std::pair<const char*, unsigned*>{"hyperelliptic", &spec.hyperelliptic},
                                          {"plane", &spec.plane},
                                          {"biquadratic", &spec.biquadratic}}) {
            if (!mix.contains(key)) continue;
            if (!mix[key].is_number_unsigned()) parse_error(std::string("mix.") + key + " must be a count");
            *target = mix[key].get<unsigned>();
        }
    }
    if (doc.contains("degrees")) {
        const Json& deg = doc["degrees"];
        if (!deg.is_object()) parse_error("\"degrees\" must be an object");
        if (deg.contains("hyperelliptic")) spec.hyperelliptic_degrees = parse_range(deg["hyperelliptic"], "hyperelliptic");
        if (deg.contains("plane")) spec.plane_degrees = parse_range(deg["plane"], "plane");
        if (deg.contains("biquadratic_f")) spec.biquadratic_f = parse_range(deg["biquadratic_f"], "biquadratic_f");
        if (deg.contains("biquadratic_g")) spec.biquadratic_g = parse_range(deg["biquadratic_g"], "biquadratic_g");
    }
    if (doc.contains("order")) {
        if (!doc["order"].is_number_unsigned()) parse_error("\"order\" must be a positive integer");
        spec.order = doc["order"].get<unsigned>();
        if (spec.order < 1 || spec.order > 7) throw Error(Errc::InvalidArgument, "order must be in 1..7");
    }
    if (doc.contains("budget")) {
        if (!doc["budget"].is_number_unsigned()) parse_error("\"budget\" must be a positive integer");
        spec.budget = doc["budget"].get<std::uint64_t>();
    }
    return spec;
}

CorpusSpec read_corpus_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        parse_error(e.what());
    }
    return parse_corpus_spec(doc);
}

std::vector<ManifestSubject> generate_corpus(const CorpusSpec& spec) {
    std::vector<ManifestSubject> out;
    if (spec.hyperelliptic + spec.plane + spec.biquadratic == 0) return out;
    if (spec.fields.empty()) throw Error(Errc::InvalidArgument, "corpus spec lists no fields");
    std::vector<FieldPtr> fields;
    for (const auto& [p, k] : spec.fields) fields.push_back(construct_field(p, k));

    Lcg rng(spec.seed);
    const auto pick = [&](const FamilyPlan& plan) {
        return static_cast<std::size_t>(rng.below(static_cast<std::uint32_t>(plan.fields.size())));
    };

    if (spec.hyperelliptic > 0) {
        const auto plan = plan_curves(fields, spec.hyperelliptic_degrees, spec, true, hyperelliptic_genus, "hyperelliptic");
        for (unsigned n = 0; n < spec.hyperelliptic; ++n) {
            const std::size_t i = pick(plan);
            const FieldPtr& field = plan.fields[i];
            const unsigned d = rng.between(std::max(spec.hyperelliptic_degrees.lo, 1u), plan.max_degree[i]);
            out.emplace_back(with_rejection([&] { return make_hyperelliptic(field, random_poly(rng, d, field->p)); },
                                            "hyperelliptic"));
        }
    }
    if (spec.plane > 0) {
        const auto plan = plan_curves(fields, spec.plane_degrees, spec, false, plane_genus, "plane");
        for (unsigned n = 0; n < spec.plane; ++n) {
            const std::size_t i = pick(plan);
            const FieldPtr& field = plan.fields[i];
            const unsigned d = rng.between(std::max(spec.plane_degrees.lo, 1u), plan.max_degree[i]);
            out.emplace_back(with_rejection(
                [&] {
                    std::vector<Monomial> terms;
                    for (unsigned ex = d + 1; ex-- > 0;)
                        for (unsigned ey = d - ex + 1; ey-- > 0;)
                            terms.push_back({rng.below(field->p), {ex, ey, d - ex - ey}});
                    return make_smooth_plane(field, canonical_plane_poly(std::move(terms), field->p), d, 0);
                },
                "plane"));
        }
    }
    if (spec.biquadratic > 0) {
        FamilyPlan plan;
        bool any_odd = false;
        for (const auto& f : fields) {
            if (f->p == 2) continue;
            any_odd = true;
            if (fits(f->q, std::max(spec.order, 2u), spec.budget)) {
                plan.fields.push_back(f);
                plan.max_degree.push_back(0);
            }
        }
        if (!any_odd) throw Error(Errc::EvenCharacteristic, "biquadratic instances need odd characteristic");
        if (plan.fields.empty()) throw Error(Errc::BudgetExceeded, "no field fits the biquadratic budget");
        for (unsigned n = 0; n < spec.biquadratic; ++n) {
            const FieldPtr& field = plan.fields[pick(plan)];
            const unsigned df = random_degree_with_parity(rng, spec.biquadratic_f, 1, 1);
            const unsigned dg = random_degree_with_parity(rng, spec.biquadratic_g, 0, 2);
            out.emplace_back(with_rejection(
                [&] {
                    PrimePoly f = random_poly(rng, df, field->p);
                    PrimePoly g = random_poly(rng, dg, field->p);
                    return make_biquadratic(field, std::move(f), std::move(g));
                },
                "biquadratic"));
        }
    }
    return out;
}

bool InstanceResult::all_hold() const {
    return report.all_hold() &&
           std::all_of(invariants.begin(), invariants.end(), [](const InvariantRecord& r) { return r.holds; });
}

InstanceResult evaluate_instance(const ManifestSubject& subject, std::size_t index, const CorpusSpec& spec,
                                 const RiemannHypothesisOptions& rh) {
    InstanceResult out;
    out.index = index;
    out.manifest = manifest_json(subject);
    if (const auto* curve = std::get_if<CurveModel>(&subject)) {
        out.family = curve->kind() == CurveKind::smooth_plane ? "plane" : "hyperelliptic";
        evaluate_curve(out, *curve, spec, rh);
    } else {
        out.family = "biquadratic";
        evaluate_diagram(out, std::get<DiagramData>(subject), spec);
    }
    return out;
}

std::vector<InstanceResult> run_corpus(const CorpusSpec& spec, unsigned jobs, const RiemannHypothesisOptions& rh) {
    const auto instances = generate_corpus(spec);
    std::vector<InstanceResult> results(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                results[i] = evaluate_instance(instances[i], i, spec, rh);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(instances.size(), 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

Json corpus_report_json(const CorpusSpec& spec, const std::vector<InstanceResult>& results) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // family -> (passed, total)
    const auto count = [&](const std::string& name, bool holds) {
        auto& t = tally[check_family(name)];
        t.first += holds ? 1 : 0;
        t.second += 1;
    };

    Json instances = Json::array();
    std::size_t passing = 0;
    for (const auto& r : results) {
        Json item;
        item["index"] = r.index;
        item["family"] = r.family;
        item["manifest"] = r.manifest;
        item["q"] = r.q.str();
        item["genus"] = r.genus;
        Json counts = Json::array();
        for (const auto& c : r.counts) counts.push_back(c.str());
        item["counts"] = std::move(counts);
        if (!r.l_coefficients.empty()) {
            Json l = Json::array();
            for (const auto& c : r.l_coefficients) l.push_back(c.str());
            item["l_polynomial"] = std::move(l);
        }
        Json invariants = Json::array();
        for (const auto& inv : r.invariants) {
            invariants.push_back(Json{{"name", inv.name}, {"holds", inv.holds}});
            count(inv.name, inv.holds);
        }
        item["invariants"] = std::move(invariants);
        item["bounds"] = report_json(r.report);
        for (const auto& c : r.report.checks) count(c.name, c.holds);
        item["all_hold"] = r.all_hold();
        passing += r.all_hold() ? 1 : 0;
        instances.push_back(std::move(item));
    }

    Json summary = Json::array();
    for (const auto& [name, t] : tally)
        summary.push_back(Json{{"check", name}, {"passed", t.first}, {"total", t.second}});

    Json doc;
    doc["seed"] = spec.seed;
    doc["order"] = spec.order;
    doc["budget"] = spec.budget;
    doc["instances"] = results.size();
    doc["instances_passing"] = passing;
    doc["summary"] = std::move(summary);
    doc["results"] = std::move(instances);
    return doc;
}

std::string corpus_summary_csv(const std::vector<InstanceResult>& results) {
    std::ostringstream out;
    out << "index,family,subject,q,genus,checks,passed,all_hold\n";
    for (const auto& r : results) {
        std::size_t total = r.invariants.size() + r.report.checks.size(), passed = 0;
        for (const auto& inv : r.invariants) passed += inv.holds ? 1 : 0;
        for (const auto& c : r.report.checks) passed += c.holds ? 1 : 0;
        out << r.index << ',' << r.family << ',' << csv_field(r.report.subject) << ',' << r.q.str() << ','
            << r.genus << ',' << total << ',' << passed << ',' << (r.all_hold() ? "true" : "false") << '\n';
    }
    return out.str();
}

void write_corpus(const std::filesystem::path& dir, const CorpusSpec& spec, const std::vector<InstanceResult>& results) {
    std::filesystem::create_directories(dir / "manifests");
    const auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
        out << text;
    };
    write(dir / "report.json", corpus_report_json(spec, results).dump(2) + "\n");
    write(dir / "summary.csv", corpus_summary_csv(results));
    for (const auto& r : results) {
        char name[32];
        std::snprintf(name, sizeof name, "%04zu.json", r.index);
        write(dir / "manifests" / name, r.manifest.dump(2) + "\n");
    }
}

}  // namespace frobgram

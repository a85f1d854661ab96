#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobgram/corpus.hpp"
#include "frobgram/io.hpp"
#include "oracles.hpp"

using namespace frobgram;

namespace {

Errc parse_code(const std::string& text) {
    try {
        parse_manifest_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return Errc::ParseError;
}

CorpusSpec small_spec(std::uint64_t seed) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.fields = {{3, 1}, {5, 1}, {7, 1}};
    spec.hyperelliptic = 5;
    spec.plane = 2;
    spec.biquadratic = 4;
    spec.hyperelliptic_degrees = {3, 5};
    spec.plane_degrees = {3, 3};
    spec.order = 2;
    return spec;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool has_float(const Json& j) {
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& child : j)
            if (has_float(child)) return true;
    return false;
}

}  // namespace

TEST(Lcg, PublishedConstantsFromSeed42) {
    // Reference values computed independently with Python big integers.
    Lcg rng(42);
    EXPECT_EQ(rng.next(), 2440530669u);
    EXPECT_EQ(rng.next(), 968358053u);
    EXPECT_EQ(rng.next(), 1773127077u);
}

TEST(Lcg, BoundedDrawsStayInRange) {
    Lcg rng(1);
    for (int i = 0; i < 10000; ++i) {
        EXPECT_LT(rng.below(7), 7u);
        const auto v = rng.between(3, 5);
        EXPECT_GE(v, 3u);
        EXPECT_LE(v, 5u);
    }
}

TEST(Manifest, ParsesEachKind) {
    const auto line = std::get<CurveModel>(parse_manifest_text(R"({"kind":"line","p":5})"));
    EXPECT_EQ(line.kind(), CurveKind::projective_line);
    const auto h = std::get<CurveModel>(parse_manifest_text(R"({"kind":"hyperelliptic","p":3,"f":[0,1,0,1]})"));
    EXPECT_EQ(h.genus(), 1u);
    EXPECT_EQ(count_points(h, 1), 4);
    // Negative coefficients reduce mod p.
    const auto h2 = std::get<CurveModel>(parse_manifest_text(R"({"kind":"hyperelliptic","p":3,"f":[0,-2,0,4]})"));
    EXPECT_EQ(h2, h);
    const auto plane = std::get<CurveModel>(
        parse_manifest_text(R"({"kind":"plane","p":5,"degree":3,"F":[1,3,0,0, 1,0,3,0, 1,0,0,3]})"));
    EXPECT_EQ(plane.genus(), 1u);
    const auto d = std::get<DiagramData>(
        parse_manifest_text(R"({"kind":"biquadratic","p":3,"f":[0,1,0,1],"g":[2,1,1]})"));
    EXPECT_EQ(d.x.genus(), 3u);
    EXPECT_TRUE(d.certificate.valid());
}

TEST(Manifest, ParseErrors) {
    EXPECT_EQ(parse_code("{"), Errc::ParseError);
    EXPECT_EQ(parse_code("[]"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"p":3})"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"kind":"torus","p":3})"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"kind":"hyperelliptic","p":3})"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"kind":"hyperelliptic","p":3,"f":"x^3"})"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"kind":"plane","p":3,"degree":3,"F":[1,3,0]})"), Errc::ParseError);
    EXPECT_EQ(parse_code(R"({"kind":"line","p":4})"), Errc::NotPrime);
    EXPECT_EQ(parse_code(R"({"kind":"hyperelliptic","p":3,"f":[0,0,1,1]})"), Errc::NotSquarefree);
    EXPECT_THROW(read_manifest("/nonexistent/manifest.json"), Error);
}

// A false certificate is kept as data and refused when the diagram bound is evaluated.
TEST(Manifest, FalseCertificateRejectedByBounds) {
    const auto d = std::get<DiagramData>(parse_manifest_text(
        R"({"kind":"biquadratic","p":3,"f":[0,1,0,1],"g":[2,1,1],"certificate":{"absolutely_irreducible":false,"smooth":true}})"));
    EXPECT_FALSE(d.certificate.valid());
    try {
        full_report(d, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidDiagram);
    }
}

// Every manifest the tool writes parses back to an identical model.
TEST(Manifest, RoundTripOverGeneratedCorpus) {
    CorpusSpec spec = small_spec(9);
    spec.hyperelliptic = 15;
    spec.plane = 6;
    spec.biquadratic = 10;
    spec.fields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};
    const auto corpus = generate_corpus(spec);
    ASSERT_EQ(corpus.size(), 31u);
    for (const auto& subject : corpus) {
        const Json doc = manifest_json(subject);
        const auto back = parse_manifest_text(doc.dump());
        EXPECT_TRUE(same_model(subject, back)) << doc.dump();
        EXPECT_EQ(manifest_json(back).dump(), doc.dump());
    }
}

TEST(Csv, FieldQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_header(), "subject,name,lhs,rhs,holds,margin,scale\n");
}

TEST(Csv, RowsMatchReport) {
    const auto report = full_report(make_hyperelliptic(construct_field(3, 1), {0, 1, 0, 1}), 2);
    const std::string rows = csv_rows(report);
    EXPECT_EQ(static_cast<std::size_t>(std::count(rows.begin(), rows.end(), '\n')), report.checks.size());
    const Json j = report_json(report);
    EXPECT_EQ(j["all_hold"], true);
    EXPECT_EQ(j["checks"].size(), report.checks.size());
}

TEST(CorpusSpec, Parsing) {
    const auto spec = parse_corpus_spec(Json::parse(
        R"({"seed": 42, "fields": [[3,1],[9,1]], "mix": {"plane": 2}, "degrees": {"plane": [3,3]}, "order": 2})"));
    EXPECT_EQ(spec.seed, 42u);
    EXPECT_EQ(spec.fields.size(), 2u);
    EXPECT_EQ(spec.plane, 2u);
    EXPECT_EQ(spec.hyperelliptic, 0u);
    EXPECT_EQ(spec.order, 2u);
    EXPECT_THROW(parse_corpus_spec(Json::parse(R"({"fields": []})")), Error);
    EXPECT_THROW(parse_corpus_spec(Json::parse(R"({"seed": -1})")), Error);
}

TEST(Corpus, EmptyMixGivesEmptyReport) {
    CorpusSpec spec;
    spec.seed = 42;
    const auto results = run_corpus(spec, 2);
    EXPECT_TRUE(results.empty());
    const Json report = corpus_report_json(spec, results);
    EXPECT_EQ(report["instances"], 0);
}

TEST(Corpus, EvenCharacteristicHyperellipticRejected) {
    CorpusSpec spec;
    spec.seed = 42;
    spec.fields = {{2, 1}, {2, 2}};
    spec.hyperelliptic = 3;
    try {
        generate_corpus(spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EvenCharacteristic);
    }
    spec.hyperelliptic = 0;
    spec.biquadratic = 1;
    try {
        generate_corpus(spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EvenCharacteristic);
    }
}

TEST(Corpus, PlaneCurvesAllowedInCharacteristicTwo) {
    CorpusSpec spec;
    spec.seed = 3;
    spec.fields = {{2, 1}};
    spec.plane = 3;
    spec.plane_degrees = {3, 3};
    for (const auto& s : generate_corpus(spec)) EXPECT_EQ(std::get<CurveModel>(s).kind(), CurveKind::smooth_plane);
}

TEST(Corpus, BudgetExceededWhenNothingFits) {
    CorpusSpec spec;
    spec.seed = 1;
    spec.fields = {{7, 1}};
    spec.hyperelliptic = 1;
    spec.budget = 10;
    try {
        generate_corpus(spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    }
}

TEST(Corpus, FamiliesInOrderAndDegreesRespected) {
    const CorpusSpec spec = small_spec(42);
    const auto corpus = generate_corpus(spec);
    ASSERT_EQ(corpus.size(), 11u);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (i < 7) {
            const auto& c = std::get<CurveModel>(corpus[i]);
            if (i < 5) {
                EXPECT_EQ(c.kind(), CurveKind::hyperelliptic);
                const int d = prime_poly::degree(c.f());
                EXPECT_GE(d, 3);
                EXPECT_LE(d, 5);
            } else {
                EXPECT_EQ(c.kind(), CurveKind::smooth_plane);
            }
            EXPECT_LE(ipow(c.base()->q, 2 * c.genus() + 2), spec.budget);
        } else {
            const auto& d = std::get<DiagramData>(corpus[i]);
            EXPECT_EQ(prime_poly::degree(d.y1.f()) % 2, 1);
            EXPECT_TRUE(d.certificate.valid());
        }
    }
}

TEST(Corpus, DeterministicAndSerialEqualsParallel) {
    const CorpusSpec spec = small_spec(42);
    const auto serial = corpus_report_json(spec, run_corpus(spec, 1)).dump(2);
    const auto again = corpus_report_json(spec, run_corpus(spec, 1)).dump(2);
    const auto parallel = corpus_report_json(spec, run_corpus(spec, 4)).dump(2);
    EXPECT_EQ(serial, again);
    EXPECT_EQ(serial, parallel);
    EXPECT_FALSE(has_float(Json::parse(serial)));
}

TEST(Corpus, EveryInstancePasses) {
    const CorpusSpec spec = small_spec(7);
    for (const auto& r : run_corpus(spec, 2)) {
        EXPECT_TRUE(r.all_hold()) << r.index << " " << r.report.subject;
        for (const auto& inv : r.invariants) EXPECT_TRUE(inv.holds) << r.index << " " << inv.name;
    }
}

TEST(Corpus, WritesReportFiles) {
    const CorpusSpec spec = small_spec(42);
    const auto results = run_corpus(spec, 1);
    const auto dir = std::filesystem::temp_directory_path() / "frobgram_corpus_test";
    std::filesystem::remove_all(dir);
    write_corpus(dir, spec, results);
    EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "summary.csv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "manifests" / "0000.json"));
    const auto report = Json::parse(slurp(dir / "report.json"));
    EXPECT_EQ(report["instances"], results.size());
    const auto first = read_manifest(dir / "manifests" / "0000.json");
    const auto regenerated = generate_corpus(spec);
    EXPECT_TRUE(same_model(first, regenerated.front()));
    std::filesystem::remove_all(dir);
}

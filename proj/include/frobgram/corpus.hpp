#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "frobgram/bounds.hpp"
#include "frobgram/io.hpp"
#include "frobgram/zeta.hpp"

namespace frobgram {

/// 64-bit linear congruential generator, x <- a x + c mod 2^64 with Knuth's MMIX
/// constants. Outputs are the high 32 bits of the new state.
class Lcg {
   public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit Lcg(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint32_t next() noexcept {
        state_ = state_ * kMultiplier + kIncrement;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform in [0, n) by rejection; n >= 1.
    std::uint32_t below(std::uint32_t n) noexcept {
        const std::uint64_t range = std::uint64_t{1} << 32;
        const std::uint64_t limit = range - range % n;
        std::uint32_t x;
        do x = next();
        while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::uint32_t between(std::uint32_t lo, std::uint32_t hi) noexcept { return lo + below(hi - lo + 1); }

   private:
    std::uint64_t state_;
};

struct DegreeRange {
    unsigned lo = 0, hi = 0;
};

struct CorpusSpec {
    std::uint64_t seed = 0;
    std::vector<std::pair<std::uint32_t, unsigned>> fields;  // (p, k)
    unsigned hyperelliptic = 0, plane = 0, biquadratic = 0;
    DegreeRange hyperelliptic_degrees{3, 6};
    DegreeRange plane_degrees{3, 4};
    DegreeRange biquadratic_f{3, 5};
    DegreeRange biquadratic_g{2, 4};
    unsigned order = 3;
    std::uint64_t budget = CountOptions{}.budget;
};

/// {"seed": 42, "fields": [[3,1],[5,1]], "mix": {"hyperelliptic": n, "plane": n, "biquadratic": n},
///  "degrees": {"hyperelliptic": [lo,hi], "plane": [lo,hi], "biquadratic_f": [lo,hi],
///              "biquadratic_g": [lo,hi]}, "order": 3, "budget": 1000000}
CorpusSpec parse_corpus_spec(const Json& doc);
CorpusSpec read_corpus_spec(const std::filesystem::path& path);

inline constexpr unsigned kMaxRejections = 10'000;

/// Instances in order: all hyperelliptic, then plane, then biquadratic. Curves are
/// only drawn with degrees whose full zeta check (N_j for j <= 2g + 2) fits the budget.
std::vector<ManifestSubject> generate_corpus(const CorpusSpec& spec);

struct InvariantRecord {
    std::string name;
    bool holds = false;
};

struct InstanceResult {
    std::size_t index = 0;
    std::string family;
    Json manifest;
    unsigned genus = 0;
    Integer q;
    std::vector<Integer> counts;          // of the curve, or of X for diagrams
    std::vector<Integer> l_coefficients;  // curves only
    std::vector<InvariantRecord> invariants;
    BoundReport report;

    bool all_hold() const;
};

InstanceResult evaluate_instance(const ManifestSubject& subject, std::size_t index, const CorpusSpec& spec,
                                 const RiemannHypothesisOptions& rh = {});

/// Evaluates instances on `jobs` threads; results are in corpus order regardless.
std::vector<InstanceResult> run_corpus(const CorpusSpec& spec, unsigned jobs = 1,
                                       const RiemannHypothesisOptions& rh = {});

Json corpus_report_json(const CorpusSpec& spec, const std::vector<InstanceResult>& results);
std::string corpus_summary_csv(const std::vector<InstanceResult>& results);

/// Writes report.json, summary.csv and manifests/NNNN.json under `dir`.
void write_corpus(const std::filesystem::path& dir, const CorpusSpec& spec, const std::vector<InstanceResult>& results);

}  // namespace frobgram

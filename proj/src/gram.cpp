#include "frobgram/gram.hpp"

namespace frobgram {

namespace {

void require_counts(std::span<const Integer> counts, unsigned m, const char* which) {
    if (counts.size() < m)
        throw Error(Errc::InsufficientCounts, std::string(which) + " has " + std::to_string(counts.size()) +
                                                  " counts, need " + std::to_string(m));
}

std::vector<std::string> labels(unsigned m, const std::string& suffix) {
    std::vector<std::string> out;
    for (unsigned i = 0; i <= m; ++i) out.push_back("gamma^" + std::to_string(i) + suffix);
    return out;
}

// Shared shape of every Gram family: diag(i) = norm * q^i, entry(i, i+j) = q^i * pairing[j-1].
IntMatrix toeplitz_like(const Integer& q, const Integer& norm, const std::vector<Integer>& pairing, unsigned m) {
    IntMatrix out(m + 1, m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        const Integer qi = ipow(q, i);
        out(i, i) = norm * qi;
        for (unsigned j = 1; i + j <= m; ++j) {
            out(i, i + j) = qi * pairing[j - 1];
            out(i + j, i) = out(i, i + j);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(GramKind kind) noexcept {
    switch (kind) {
        case GramKind::absolute: return "absolute";
        case GramKind::relative: return "relative";
        case GramKind::diagram: return "diagram";
        case GramKind::combined: return "combined";
    }
    return "unknown";
}

GramMatrix gram_absolute(const Integer& q, unsigned g, std::span<const Integer> counts, unsigned m) {
    require_counts(counts, m, "count series");
    std::vector<Integer> pairing;
    for (unsigned j = 1; j <= m; ++j) pairing.push_back(ipow(q, j) + 1 - counts[j - 1]);

    GramMatrix gram;
    gram.entries = toeplitz_like(q, Integer(2 * g), pairing, m);
    gram.labels = labels(m, "");
    gram.kind = GramKind::absolute;
    gram.q = q;
    gram.genera = {g};
    gram.counts = {std::vector<Integer>(counts.begin(), counts.begin() + m)};
    return gram;
}

GramMatrix gram_relative(const Integer& q, unsigned g_x, unsigned g_y, std::span<const Integer> counts_x,
                         std::span<const Integer> counts_y, unsigned m) {
    require_counts(counts_x, m, "X count series");
    require_counts(counts_y, m, "Y count series");
    if (g_x < g_y)
        throw Error(Errc::GenusOrder, "g_X = " + std::to_string(g_x) + " < g_Y = " + std::to_string(g_y));
    std::vector<Integer> pairing;
    for (unsigned j = 1; j <= m; ++j) pairing.push_back(counts_y[j - 1] - counts_x[j - 1]);

    GramMatrix gram;
    gram.entries = toeplitz_like(q, Integer(2 * (g_x - g_y)), pairing, m);
    gram.labels = labels(m, "_{X/Y}");
    gram.kind = GramKind::relative;
    gram.q = q;
    gram.genera = {g_x, g_y};
    gram.counts = {std::vector<Integer>(counts_x.begin(), counts_x.begin() + m),
                   std::vector<Integer>(counts_y.begin(), counts_y.begin() + m)};
    return gram;
}

GramMatrix gram_diagram(const Integer& q, const std::array<unsigned, 4>& genera,
                        const std::array<std::span<const Integer>, 4>& counts, unsigned m) {
    const char* names[4] = {"X count series", "Y1 count series", "Y2 count series", "Z count series"};
    for (int c = 0; c < 4; ++c) require_counts(counts[c], m, names[c]);
    const long relative_genus = static_cast<long>(genera[0]) - genera[1] - genera[2] + genera[3];
    if (relative_genus < 0)
        throw Error(Errc::NegativeRelativeGenus,
                    "g_X - g_Y1 - g_Y2 + g_Z = " + std::to_string(relative_genus) + " < 0");
    std::vector<Integer> pairing;
    for (unsigned j = 1; j <= m; ++j)
        pairing.push_back(counts[1][j - 1] + counts[2][j - 1] - counts[0][j - 1] - counts[3][j - 1]);

    GramMatrix gram;
    gram.entries = toeplitz_like(q, Integer(2 * relative_genus), pairing, m);
    gram.labels = labels(m, "_{12}");
    gram.kind = GramKind::diagram;
    gram.q = q;
    gram.genera.assign(genera.begin(), genera.end());
    for (const auto& c : counts) gram.counts.emplace_back(c.begin(), c.begin() + m);
    return gram;
}

PsdVerdict<Integer> psd_check(const GramMatrix& gram) { return psd_check(gram.entries); }

Integer schwarz_margin(const GramMatrix& gram, Eigen::Index i, Eigen::Index j) {
    return schwarz_margin(gram.entries, i, j);
}

GramMatrix combined_vector_gram(const GramMatrix& gram, const IntMatrix& combos) {
    if (combos.cols() != gram.size())
        throw Error(Errc::DimensionMismatch, "combination length " + std::to_string(combos.cols()) +
                                                 " does not match Gram size " + std::to_string(gram.size()));
    GramMatrix out;
    out.entries = combos * gram.entries * combos.transpose();
    for (Eigen::Index r = 0; r < combos.rows(); ++r) {
        std::string label;
        for (Eigen::Index c = 0; c < combos.cols(); ++c) {
            if (combos(r, c) == 0) continue;
            if (!label.empty()) label += "+";
            if (combos(r, c) != 1) label += combos(r, c).str() + "*";
            label += gram.labels[static_cast<std::size_t>(c)];
        }
        out.labels.push_back(label.empty() ? "0" : label);
    }
    out.kind = GramKind::combined;
    out.q = gram.q;
    out.genera = gram.genera;
    out.counts = gram.counts;
    return out;
}

GramMatrix combined_vector_gram(const GramMatrix& gram, const std::vector<std::vector<Integer>>& combos) {
    IntMatrix c(static_cast<Eigen::Index>(combos.size()), gram.size());
    for (std::size_t r = 0; r < combos.size(); ++r) {
        if (static_cast<Eigen::Index>(combos[r].size()) != gram.size())
            throw Error(Errc::DimensionMismatch, "combination " + std::to_string(r) + " has length " +
                                                     std::to_string(combos[r].size()));
        for (std::size_t k = 0; k < combos[r].size(); ++k) c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = combos[r][k];
    }
    return combined_vector_gram(gram, c);
}

GramMatrix gram_from_entries(IntMatrix entries, const Integer& q) {
    GramMatrix gram;
    for (Eigen::Index i = 0; i < entries.rows(); ++i) gram.labels.push_back("v" + std::to_string(i));
    gram.entries = std::move(entries);
    gram.kind = GramKind::combined;
    gram.q = q;
    return gram;
}

}  // namespace frobgram

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "frobgram/error.hpp"
#include "frobgram/integer.hpp"

namespace frobgram {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

enum class GramKind { absolute, relative, diagram, combined };

std::string_view to_string(GramKind kind) noexcept;

/// Gram matrix of the Frobenius vectors gamma^0..gamma^m (or of their relative or
/// square-diagram parts). Only inner products are represented, never the vectors.
struct GramMatrix {
    IntMatrix entries;
    std::vector<std::string> labels;
    GramKind kind = GramKind::absolute;
    Integer q;
    std::vector<unsigned> genera;
    std::vector<std::vector<Integer>> counts;

    Eigen::Index size() const noexcept { return entries.rows(); }
};

/// <gamma^i, gamma^i> = 2g q^i, <gamma^i, gamma^{i+j}> = q^i (q^j + 1 - N_j).
GramMatrix gram_absolute(const Integer& q, unsigned g, std::span<const Integer> counts, unsigned m = 3);

/// Relative parts for a cover X -> Y: 2(gX - gY) q^i on the diagonal and
/// q^i (N_j(Y) - N_j(X)) off it.
GramMatrix gram_relative(const Integer& q, unsigned g_x, unsigned g_y, std::span<const Integer> counts_x,
                         std::span<const Integer> counts_y, unsigned m = 3);

/// Square-diagram parts for X -> Y1, Y2 -> Z, curves ordered (X, Y1, Y2, Z).
GramMatrix gram_diagram(const Integer& q, const std::array<unsigned, 4>& genera,
                        const std::array<std::span<const Integer>, 4>& counts, unsigned m = 3);

/// Fraction-free Gaussian elimination; exact for any integral domain scalar.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && a(pivot, k) == Scalar(0)) ++pivot;
            if (pivot == n) return Scalar(0);
            a.row(k).swap(a.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        previous = a(k, k);
    }
    return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

template <typename Scalar>
struct PsdVerdict {
    bool psd = true;
    /// Lexicographically first index subset whose principal minor is negative.
    std::optional<std::vector<Eigen::Index>> witness;
    /// Smallest principal minor (1 for the empty matrix).
    Scalar min_minor = Scalar(1);
};

inline constexpr Eigen::Index kMaxPsdDimension = 8;

/// Positive semidefiniteness by exact evaluation of every principal minor.
template <typename Derived>
PsdVerdict<typename Derived::Scalar> psd_check(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw Error(Errc::DimensionMismatch, "PSD check of a non-square matrix");
    if (n > kMaxPsdDimension) throw Error(Errc::TooLarge, "PSD check is limited to 8x8 matrices");

    PsdVerdict<Scalar> verdict;
    bool first = true;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Eigen::Index> subset;
        for (Eigen::Index i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        const auto k = static_cast<Eigen::Index>(subset.size());
        minor.resize(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
            for (Eigen::Index c = 0; c < k; ++c) minor(r, c) = m(subset[r], subset[c]);
        Scalar det = bareiss_determinant(minor);
        if (first || det < verdict.min_minor) verdict.min_minor = det;
        first = false;
        if (det < Scalar(0)) {
            verdict.psd = false;
            if (!verdict.witness || subset < *verdict.witness) verdict.witness = std::move(subset);
        }
    }
    return verdict;
}

PsdVerdict<Integer> psd_check(const GramMatrix& gram);

/// M(i,i) M(j,j) - M(i,j)^2.
template <typename Derived>
typename Derived::Scalar schwarz_margin(const Eigen::MatrixBase<Derived>& m, Eigen::Index i, Eigen::Index j) {
    if (i == j || i < 0 || j < 0 || i >= m.rows() || j >= m.rows())
        throw Error(Errc::IndexOutOfRange, "schwarz_margin needs two distinct valid indices");
    return m(i, i) * m(j, j) - m(i, j) * m(i, j);
}

Integer schwarz_margin(const GramMatrix& gram, Eigen::Index i, Eigen::Index j);

/// Gram matrix of the integer combinations given as rows of `combos`: C M C^T.
GramMatrix combined_vector_gram(const GramMatrix& gram, const IntMatrix& combos);
GramMatrix combined_vector_gram(const GramMatrix& gram, const std::vector<std::vector<Integer>>& combos);

/// Builds a GramMatrix wrapper around raw entries (labels v0..vn).
GramMatrix gram_from_entries(IntMatrix entries, const Integer& q = 0);

}  // namespace frobgram

#include "frobgram/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "frobgram/error.hpp"

namespace frobgram {

namespace {

using RationalPoly = std::vector<Rational>;  // ascending

void trim(RationalPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    RationalPoly quot(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return quot;
}

RationalPoly squarefree_part(const RationalPoly& f) {
    RationalPoly df(f.size() > 1 ? f.size() - 1 : 0);
    for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);
    trim(df);
    if (df.empty()) return f;
    RationalPoly a = f, b = df;
    while (!b.empty()) {
        RationalPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return quotient(f, a);
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double relative_residual(const std::vector<double>& c, std::complex<double> x) {
    double scale = 0.0, power = 1.0;
    const double r = std::abs(x);
    for (double ci : c) {
        scale += std::abs(ci) * power;
        power *= r;
    }
    return scale == 0.0 ? 0.0 : std::abs(horner(c, x)) / scale;
}

}  // namespace

LPolynomial l_from_counts(const Integer& q, unsigned genus, std::span<const Integer> counts) {
    if (counts.size() != genus)
        throw Error(Errc::CountLengthMismatch,
                    "need exactly " + std::to_string(genus) + " counts, got " + std::to_string(counts.size()));

    std::vector<Integer> traces(genus + 1);  // traces[j] = t_j
    for (unsigned j = 1; j <= genus; ++j) traces[j] = ipow(q, j) + 1 - counts[j - 1];

    std::vector<Integer> c(2 * genus + 1);
    c[0] = 1;
    for (unsigned n = 1; n <= genus; ++n) {
        Rational sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += Rational(traces[k] * c[n - k]);
        const Rational cn = -sum / Rational(n);
        if (!is_integral(cn))
            throw Error(Errc::NonIntegerCoefficient, "c_" + std::to_string(n) + " = " + to_string(cn));
        c[n] = boost::multiprecision::numerator(cn);
    }
    for (unsigned i = 0; i < genus; ++i) c[2 * genus - i] = ipow(q, genus - i) * c[i];
    return LPolynomial{q, genus, std::move(c)};
}

Integer extrapolate(const LPolynomial& l, unsigned j) {
    if (j < 1) throw Error(Errc::InvalidDegree, "extension degree must be at least 1");
    const auto coefficient = [&](unsigned n) -> Integer { return n < l.coefficients.size() ? l.coefficients[n] : 0; };
    // n c_n + sum_{k=1}^{n} c_{n-k} t_k = 0 for every n >= 1 (c_n = 0 past 2g).
    std::vector<Integer> traces(j + 1);
    for (unsigned n = 1; n <= j; ++n) {
        Integer t = -Integer(n) * coefficient(n);
        for (unsigned k = 1; k < n; ++k) t -= coefficient(n - k) * traces[k];
        traces[n] = t;
    }
    return ipow(l.q, j) + 1 - traces[j];
}

bool check_functional_equation(const LPolynomial& l) {
    const unsigned g = l.genus;
    if (l.coefficients.size() != 2 * g + 1) return false;
    for (unsigned i = 0; i <= g; ++i)
        if (l.coefficients[2 * g - i] != ipow(l.q, g - i) * l.coefficients[i]) return false;
    return true;
}

RiemannHypothesisReport check_riemann_hypothesis(const LPolynomial& l, const RiemannHypothesisOptions& options) {
    if (!(options.tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
    RiemannHypothesisReport report;
    if (l.coefficients.size() <= 1) return report;

    // Reversed polynomial: roots are the inverse roots of L.
    RationalPoly reversed(l.coefficients.rbegin(), l.coefficients.rend());
    trim(reversed);
    if (reversed.size() <= 1) return report;
    RationalPoly reduced = squarefree_part(reversed);
    const Rational lead = reduced.back();
    for (auto& c : reduced) c /= lead;

    std::vector<double> coeffs;
    coeffs.reserve(reduced.size());
    for (const auto& c : reduced) coeffs.push_back(c.convert_to<double>());
    const auto degree = static_cast<Eigen::Index>(coeffs.size() - 1);

    std::vector<std::complex<double>> roots;
    if (degree == 1) {
        roots.emplace_back(-coeffs[0], 0.0);
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
        companion.diagonal(-1).setOnes();
        for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)];
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
        if (solver.info() != Eigen::Success)
            throw Error(Errc::RootFindingFailure, "companion eigenvalue iteration did not converge");
        for (Eigen::Index i = 0; i < degree; ++i) roots.push_back(solver.eigenvalues()(i));
    }

    std::vector<double> derivative(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) derivative[i - 1] = coeffs[i] * static_cast<double>(i);

    const double sqrt_q = std::sqrt(l.q.convert_to<double>());
    for (auto& root : roots) {
        for (int iter = 0; iter < 8 && relative_residual(coeffs, root) > 1e-16; ++iter) {
            const std::complex<double> slope = horner(derivative, root);
            if (slope == 0.0) break;
            root -= horner(coeffs, root) / slope;
        }
        if (relative_residual(coeffs, root) > options.residual)
            throw Error(Errc::RootFindingFailure, "root residual above " + std::to_string(options.residual));
        report.max_deviation = std::max(report.max_deviation, std::abs(std::abs(root) - sqrt_q));
    }
    report.inverse_roots = std::move(roots);
    report.pass = report.max_deviation <= options.tolerance;
    return report;
}

std::optional<unsigned> infer_genus(const Integer& q, std::span<const Integer> counts,
                                    const RiemannHypothesisOptions& options) {
    if (counts.empty()) throw Error(Errc::InsufficientCounts, "need at least one count");
    const auto m = static_cast<unsigned>(counts.size());
    for (unsigned g = 0; g <= m / 2; ++g) {
        LPolynomial l;
        try {
            l = l_from_counts(q, g, counts.first(g));
        } catch (const Error& e) {
            if (e.code() == Errc::NonIntegerCoefficient) continue;
            throw;
        }
        if (!check_riemann_hypothesis(l, options).pass) continue;
        bool consistent = true;
        for (unsigned j = g + 1; j <= m && consistent; ++j) consistent = extrapolate(l, j) == counts[j - 1];
        if (consistent) return g;
    }
    return std::nullopt;
}

}  // namespace frobgram

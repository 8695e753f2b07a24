#include "lpemb/embedding.hpp"

#include <cmath>

#include "lpemb/rng.hpp"

namespace lpemb {

bool embedding_moments_warned(double r, double p) { return r < 2.0 && p == r; }

void validate_embedding_exponents(double r, double p) {
    if (!(p >= 1.0) || !(p <= r) || !(r <= 2.0))
        throw std::invalid_argument("embedding: exponents must satisfy 1 <= p <= r <= 2");
    if (r < 2.0 && p > r)
        throw std::invalid_argument("embedding: p-th moments diverge for p > r");
}

namespace {

template <class S, class Sampler>
BasicEmbeddedBasis<S> build_impl(double r, double p, std::size_t m, std::size_t n,
                                 std::uint64_t seed, Sampler&& sample) {
    validate_embedding_exponents(r, p);
    if (m < 1) throw std::invalid_argument("build_embedding: m must be >= 1");
    BasicEmbeddedBasis<S> out;
    out.r = r;
    out.p = p;
    StableSpec spec{r, 1.0, ScalarField::Real};
    for (std::size_t j = 0; j < m; ++j) {
        BasicSampleVector<S> column = sample(spec, n, seed, static_cast<std::int64_t>(j));
        const double norm = empirical_lp_norm(column, PNorm(p)).value;
        if (!(norm > 0.0)) throw std::runtime_error("build_embedding: degenerate column norm");
        column = S{1.0 / norm} * column;
        column.stream_id = static_cast<std::int64_t>(j);
        out.basis.push_back(std::move(column));
        out.norms_used.push_back(norm);
    }
    return out;
}

template <class S>
std::vector<std::vector<S>> adversarial_coefficients(std::size_t m);

template <>
std::vector<std::vector<double>> adversarial_coefficients<double>(std::size_t m) {
    std::vector<std::vector<double>> out;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> unit(m, 0.0);
        unit[j] = 1.0;
        out.push_back(std::move(unit));
    }
    out.emplace_back(m, 1.0);
    std::vector<double> alt(m);
    for (std::size_t j = 0; j < m; ++j) alt[j] = (j % 2 == 0) ? 1.0 : -1.0;
    out.push_back(std::move(alt));
    return out;
}

template <>
std::vector<std::vector<std::complex<double>>> adversarial_coefficients<std::complex<double>>(
    std::size_t m) {
    std::vector<std::vector<std::complex<double>>> out;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::complex<double>> unit(m, {0.0, 0.0});
        unit[j] = {1.0, 0.0};
        out.push_back(std::move(unit));
    }
    out.emplace_back(m, std::complex<double>{1.0, 0.0});
    std::vector<std::complex<double>> alt(m);
    for (std::size_t j = 0; j < m; ++j)
        alt[j] = (j % 2 == 0) ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 1.0};
    out.push_back(std::move(alt));
    return out;
}

template <class S>
IsometryReport verify_impl(const BasicEmbeddedBasis<S>& basis, int trials, double tol,
                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_isometry: trials must be >= 1");
    IsometryReport report;
    report.r = basis.r;
    report.p = basis.p;
    report.m = basis.size();
    report.n = basis.sample_count();
    report.tol = tol;

    auto coefficient_sets = adversarial_coefficients<S>(basis.size());
    const std::size_t adversarial_count = coefficient_sets.size();
    RngStream rng(seed, 0);
    for (int t = 0; t < trials; ++t) {
        std::vector<S> coeffs(basis.size());
        for (auto& c : coeffs) c = ScalarSampler<S>::random(rng);
        coefficient_sets.push_back(std::move(coeffs));
    }

    double total = 0.0;
    for (std::size_t k = 0; k < coefficient_sets.size(); ++k) {
        const auto& coeffs = coefficient_sets[k];
        double norm_r_pow = 0.0;
        for (const auto& c : coeffs) norm_r_pow += std::pow(std::abs(c), basis.r);
        const double target = std::pow(norm_r_pow, 1.0 / basis.r);
        if (!(target > 0.0)) continue;
        const double emp = empirical_lp_norm(embed(basis, std::span<const S>(coeffs)),
                                             PNorm(basis.p))
                               .value;
        IsometryTrial trial;
        trial.label = (k < adversarial_count) ? "adversarial" + std::to_string(k)
                                              : "random" + std::to_string(k - adversarial_count);
        trial.coefficient_norm_r = target;
        trial.empirical_norm_p = emp;
        trial.relative_error = std::abs(emp - target) / target;
        report.max_relative_error = std::max(report.max_relative_error, trial.relative_error);
        total += trial.relative_error;
        report.trials.push_back(std::move(trial));
    }
    report.mean_relative_error = report.trials.empty() ? 0.0 : total / report.trials.size();
    report.passed = report.max_relative_error <= tol;
    return report;
}

}  // namespace

EmbeddedBasis build_embedding(double r, double p, std::size_t m, std::size_t n,
                              std::uint64_t seed) {
    return build_impl<double>(r, p, m, n, seed,
                              [](const StableSpec& spec, std::size_t count, std::uint64_t sd,
                                 std::int64_t stream) {
                                  return sample_symmetric_stable(spec, count, sd, stream);
                              });
}

EmbeddedBasisC build_embedding_complex(double r, double p, std::size_t m, std::size_t n,
                                       std::uint64_t seed) {
    return build_impl<std::complex<double>>(
        r, p, m, n, seed,
        [](const StableSpec& spec, std::size_t count, std::uint64_t sd, std::int64_t stream) {
            return sample_isotropic_complex_stable(spec, count, sd, stream);
        });
}

IsometryReport verify_isometry(const EmbeddedBasis& basis, int trials, double tol,
                               std::uint64_t seed) {
    return verify_impl(basis, trials, tol, seed);
}

IsometryReport verify_isometry(const EmbeddedBasisC& basis, int trials, double tol,
                               std::uint64_t seed) {
    return verify_impl(basis, trials, tol, seed);
}

std::size_t dyadic_cell_index(const TreeNode& sigma) {
    std::size_t index = 0;
    for (std::uint32_t bit : sigma) index = 2 * index + (bit ? 1 : 0);
    return index;
}

Disintegration<DyadicStep> dyadic_disintegration(double r, int depth) {
    if (depth < 0) throw std::invalid_argument("dyadic_disintegration: negative depth");
    PNorm{r};
    Disintegration<DyadicStep> d;
    d.tree = FiniteTree::full_binary(depth);
    d.p = r;
    for (const TreeNode& node : d.tree.nodes()) {
        const int level = static_cast<int>(node.size());
        d.assign.emplace(node, DyadicStep::indicator(level, dyadic_cell_index(node)));
    }
    return d;
}

}  // namespace lpemb

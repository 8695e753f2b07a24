#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpemb/disintegration.hpp"
#include "lpemb/stable.hpp"

namespace lpemb {

/// Monte Carlo realization of e_j -> ||g_j||_p^{-1} g_j for an independent
/// r-stable family {g_j}: m sample columns, each rescaled by its own
/// empirical p-norm, so unit coefficient vectors embed with empirical norm
/// exactly 1 and the Monte Carlo error is isolated in cross terms.
template <class S>
struct BasicEmbeddedBasis {
    double r = 2.0;
    double p = 1.0;
    std::vector<BasicSampleVector<S>> basis;
    std::vector<double> norms_used;

    std::size_t size() const { return basis.size(); }
    std::size_t sample_count() const { return basis.empty() ? 0 : basis.front().size(); }
};

using EmbeddedBasis = BasicEmbeddedBasis<double>;
using EmbeddedBasisC = BasicEmbeddedBasis<std::complex<double>>;

/// Validates 1 <= p <= r <= 2 with p < r or r = 2; returns whether the pair
/// has finite moments only in the warned p = r < 2 boundary sense.
bool embedding_moments_warned(double r, double p);
void validate_embedding_exponents(double r, double p);

EmbeddedBasis build_embedding(double r, double p, std::size_t m, std::size_t n,
                              std::uint64_t seed);
EmbeddedBasisC build_embedding_complex(double r, double p, std::size_t m, std::size_t n,
                                       std::uint64_t seed);

/// Pointwise linear combination sum_j a_j basis_j.
template <class S>
BasicSampleVector<S> embed(const BasicEmbeddedBasis<S>& basis, std::span<const S> coefficients) {
    if (coefficients.size() != basis.size())
        throw std::invalid_argument("embed: coefficient count != basis size");
    if (basis.size() == 0) throw std::invalid_argument("embed: empty basis");
    BasicSampleVector<S> out = coefficients[0] * basis.basis[0];
    for (std::size_t j = 1; j < basis.size(); ++j)
        out = out + coefficients[j] * basis.basis[j];
    return out;
}

struct IsometryTrial {
    std::string label;
    double coefficient_norm_r = 0.0;
    double empirical_norm_p = 0.0;
    double relative_error = 0.0;
};

struct IsometryReport {
    double r = 0.0, p = 0.0;
    std::size_t m = 0, n = 0;
    double tol = 0.0;
    std::vector<IsometryTrial> trials;
    double max_relative_error = 0.0;
    double mean_relative_error = 0.0;
    bool passed = false;
};

/// Compares the empirical p-norm of embedded combinations against the
/// coefficient r-norm over `trials` random coefficient vectors plus the
/// deterministic adversarial set (unit vectors, all-ones, alternating signs).
IsometryReport verify_isometry(const EmbeddedBasis& basis, int trials, double tol,
                               std::uint64_t seed);
IsometryReport verify_isometry(const EmbeddedBasisC& basis, int trials, double tol,
                               std::uint64_t seed);

/// The exact dyadic disintegration of L^r[0,1]: the full binary tree of the
/// given depth with psi(sigma) the indicator of the dyadic interval J_sigma,
/// so ||psi(sigma)||_r = 2^(-|sigma|/r).
Disintegration<DyadicStep> dyadic_disintegration(double r, int depth);

/// The dyadic cell index of a bit string, most significant bit first.
std::size_t dyadic_cell_index(const TreeNode& sigma);

}  // namespace lpemb

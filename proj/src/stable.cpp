#include "lpemb/stable.hpp"

#include <algorithm>
#include <cmath>

#include "lpemb/rng.hpp"

namespace lpemb {

namespace {

constexpr double kPi = RngStream::pi;

// Chambers-Mallows-Stuck transform for the symmetric case.  With U uniform
// on (-pi/2, pi/2) and W exponential(1),
//     X = sin(rU) / cos(U)^(1/r) * [cos((1-r)U) / W]^((1-r)/r)
// has characteristic function exp(-|t|^r).  At r = 1 the second factor has
// exponent 0, collapsing the formula to tan(U) (Cauchy); at r = 2 it reduces
// to 2 sin(U) sqrt(W), a Normal(0,2) variate.
double cms_symmetric(double r, double u_unit, double w_exp) {
    const double u = kPi * (u_unit - 0.5);
    return std::sin(r * u) / std::pow(std::cos(u), 1.0 / r) *
           std::pow(std::cos((1.0 - r) * u) / w_exp, (1.0 - r) / r);
}

}  // namespace

namespace detail {

double kanter_subordinator(double alpha, double theta_unit, double w_exp) {
    const double theta = kPi * theta_unit;
    const double s1 = std::sin(alpha * theta);
    const double s2 = std::sin((1.0 - alpha) * theta);
    const double s = std::sin(theta);
    const double a = std::pow(s1, alpha / (1.0 - alpha)) * s2 / std::pow(s, 1.0 / (1.0 - alpha));
    return std::pow(a / w_exp, (1.0 - alpha) / alpha);
}

double median_of_means(const std::vector<double>& powered) {
    const std::size_t n = powered.size();
    const std::size_t blocks = std::min<std::size_t>(32, n);
    std::vector<double> means(blocks, 0.0);
    const std::size_t base = n / blocks;
    const std::size_t extra = n % blocks;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t len = base + (b < extra ? 1 : 0);
        double sum = 0.0;
        for (std::size_t i = 0; i < len; ++i) sum += powered[pos + i];
        means[b] = sum / static_cast<double>(len);
        pos += len;
    }
    std::sort(means.begin(), means.end());
    if (blocks % 2 == 1) return means[blocks / 2];
    return 0.5 * (means[blocks / 2 - 1] + means[blocks / 2]);
}

}  // namespace detail

SampleVector sample_symmetric_stable(const StableSpec& spec, std::size_t n,
                                     std::uint64_t seed, std::int64_t stream_id) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("sample_symmetric_stable: N must be >= 1");
    SampleVector out;
    out.spec = spec;
    out.spec.field = ScalarField::Real;
    out.seed = seed;
    out.stream_id = stream_id;
    out.samples.resize(n);
    RngStream rng(seed, static_cast<std::uint64_t>(stream_id));
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_unit_open();
        const double w = -std::log(rng.next_unit_open());
        out.samples[i] = spec.sigma * cms_symmetric(spec.r, u, w);
    }
    return out;
}

SampleVectorC sample_isotropic_complex_stable(const StableSpec& spec, std::size_t n,
                                              std::uint64_t seed, std::int64_t stream_id) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("sample_isotropic_complex_stable: N must be >= 1");
    SampleVectorC out;
    out.spec = spec;
    out.spec.field = ScalarField::Complex;
    out.seed = seed;
    out.stream_id = stream_id;
    out.samples.resize(n);
    RngStream rng(seed, static_cast<std::uint64_t>(stream_id));
    const double alpha = spec.r / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Sub-Gaussian representation: Z = sqrt(A) (G1 + i G2) with A the
        // (r/2)-positive-stable subordinator; rotation invariance is inherited
        // from the isotropy of (G1, G2).  A == 1 when r == 2.
        double a = 1.0;
        const double u = rng.next_unit_open();
        const double w = -std::log(rng.next_unit_open());
        if (spec.r < 2.0) a = detail::kanter_subordinator(alpha, u, w);
        const double g1 = rng.next_normal();
        const double g2 = rng.next_normal();
        const double scale = spec.sigma * std::sqrt(a);
        out.samples[i] = std::complex<double>(scale * g1, scale * g2);
    }
    return out;
}

double complex_cf_scale(double r, double sigma) {
    return std::pow(sigma, r) * std::pow(2.0, -r / 2.0);
}

double empirical_cf(const SampleVector& sv, double t) {
    double sum = 0.0;
    for (double x : sv.samples) sum += std::cos(t * x);
    return sum / static_cast<double>(sv.samples.size());
}

double empirical_cf(const SampleVectorC& sv, std::complex<double> z) {
    double sum = 0.0;
    const std::complex<double> zbar = std::conj(z);
    for (const auto& x : sv.samples) sum += std::cos((zbar * x).real());
    return sum / static_cast<double>(sv.samples.size());
}

namespace {

template <class S>
LpEstimate lp_estimate_impl(const BasicSampleVector<S>& sv, PNorm p) {
    LpEstimate est;
    est.divergent_moment_warning = (sv.spec.r < 2.0 && p.p >= sv.spec.r);
    std::vector<double> powered(sv.samples.size());
    for (std::size_t i = 0; i < powered.size(); ++i)
        powered[i] = std::pow(std::abs(sv.samples[i]), p.p);
    est.value = std::pow(detail::median_of_means(powered), 1.0 / p.p);
    return est;
}

}  // namespace

LpEstimate empirical_lp_norm(const SampleVector& sv, PNorm p) { return lp_estimate_impl(sv, p); }
LpEstimate empirical_lp_norm(const SampleVectorC& sv, PNorm p) { return lp_estimate_impl(sv, p); }

std::vector<SampleVector> independent_family(const StableSpec& spec, std::size_t count,
                                             std::size_t n, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("independent_family: count must be >= 1");
    std::vector<SampleVector> family;
    family.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        family.push_back(sample_symmetric_stable(spec, n, seed, static_cast<std::int64_t>(j)));
    return family;
}

std::vector<SampleVectorC> independent_family_complex(const StableSpec& spec, std::size_t count,
                                                      std::size_t n, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("independent_family: count must be >= 1");
    std::vector<SampleVectorC> family;
    family.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        family.push_back(
            sample_isotropic_complex_stable(spec, n, seed, static_cast<std::int64_t>(j)));
    return family;
}

}  // namespace lpemb

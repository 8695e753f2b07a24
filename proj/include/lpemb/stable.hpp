#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpemb/dyadic.hpp"

namespace lpemb {

/// Symmetric r-stable law with characteristic function exp(-sigma^r |t|^r)
/// (real case) or exp(-c |z|^r) with c = sigma^r 2^(-r/2) (isotropic complex
/// case; see complex_cf_scale).
struct StableSpec {
    double r = 2.0;
    double sigma = 1.0;
    ScalarField field = ScalarField::Real;

    void validate() const {
        if (!(r > 0.0) || !(r <= 2.0)) throw std::invalid_argument("StableSpec: r must lie in (0,2]");
        if (!(sigma >= 0.0)) throw std::invalid_argument("StableSpec: sigma must be >= 0");
    }
};

/// N i.i.d. draws plus the key that regenerates them bit for bit.
/// Columns produced by linear combination keep stream_id = -1; the
/// regeneration contract applies to generator output only.
template <class S>
struct BasicSampleVector {
    using scalar_type = S;

    StableSpec spec;
    std::uint64_t seed = 0;
    std::int64_t stream_id = 0;
    std::vector<S> samples;

    std::size_t size() const { return samples.size(); }

    friend BasicSampleVector operator+(const BasicSampleVector& a, const BasicSampleVector& b) {
        if (a.samples.size() != b.samples.size())
            throw std::invalid_argument("SampleVector: size mismatch");
        BasicSampleVector out = a;
        out.stream_id = -1;
        for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += b.samples[i];
        return out;
    }
    friend BasicSampleVector operator-(const BasicSampleVector& a, const BasicSampleVector& b) {
        return a + (S{-1} * b);
    }
    friend BasicSampleVector operator*(S s, const BasicSampleVector& v) {
        BasicSampleVector out = v;
        out.stream_id = -1;
        for (auto& x : out.samples) x = s * x;
        return out;
    }
};

using SampleVector = BasicSampleVector<double>;
using SampleVectorC = BasicSampleVector<std::complex<double>>;

SampleVector sample_symmetric_stable(const StableSpec& spec, std::size_t n,
                                     std::uint64_t seed, std::int64_t stream_id);

SampleVectorC sample_isotropic_complex_stable(const StableSpec& spec, std::size_t n,
                                              std::uint64_t seed, std::int64_t stream_id);

/// Theoretical scale constant of the complex sampler's characteristic
/// function exp(-c |z|^r); measured rather than normative (the construction
/// fixes it, no convention is imposed).
double complex_cf_scale(double r, double sigma);

/// (1/N) sum cos(t x_i)  — empirical characteristic function (real symmetric).
double empirical_cf(const SampleVector& sv, double t);

/// (1/N) sum cos(Re(conj(z) x_i))  — complex case.
double empirical_cf(const SampleVectorC& sv, std::complex<double> z);

struct LpEstimate {
    double value = 0.0;
    /// set when p >= r with r < 2: the p-th absolute moment diverges and the
    /// estimate grows without bound in N.
    bool divergent_moment_warning = false;
};

/// Median-of-means estimate of (E|x|^p)^(1/p) over 32 blocks; the median
/// keeps heavy-tailed fluctuations bounded where the plain mean has infinite
/// variance.  Deterministic given the sample vector.
LpEstimate empirical_lp_norm(const SampleVector& sv, PNorm p);
LpEstimate empirical_lp_norm(const SampleVectorC& sv, PNorm p);

/// Norm oracle hook for the generic tree/disintegration machinery: the
/// empirical median-of-means norm.
template <class S>
double vector_norm(const BasicSampleVector<S>& v, double p) {
    return empirical_lp_norm(v, PNorm(p)).value;
}

/// Finite prefix of an independent family: m streams derived from one seed.
std::vector<SampleVector> independent_family(const StableSpec& spec, std::size_t count,
                                             std::size_t n, std::uint64_t seed);
std::vector<SampleVectorC> independent_family_complex(const StableSpec& spec, std::size_t count,
                                                      std::size_t n, std::uint64_t seed);

namespace detail {
/// Kanter's representation of the positive alpha-stable subordinator with
/// Laplace transform exp(-s^alpha), 0 < alpha < 1.
double kanter_subordinator(double alpha, double theta_unit, double w_exp);
/// Median-of-means over 32 blocks of the running |x|^p means.
double median_of_means(const std::vector<double>& powered);
}  // namespace detail

}  // namespace lpemb

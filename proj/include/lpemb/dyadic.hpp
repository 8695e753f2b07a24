#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpemb {

enum class ScalarField { Real, Complex };

/// Exponent of an L^p norm; p >= 1.
struct PNorm {
    double p;
    explicit PNorm(double value) : p(value) {
        if (!(value >= 1.0)) throw std::invalid_argument("PNorm: p must be >= 1");
    }
};

namespace detail {

// Summation over a power-of-two range by halving.  The binary reduction makes
// dyadic refinement a no-op in floating point: duplicated adjacent terms merge
// into exact doublings, so the refined sum reproduces the original bit for bit.
inline double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 1) return xs[0];
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& z) { return std::abs(z); }

}  // namespace detail

/// Step function on the dyadic partition of [0,1): 2^level cells, one scalar
/// per cell.  Values are immutable once constructed.
template <class S>
class BasicDyadicStep {
public:
    using scalar_type = S;

    BasicDyadicStep() : level_(0), values_(1, S{}) {}

    BasicDyadicStep(int level, std::vector<S> values) : level_(level), values_(std::move(values)) {
        if (level < 0) throw std::invalid_argument("DyadicStep: negative level");
        if (values_.size() != cell_count(level))
            throw std::invalid_argument("DyadicStep: values.size() != 2^level");
    }

    static BasicDyadicStep constant(S value, int level = 0) {
        return BasicDyadicStep(level, std::vector<S>(cell_count(level), value));
    }

    /// Indicator of the dyadic cell [cell*2^-level, (cell+1)*2^-level).
    static BasicDyadicStep indicator(int level, std::size_t cell) {
        std::vector<S> values(cell_count(level), S{});
        values.at(cell) = S{1};
        return BasicDyadicStep(level, std::move(values));
    }

    int level() const { return level_; }
    const std::vector<S>& values() const { return values_; }
    static std::size_t cell_count(int level) {
        if (level > 30) throw std::invalid_argument("DyadicStep: level too large");
        return std::size_t{1} << level;
    }

    /// Same function expressed on a finer partition.
    BasicDyadicStep refined(int target_level) const {
        if (target_level < level_) throw std::invalid_argument("refined: coarser than current level");
        const std::size_t copies = std::size_t{1} << (target_level - level_);
        std::vector<S> out;
        out.reserve(values_.size() * copies);
        for (const S& v : values_)
            out.insert(out.end(), copies, v);
        return BasicDyadicStep(target_level, std::move(out));
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const S& v) { return v == S{}; });
    }

    friend BasicDyadicStep operator+(const BasicDyadicStep& a, const BasicDyadicStep& b) {
        return zip(a, b, [](S x, S y) { return x + y; });
    }
    friend BasicDyadicStep operator-(const BasicDyadicStep& a, const BasicDyadicStep& b) {
        return zip(a, b, [](S x, S y) { return x - y; });
    }
    friend BasicDyadicStep operator*(S s, const BasicDyadicStep& f) {
        std::vector<S> out(f.values_);
        for (S& v : out) v = s * v;
        return BasicDyadicStep(f.level_, std::move(out));
    }
    friend BasicDyadicStep operator-(const BasicDyadicStep& f) { return S{-1} * f; }

    friend bool operator==(const BasicDyadicStep& a, const BasicDyadicStep& b) {
        const int lvl = std::max(a.level_, b.level_);
        return a.refined(lvl).values_ == b.refined(lvl).values_;
    }

    template <class F>
    static BasicDyadicStep zip(const BasicDyadicStep& a, const BasicDyadicStep& b, F&& op) {
        const int lvl = std::max(a.level_, b.level_);
        const BasicDyadicStep fa = a.refined(lvl);
        const BasicDyadicStep fb = b.refined(lvl);
        std::vector<S> out(fa.values_.size());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(fa.values_[k], fb.values_[k]);
        return BasicDyadicStep(lvl, std::move(out));
    }

private:
    int level_;
    std::vector<S> values_;
};

using DyadicStep = BasicDyadicStep<double>;
using DyadicStepC = BasicDyadicStep<std::complex<double>>;

/// (sum_k |v_k|^p 2^-level)^(1/p); refinement-invariant by construction.
template <class S>
double lp_norm(const BasicDyadicStep<S>& f, PNorm p) {
    const double measure = std::ldexp(1.0, -f.level());
    std::vector<double> terms(f.values().size());
    for (std::size_t k = 0; k < terms.size(); ++k)
        terms[k] = std::pow(detail::abs_of(f.values()[k]), p.p) * measure;
    const double total = detail::pairwise_sum(terms);
    return std::pow(total, 1.0 / p.p);
}

// --- lattice operations (real scalars only; the order is pointwise a.e.) ---

inline DyadicStep meet(const DyadicStep& f, const DyadicStep& g) {
    return DyadicStep::zip(f, g, [](double x, double y) { return std::min(x, y); });
}
inline DyadicStep join(const DyadicStep& f, const DyadicStep& g) {
    return DyadicStep::zip(f, g, [](double x, double y) { return std::max(x, y); });
}
inline DyadicStep abs_value(const DyadicStep& f) { return join(f, -f); }
inline DyadicStep pos_part(const DyadicStep& f) { return join(f, DyadicStep::constant(0.0)); }
inline DyadicStep neg_part(const DyadicStep& f) { return join(-f, DyadicStep::constant(0.0)); }

/// Pointwise modulus of a complex step function, as a real step function.
inline DyadicStep pointwise_modulus(const DyadicStepC& f) {
    std::vector<double> out(f.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::abs(f.values()[k]);
    return DyadicStep(f.level(), std::move(out));
}
inline DyadicStep pointwise_modulus(const DyadicStep& f) { return abs_value(f); }

/// Norm oracle hook used by the generic tree/disintegration machinery.
template <class S>
double vector_norm(const BasicDyadicStep<S>& f, double p) {
    return lp_norm(f, PNorm(p));
}

/// |f| ∧ |g| = 0, checked exactly on the common refinement.
template <class S>
bool is_disjointly_supported(const BasicDyadicStep<S>& f, const BasicDyadicStep<S>& g) {
    return meet(pointwise_modulus(f), pointwise_modulus(g)).is_zero();
}

/// Nearest disjointly supported pair: g_j(t) = 0 where |f_j(t)| <= |f_{1-j}(t)|,
/// f_j(t) otherwise.  Ties zero both coordinates.  Guarantees
/// max_j ||g_j - f_j||_p <= || |f0| ∧ |f1| ||_p for every p >= 1.
template <class S>
std::pair<BasicDyadicStep<S>, BasicDyadicStep<S>> disjointify(const BasicDyadicStep<S>& f0,
                                                              const BasicDyadicStep<S>& f1) {
    const int lvl = std::max(f0.level(), f1.level());
    const auto a = f0.refined(lvl);
    const auto b = f1.refined(lvl);
    std::vector<S> g0(a.values());
    std::vector<S> g1(b.values());
    for (std::size_t k = 0; k < g0.size(); ++k) {
        const double ma = detail::abs_of(a.values()[k]);
        const double mb = detail::abs_of(b.values()[k]);
        if (ma <= mb) g0[k] = S{};
        if (mb <= ma) g1[k] = S{};
    }
    return {BasicDyadicStep<S>(lvl, std::move(g0)), BasicDyadicStep<S>(lvl, std::move(g1))};
}

}  // namespace lpemb

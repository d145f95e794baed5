#pragma once

// Small shared utilities: compensated accumulation, counter-based RNG
// substreams, uniform grids, and shortest round-trip float formatting.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "fluxens/errors.hpp"

namespace fluxens {

// Neumaier-compensated accumulator. Error per added term is below 2 ulp,
// and the result depends only on the order of add() calls, which callers
// keep fixed (ascending qubit index) for cross-run determinism.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based substream: the draw sequence depends only on (seed, index),
// so parallel consumers can sample element `index` in any order and still
// produce identical ensembles.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed;
        const std::uint64_t a = splitmix64(s);
        s = index ^ 0x6a09e667f3bcc909ULL;
        const std::uint64_t b = splitmix64(s);
        state_ = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }

    // uniform in (0, 1]
    double uniform() {
        return (static_cast<double>(splitmix64(state_) >> 11) + 1.0) * 0x1.0p-53;
    }

    // standard normal (Box-Muller, one fresh pair per call)
    double gaussian() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // normal(mean, sigma) truncated to +-5 sigma by resampling
    double gaussian_truncated(double mean, double sigma) {
        if (sigma == 0.0) return mean;
        double z = gaussian();
        while (std::abs(z) > 5.0) z = gaussian();
        return mean + sigma * z;
    }

private:
    std::uint64_t state_;
};

// Uniform grid given as start/stop/step; a single-point grid has
// stop == start (step is then ignored).
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    void validate(const std::string& name) const {
        if (stop < start)
            throw ValidationError(name + ": stop < start");
        if (stop > start && step <= 0.0)
            throw ValidationError(name + ": step must be > 0");
    }

    std::size_t count() const {
        if (stop <= start) return 1;
        return static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
    }

    std::vector<double> points() const {
        std::vector<double> v(count());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = start + static_cast<double>(i) * step;
        return v;
    }
};

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double x) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t hash_double(std::uint64_t h, double x) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(x));
    std::memcpy(&bits, &x, sizeof(bits));
    return hash_combine(h, bits);
}

}  // namespace fluxens

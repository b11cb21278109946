#ifndef INEXP_RNG_HPP
#define INEXP_RNG_HPP

#include <cstdint>
#include <random>

namespace inexp {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

/// Deterministic random source. mt19937_64 output is pinned by the standard;
/// the bounded samplers below are hand-rolled because std distributions are
/// implementation-defined and would break byte-identical reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (engine_() & 1) != 0; }

    /// Independent child stream, a pure function of (seed, tag); never
    /// advances this stream.
    Rng fork(std::uint64_t tag) const {
        return Rng(detail::splitmix64(seed_ ^ detail::splitmix64(tag)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace inexp

#endif

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Counter-based random number generation.
//
// Every draw is a pure function of (master_seed, path_id, step_counter,
// word_index), so a path can be replayed bit-exactly no matter how work is
// scheduled across threads, and distinct paths/steps never share state.

namespace spde::rng {

struct NoiseStream {
    std::uint64_t master_seed = 0;
    std::uint64_t path_id = 0;
    std::uint64_t step_counter = 0;
};

// SplitMix64 finalizer; a bijection on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Random 64-bit word for a (stream, index) pair.
inline std::uint64_t word(const NoiseStream& s, std::uint64_t index) {
    std::uint64_t h = mix64(s.master_seed);
    h = mix64(h ^ (0xc2b2ae3d27d4eb4fULL + s.path_id));
    h = mix64(h ^ (0x165667b19e3779f9ULL + s.step_counter));
    h = mix64(h ^ (0x27d4eb2f165667c5ULL + index));
    return h;
}

// Derive an independent master seed for a sub-experiment (one tag per use).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    return mix64(mix64(master) ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
}

// Uniform on (0,1]; never returns 0 so log() is always safe.
inline double to_unit(std::uint64_t w) {
    return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

// Sequential view over a stream's word sequence. Consumption order is fixed
// by the calling code, which is what makes replays exact.
class DrawCursor {
public:
    explicit DrawCursor(NoiseStream s) : stream_(s) {}

    double uniform() { return to_unit(word(stream_, next_++)); }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    void fill_gauss(double* out, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) out[i] = gauss();
    }

private:
    NoiseStream stream_;
    std::uint64_t next_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace spde::rng

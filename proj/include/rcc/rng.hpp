#pragma once
#include <cstdint>
#include <vector>
#include <cassert>

namespace rcc {

// Deterministic generator with a platform-independent output stream.
// std::uniform_*_distribution is implementation-defined, so sampling is
// done here directly on top of splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) via rejection, bound > 0
    std::uint64_t next_below(std::uint64_t bound) {
        assert(bound > 0);
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform in [0, 1) with 53-bit resolution
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), in selection order
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

    // independent substream derived from this seed and a tag
    Rng substream(std::uint64_t tag) const {
        Rng r(state_ ^ (0x517cc1b727220a95ULL * (tag + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

inline std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
    assert(k <= n);
    // Floyd's algorithm keeps memory at O(k) without shuffling all of [0,n)
    std::vector<std::size_t> out;
    out.reserve(k);
    std::vector<bool> used;
    if (k * 16 >= n) {
        used.assign(n, false);
        for (std::size_t j = n - k; j < n; ++j) {
            std::size_t t = static_cast<std::size_t>(next_below(j + 1));
            if (used[t]) t = j;
            used[t] = true;
            out.push_back(t);
        }
    } else {
        for (std::size_t j = n - k; j < n; ++j) {
            std::size_t t = static_cast<std::size_t>(next_below(j + 1));
            bool dup = false;
            for (std::size_t x : out) if (x == t) { dup = true; break; }
            out.push_back(dup ? j : t);
        }
    }
    return out;
}

} // namespace rcc

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qevo {

/// SplitMix64 finalizer. Used to derive child stream seeds and to hash tags.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over a byte string; stable id/content hashing for provenance.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

/// Seeded deterministic random stream.
///
/// All draws go through explicit, implementation-independent helpers
/// (std::mt19937_64 output is standardized; the std distributions are not,
/// so they are never used here). Child streams are derived from the parent's
/// *initial* seed and a tag, which keeps stream labelling stable no matter
/// how much the parent has been consumed. One root seed therefore fixes every
/// island, dataset record, and study run exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        // threshold = 2^64 mod n
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform_index(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Derive the seed of the child stream with the given tag.
    std::uint64_t child_seed(std::uint64_t tag) const {
        return splitmix64(seed_ ^ splitmix64(tag + 0x51ed270b0a1b2c3dULL));
    }

    /// Independent child stream; does not consume from this stream.
    Rng child(std::uint64_t tag) const { return Rng(child_seed(tag)); }

    /// k distinct indices sampled uniformly from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        if (k > n) k = n;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(uniform_index(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace qevo

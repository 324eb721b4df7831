#pragma once

#include <cstdint>

namespace tilekit {

/// splitmix64 step (Steele et al.); the workhorse for all deterministic
/// randomness in the library. Trial/worker streams are derived counter-style
/// from (seed, stream, index) so parallel runs are bit-reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Stream derived from (seed, stream, index); independent of call order.
    static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s) ^ (stream * 0xd1342543de82ef95ULL);
        std::uint64_t b = a + 0x2545f4914f6cdd1dULL * (index + 1);
        return Rng(splitmix64(b));
    }

    std::uint64_t next() { return splitmix64(state_); }

    /// Uniform in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return next() & 1; }

    /// Fisher-Yates; own implementation because std::shuffle ordering is not
    /// pinned across standard libraries.
    template <typename T>
    void shuffle(T* data, std::size_t n) {
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = below(i);
            T tmp = data[i - 1];
            data[i - 1] = data[j];
            data[j] = tmp;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace tilekit

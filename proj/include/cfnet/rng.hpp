#pragma once

#include <cstdint>

namespace cfnet {

// Counter-based stream built on the splitmix64 finalizer (Steele, Lea, Flood).
// A stream is a 64-bit key; child(i) derives an independent key, uniform(n)
// reads the n-th variate. No state is carried between calls, so sessions are
// reproducible across platforms and safe to evaluate out of order.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t key) : key_(key) {}

    RandomStream child(std::uint64_t index) const {
        return RandomStream(mix(key_ ^ mix(0x5851F42D4C957F2DULL + index)));
    }

    /// n-th uniform variate in [0, 1), 53-bit resolution.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(key_ + 0x9E3779B97F4A7C15ULL * (counter + 1));
    }

    std::uint64_t key() const { return key_; }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t key_;
};

} // namespace cfnet

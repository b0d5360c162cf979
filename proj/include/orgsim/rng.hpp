#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace orgsim {

// Stateless 64-bit finalizer (splitmix64). Used for seed derivation so that
// run seeds depend only on (master_seed, scenario, run, stream), never on
// execution order.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter scheme for per-run seeds: chain the components through mix64.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario,
                                 std::uint64_t run, std::uint64_t stream) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ mix64(scenario ^ 0xA0761D6478BD642FULL));
  h = mix64(h ^ mix64(run ^ 0xE7037ED1A0B428DBULL));
  h = mix64(h ^ mix64(stream ^ 0x8EBC6AF09C88C6E3ULL));
  return h;
}

// Seeded random stream. mt19937_64 is bit-exact across platforms by the
// standard; the distributions below are hand-rolled because the std::
// distribution objects are implementation-defined and would break golden
// files when switching compilers.
class Rng {
 public:
  Rng() : engine_(0) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), unbiased via rejection of the low residue.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t bound = (0ULL - n) % n;  // 2^64 mod n
    std::uint64_t x = engine_();
    while (x < bound) x = engine_();
    return x % n;
  }

  // N(0, sigma) via Box-Muller; consumes exactly two uniforms per call.
  double gaussian(double sigma) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    return sigma * r * std::cos(theta);
  }

  // Fisher-Yates; std::shuffle is implementation-defined, this is not.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orgsim

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace cubesurf {

// Seeded generator with portable derived draws. std::mt19937_64 output is
// pinned by the standard; the distributions here avoid the
// implementation-defined std:: distribution wrappers so sequences are
// reproducible across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1.
  int below(int n) {
    std::uint64_t bound = static_cast<std::uint64_t>(n);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
      std::swap(values[static_cast<size_t>(i)], values[static_cast<size_t>(below(i + 1))]);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace cubesurf

#pragma once

#include <array>
#include <random>

#include "spinorth/chain.hpp"

namespace spinorth::testing {

/// Deterministic random parameter draws for property-style tests.
class ParamGen {
 public:
  explicit ParamGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int site_count() {
    static constexpr std::array<int, 4> ns = {3, 7, 13, 27};
    return ns[std::uniform_int_distribution<std::size_t>(0, 3)(rng_)];
  }

  int channel() { return std::uniform_int_distribution<int>(1, 4)(rng_); }

  ChainParams chain(double dm_lo = 0.0, double dm_hi = 0.0) {
    ChainParams p;
    p.n_sites = site_count();
    p.anisotropy = uniform(0.0, 1.0);
    p.field = uniform(0.0, 1.2);
    p.dm = dm_lo == dm_hi ? dm_lo : uniform(dm_lo, dm_hi);
    p.coupling = uniform(0.0, 0.4);
    return p;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spinorth::testing

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hooklen/rational.hpp"

namespace hooklen {

/// Pure map from a hook length h >= 1 to an exact rational, with a name.
/// A weight induces the tree statistic prod_v w(h_v).
class HookWeight {
 public:
  using Fn = std::function<Rational(std::uint32_t)>;

  HookWeight(std::string name, Fn fn);

  const std::string& name() const noexcept { return name_; }

  /// Throws std::invalid_argument for h == 0.
  Rational operator()(std::uint32_t h) const;

  /// Values w(1) .. w(n) at indices 1 .. n; index 0 holds 0.
  std::vector<Rational> table(std::uint32_t n) const;

 private:
  std::string name_;
  Fn fn_;
};

namespace weights {

/// w(h) = 1
HookWeight unit();
/// w(h) = 1/h
HookWeight inverse_hook();
/// w(h) = 1 + 1/h
HookWeight postnikov();
/// w(h) = 1 / (h * 2^(h-1))
HookWeight han4();
/// w(h) = 1 / ((2h+1) * 2^(2h-1))
HookWeight han5();

/// Deterministic pseudo-random weight: w(h) = p/q with p, q drawn uniformly
/// from [lo, hi] by hashing (seed, h). Total over all h, so it is usable at
/// any n.
HookWeight random(std::uint64_t seed, std::uint32_t lo = 1, std::uint32_t hi = 9);

}  // namespace weights

}  // namespace hooklen

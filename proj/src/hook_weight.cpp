#include "hooklen/hook_weight.hpp"

#include <stdexcept>
#include <utility>

namespace hooklen {

HookWeight::HookWeight(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {
  if (!fn_) throw std::invalid_argument("hook weight '" + name_ + "' has no function");
}

Rational HookWeight::operator()(std::uint32_t h) const {
  if (h == 0) throw std::invalid_argument("hook lengths start at 1");
  Rational value = fn_(h);
  value.canonicalize();
  return value;
}

std::vector<Rational> HookWeight::table(std::uint32_t n) const {
  std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t h = 1; h <= n; ++h) values[h] = (*this)(h);
  return values;
}

namespace weights {

HookWeight unit() {
  return HookWeight("1", [](std::uint32_t) { return Rational(1); });
}

HookWeight inverse_hook() {
  return HookWeight("1/h", [](std::uint32_t h) { return Rational(1, h); });
}

HookWeight postnikov() {
  return HookWeight("1+1/h", [](std::uint32_t h) { return Rational(h + 1, h); });
}

HookWeight han4() {
  return HookWeight("1/(h*2^(h-1))", [](std::uint32_t h) {
    return Rational(BigInt(1), BigInt(h) * pow2(h - 1));
  });
}

HookWeight han5() {
  return HookWeight("1/((2h+1)*2^(2h-1))", [](std::uint32_t h) {
    return Rational(BigInt(1), BigInt(2 * h + 1) * pow2(2 * h - 1));
  });
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

HookWeight random(std::uint64_t seed, std::uint32_t lo, std::uint32_t hi) {
  if (lo == 0 || lo > hi) throw std::invalid_argument("random weight range must be 1 <= lo <= hi");
  return HookWeight("random(" + std::to_string(seed) + ")", [=](std::uint32_t h) {
    const std::uint64_t span = std::uint64_t{hi} - lo + 1;
    const std::uint64_t a = splitmix64(seed ^ splitmix64(2 * std::uint64_t{h}));
    const std::uint64_t b = splitmix64(a);
    return Rational(BigInt(static_cast<unsigned long>(lo + a % span)),
                    BigInt(static_cast<unsigned long>(lo + b % span)));
  });
}

}  // namespace weights

}  // namespace hooklen

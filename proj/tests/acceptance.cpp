// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hooklen/binary_tree.hpp"
#include "hooklen/codec.hpp"
#include "hooklen/enumerate.hpp"
#include "hooklen/identity.hpp"
#include "hooklen/labeling.hpp"

using namespace hooklen;

namespace {

struct Criterion {
  std::string name;
  double time_limit_s;  // 0 means no limit
  std::function<bool(std::string&)> check;
};

HookIdentity builtin(const char* name) { return *find_identity(name); }

bool verify_range(const char* name, std::size_t from, std::size_t to, Mode mode, std::string& detail) {
  const VerificationReport report = verify(builtin(name), from, to, mode);
  if (const auto* bad = report.first_counterexample()) {
    detail = "fails at n = " + std::to_string(bad->n);
    return false;
  }
  detail = std::to_string(report.records.size()) + " values exact";
  return true;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({"han4 (hook length in the exponent, 1/n!) n=1..12 both", 60.0,
                 [](std::string& d) { return verify_range("han4", 1, 12, Mode::both, d); }});
  out.push_back({"han5 (1/(2n+1)!) n=1..12 both", 60.0,
                 [](std::string& d) { return verify_range("han5", 1, 12, Mode::both, d); }});
  out.push_back({"han4 n=1..400 recurrence", 30.0,
                 [](std::string& d) { return verify_range("han4", 1, 400, Mode::recurrence, d); }});
  out.push_back({"han5 n=1..300 recurrence", 30.0,
                 [](std::string& d) { return verify_range("han5", 1, 300, Mode::recurrence, d); }});

  out.push_back({"worked example: S_han4(3) = 1/6, S_han5(3) = 1/5040", 0, [](std::string& d) {
                   const Rational a = eval_brute(weights::han4(), 3);
                   const Rational b = eval_brute(weights::han5(), 3);
                   const Rational ar = eval_recurrence(weights::han4(), 3);
                   const Rational br = eval_recurrence(weights::han5(), 3);
                   d = to_fraction_string(a) + ", " + to_fraction_string(b);
                   return a == Rational(1, 6) && ar == a && b == Rational(1, 5040) && br == b;
                 }});

  out.push_back({"tree count equals C(2n,n)/(n+1), codes distinct, n=0..12", 0, [](std::string& d) {
                   for (std::size_t n = 0; n <= 12; ++n) {
                     std::set<TreeCode> codes;
                     std::size_t count = 0;
                     for (const BinaryTree& t : enumerate(n)) {
                       codes.insert(encode(t));
                       ++count;
                     }
                     const BigInt expected = binomial(2 * n, n) / BigInt(n + 1);
                     if (BigInt(static_cast<unsigned long>(count)) != expected || codes.size() != count) {
                       d = "mismatch at n = " + std::to_string(n);
                       return false;
                     }
                   }
                   d = "208012 trees at n = 12";
                   return true;
                 }});

  out.push_back({"labelings sum to n! (n=1..12); fibers n=3..8 equal n!/prod h and sum to n!", 0,
                 [](std::string& d) {
                   for (std::size_t n = 1; n <= 12; ++n) {
                     if (!verify_eq2(n)) {
                       d = "verify_eq2 fails at n = " + std::to_string(n);
                       return false;
                     }
                   }
                   for (std::size_t n = 3; n <= 8; ++n) {
                     const auto h = shape_fiber_histogram(n);
                     BigInt total = 0;
                     for (const auto& [code, count] : h) total += count;
                     if (total != factorial(n) || h.size() != catalan(n)) {
                       d = "fiber total wrong at n = " + std::to_string(n);
                       return false;
                     }
                     for (const BinaryTree& t : enumerate(n)) {
                       if (h.at(encode(t)) != increasing_labelings_count(t)) {
                         d = "fiber size wrong at n = " + std::to_string(n);
                         return false;
                       }
                     }
                   }
                   return true;
                 }});

  out.push_back({"postnikov (n!/2^n) S(n) = (n+1)^(n-1), n=1..12 both", 0,
                 [](std::string& d) { return verify_range("postnikov", 1, 12, Mode::both, d); }});

  out.push_back({"odd binomial sum equals 2^(2n-1), n=1..200", 0, [](std::string& d) {
                   for (std::size_t n = 1; n <= 200; ++n) {
                     if (odd_binomial_sum(n) != pow2(2 * n - 1)) {
                       d = "fails at n = " + std::to_string(n);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"brute = recurrence for 20 seeded random weights, n<=10", 0, [](std::string& d) {
                   for (std::uint64_t seed = 0; seed < 20; ++seed) {
                     const HookWeight w = weights::random(seed);
                     SumTable table(w);
                     for (std::size_t n = 0; n <= 10; ++n) {
                       if (eval_brute(w, n) != eval_recurrence(w, n, table)) {
                         d = w.name() + " disagrees at n = " + std::to_string(n);
                         return false;
                       }
                     }
                   }
                   return true;
                 }});

  out.push_back({"codec and rank laws (all trees n<=10; 1000 random (n,i), n<=30)", 0,
                 [](std::string& d) {
                   for (std::size_t n = 0; n <= 10; ++n) {
                     for (const BinaryTree& t : enumerate(n)) {
                       if (decode(encode(t)) != t || unrank(n, rank(t)) != t) {
                         d = "law broken at n = " + std::to_string(n);
                         return false;
                       }
                     }
                   }
                   gmp_randclass rng(gmp_randinit_default);
                   rng.seed(2008);
                   std::mt19937_64 pick(326);
                   for (int trial = 0; trial < 1000; ++trial) {
                     const std::size_t n = pick() % 31;
                     const BigInt i = rng.get_z_range(catalan(n));
                     if (rank(unrank(n, i)) != i) {
                       d = "rank(unrank) broken at n = " + std::to_string(n);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"n!/prod h equals labeling enumeration, every tree n<=8", 0, [](std::string& d) {
                   std::size_t checked = 0;
                   for (std::size_t n = 1; n <= 8; ++n) {
                     for (const BinaryTree& t : enumerate(n)) {
                       if (increasing_labelings_count(t) != increasing_labelings_brute(t)) {
                         d = "mismatch at n = " + std::to_string(n);
                         return false;
                       }
                       ++checked;
                     }
                   }
                   d = std::to_string(checked) + " trees";
                   return true;
                 }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
      ok = false;
      detail += "; over the " + std::to_string(c.time_limit_s) + " s limit";
    }
    if (!ok) ++failures;
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                detail.empty() ? "" : ": ", detail.c_str());
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hooklen/hook_weight.hpp"
#include "hooklen/rational.hpp"

namespace hooklen {

/// Largest n summed by full enumeration unless the caller overrides it.
/// catalan(14) = 2,674,440 trees.
inline constexpr std::size_t kDefaultBruteCap = 14;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string_view what, std::size_t n, std::size_t cap);
  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// Sum over every tree of B(n) of prod_v w(h_v), by enumeration. B(0) holds
/// only the empty tree, whose empty product is 1.
Rational eval_brute(const HookWeight& w, std::size_t n, std::size_t cap = kDefaultBruteCap);

/// Memo for S(n) = w(n) * sum_{k<n} S(k) S(n-1-k), with S(0) = 1.
///
/// Entries are appended only once fully computed. Not synchronized: confine a
/// table to one thread.
class SumTable {
 public:
  explicit SumTable(HookWeight weight);

  const HookWeight& weight() const noexcept { return weight_; }
  /// Largest n with a stored value.
  std::size_t max_n() const noexcept { return values_.size() - 1; }
  const Rational& at(std::size_t n) const { return values_.at(n); }

  /// Extends the table bottom-up through n.
  void fill_to(std::size_t n);

 private:
  HookWeight weight_;
  std::vector<Rational> values_;
};

/// Root decomposition: a tree of size n >= 1 is its root (hook length n) with
/// a left subtree in B(k) and a right subtree in B(n-1-k). Throws
/// std::invalid_argument if `table` was built for a different weight.
Rational eval_recurrence(const HookWeight& w, std::size_t n, SumTable& table);
Rational eval_recurrence(const HookWeight& w, std::size_t n);

/// Claim f(n) * sum_{T in B(n)} prod_v w(h_v) = g(n).
struct HookIdentity {
  using SequenceFn = std::function<Rational(std::size_t)>;

  std::string name;
  HookWeight weight;
  SequenceFn prefactor;
  SequenceFn rhs;
  std::string doc;
};

/// catalan, labelings, postnikov, han4, han5.
std::vector<HookIdentity> builtin_identities();
std::optional<HookIdentity> find_identity(std::string_view name);

enum class Mode { brute, recurrence, both };

std::string_view to_string(Mode mode);
/// Throws std::invalid_argument for anything but brute/recurrence/both.
Mode parse_mode(std::string_view text);

struct VerificationRecord {
  std::string identity;
  std::size_t n = 0;
  Mode mode = Mode::recurrence;
  bool pass = false;
  Rational lhs;  // f(n) * S(n); the brute value in mode both
  Rational rhs;  // g(n)
  /// Mode both only: f(n) * S(n) from the recurrence.
  std::optional<Rational> lhs_recurrence;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;

  bool all_passed() const;
  const VerificationRecord* first_counterexample() const;
};

/// Checks the identity for every n in [n_from, n_to]. Failures are report
/// content. Throws std::invalid_argument if n_from > n_to and CapExceeded if a
/// brute pass would exceed `brute_cap`. A caller-supplied table is reused and
/// extended; it must belong to the identity's weight.
VerificationReport verify(const HookIdentity& id, std::size_t n_from, std::size_t n_to, Mode mode,
                          std::size_t brute_cap = kDefaultBruteCap, SumTable* table = nullptr);

/// One line: identity, n, mode, status, and on failure lhs and rhs, separated
/// by tabs. In mode both a brute/recurrence disagreement adds the recurrence
/// value as a sixth field.
std::string to_tsv(const VerificationRecord& record);

/// sum_{k=0}^{n-1} C(2n, 2k+1), summed term by term. Throws for n == 0.
BigInt odd_binomial_sum(std::size_t n);

}  // namespace hooklen

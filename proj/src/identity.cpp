#include "hooklen/identity.hpp"

#include <map>
#include <utility>

#include "hooklen/binary_tree.hpp"
#include "hooklen/enumerate.hpp"

namespace hooklen {

CapExceeded::CapExceeded(std::string_view what, std::size_t n, std::size_t cap)
    : std::runtime_error(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(cap)),
      n_(n),
      cap_(cap) {}

Rational eval_brute(const HookWeight& w, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("brute-force evaluation", n, cap);
  if (n == 0) return 1;

  // Many trees share a hook multiset; count them first so each distinct
  // product is formed once.
  std::map<HookMultiset, std::uint64_t> multiplicity;
  for (const BinaryTree& t : enumerate(n)) ++multiplicity[hook_lengths(t)];

  const std::vector<Rational> values = w.table(static_cast<std::uint32_t>(n));
  Rational sum = 0;
  for (const auto& [hooks, count] : multiplicity) {
    Rational product = 1;
    for (const std::uint32_t h : hooks.entries()) product *= values[h];
    sum += product * BigInt(static_cast<unsigned long>(count));
  }
  return sum;
}

SumTable::SumTable(HookWeight weight) : weight_(std::move(weight)), values_{Rational(1)} {}

void SumTable::fill_to(std::size_t n) {
  values_.reserve(n + 1);
  for (std::size_t m = values_.size(); m <= n; ++m) {
    // sum_{k<m} S(k) S(m-1-k) is symmetric under k <-> m-1-k.
    Rational half = 0;
    for (std::size_t k = 0; 2 * k + 1 < m; ++k) half += values_[k] * values_[m - 1 - k];
    Rational convolution = half * 2;
    if (m % 2 == 1) {
      const Rational& mid = values_[(m - 1) / 2];
      convolution += mid * mid;
    }
    values_.push_back(weight_(static_cast<std::uint32_t>(m)) * convolution);
  }
}

Rational eval_recurrence(const HookWeight& w, std::size_t n, SumTable& table) {
  if (w.name() != table.weight().name()) {
    throw std::invalid_argument("sum table holds weight '" + table.weight().name() +
                                "', not '" + w.name() + "'");
  }
  table.fill_to(n);
  return table.at(n);
}

Rational eval_recurrence(const HookWeight& w, std::size_t n) {
  SumTable table(w);
  return eval_recurrence(w, n, table);
}

std::vector<HookIdentity> builtin_identities() {
  auto one = [](std::size_t) { return Rational(1); };
  auto fact = [](std::size_t n) { return Rational(factorial(n)); };
  std::vector<HookIdentity> ids;
  ids.push_back({"catalan", weights::unit(), one,
                 [](std::size_t n) { return Rational(catalan(n)); },
                 "sum_T 1 = C(2n,n)/(n+1)"});
  ids.push_back({"labelings", weights::inverse_hook(), fact, fact,
                 "sum_T n! prod_v 1/h_v = n!"});
  ids.push_back({"postnikov", weights::postnikov(),
                 [](std::size_t n) {
                   Rational f(factorial(n), pow2(n));
                   f.canonicalize();
                   return f;
                 },
                 [](std::size_t n) {
                   if (n == 0) return Rational(1);
                   BigInt p;
                   mpz_ui_pow_ui(p.get_mpz_t(), n + 1, n - 1);
                   return Rational(p);
                 },
                 "sum_T n!/2^n prod_v (1 + 1/h_v) = (n+1)^(n-1)"});
  ids.push_back({"han4", weights::han4(), one,
                 [](std::size_t n) { return Rational(BigInt(1), factorial(n)); },
                 "sum_T prod_v 1/(h_v 2^(h_v-1)) = 1/n!"});
  ids.push_back({"han5", weights::han5(), one,
                 [](std::size_t n) { return Rational(BigInt(1), factorial(2 * n + 1)); },
                 "sum_T prod_v 1/((2h_v+1) 2^(2h_v-1)) = 1/(2n+1)!"});
  return ids;
}

std::optional<HookIdentity> find_identity(std::string_view name) {
  for (HookIdentity& id : builtin_identities()) {
    if (id.name == name) return std::move(id);
  }
  return std::nullopt;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::brute:
      return "brute";
    case Mode::recurrence:
      return "recurrence";
    case Mode::both:
      return "both";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "brute") return Mode::brute;
  if (text == "recurrence") return Mode::recurrence;
  if (text == "both") return Mode::both;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected brute, recurrence or both)");
}

bool VerificationReport::all_passed() const { return first_counterexample() == nullptr; }

const VerificationRecord* VerificationReport::first_counterexample() const {
  for (const VerificationRecord& r : records) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

VerificationReport verify(const HookIdentity& id, std::size_t n_from, std::size_t n_to, Mode mode,
                          std::size_t brute_cap, SumTable* table) {
  if (n_from > n_to) {
    throw std::invalid_argument("empty range: n_from " + std::to_string(n_from) + " > n_to " +
                                std::to_string(n_to));
  }
  if (mode != Mode::recurrence && n_to > brute_cap) {
    throw CapExceeded("verify " + id.name + " (" + std::string(to_string(mode)) + ")", n_to,
                      brute_cap);
  }
  std::optional<SumTable> local;
  if (table == nullptr) table = &local.emplace(id.weight);

  VerificationReport report;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    VerificationRecord rec;
    rec.identity = id.name;
    rec.n = n;
    rec.mode = mode;
    rec.rhs = id.rhs(n);
    const Rational f = id.prefactor(n);
    switch (mode) {
      case Mode::brute:
        rec.lhs = f * eval_brute(id.weight, n, brute_cap);
        rec.pass = rec.lhs == rec.rhs;
        break;
      case Mode::recurrence:
        rec.lhs = f * eval_recurrence(id.weight, n, *table);
        rec.pass = rec.lhs == rec.rhs;
        break;
      case Mode::both:
        rec.lhs = f * eval_brute(id.weight, n, brute_cap);
        rec.lhs_recurrence = f * eval_recurrence(id.weight, n, *table);
        rec.pass = rec.lhs == rec.rhs && *rec.lhs_recurrence == rec.lhs;
        break;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string to_tsv(const VerificationRecord& record) {
  std::string line = record.identity + '\t' + std::to_string(record.n) + '\t' +
                     std::string(to_string(record.mode)) + '\t' +
                     (record.pass ? "PASS" : "FAIL");
  if (!record.pass) {
    line += '\t' + to_fraction_string(record.lhs) + '\t' + to_fraction_string(record.rhs);
    if (record.lhs_recurrence && *record.lhs_recurrence != record.lhs) {
      line += '\t' + to_fraction_string(*record.lhs_recurrence);
    }
  }
  return line;
}

BigInt odd_binomial_sum(std::size_t n) {
  if (n == 0) throw std::invalid_argument("odd_binomial_sum needs n >= 1");
  BigInt sum = 0;
  for (std::size_t k = 0; k < n; ++k) sum += binomial(2 * n, 2 * k + 1);
  return sum;
}

}  // namespace hooklen

#include "hooklen/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hooklen/codec.hpp"
#include "hooklen/enumerate.hpp"

namespace hooklen::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

HookIdentity require_identity(const std::string& name) {
  if (auto id = find_identity(name)) return std::move(*id);
  std::string known;
  for (const HookIdentity& id : builtin_identities()) known += (known.empty() ? "" : ", ") + id.name;
  throw UsageError("unknown identity '" + name + "' (known: " + known + ")");
}

BigInt parse_index(const std::string& text) {
  BigInt value;
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      value.set_str(text, 10) != 0) {
    throw UsageError("not a nonnegative integer: '" + text + "'");
  }
  return value;
}

int cmd_verify(const RunConfig& cfg, const std::string& name, std::size_t from, std::size_t to,
               const std::string& mode_text, std::ostream& out, std::ostream& err) {
  const HookIdentity id = require_identity(name);
  Mode mode;
  try {
    mode = parse_mode(mode_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = verify(id, from, to, mode, cfg.brute_cap);
  for (const VerificationRecord& rec : report.records) {
    if (cfg.output_format == OutputFormat::json) {
      json j = {{"identity", rec.identity},
                {"n", rec.n},
                {"mode", std::string(to_string(rec.mode))},
                {"status", rec.pass ? "PASS" : "FAIL"},
                {"lhs", to_fraction_string(rec.lhs)},
                {"rhs", to_fraction_string(rec.rhs)}};
      if (rec.lhs_recurrence) j["lhs_recurrence"] = to_fraction_string(*rec.lhs_recurrence);
      out << j.dump() << '\n';
    } else {
      out << to_tsv(rec) << '\n';
    }
  }
  if (const VerificationRecord* bad = report.first_counterexample()) {
    err << "counterexample: " << bad->identity << " fails at n = " << bad->n << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::size_t n, std::ostream& out) {
  if (n > cfg.brute_cap) throw CapExceeded("enumerate", n, cfg.brute_cap);
  std::size_t index = 0;
  for (const BinaryTree& t : enumerate(n)) {
    const TreeCode code = encode(t);
    if (cfg.output_format == OutputFormat::json) {
      out << json{{"n", n}, {"index", index}, {"code", code.str()}}.dump() << '\n';
    } else {
      out << code.str() << '\n';
    }
    ++index;
  }
  return kExitOk;
}

int cmd_fibers(const RunConfig& cfg, std::size_t n, bool check_brute, std::ostream& out,
               std::ostream& err) {
  if (n == 0) throw UsageError("fibers needs n >= 1");
  if (check_brute && n > cfg.labeling_cap) throw CapExceeded("fibers --check-brute", n, cfg.labeling_cap);
  const auto histogram = shape_fiber_histogram(n, cfg.fiber_cap);
  BigInt total = 0;
  bool consistent = true;
  for (const auto& [code, count] : histogram) {
    total += count;
    const BinaryTree shape = decode(code);
    if (count != increasing_labelings_count(shape)) {
      consistent = false;
      err << "fiber of " << code.str() << " has " << count.get_str()
          << " permutations, expected n!/prod h_v\n";
    }
    if (check_brute && count != increasing_labelings_brute(shape, cfg.labeling_cap)) {
      consistent = false;
      err << "fiber of " << code.str() << " disagrees with the labeling enumeration\n";
    }
    if (cfg.output_format == OutputFormat::json) {
      out << json{{"code", code.str()}, {"count", count.get_str()}}.dump() << '\n';
    } else {
      out << code.str() << '\t' << count.get_str() << '\n';
    }
  }
  if (cfg.output_format == OutputFormat::json) {
    out << json{{"total", total.get_str()}}.dump() << '\n';
  } else {
    out << "total\t" << total.get_str() << '\n';
  }
  if (total != factorial(n) || histogram.size() != catalan(n)) consistent = false;
  return consistent ? kExitOk : kExitCheckFailed;
}

int cmd_table(const RunConfig& cfg, const std::string& name, std::size_t from, std::size_t to,
              std::ostream& out) {
  const HookIdentity id = require_identity(name);
  if (from > to) throw UsageError("table range is empty");
  SumTable table(id.weight);
  bool all_match = true;
  if (cfg.output_format == OutputFormat::tsv) out << "n\tS(n)\tf(n)*S(n)\tg(n)\tmatch\n";
  for (std::size_t n = from; n <= to; ++n) {
    const Rational s = eval_recurrence(id.weight, n, table);
    const Rational lhs = id.prefactor(n) * s;
    const Rational rhs = id.rhs(n);
    const bool match = lhs == rhs;
    all_match = all_match && match;
    if (cfg.output_format == OutputFormat::json) {
      out << json{{"identity", id.name},
                  {"n", n},
                  {"S", to_fraction_string(s)},
                  {"lhs", to_fraction_string(lhs)},
                  {"rhs", to_fraction_string(rhs)},
                  {"match", match}}
                 .dump()
          << '\n';
    } else {
      out << n << '\t' << to_fraction_string(s) << '\t' << to_fraction_string(lhs) << '\t'
          << to_fraction_string(rhs) << '\t' << (match ? "yes" : "no") << '\n';
    }
  }
  return all_match ? kExitOk : kExitCheckFailed;
}

int cmd_rank(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  TreeCode code;
  try {
    code = TreeCode::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const BigInt r = rank(decode(code));
  if (cfg.output_format == OutputFormat::json) {
    out << json{{"code", code.str()}, {"n", code.n()}, {"rank", r.get_str()}}.dump() << '\n';
  } else {
    out << r.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_unrank(const RunConfig& cfg, std::size_t n, const std::string& index_text,
               std::ostream& out) {
  const BigInt index = parse_index(index_text);
  BinaryTree t;
  try {
    t = unrank(n, index);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const TreeCode code = encode(t);
  if (cfg.output_format == OutputFormat::json) {
    out << json{{"n", n}, {"index", index.get_str()}, {"code", code.str()}}.dump() << '\n';
  } else {
    out << code.str() << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::size_t weight_count, std::size_t n_max,
               std::ostream& out, std::ostream& err) {
  if (n_max > cfg.brute_cap) throw CapExceeded("oracle", n_max, cfg.brute_cap);
  bool all_agree = true;
  for (std::size_t i = 0; i < weight_count; ++i) {
    const HookWeight w = weights::random(cfg.seed + i);
    SumTable table(w);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Rational brute = eval_brute(w, n, cfg.brute_cap);
      const Rational rec = eval_recurrence(w, n, table);
      const bool agree = brute == rec;
      all_agree = all_agree && agree;
      if (!agree) err << w.name() << " disagrees at n = " << n << '\n';
      if (cfg.output_format == OutputFormat::json) {
        out << json{{"weight", w.name()},
                    {"n", n},
                    {"status", agree ? "PASS" : "FAIL"},
                    {"brute", to_fraction_string(brute)},
                    {"recurrence", to_fraction_string(rec)}}
                   .dump()
            << '\n';
      } else {
        out << w.name() << '\t' << n << '\t' << (agree ? "PASS" : "FAIL") << '\n';
      }
    }
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "tsv";

  CLI::App app{"Binary tree hook length identities with exact arithmetic", "hooklen"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--brute-cap", cfg.brute_cap, "Largest n summed by full enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--labeling-cap", cfg.labeling_cap, "Largest tree for labeling enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--fiber-cap", cfg.fiber_cap, "Largest n for the permutation fiber histogram")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for random hook weights");

  std::string identity;
  std::string mode = "recurrence";
  std::string text;
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  std::size_t n = 0;
  std::size_t weight_count = 20;
  std::size_t n_max = 10;

  auto* verify_cmd = app.add_subcommand("verify", "Check f(n)*S(n) = g(n) over a range of n");
  verify_cmd->fallthrough();
  verify_cmd->add_option("identity", identity, "catalan, labelings, postnikov, han4 or han5")->required();
  verify_cmd->add_option("n_from", n_from)->required();
  verify_cmd->add_option("n_to", n_to)->required();
  verify_cmd->add_option("mode", mode, "brute, recurrence or both");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Print the code of every tree in B(n)");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("n", n)->required();

  auto* fibers_cmd = app.add_subcommand("fibers", "Permutations of 1..n per BST shape");
  fibers_cmd->fallthrough();
  fibers_cmd->add_option("n", n)->required();
  bool check_brute = false;
  fibers_cmd->add_flag("--check-brute", check_brute,
                       "Also count increasing labelings of each shape by enumeration");

  std::size_t table_from = 1;
  auto* table_cmd = app.add_subcommand("table", "Tabulate S(n), f(n)*S(n) and g(n)");
  table_cmd->fallthrough();
  table_cmd->add_option("identity", identity)->required();
  table_cmd->add_option("n_to", n_to)->required();
  table_cmd->add_option("--from", table_from, "First n");

  auto* rank_cmd = app.add_subcommand("rank", "Canonical position of a tree code");
  rank_cmd->fallthrough();
  rank_cmd->add_option("code", text)->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "Tree code at a canonical position");
  unrank_cmd->fallthrough();
  unrank_cmd->add_option("n", n)->required();
  unrank_cmd->add_option("index", text)->required();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Compare enumeration and recurrence on seeded random weights");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--weights", weight_count, "Number of random weights");
  oracle_cmd->add_option("--n-max", n_max, "Largest n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hooklen: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.output_format = format == "json" ? OutputFormat::json : OutputFormat::tsv;

  try {
    if (verify_cmd->parsed()) return cmd_verify(cfg, identity, n_from, n_to, mode, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, n, out);
    if (fibers_cmd->parsed()) return cmd_fibers(cfg, n, check_brute, out, err);
    if (table_cmd->parsed()) return cmd_table(cfg, identity, table_from, n_to, out);
    if (rank_cmd->parsed()) return cmd_rank(cfg, text, out);
    if (unrank_cmd->parsed()) return cmd_unrank(cfg, n, text, out);
    if (oracle_cmd->parsed()) return cmd_oracle(cfg, weight_count, n_max, out, err);
  } catch (const UsageError& e) {
    err << "hooklen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "hooklen: " << e.what() << " (raise it with the matching --*-cap flag)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "hooklen: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hooklen::cli

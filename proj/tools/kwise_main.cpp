// kwise: probabilities of k-wise relative r-primality for ideals of a
// number ring, with rigorous truncation bounds, plus the exact and
// Monte-Carlo verification machinery behind them.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "kwise/experiment.hpp"
#include "kwise/field.hpp"
#include "kwise/ideals.hpp"
#include "kwise/product.hpp"
#include "kwise/record.hpp"
#include "kwise/splitting.hpp"
#include "kwise/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPrecision = 3;

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

// Decimal places guaranteed by an error bound b: the largest t with
// b <= 10^-t / 2.
int guaranteed_digits(double bound) {
  if (!(bound > 0)) return 15;
  int t = static_cast<int>(std::floor(-std::log10(2.0 * bound) + 1e-12));
  return std::clamp(t, 0, 15);
}

// Never print more digits than guaranteed plus two guard digits.
std::string format_value(double value, double bound) {
  int digits = std::min(guaranteed_digits(bound) + 2, 15);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

struct CommonOptions {
  std::string format = "text";
  unsigned threads = 1;
  bool strict = false;
};

void add_format_option(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void emit_record(const kwise::OutputRecord& record, const std::string& format) {
  if (format == "json") {
    std::cout << record.to_json_string(2) << '\n';
  } else if (format == "csv") {
    std::cout << record.csv_header() << '\n' << record.csv_row() << '\n';
  }
}

int caveat_exit(bool caveat, bool strict) {
  if (!caveat) return kExitOk;
  if (strict) {
    std::cerr << "error: splitting caveat raised in --strict mode (polynomial field with "
                 "uncertified ramified primes)\n";
    return kExitPrecision;
  }
  std::cerr << "warning: polynomial field; accuracy guarantee carries a splitting caveat\n";
  return kExitOk;
}

// ---------------------------------------------------------------- prob

struct ProbOptions {
  std::string field_spec;
  unsigned n = 2, k = 2, r = 1;
  unsigned digits = 4;
  std::uint64_t primes = 0;
  CommonOptions common;
};

int run_prob(const ProbOptions& opt) {
  auto start = Clock::now();
  kwise::NumberField field = kwise::make_field(opt.field_spec);

  kwise::ProbabilityQuery query;
  query.field = field;
  query.n = opt.n;
  query.k = opt.k;
  query.r = opt.r;
  query.digits = opt.digits;
  query.explicit_primes = opt.primes;
  query.threads = opt.common.threads;
  kwise::ProbabilityResult result = kwise::probability(query);

  kwise::OutputRecord record;
  record.set("command", "prob");
  record.set("field", kwise::render(field.spec));
  record.set("label", field.label);
  record.set("degree", field.degree);
  record.set("n", opt.n);
  record.set("k", opt.k);
  record.set("r", opt.r);
  if (result.digits_mode) record.set("digits", result.digits);
  record.set("primes_used", result.primes_used);
  record.set("last_prime", result.last_prime);
  record.set("value", result.value);
  record.set("error_bound", result.error_bound);
  record.set("caveat", result.caveat);
  record.set("wall_ms", elapsed_ms(start));

  if (opt.common.format == "text") {
    std::cout << "P(" << field.label << ", n=" << opt.n << ", k=" << opt.k << ", r=" << opt.r
              << ") = " << format_value(result.value, result.error_bound) << "\n"
              << "  primes used N = " << result.primes_used << " (p_N = " << result.last_prime
              << "), truncation bound " << result.error_bound << "\n";
  } else {
    emit_record(record, opt.common.format);
  }
  return caveat_exit(result.caveat, opt.common.strict);
}

// --------------------------------------------------------------- table

struct TableOptions {
  std::vector<std::string> field_specs;
  std::vector<unsigned> n_values;
  unsigned k = 2, r = 1;
  unsigned digits = 4;
  CommonOptions common;
};

int run_table(const TableOptions& opt) {
  auto start = Clock::now();
  std::vector<std::string> specs = opt.field_specs;
  if (specs.empty())
    specs = {"Q", "Q(sqrt2)", "Q(sqrt-1)", "Q(zeta3)", "Q(zeta5)"};
  std::vector<unsigned> ns = opt.n_values;
  if (ns.empty()) ns = {2, 3, 4};

  std::vector<kwise::NumberField> fields;
  for (const auto& spec : specs) fields.push_back(kwise::make_field(spec));

  struct Cell {
    unsigned n;
    kwise::ProbabilityResult result;
  };
  std::vector<std::vector<Cell>> grid(ns.size());
  bool any_caveat = false;
  for (std::size_t row = 0; row < ns.size(); ++row) {
    for (const auto& field : fields) {
      kwise::ProbabilityQuery query;
      query.field = field;
      query.n = ns[row];
      query.k = opt.k;
      query.r = opt.r;
      query.digits = opt.digits;
      query.threads = opt.common.threads;
      kwise::ProbabilityResult result = kwise::probability(query);
      any_caveat = any_caveat || result.caveat;
      grid[row].push_back(Cell{ns[row], result});
    }
  }

  if (opt.common.format == "text") {
    std::cout << "k=" << opt.k << " r=" << opt.r << " digits=" << opt.digits << "\n";
    std::printf("%-6s", "n");
    for (const auto& field : fields) std::printf(" %14s", field.label.c_str());
    std::printf("\n");
    for (std::size_t row = 0; row < ns.size(); ++row) {
      std::printf("%-6u", ns[row]);
      for (const auto& cell : grid[row])
        std::printf(" %14s", format_fixed(cell.result.value, opt.digits).c_str());
      std::printf("\n");
    }
  } else if (opt.common.format == "csv") {
    std::cout << "n";
    for (const auto& field : fields) std::cout << ',' << kwise::csv_escape(field.label);
    std::cout << '\n';
    for (std::size_t row = 0; row < ns.size(); ++row) {
      std::cout << ns[row];
      for (const auto& cell : grid[row]) {
        nlohmann::ordered_json v = cell.result.value;
        std::cout << ',' << v.dump();
      }
      std::cout << '\n';
    }
  } else {
    kwise::OutputRecord record;
    record.set("command", "table");
    record.set("k", opt.k);
    record.set("r", opt.r);
    record.set("digits", opt.digits);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (std::size_t row = 0; row < ns.size(); ++row) {
      for (std::size_t col = 0; col < fields.size(); ++col) {
        const auto& cell = grid[row][col];
        nlohmann::ordered_json j;
        j["field"] = kwise::render(fields[col].spec);
        j["label"] = fields[col].label;
        j["n"] = cell.n;
        j["value"] = cell.result.value;
        j["error_bound"] = cell.result.error_bound;
        j["primes_used"] = cell.result.primes_used;
        j["last_prime"] = cell.result.last_prime;
        j["caveat"] = cell.result.caveat;
        cells.push_back(std::move(j));
      }
    }
    record.set("cells", std::move(cells));
    record.set("wall_ms", elapsed_ms(start));
    std::cout << record.to_json_string(2) << '\n';
  }
  return caveat_exit(any_caveat, opt.common.strict);
}

// -------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  CommonOptions common;
};

int run_verify(const VerifyOptions& opt) {
  auto start = Clock::now();
  std::vector<kwise::SuiteResult> results = kwise::run_verify_suites(opt.suite);
  bool all_passed = true;

  if (opt.common.format == "text") {
    for (const auto& suite : results) {
      std::cout << (suite.passed() ? "PASS" : "FAIL") << "  " << suite.name << "  ("
                << suite.checks << " checks, " << suite.failures << " failures)\n";
      for (const auto& message : suite.messages) std::cout << "      " << message << '\n';
      all_passed = all_passed && suite.passed();
    }
  } else {
    kwise::OutputRecord record;
    record.set("command", "verify");
    record.set("suite", opt.suite);
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& suite : results) {
      nlohmann::ordered_json j;
      j["name"] = suite.name;
      j["checks"] = suite.checks;
      j["failures"] = suite.failures;
      j["passed"] = suite.passed();
      suites.push_back(std::move(j));
      all_passed = all_passed && suite.passed();
    }
    record.set("suites", std::move(suites));
    record.set("passed", all_passed);
    record.set("wall_ms", elapsed_ms(start));
    if (opt.common.format == "json")
      std::cout << record.to_json_string(2) << '\n';
    else
      std::cout << record.csv_header() << '\n' << record.csv_row() << '\n';
  }
  return all_passed ? kExitOk : kExitVerifyFailure;
}

// --------------------------------------------------------------- split

struct SplitOptions {
  std::string field_spec;
  std::uint64_t p = 0;
  std::uint64_t max_p = 0;
  CommonOptions common;
};

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

int run_split(const SplitOptions& opt) {
  auto start = Clock::now();
  kwise::NumberField field = kwise::make_field(opt.field_spec);
  if ((opt.p == 0) == (opt.max_p == 0))
    throw std::invalid_argument("split: give exactly one of -p <prime> or --max-p <bound>");

  std::vector<std::uint64_t> primes;
  if (opt.p > 0) {
    if (!is_prime_u64(opt.p))
      throw std::invalid_argument("split: " + std::to_string(opt.p) + " is not prime");
    primes = {opt.p};
  } else {
    primes = kwise::rational_primes_up_to(opt.max_p);
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::uint64_t p : primes) {
    for (const auto& cls : kwise::split_prime(field, p)) {
      nlohmann::ordered_json j;
      j["p"] = p;
      j["f"] = cls.f;
      j["e"] = cls.e;
      j["g"] = cls.g;
      j["uncertain"] = cls.uncertain;
      rows.push_back(std::move(j));
    }
  }

  if (opt.common.format == "text") {
    for (const auto& row : rows)
      std::cout << "p=" << row["p"].get<std::uint64_t>() << "  f=" << row["f"].get<unsigned>()
                << " e=" << row["e"].get<unsigned>() << " g=" << row["g"].get<unsigned>()
                << (row["uncertain"].get<bool>() ? "  (uncertain ramification)" : "") << '\n';
  } else if (opt.common.format == "csv") {
    std::cout << "p,f,e,g,uncertain\n";
    for (const auto& row : rows)
      std::cout << row["p"].get<std::uint64_t>() << ',' << row["f"].get<unsigned>() << ','
                << row["e"].get<unsigned>() << ',' << row["g"].get<unsigned>() << ','
                << (row["uncertain"].get<bool>() ? "true" : "false") << '\n';
  } else {
    kwise::OutputRecord record;
    record.set("command", "split");
    record.set("field", kwise::render(field.spec));
    record.set("label", field.label);
    record.set("degree", field.degree);
    record.set("classes", std::move(rows));
    record.set("wall_ms", elapsed_ms(start));
    std::cout << record.to_json_string(2) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------ estimate

struct EstimateOptions {
  std::string field_spec;
  unsigned n = 2, k = 2, r = 1;
  std::uint64_t x = 1000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  CommonOptions common;
};

int run_estimate(const EstimateOptions& opt) {
  auto start = Clock::now();
  kwise::NumberField field = kwise::make_field(opt.field_spec);
  kwise::IdealUniverse universe = kwise::enumerate_ideals(field, opt.x);
  kwise::MonteCarloEstimate estimate = kwise::empirical_probability(
      universe, opt.n, opt.k, opt.r, opt.samples, opt.seed, opt.common.threads);

  kwise::OutputRecord record;
  record.set("command", "estimate");
  record.set("field", kwise::render(field.spec));
  record.set("label", field.label);
  record.set("n", opt.n);
  record.set("k", opt.k);
  record.set("r", opt.r);
  record.set("x", opt.x);
  record.set("ideal_count", universe.size());
  record.set("samples", estimate.samples);
  record.set("seed", estimate.seed);
  record.set("mean", estimate.mean);
  record.set("standard_error", estimate.standard_error);
  record.set("caveat", !field.exact_splitting);
  record.set("wall_ms", elapsed_ms(start));

  if (opt.common.format == "text") {
    std::cout << "estimate(" << field.label << ", n=" << opt.n << ", k=" << opt.k
              << ", r=" << opt.r << ", x=" << opt.x << ") = " << estimate.mean << " +/- "
              << estimate.standard_error << "  (" << estimate.samples << " samples, seed "
              << estimate.seed << ", H(x)=" << universe.size() << ")\n";
  } else {
    emit_record(record, opt.common.format);
  }
  return caveat_exit(!field.exact_splitting, opt.common.strict);
}

// ----------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::string field_spec;
  std::uint64_t x = 100;
  bool count_only = false;
  CommonOptions common;
};

int run_enumerate(const EnumerateOptions& opt) {
  auto start = Clock::now();
  kwise::NumberField field = kwise::make_field(opt.field_spec);

  if (opt.count_only) {
    std::uint64_t count = kwise::ideal_count(field, opt.x);
    double ratio = static_cast<double>(count) / static_cast<double>(opt.x);
    if (opt.common.format == "text") {
      std::cout << "H(" << opt.x << ") = " << count << "  (H(x)/x = " << ratio << ")\n";
    } else {
      kwise::OutputRecord record;
      record.set("command", "enumerate");
      record.set("field", kwise::render(field.spec));
      record.set("label", field.label);
      record.set("x", opt.x);
      record.set("ideal_count", count);
      record.set("count_ratio", ratio);
      record.set("wall_ms", elapsed_ms(start));
      emit_record(record, opt.common.format);
    }
    return kExitOk;
  }

  kwise::IdealUniverse universe = kwise::enumerate_ideals(field, opt.x);
  if (opt.common.format == "text" || opt.common.format == "csv") {
    universe.dump(std::cout);
  } else {
    kwise::OutputRecord record;
    record.set("command", "enumerate");
    record.set("field", kwise::render(field.spec));
    record.set("label", field.label);
    record.set("x", opt.x);
    record.set("ideal_count", universe.size());
    record.set("count_ratio", static_cast<double>(universe.size()) / static_cast<double>(opt.x));
    nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < universe.ideals.size(); ++i) {
      nlohmann::ordered_json j;
      j["norm"] = universe.norms[i];
      nlohmann::ordered_json factors = nlohmann::ordered_json::array();
      for (const auto& [id, exp] : universe.ideals[i].factors) {
        nlohmann::ordered_json f;
        f["p"] = id.p;
        f["f"] = id.f;
        f["index"] = id.index;
        f["exponent"] = exp;
        factors.push_back(std::move(f));
      }
      j["factors"] = std::move(factors);
      ideals.push_back(std::move(j));
    }
    record.set("ideals", std::move(ideals));
    record.set("wall_ms", elapsed_ms(start));
    std::cout << record.to_json_string(2) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------ converge

struct ConvergeOptions {
  std::string field_spec;
  unsigned n = 2, k = 2, r = 1;
  std::vector<std::uint64_t> x_values;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  unsigned digits = 4;
  CommonOptions common;
};

int run_converge(const ConvergeOptions& opt) {
  auto start = Clock::now();
  kwise::NumberField field = kwise::make_field(opt.field_spec);
  kwise::ConvergenceOptions conv;
  conv.samples = opt.samples;
  conv.seed = opt.seed;
  conv.digits = opt.digits;
  conv.threads = opt.common.threads;
  auto rows = kwise::convergence_table(field, opt.n, opt.k, opt.r, opt.x_values, conv);

  if (opt.common.format == "text") {
    std::printf("%-12s %-12s %-14s %-7s %-14s %-12s\n", "x", "H(x)", "ratio", "exact",
                "limit", "gap");
    for (const auto& row : rows)
      std::printf("%-12llu %-12llu %-14.8f %-7s %-14.8f %-12.3e\n",
                  static_cast<unsigned long long>(row.x),
                  static_cast<unsigned long long>(row.ideal_count), row.ratio,
                  row.exact ? "yes" : "mc", row.probability, row.gap);
  } else if (opt.common.format == "csv") {
    std::cout << "x,ideal_count,ratio,exact,probability,gap\n";
    for (const auto& row : rows) {
      nlohmann::ordered_json r1 = row.ratio, p1 = row.probability, g1 = row.gap;
      std::cout << row.x << ',' << row.ideal_count << ',' << r1.dump() << ','
                << (row.exact ? "true" : "false") << ',' << p1.dump() << ',' << g1.dump() << '\n';
    }
  } else {
    kwise::OutputRecord record;
    record.set("command", "converge");
    record.set("field", kwise::render(field.spec));
    record.set("label", field.label);
    record.set("n", opt.n);
    record.set("k", opt.k);
    record.set("r", opt.r);
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["x"] = row.x;
      j["ideal_count"] = row.ideal_count;
      j["ratio"] = row.ratio;
      j["exact"] = row.exact;
      j["probability"] = row.probability;
      j["gap"] = row.gap;
      jrows.push_back(std::move(j));
    }
    record.set("rows", std::move(jrows));
    record.set("wall_ms", elapsed_ms(start));
    std::cout << record.to_json_string(2) << '\n';
  }
  return caveat_exit(!field.exact_splitting, opt.common.strict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-wise relative r-primality probabilities for number rings"};
  app.require_subcommand(1);

  ProbOptions prob;
  auto* prob_cmd = app.add_subcommand("prob", "Probability P_{n,k,r} with a rigorous bound");
  prob_cmd->add_option("-f,--field", prob.field_spec, "Field spec")->required();
  prob_cmd->add_option("-n", prob.n, "Tuple size n >= 2")->capture_default_str();
  prob_cmd->add_option("-k", prob.k, "Subset size k in [2, n]")->capture_default_str();
  prob_cmd->add_option("-r", prob.r, "Prime-power exponent r >= 1")->capture_default_str();
  prob_cmd->add_option("-t,--digits", prob.digits, "Guaranteed decimal digits")
      ->capture_default_str();
  prob_cmd->add_option("--primes", prob.primes, "Fix the prime count N instead of digits");
  prob_cmd->add_option("--threads", prob.common.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  prob_cmd->add_flag("--strict", prob.common.strict, "Caveats become errors (exit 3)");
  add_format_option(prob_cmd, prob.common);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Grid of probabilities over fields and n");
  table_cmd->add_option("-f,--field", table.field_specs,
                        "Field specs (default: Q, Q(sqrt2), Q(sqrt-1), Q(zeta3), Q(zeta5))");
  table_cmd->add_option("-n", table.n_values, "n values (default: 2 3 4)")->delimiter(',');
  table_cmd->add_option("-k", table.k, "Subset size")->capture_default_str();
  table_cmd->add_option("-r", table.r, "Prime-power exponent")->capture_default_str();
  table_cmd->add_option("-t,--digits", table.digits, "Guaranteed decimal digits")
      ->capture_default_str();
  table_cmd->add_option("--threads", table.common.threads, "Worker threads")
      ->capture_default_str();
  table_cmd->add_flag("--strict", table.common.strict, "Caveats become errors");
  add_format_option(table_cmd, table.common);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "identities | psi | rho | mobius-count | zeta-consistency | all")
      ->capture_default_str();
  add_format_option(verify_cmd, verify.common);

  SplitOptions split;
  auto* split_cmd = app.add_subcommand("split", "Prime-ideal shapes above rational primes");
  split_cmd->add_option("-f,--field", split.field_spec, "Field spec")->required();
  split_cmd->add_option("-p", split.p, "Single rational prime");
  split_cmd->add_option("--max-p", split.max_p, "All primes up to this bound");
  add_format_option(split_cmd, split.common);

  EstimateOptions estimate;
  auto* estimate_cmd = app.add_subcommand("estimate", "Seeded Monte-Carlo estimate");
  estimate_cmd->add_option("-f,--field", estimate.field_spec, "Field spec")->required();
  estimate_cmd->add_option("-n", estimate.n, "Tuple size")->capture_default_str();
  estimate_cmd->add_option("-k", estimate.k, "Subset size")->capture_default_str();
  estimate_cmd->add_option("-r", estimate.r, "Prime-power exponent")->capture_default_str();
  estimate_cmd->add_option("-x", estimate.x, "Norm bound for the sampled universe")
      ->capture_default_str();
  estimate_cmd->add_option("--samples", estimate.samples, "Sample count")->capture_default_str();
  estimate_cmd->add_option("--seed", estimate.seed, "RNG seed")->capture_default_str();
  estimate_cmd->add_option("--threads", estimate.common.threads, "Worker threads")
      ->capture_default_str();
  estimate_cmd->add_flag("--strict", estimate.common.strict, "Caveats become errors");
  add_format_option(estimate_cmd, estimate.common);

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All ideals of norm <= x");
  enumerate_cmd->add_option("-f,--field", enumerate.field_spec, "Field spec")->required();
  enumerate_cmd->add_option("-x", enumerate.x, "Norm bound")->capture_default_str();
  enumerate_cmd->add_flag("--count-only", enumerate.count_only, "Report H(x) without listing");
  add_format_option(enumerate_cmd, enumerate.common);

  ConvergeOptions converge;
  auto* converge_cmd =
      app.add_subcommand("converge", "Finite-x ratios against the limiting probability");
  converge_cmd->add_option("-f,--field", converge.field_spec, "Field spec")->required();
  converge_cmd->add_option("-n", converge.n, "Tuple size")->capture_default_str();
  converge_cmd->add_option("-k", converge.k, "Subset size")->capture_default_str();
  converge_cmd->add_option("-r", converge.r, "Prime-power exponent")->capture_default_str();
  converge_cmd->add_option("-x", converge.x_values, "Ascending norm bounds")
      ->delimiter(',')
      ->required();
  converge_cmd->add_option("--samples", converge.samples, "Monte-Carlo fallback sample count")
      ->capture_default_str();
  converge_cmd->add_option("--seed", converge.seed, "RNG seed")->capture_default_str();
  converge_cmd->add_option("-t,--digits", converge.digits, "Digits for the limit value")
      ->capture_default_str();
  converge_cmd->add_option("--threads", converge.common.threads, "Worker threads")
      ->capture_default_str();
  converge_cmd->add_flag("--strict", converge.common.strict, "Caveats become errors");
  add_format_option(converge_cmd, converge.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (prob_cmd->parsed()) return run_prob(prob);
    if (table_cmd->parsed()) return run_table(table);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (split_cmd->parsed()) return run_split(split);
    if (estimate_cmd->parsed()) return run_estimate(estimate);
    if (enumerate_cmd->parsed()) return run_enumerate(enumerate);
    if (converge_cmd->parsed()) return run_converge(converge);
  } catch (const kwise::PrecisionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const kwise::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const kwise::FieldError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const kwise::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitOk;
}

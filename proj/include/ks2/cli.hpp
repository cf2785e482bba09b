#pragma once

// Command implementations for the ks2 tool. Kept in a header so the
// integration tests can drive run() with in-memory streams.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ks2/asymptotic.hpp"
#include "ks2/corridor.hpp"
#include "ks2/decimal.hpp"
#include "ks2/error.hpp"
#include "ks2/exact_oracle.hpp"
#include "ks2/exact_stable.hpp"
#include "ks2/statistic.hpp"
#include "ks2/thresholds.hpp"

namespace ks2::cli {

enum class exit_code : int {
  ok = 0,
  bad_input = 2,
  tie_rejected = 3,
  resource_limit = 4,
};

enum class Method { stable, full, exact_rational, brute_force, asymptotic };

inline constexpr Method all_methods[] = {Method::stable, Method::full,
                                         Method::exact_rational,
                                         Method::brute_force, Method::asymptotic};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::stable: return "stable";
    case Method::full: return "full";
    case Method::exact_rational: return "exact-rational";
    case Method::brute_force: return "brute-force";
    case Method::asymptotic: return "asymptotic";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : all_methods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

// Shortest round-trip decimal; integral values keep a trailing ".0".
inline std::string format_shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

inline std::string format_human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct MethodResult {
  Method method = Method::stable;
  double p_value = 0.0;
  std::optional<std::string> p_exact;  // rational methods only
  double elapsed_ms = 0.0;
};

struct KsReport {
  KsStatistic stat;
  MethodResult result;
  bool ties_detected = false;
};

inline nlohmann::ordered_json to_json(const KsReport& r) {
  nlohmann::ordered_json j;
  j["m"] = r.stat.m;
  j["n"] = r.stat.n;
  j["c"] = r.stat.c;
  j["d"] = format_shortest(r.stat.d());
  j["method"] = std::string(method_name(r.result.method));
  j["p_value"] = format_shortest(r.result.p_value);
  if (r.result.p_exact) j["p_exact"] = *r.result.p_exact;
  j["ties_detected"] = r.ties_detected;
  j["elapsed_ms"] = r.result.elapsed_ms;
  return j;
}

struct Limits {
  std::int64_t exact_size = default_exact_size_limit;

  // KS2_MAX_MN overrides the m + n cap of the exact-rational method.
  static Limits from_environment() {
    Limits limits;
    if (const char* env = std::getenv("KS2_MAX_MN")) {
      std::int64_t value = 0;
      const std::string_view text(env);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
        limits.exact_size = value;
      }
    }
    return limits;
  }
};

// exact_out, when given, receives the rational of the exact methods.
inline MethodResult evaluate(Method method, const CorridorSpec& spec,
                             const Limits& limits, ExactP* exact_out = nullptr) {
  MethodResult out;
  out.method = method;
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::stable:
      out.p_value = p2_stable(spec);
      break;
    case Method::full:
      out.p_value = p2_stable_full(spec);
      break;
    case Method::exact_rational: {
      const ExactP p = p2_classical_exact(spec, limits.exact_size);
      out.p_value = to_double(p);
      out.p_exact = p.str();
      if (exact_out) *exact_out = p;
      break;
    }
    case Method::brute_force: {
      const ExactP p = brute_force_p2(spec);
      out.p_value = to_double(p);
      out.p_exact = p.str();
      if (exact_out) *exact_out = p;
      break;
    }
    case Method::asymptotic:
      out.p_value = smirnov_tail(scale_statistic({spec.m, spec.n, spec.c}));
      break;
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

// Bad line in an input file.
class input_file_error : public input_error {
 public:
  using input_error::input_error;
};

// One number per line; blank lines and lines starting with '#' are skipped.
inline std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_file_error(path + ": cannot open file");
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text(line);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
      text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.remove_suffix(1);
    }
    if (text.empty() || text.front() == '#') continue;
    if (text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    if (ec == std::errc::result_out_of_range) {
      throw input_file_error(where + "value out of range '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw input_file_error(where + "cannot parse '" + std::string(text) + "' as a number");
    }
    if (!std::isfinite(v)) {
      throw input_file_error(where + "value is not finite");
    }
    values.push_back(v);
  }
  if (in.bad()) throw input_file_error(path + ": read error");
  if (values.empty()) throw input_file_error(path + ": no values");
  return values;
}

struct CompareOptions {
  std::int64_t m_min = 1, m_max = 1, n_min = 1, n_max = 1;
  int samples = 0;  // 0: every c in [0, m*n + 1]
  std::uint64_t seed = 0;
};

namespace detail {

inline void print_human(std::ostream& out, const KsReport& r) {
  out << "m = " << r.stat.m << ", n = " << r.stat.n << ", c = " << r.stat.c
      << ", D = " << format_human(r.stat.d()) << "\n";
  out << "method: " << method_name(r.result.method) << "\n";
  out << "p-value: " << format_human(r.result.p_value) << "\n";
  if (r.result.p_exact) out << "p-value (exact): " << *r.result.p_exact << "\n";
  if (r.ties_detected) {
    out << "warning: values shared between samples; D evaluated at ECDF jump points\n";
  }
  out << "elapsed: " << format_human(r.result.elapsed_ms) << " ms\n";
}

inline double relative_difference(double a, double b) {
  const double diff = std::abs(a - b);
  return b != 0.0 ? diff / std::abs(b) : diff;
}

// Evaluates every method that fits its cost guard and prints them side by
// side with pairwise deltas and the double complement 1 - p.
inline void report_all(std::ostream& out, const KsStatistic& stat, bool ties,
                       bool json, const Limits& limits) {
  const CorridorSpec spec = CorridorSpec::from(stat);
  std::vector<KsReport> reports;
  std::vector<std::pair<Method, std::string>> skipped;
  std::optional<ExactP> exact;
  for (Method m : all_methods) {
    try {
      ExactP p;
      reports.push_back({stat, evaluate(m, spec, limits, &p), ties});
      if (m == Method::exact_rational) exact = p;
    } catch (const resource_limit& e) {
      skipped.emplace_back(m, e.what());
    }
  }
  const double stable_p = reports.front().result.p_value;
  const double complement_double = 1.0 - stable_p;

  if (json) {
    nlohmann::ordered_json j;
    j["m"] = stat.m;
    j["n"] = stat.n;
    j["c"] = stat.c;
    j["d"] = format_shortest(stat.d());
    j["ties_detected"] = ties;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    j["skipped"] = nlohmann::ordered_json::array();
    for (const auto& [m, why] : skipped) {
      j["skipped"].push_back({{"method", std::string(method_name(m))}, {"reason", why}});
    }
    j["deltas"] = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < reports.size(); ++a) {
      for (std::size_t b = a + 1; b < reports.size(); ++b) {
        const double pa = reports[a].result.p_value;
        const double pb = reports[b].result.p_value;
        j["deltas"].push_back({{"a", std::string(method_name(reports[a].result.method))},
                               {"b", std::string(method_name(reports[b].result.method))},
                               {"abs", format_shortest(std::abs(pa - pb))},
                               {"rel", format_shortest(relative_difference(pa, pb))}});
      }
    }
    j["complement_double"] = format_shortest(complement_double);
    if (exact) j["complement_exact_to_double"] = format_shortest(to_double(exact->complement()));
    out << j.dump(2) << "\n";
    return;
  }

  out << "m = " << stat.m << ", n = " << stat.n << ", c = " << stat.c
      << ", D = " << format_human(stat.d()) << "\n";
  if (ties) out << "warning: values shared between samples; D evaluated at ECDF jump points\n";
  for (const auto& r : reports) {
    out << "  " << method_name(r.result.method) << ": p = " << format_human(r.result.p_value);
    if (r.result.p_exact && r.result.p_exact->size() <= 64) out << " (" << *r.result.p_exact << ")";
    out << "  [" << format_human(r.result.elapsed_ms) << " ms]\n";
  }
  for (const auto& [m, why] : skipped) {
    out << "  " << method_name(m) << ": skipped (" << why << ")\n";
  }
  out << "deltas:\n";
  for (std::size_t a = 0; a < reports.size(); ++a) {
    for (std::size_t b = a + 1; b < reports.size(); ++b) {
      const double pa = reports[a].result.p_value;
      const double pb = reports[b].result.p_value;
      out << "  " << method_name(reports[a].result.method) << " vs "
          << method_name(reports[b].result.method) << ": abs "
          << format_human(std::abs(pa - pb)) << ", rel "
          << format_human(relative_difference(pa, pb)) << "\n";
    }
  }
  out << "1 - p in double arithmetic: " << format_shortest(complement_double) << "\n";
  if (exact) {
    out << "exact 1 - p rounded to double: "
        << format_shortest(to_double(exact->complement())) << "\n";
  }
}

inline void report_one(std::ostream& out, const KsStatistic& stat, bool ties,
                       Method method, bool json, const Limits& limits) {
  const KsReport report{stat, evaluate(method, CorridorSpec::from(stat), limits), ties};
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    print_human(out, report);
  }
}

inline void run_compare(std::ostream& out, const CompareOptions& opt, const Limits& limits) {
  if (opt.m_max + opt.n_max > limits.exact_size) {
    throw resource_limit("compare needs m-max + n-max <= " +
                         std::to_string(limits.exact_size));
  }
  out << "m,n,c,p_stable,p_exact,rel_err,t_stable_ms,t_exact_ms\n";
  for (std::int64_t m = opt.m_min; m <= opt.m_max; ++m) {
    for (std::int64_t n = opt.n_min; n <= opt.n_max; ++n) {
      std::vector<std::int64_t> cs;
      if (opt.samples > 0) {
        cs = sample_thresholds(m, n, opt.samples, opt.seed);
      } else {
        for (std::int64_t c = 0; c <= m * n + 1; ++c) cs.push_back(c);
      }
      for (std::int64_t c : cs) {
        const CorridorSpec spec{m, n, c};
        const MethodResult s = evaluate(Method::stable, spec, limits);
        const MethodResult e = evaluate(Method::exact_rational, spec, limits);
        out << m << ',' << n << ',' << c << ',' << format_shortest(s.p_value) << ','
            << format_shortest(e.p_value) << ','
            << format_shortest(relative_difference(s.p_value, e.p_value)) << ','
            << format_shortest(s.elapsed_ms) << ',' << format_shortest(e.elapsed_ms)
            << '\n';
      }
    }
  }
}

}  // namespace detail

// Entry point shared by the ks2 binary and the tests. Returns the process
// exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const Limits& limits = Limits::from_environment()) {
  CLI::App app{"Exact two-sample Kolmogorov-Smirnov p-values", "ks2"};
  app.require_subcommand(1);

  const std::vector<std::string> method_choices{"stable", "full", "exact-rational",
                                                "brute-force", "asymptotic", "all"};

  std::string xfile, yfile, method_text = "stable", ties_text = "resolve";
  bool json = false;
  auto* test = app.add_subcommand("test", "Compute D and its p-value from two sample files");
  test->add_option("X", xfile, "First sample, one value per line")->required();
  test->add_option("Y", yfile, "Second sample, one value per line")->required();
  test->add_option("--method", method_text, "Evaluation method")
      ->check(CLI::IsMember(method_choices));
  test->add_option("--ties", ties_text, "Cross-sample ties: reject or resolve")
      ->check(CLI::IsMember({"reject", "resolve"}));
  test->add_flag("--json", json, "Machine-readable output");

  std::int64_t pm = 0, pn = 0, pc = 0;
  std::string pd;
  auto* pvalue = app.add_subcommand("pvalue", "P-value for given sizes and threshold");
  pvalue->add_option("--m", pm, "First sample size")->required()->check(CLI::PositiveNumber);
  pvalue->add_option("--n", pn, "Second sample size")->required()->check(CLI::PositiveNumber);
  auto* c_opt = pvalue->add_option("--c", pc, "Threshold numerator: D = c / (m n)");
  auto* d_opt = pvalue->add_option("--d", pd, "Threshold as a decimal D");
  c_opt->excludes(d_opt);
  pvalue->add_option("--method", method_text, "Evaluation method, or all")
      ->check(CLI::IsMember(method_choices));
  pvalue->add_flag("--json", json, "Machine-readable output");

  CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "CSV of stable vs exact-rational p-values");
  compare->add_option("--m-max", cmp.m_max, "Largest m")->required()->check(CLI::PositiveNumber);
  compare->add_option("--n-max", cmp.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  compare->add_option("--m-min", cmp.m_min, "Smallest m")->check(CLI::PositiveNumber);
  compare->add_option("--n-min", cmp.n_min, "Smallest n")->check(CLI::PositiveNumber);
  compare->add_option("--samples", cmp.samples, "Thresholds per pair (0 = all)")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--seed", cmp.seed, "Seed for threshold sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(exit_code::bad_input);
  }

  try {
    if (test->parsed()) {
      const Sample xs(read_sample_file(xfile));
      const Sample ys(read_sample_file(yfile));
      const TiePolicy policy = ties_text == "reject" ? TiePolicy::reject : TiePolicy::resolve;
      const KsStatistic stat = compute_statistic(xs, ys, policy);
      const bool ties = has_cross_ties(xs, ys);
      if (method_text == "all") {
        detail::report_all(out, stat, ties, json, limits);
      } else {
        detail::report_one(out, stat, ties, *parse_method(method_text), json, limits);
      }
    } else if (pvalue->parsed()) {
      constexpr std::int64_t max_size = std::int64_t{1} << 31;
      if (pm > max_size || pn > max_size) {
        err << "ks2: sample sizes above 2^31 are not supported\n";
        return static_cast<int>(exit_code::bad_input);
      }
      std::int64_t c = pc;
      if (d_opt->count() > 0) {
        const auto d = parse_decimal(pd);
        if (!d) {
          err << "ks2: --d: '" << pd << "' is not a decimal number\n";
          return static_cast<int>(exit_code::bad_input);
        }
        c = threshold_from_decimal(*d, pm, pn);
      } else if (c_opt->count() == 0) {
        err << "ks2: pvalue needs --c or --d\n";
        return static_cast<int>(exit_code::bad_input);
      }
      const KsStatistic stat{pm, pn, c};
      if (method_text == "all") {
        detail::report_all(out, stat, false, json, limits);
      } else {
        detail::report_one(out, stat, false, *parse_method(method_text), json, limits);
      }
    } else if (compare->parsed()) {
      if (cmp.m_min > cmp.m_max || cmp.n_min > cmp.n_max) {
        err << "ks2: compare: minimum exceeds maximum\n";
        return static_cast<int>(exit_code::bad_input);
      }
      detail::run_compare(out, cmp, limits);
    }
  } catch (const input_error& e) {
    err << "ks2: " << e.what() << "\n";
    return static_cast<int>(exit_code::bad_input);
  } catch (const tie_rejected& e) {
    err << "ks2: " << e.what() << "\n";
    return static_cast<int>(exit_code::tie_rejected);
  } catch (const resource_limit& e) {
    err << "ks2: " << e.what() << "\n";
    return static_cast<int>(exit_code::resource_limit);
  } catch (const std::invalid_argument& e) {
    err << "ks2: " << e.what() << "\n";
    return static_cast<int>(exit_code::bad_input);
  }
  return static_cast<int>(exit_code::ok);
}

}  // namespace ks2::cli

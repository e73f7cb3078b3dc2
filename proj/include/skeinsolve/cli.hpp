#pragma once

// The skeinsolve command line. run() never touches std::cout or std::cerr
// directly so tests can drive it in-process.
//
// Exit status: 0 success, 1 failed verification / no solution / cache
// mismatch, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cache.hpp"
#include "serialize.hpp"
#include "solver.hpp"
#include "verify.hpp"

namespace skein::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kMaxDegreeLimit = 40;

namespace detail {

struct UsageError : Error {
  using Error::Error;
};

inline Partition partition_arg(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const InvalidPartition& e) {
    throw UsageError(e.what());
  }
}

inline Json manifest_for(GeometryTag tag, int N) {
  return {{"geometry", to_string(tag)},
          {"max_degree", N},
          {"operator", geometry(tag).op.to_string()},
          {"unknot", "(a_L − a_L^{-1})/(q^{1/2} − q^{-1/2})"},
          {"variables", {{"s", "q^{1/2}"}, {"a", "a"}, {"aL", "a_L"}, {"g", "γ"}}}};
}

inline void print_vector_text(std::ostream& out, const SkeinVector& v) {
  for (const auto& [p, c] : v.coefficients()) out << p.display() << ": " << c.to_string() << "\n";
}

inline void print_polynomial(std::ostream& out, bool records, const std::string& kind,
                             const Partition& p, const LaurentPolynomial& f) {
  if (records) {
    out << Json{{"schema_version", kSchemaVersion},
                {"kind", kind},
                {"partition", p.to_string()},
                {"polynomial", polynomial_records(f)}}
               .dump()
        << "\n";
  } else {
    out << f.to_string() << "\n";
  }
}

inline void print_values(std::ostream& out, bool records, const std::string& kind,
                         const std::vector<std::pair<Partition, RationalFunction>>& values) {
  for (const auto& [p, c] : values) {
    if (records) {
      out << Json{{"schema_version", kSchemaVersion},
                  {"kind", kind},
                  {"partition", p.to_string()},
                  {"coefficient", rational_record(c)}}
                 .dump()
          << "\n";
    } else {
      out << p.display() << ": " << c.to_string() << "\n";
    }
  }
}

inline std::string assignment_text(const CoefficientTemplate& tmpl, const Assignment& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ", ";
    s += tmpl.unknowns[k].name + " = " + x[k].to_string();
  }
  return s;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact skein-valued recursions for toric branes", "skeinsolve"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
  };
  const std::vector<std::string> geometry_names = {"c3", "unknot", "unknot-prime"};
  std::vector<std::string> suite_names;
  for (Suite s : kSuites) suite_names.push_back(to_string(s));

  int n = 0;
  auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of n");
  partitions_cmd->add_option("n", n, "Size")->required()->check(CLI::Range(0, kMaxDegreeLimit));
  add_format(partitions_cmd);

  std::string lambda_text;
  auto* content_cmd = app.add_subcommand("content-poly", "Content polynomial c_λ(q)");
  content_cmd->add_option("partition", lambda_text, "Partition p1,p2,...")->required();
  add_format(content_cmd);

  auto* hook_cmd = app.add_subcommand("hook-poly", "Hook polynomial h_λ(q)");
  hook_cmd->add_option("partition", lambda_text, "Partition p1,p2,...")->required();
  add_format(hook_cmd);

  std::string geometry_name;
  int max_degree = 0;
  bool no_cache = false;
  bool check_cache = false;
  auto* psi_cmd = app.add_subcommand("psi", "Solve the recursion for Ψ up to a degree");
  psi_cmd->add_option("--geometry", geometry_name, "c3, unknot or unknot-prime")
      ->required()
      ->check(CLI::IsMember(geometry_names));
  psi_cmd->add_option("--max-degree", max_degree, "Truncation degree")
      ->required()
      ->check(CLI::Range(0, kMaxDegreeLimit));
  auto* no_cache_flag = psi_cmd->add_flag("--no-cache", no_cache, "Neither read nor write the cache");
  psi_cmd->add_flag("--check-cache", check_cache,
                    "Recompute and compare byte-for-byte with the cached result")
      ->excludes(no_cache_flag);
  add_format(psi_cmd);

  std::string partition_opt;
  auto* closed_cmd = app.add_subcommand("closed-form", "Hook-content closed form of ψ_λ");
  closed_cmd->add_option("--geometry", geometry_name, "c3, unknot or unknot-prime")
      ->required()
      ->check(CLI::IsMember(geometry_names));
  auto* closed_part = closed_cmd->add_option("--partition", partition_opt, "A single partition");
  auto* closed_deg = closed_cmd->add_option("--max-degree", max_degree, "All |λ| up to this")
                         ->check(CLI::Range(0, kMaxDegreeLimit));
  closed_part->excludes(closed_deg);
  add_format(closed_cmd);

  auto* invariant_cmd = app.add_subcommand("invariant", "Colored HOMFLYPT invariant of the unknot");
  auto* inv_part = invariant_cmd->add_option("partition", lambda_text, "Partition p1,p2,...");
  auto* inv_deg = invariant_cmd->add_option("--max-degree", max_degree, "All |λ| up to this")
                      ->check(CLI::Range(0, kMaxDegreeLimit));
  inv_part->excludes(inv_deg);
  add_format(invariant_cmd);

  std::string suite_name;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive identity suite");
  verify_cmd->add_option("--suite", suite_name, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--max-degree", max_degree, "Check all |λ| up to this")
      ->required()
      ->check(CLI::Range(0, kMaxDegreeLimit));
  add_format(verify_cmd);

  int bound = ExponentBounds{}.hi;
  auto* coeff_cmd = app.add_subcommand("solve-coefficients",
                                       "Fix the signed-monomial operator coefficients");
  coeff_cmd->add_option("--geometry", geometry_name, "c3 or unknot")
      ->required()
      ->check(CLI::IsMember({"c3", "unknot"}));
  coeff_cmd->add_option("--bound", bound, "Largest |exponent| tried for a, a_L, γ")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  add_format(coeff_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool records = format == "records";
  try {
    if (*partitions_cmd) {
      for (const Partition& p : enumerate_partitions(n)) {
        if (records) {
          out << Json{{"schema_version", kSchemaVersion}, {"kind", "partition"},
                      {"partition", p.to_string()}}
                     .dump()
              << "\n";
        } else {
          out << p.display() << "\n";
        }
      }
      return kOk;
    }
    if (*content_cmd) {
      const Partition p = detail::partition_arg(lambda_text);
      detail::print_polynomial(out, records, "content-polynomial", p, content_polynomial(p));
      return kOk;
    }
    if (*hook_cmd) {
      const Partition p = detail::partition_arg(lambda_text);
      detail::print_polynomial(out, records, "hook-polynomial", p, hook_polynomial(p));
      return kOk;
    }
    if (*psi_cmd) {
      const GeometryTag tag = *parse_geometry(geometry_name);
      const ResultCache cache;
      std::optional<std::string> cached;
      if (!no_cache) cached = cache.load(tag, max_degree);
      std::string bytes;
      if (cached && !check_cache) {
        bytes = *cached;
      } else {
        bytes = serialize_skein_vector(solve_recursion(tag, max_degree),
                                       detail::manifest_for(tag, max_degree));
        if (check_cache && cached && *cached != bytes) {
          err << "cache mismatch: " << cache.path_for(tag, max_degree).string()
              << " differs from a fresh computation\n";
          return kFailure;
        }
        if (!no_cache && !cached && !cache.store(tag, max_degree, bytes)) {
          err << "warning: could not write cache in " << cache.directory().string() << "\n";
        }
      }
      if (records) {
        out << bytes;
      } else {
        SkeinVectorDocument doc;
        try {
          doc = deserialize_skein_vector(bytes);
        } catch (const SerializationError& e) {
          err << "corrupt cache entry " << cache.path_for(tag, max_degree).string() << ": "
              << e.what() << "\n";
          return kFailure;
        }
        detail::print_vector_text(out, doc.vector);
      }
      return kOk;
    }
    if (*closed_cmd) {
      const GeometryTag tag = *parse_geometry(geometry_name);
      std::vector<std::pair<Partition, RationalFunction>> values;
      if (!*closed_part && !*closed_deg) throw detail::UsageError("give --partition or --max-degree");
      if (*closed_part) {
        const Partition p = detail::partition_arg(partition_opt);
        values.emplace_back(p, closed_form(tag, p));
      } else {
        for (const Partition& p : partitions_up_to(max_degree)) values.emplace_back(p, closed_form(tag, p));
      }
      detail::print_values(out, records, "closed-form", values);
      return kOk;
    }
    if (*invariant_cmd) {
      std::vector<std::pair<Partition, RationalFunction>> values;
      if (!*inv_part && !*inv_deg) throw detail::UsageError("give a partition or --max-degree");
      if (*inv_part) {
        const Partition p = detail::partition_arg(lambda_text);
        values.emplace_back(p, colored_unknot_invariant(p));
      } else {
        for (const Partition& p : partitions_up_to(max_degree)) {
          values.emplace_back(p, colored_unknot_invariant(p));
        }
      }
      detail::print_values(out, records, "unknot-invariant", values);
      return kOk;
    }
    if (*verify_cmd) {
      const VerificationReport report = verify_suite(*parse_suite(suite_name), max_degree);
      if (records) {
        Json rec = {{"schema_version", kSchemaVersion},
                    {"kind", "verification"},
                    {"suite", suite_name},
                    {"max_degree", max_degree},
                    {"checked", report.checked},
                    {"passed", report.passed()}};
        rec["failure"] = report.failure ? Json(*report.failure) : Json(nullptr);
        out << rec.dump() << "\n";
      } else {
        out << report.to_text() << "\n";
      }
      return report.passed() ? kOk : kFailure;
    }
    if (*coeff_cmd) {
      CoefficientTemplate tmpl =
          geometry_name == "c3" ? c3_coefficient_template() : unknot_coefficient_template();
      tmpl.bounds = {-bound, bound};
      const std::vector<Assignment> solutions = solve_monomial_coefficients(tmpl);
      for (const Assignment& x : solutions) {
        const std::string op = instantiate(tmpl, x).to_string();
        if (records) {
          Json values = Json::object();
          for (std::size_t k = 0; k < x.size(); ++k) {
            values[tmpl.unknowns[k].name] = polynomial_records(x[k].to_polynomial());
          }
          out << Json{{"schema_version", kSchemaVersion},
                      {"kind", "coefficient-solution"},
                      {"geometry", geometry_name},
                      {"values", values},
                      {"operator", op}}
                     .dump()
              << "\n";
        } else {
          out << detail::assignment_text(tmpl, x) << "\n  operator: " << op << "\n";
        }
      }
      return kOk;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CellNotInPartition& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace skein::cli

#include "kostant/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "kostant/acceptance.hpp"
#include "kostant/alternation.hpp"
#include "kostant/combinatorics.hpp"
#include "kostant/errors.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/partition.hpp"
#include "kostant/serialization.hpp"

namespace kostant::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Table };

struct CliConfig {
  int rank = 0;
  std::string mu_text;
  std::optional<RootInterval> mu;  // unset when mu_text == "0"
  std::string method;
  Format format = Format::Table;
  int brute_cap = kBuiltinBruteCap;
  std::uint64_t seed = acceptance::Options{}.seed;
  std::string out_path;
};

RootInterval parse_interval(const std::string& text, int rank) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ArgumentError("--mu expects i..j (or 0), got '" + text + "'");
  }
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw ArgumentError("--mu expects i..j (or 0), got '" + text + "'");
    }
    return v;
  };
  return RootInterval(rank, to_int(text.substr(0, dots)), to_int(text.substr(dots + 2)));
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<Coeff> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Coeff v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ArgumentError("--weight expects comma-separated integers, got '" + text + "'");
    }
    coords.push_back(v);
  }
  if (static_cast<int>(coords.size()) != rank) {
    throw ArgumentError("--weight has " + std::to_string(coords.size()) +
                        " coordinates, rank is " + std::to_string(rank));
  }
  return Weight(std::move(coords));
}

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string join(std::span<const int> values, const char* sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? sep : "") << values[k];
  return os.str();
}

std::string join_coeffs(const QPolynomial& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << (k ? ";" : "") << p.coeffs()[k];
  return os.str();
}

json envelope(json query, json result, std::optional<bool> verdict) {
  return json{{"query", std::move(query)},
              {"result", std::move(result)},
              {"verdict", verdict ? json(*verdict ? "pass" : "fail") : json(nullptr)}};
}

std::string verdict_text(bool ok) { return ok ? "pass" : "fail"; }

json base_query(const std::string& command, const CliConfig& cfg) {
  return json{{"command", command}, {"rank", cfg.rank}};
}

// ---------------------------------------------------------------- alt-set

int cmd_alt_set(const CliConfig& cfg, std::ostream& out) {
  const RootInterval iv = parse_interval(cfg.mu_text, cfg.rank);
  std::vector<AlternationSet> sets;
  if (cfg.method == "brute" || cfg.method == "both") {
    sets.push_back(alt_set_bruteforce(highest_root(cfg.rank), interval_root(iv), cfg.brute_cap));
  }
  if (cfg.method == "theorem" || cfg.method == "both") sets.push_back(alt_set_characterized(iv));
  std::optional<bool> verdict;
  if (sets.size() == 2) verdict = sets[0].same_elements(sets[1]);

  switch (cfg.format) {
    case Format::Json: {
      json query = base_query("alt-set", cfg);
      query["mu"] = {iv.i(), iv.j()};
      query["method"] = cfg.method;
      json result;
      if (sets.size() == 1) {
        result = sets[0];
      } else {
        result = json{{"brute_force", sets[0]}, {"characterized", sets[1]}, {"sets_equal", *verdict}};
      }
      out << envelope(query, result, verdict).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "provenance,length,word,perm\n";
      for (const auto& set : sets) {
        for (const auto& sigma : set.elements()) {
          out << to_string(set.provenance()) << ',' << sigma.length() << ','
              << sigma.to_string() << ',' << join(sigma.perm(), " ") << '\n';
        }
      }
      break;
    case Format::Table:
      for (const auto& set : sets) {
        out << "alternation set, rank " << cfg.rank << ", mu = " << iv.to_string() << " ["
            << to_string(set.provenance()) << "]: " << set.size() << " elements\n";
        for (const auto& sigma : set.elements()) {
          out << "  len " << sigma.length() << "  " << sigma.to_string() << "  perm ("
              << join(sigma.perm(), ",") << ")\n";
        }
      }
      out << "F_i * F_{r-j+1} = " << alt_cardinality(iv) << '\n';
      if (verdict) out << "verdict: " << verdict_text(*verdict) << " (sets "
                       << (*verdict ? "equal" : "differ") << ")\n";
      break;
  }
  return verdict.value_or(true) ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- qmult

struct Route {
  std::string name;
  QPolynomial value;
  std::optional<MultiplicityReport> report;
};

int cmd_qmult(const CliConfig& cfg, std::ostream& out) {
  const Weight top = highest_root(cfg.rank);
  const bool zero_mu = cfg.mu_text == "0";
  if (zero_mu && cfg.method != "kwmf") {
    throw ArgumentError("--mu 0 is only supported with --method kwmf");
  }
  const std::optional<RootInterval> iv =
      zero_mu ? std::nullopt : std::optional(parse_interval(cfg.mu_text, cfg.rank));
  const Weight mu = zero_mu ? Weight(cfg.rank) : interval_root(*iv);

  std::vector<Route> routes;
  auto add_report = [&](std::string name, MultiplicityReport report) {
    QPolynomial value = report.q_multiplicity;
    routes.push_back({std::move(name), std::move(value), std::move(report)});
  };
  const std::string& m = cfg.method;
  if (m == "kwmf" || m == "all") {
    add_report("kwmf_full", q_multiplicity(top, mu, Method::KwmfFull, cfg.brute_cap));
  }
  if (m == "kwmf-altset") {
    add_report("kwmf_altset", q_multiplicity(top, mu, Method::KwmfAltset, cfg.brute_cap));
  }
  if (m == "closed" || m == "all") add_report("closed_form", q_multiplicity_closed_report(*iv));
  if (m == "predicted" || m == "all") {
    routes.push_back({"predicted", predicted_q_multiplicity(*iv), std::nullopt});
  }
  std::optional<bool> verdict;
  if (m == "all") {
    verdict = std::all_of(routes.begin(), routes.end(),
                          [&](const Route& r) { return r.value == routes.front().value; });
  }

  switch (cfg.format) {
    case Format::Json: {
      json query = base_query("qmult", cfg);
      query["mu"] = zero_mu ? json(0) : json::array({iv->i(), iv->j()});
      query["method"] = m;
      json result = json::object();
      for (const auto& r : routes) {
        if (r.report) {
          result[r.name] = *r.report;
        } else {
          result[r.name] = json{{"q_multiplicity", r.value}, {"method", r.name}};
        }
      }
      if (routes.size() == 1) {
        json single = result[routes.front().name];
        result = std::move(single);
      }
      out << envelope(query, result, verdict).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "route,rank,mu,coeffs,pretty,multiplicity_at_one,term_count\n";
      for (const auto& r : routes) {
        out << r.name << ',' << cfg.rank << ',' << (zero_mu ? "0" : iv->to_string()) << ','
            << join_coeffs(r.value) << ',' << csv_field(r.value.to_string()) << ','
            << r.value.evaluate_at_one() << ',';
        if (r.report) out << r.report->term_count;
        out << '\n';
      }
      break;
    case Format::Table:
      out << "m_q(highest root, mu = " << (zero_mu ? "0" : iv->to_string()) << "), rank "
          << cfg.rank << '\n';
      for (const auto& r : routes) {
        out << "  " << r.name << ": " << r.value.to_string() << "   (q=1: "
            << r.value.evaluate_at_one();
        if (r.report) out << ", nonzero terms: " << r.report->term_count;
        out << ")\n";
      }
      if (verdict) out << "verdict: " << verdict_text(*verdict) << '\n';
      break;
  }
  return verdict.value_or(true) ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- partition

int cmd_partition(const CliConfig& cfg, const std::string& weight_text, bool with_oracle,
                  std::ostream& out) {
  const Weight xi = parse_weight(weight_text, cfg.rank);
  const QPolynomial value = kostant_q(cfg.rank, xi);
  std::optional<QPolynomial> oracle;
  std::optional<bool> verdict;
  if (with_oracle) {
    oracle = kostant_q_oracle(cfg.rank, xi);
    verdict = *oracle == value;
  }
  switch (cfg.format) {
    case Format::Json: {
      json query = base_query("partition", cfg);
      query["weight"] = xi;
      query["oracle"] = with_oracle;
      json result{{"weight", xi}, {"q_analog", value}, {"count", value.evaluate_at_one()}};
      if (oracle) result["oracle"] = *oracle;
      out << envelope(query, result, verdict).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "source,degree,coefficient\n";
      for (std::size_t d = 0; d < value.coeffs().size(); ++d) {
        out << "dp," << d << ',' << value.coeffs()[d] << '\n';
      }
      if (oracle) {
        for (std::size_t d = 0; d < oracle->coeffs().size(); ++d) {
          out << "oracle," << d << ',' << oracle->coeffs()[d] << '\n';
        }
      }
      break;
    case Format::Table:
      out << "partition_q" << xi.to_string() << " = " << value.to_string() << '\n';
      out << "partition" << xi.to_string() << " = " << value.evaluate_at_one() << '\n';
      if (oracle) {
        out << "oracle: " << oracle->to_string() << "\nverdict: " << verdict_text(*verdict) << '\n';
      }
      break;
  }
  return verdict.value_or(true) ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- identity

int cmd_identity(const CliConfig& cfg, int max_n, std::ostream& out) {
  if (max_n < 0) throw ArgumentError("--max-n must be >= 0");
  struct Row {
    int n;
    BigCount sum;
    BigCount fib;
  };
  std::vector<Row> rows;
  for (int n = 0; n <= max_n; ++n) {
    BigCount sum = 0;
    for (int k = 0; 2 * k <= n + 1; ++k) sum += nonconsecutive_count_k(n, k);
    rows.push_back({n, sum, fibonacci(n + 2)});
  }
  const bool ok = std::all_of(rows.begin(), rows.end(),
                              [](const Row& r) { return r.sum == r.fib && fib_identity_check(r.n); });
  switch (cfg.format) {
    case Format::Json: {
      json result = json::array();
      for (const auto& r : rows) {
        result.push_back({{"n", r.n}, {"binomial_sum", r.sum}, {"fibonacci_n_plus_2", r.fib},
                          {"holds", r.sum == r.fib}});
      }
      out << envelope({{"command", "identity"}, {"max_n", max_n}}, result, ok).dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,binomial_sum,fibonacci_n_plus_2,holds\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.sum << ',' << r.fib << ',' << (r.sum == r.fib) << '\n';
      }
      break;
    case Format::Table:
      out << "   n   sum_k C(n+1-k,k)   F_{n+2}\n";
      for (const auto& r : rows) {
        out << std::setw(4) << r.n << std::setw(20) << r.sum << std::setw(10) << r.fib
            << (r.sum == r.fib ? "" : "   MISMATCH") << '\n';
      }
      out << "verdict: " << verdict_text(ok) << '\n';
      break;
  }
  (void)cfg;
  return ok ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const CliConfig& cfg, int max_brute_rank, int max_closed_rank, std::ostream& out) {
  if (max_brute_rank < 1 || max_closed_rank < 1) {
    throw ArgumentError("--max-brute-rank and --max-closed-rank must be >= 1");
  }
  check_brute_cap(max_brute_rank, cfg.brute_cap);
  acceptance::Options options;
  options.max_brute_rank = max_brute_rank;
  options.max_weyl_image_rank = std::min(options.max_weyl_image_rank, max_brute_rank);
  options.max_zero_weight_rank = std::min(options.max_zero_weight_rank, max_brute_rank);
  options.max_closed_rank = max_closed_rank;
  options.seed = cfg.seed;
  options.brute_cap = cfg.brute_cap;

  if (cfg.format == Format::Csv) out << "criterion,name,passed,seconds,detail\n";
  auto progress = [&](const acceptance::CriterionResult& r) {
    if (cfg.format == Format::Table) out << acceptance::format_line(r) << std::endl;
    if (cfg.format == Format::Csv) {
      out << r.id << ',' << csv_field(r.name) << ',' << r.passed << ',' << r.seconds << ','
          << csv_field(r.detail) << std::endl;
    }
  };
  const auto results = acceptance::run_all(options, progress);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const auto& r) { return r.passed; });
  if (cfg.format == Format::Json) {
    json result = json::array();
    for (const auto& r : results) {
      result.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                        {"seconds", r.seconds}, {"detail", r.detail}});
    }
    json query{{"command", "verify"},
               {"max_brute_rank", max_brute_rank},
               {"max_closed_rank", max_closed_rank},
               {"seed", cfg.seed}};
    out << envelope(query, result, ok).dump(2) << '\n';
  } else if (cfg.format == Format::Table) {
    out << "verdict: " << verdict_text(ok) << '\n';
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl alternation sets, Kostant partition functions and q-multiplicities for sl_{r+1}",
               "kostant"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  cfg.brute_cap = default_brute_cap();
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--brute-cap", cfg.brute_cap,
                 "Largest rank allowed for full Weyl group enumeration (env KOSTANT_MAX_BRUTE_RANK)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--out", cfg.out_path, "Write output to FILE instead of stdout");

  auto* alt = app.add_subcommand("alt-set", "Print the Weyl alternation set A(highest root, mu)");
  alt->add_option("--rank", cfg.rank, "Rank r of A_r")->required()->check(CLI::PositiveNumber);
  alt->add_option("--mu", cfg.mu_text, "Interval i..j")->required();
  std::string alt_method = "theorem";
  alt->add_option("--method", alt_method)->check(CLI::IsMember({"brute", "theorem", "both"}));

  auto* qmult = app.add_subcommand("qmult", "Compute m_q(highest root, mu)");
  qmult->add_option("--rank", cfg.rank, "Rank r of A_r")->required()->check(CLI::PositiveNumber);
  qmult->add_option("--mu", cfg.mu_text, "Interval i..j, or 0 (kwmf only)")->required();
  std::string q_method = "closed";
  qmult->add_option("--method", q_method)
      ->check(CLI::IsMember({"kwmf", "kwmf-altset", "closed", "predicted", "all"}));

  auto* part = app.add_subcommand("partition", "Evaluate the q-analog of Kostant's partition function");
  part->add_option("--rank", cfg.rank, "Rank r of A_r")->required()->check(CLI::PositiveNumber);
  std::string weight_text;
  part->add_option("--weight", weight_text, "Simple-root coordinates c1,...,cr")->required();
  bool with_oracle = false;
  part->add_flag("--oracle", with_oracle, "Also run the brute-force oracle and compare");

  auto* ident = app.add_subcommand("identity", "Tabulate sum_k C(n+1-k,k) against F_{n+2}");
  int max_n = 30;
  ident->add_option("--max-n", max_n, "Largest n");

  auto* verify = app.add_subcommand("verify", "Run the full acceptance suite");
  int max_brute_rank = acceptance::Options{}.max_brute_rank;
  int max_closed_rank = acceptance::Options{}.max_closed_rank;
  verify->add_option("--max-brute-rank", max_brute_rank, "Largest rank for full-W checks");
  verify->add_option("--max-closed-rank", max_closed_rank, "Largest rank for closed-form checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "kostant: " << e.what() << '\n';
    return kUsageError;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file = std::make_unique<std::ofstream>(cfg.out_path);
    if (!*file) {
      err << "kostant: cannot open " << cfg.out_path << " for writing\n";
      return kUsageError;
    }
    sink = file.get();
  }

  try {
    if (*alt) {
      cfg.method = alt_method;
      return cmd_alt_set(cfg, *sink);
    }
    if (*qmult) {
      cfg.method = q_method;
      return cmd_qmult(cfg, *sink);
    }
    if (*part) return cmd_partition(cfg, weight_text, with_oracle, *sink);
    if (*ident) return cmd_identity(cfg, max_n, *sink);
    if (*verify) return cmd_verify(cfg, max_brute_rank, max_closed_rank, *sink);
  } catch (const ArgumentError& e) {
    err << "kostant: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapacityError& e) {
    err << "kostant: " << e.what() << '\n';
    return kCapacityError;
  } catch (const OverflowError& e) {
    err << "kostant: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::exception& e) {
    err << "kostant: internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  err << "kostant: no subcommand given\n";
  return kUsageError;
}

}  // namespace kostant::cli

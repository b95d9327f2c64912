#include "asmtree/cli/app.hpp"

#include <cstdlib>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmtree/cli/bfile.hpp"
#include "asmtree/cli/cache.hpp"
#include "asmtree/cli/fetch.hpp"
#include "asmtree/cli/request.hpp"
#include "asmtree/count.hpp"
#include "asmtree/enumerate.hpp"
#include "asmtree/formulas.hpp"
#include "asmtree/series.hpp"
#include "asmtree/tree_io.hpp"

namespace asmtree::cli {

AppOptions AppOptions::from_environment() {
  AppOptions o;
  o.cache_dir = default_cache_dir();
  if (const char* url = std::getenv("ASMTREE_OEIS_BASE_URL"); url && *url) o.oeis_base_url = url;
  return o;
}

App::App(AppOptions options) : options_(std::move(options)) {}

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Common {
  bool no_cache = false;
  bool no_banner = false;
};

struct RequestFlags {
  std::string family = "path";
  std::string rule = "connected";
  bool timed = false;
  int n = 0;
  std::string method;
  std::vector<int> legs;
  std::string graph_file;
};

void add_request_flags(CLI::App* cmd, RequestFlags& f, bool with_n) {
  cmd->add_option("--family", f.family, "star|path|cycle|complete|caterpillar|custom");
  cmd->add_option("--rule", f.rule, "none|connected|edge");
  cmd->add_flag("--timed", f.timed, "count time-dependent assembly trees");
  if (with_n) cmd->add_option("--n", f.n, "vertex count (stars: total, center included)");
  cmd->add_option("--legs", f.legs, "caterpillar leg counts, one per spine vertex")->delimiter(',');
  cmd->add_option("--graph-file", f.graph_file, "JSON graph {\"n\":..,\"edges\":[[u,v],..]}");
}

CountRequest to_request(const RequestFlags& f) {
  CountRequest r;
  r.family = parse_family_kind(f.family);
  try {
    r.rule = parse_rule(f.rule);
  } catch (const std::invalid_argument& e) {
    throw InvalidRequest(e.what());
  }
  r.timed = f.timed;
  r.n = f.n;
  if (!f.method.empty()) r.method = parse_method(f.method);
  r.legs = f.legs;
  r.graph_file = f.graph_file;
  return r;
}

class Runner {
public:
  Runner(const AppOptions& options, const Common& common, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {
    if (!common.no_cache && options.cache_dir) {
      cache_ = std::make_unique<CountCache>(*options.cache_dir, kVersion);
    }
    if (!common.no_banner) out_ << "# asmtree " << kVersion << '\n';
  }

  std::optional<Natural> formula(const CountRequest& req) const {
    const auto seq = req.sequence();
    if (!seq) return std::nullopt;
    return options_.formula(*seq, req.n);
  }

  Natural oracle(const CountRequest& req, int limit) {
    const std::string key = req.cache_key("oracle");
    if (cache_) {
      if (auto hit = cache_->get(key)) return Natural::parse(*hit);
    }
    const Graph g = req.build_graph();
    Natural value;
    try {
      value = req.timed ? count_timed_trees_by_frontiers(g, req.rule, limit)
                        : count_trees(g, req.rule, limit);
    } catch (const LimitExceeded& e) {
      throw InvalidRequest(e.what());
    } catch (const std::invalid_argument& e) {
      throw InvalidRequest(e.what());
    }
    if (cache_) cache_->put(key, value.str());
    return value;
  }

  int count(const CountRequest& req, int limit) {
    req.check();
    const Method m = req.effective_method();
    std::optional<Natural> by_formula;
    if (m != Method::Enumerate) {
      by_formula = formula(req);
      if (!by_formula) throw InvalidRequest("n=" + std::to_string(req.n) + " is outside the formula's domain");
    }
    if (m == Method::Formula) {
      out_ << *by_formula << '\n';
      return 0;
    }
    const Natural by_oracle = oracle(req, limit);
    if (m == Method::Enumerate || by_oracle == *by_formula) {
      out_ << by_oracle << '\n';
      return 0;
    }
    out_ << "formula\t" << *by_formula << "\noracle\t" << by_oracle << '\n';
    err_ << "asmtree: formula and oracle disagree\n";
    return kExitMismatch;
  }

  int table(const CountRequest& base, int n_min, int n_max, const std::string& format, int oracle_max) {
    if (base.family == FamilyKind::Caterpillar || base.family == FamilyKind::Custom) {
      throw InvalidRequest("table needs one of star, path, cycle, complete");
    }
    if (n_min < 1 || n_max < n_min) {
      throw InvalidRequest("bad range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    if (format != "csv" && format != "json" && format != "markdown") {
      throw InvalidRequest("unknown table format: " + format);
    }
    struct Row {
      int n;
      std::optional<Natural> formula;
      std::optional<Natural> oracle;
      std::string error;
    };
    std::vector<Row> rows;
    for (int n = n_min; n <= n_max; ++n) rows.push_back(Row{n, {}, {}, {}});

    // rows are independent; output order is fixed by the vector
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CountRequest req = base;
      req.n = rows[i].n;
      try {
        rows[i].formula = formula(req);
        if (req.n <= oracle_max) rows[i].oracle = oracle(req, oracle_max);
      } catch (const InvalidRequest&) {
        // outside the graph family's domain, e.g. cycle on 2 vertices
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
    for (const auto& r : rows) {
      if (!r.error.empty()) throw std::runtime_error("n=" + std::to_string(r.n) + ": " + r.error);
    }

    bool all_agree = true;
    auto agree = [&](const Row& r) -> std::optional<bool> {
      if (!r.formula || !r.oracle) return std::nullopt;
      return *r.formula == *r.oracle;
    };
    auto text = [](const std::optional<Natural>& v) { return v ? v->str() : std::string(); };
    const auto seq = base.sequence();

    if (format == "json") {
      nlohmann::ordered_json j;
      j["family"] = std::string(to_string(base.family));
      j["rule"] = std::string(to_string(base.rule));
      j["timed"] = base.timed;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["formula"] = r.formula ? nlohmann::ordered_json(r.formula->str()) : nullptr;
        row["oracle"] = r.oracle ? nlohmann::ordered_json(r.oracle->str()) : nullptr;
        const auto a = agree(r);
        row["agree"] = a ? nlohmann::ordered_json(*a) : nullptr;
        if (a && !*a) all_agree = false;
        j["rows"].push_back(row);
      }
      out_ << j.dump(2) << '\n';
    } else if (format == "csv") {
      out_ << "n,formula,oracle,agree\n";
      for (const auto& r : rows) {
        const auto a = agree(r);
        if (a && !*a) all_agree = false;
        out_ << r.n << ',' << text(r.formula) << ',' << text(r.oracle) << ','
             << (a ? (*a ? "true" : "false") : "") << '\n';
      }
    } else {
      out_ << "| n | formula | oracle | agree |\n|---:|---:|---:|:---:|\n";
      for (const auto& r : rows) {
        const auto a = agree(r);
        if (a && !*a) all_agree = false;
        out_ << "| " << r.n << " | " << text(r.formula) << " | " << text(r.oracle) << " | "
             << (a ? (*a ? "yes" : "NO") : "") << " |\n";
      }
    }
    if (!all_agree) {
      err_ << "asmtree: formula and oracle disagree for " << (seq ? seq->str() : "?") << '\n';
      return kExitMismatch;
    }
    return 0;
  }

  int trees(const CountRequest& req, const std::string& format_name, int limit) {
    if (req.family != FamilyKind::Caterpillar && req.family != FamilyKind::Custom && req.n < 1) {
      throw InvalidRequest("--n must be positive");
    }
    TreeFormat format;
    try {
      format = parse_tree_format(format_name);
    } catch (const std::invalid_argument& e) {
      throw InvalidRequest(e.what());
    }
    const Graph g = req.build_graph();
    const char* separator = format == TreeFormat::Json ? "\n" : "";
    try {
      if (req.timed) {
        for_each_timed_tree(g, req.rule, [&](const TimedAssemblyTree& t) {
          out_ << serialize_tree(t, format) << separator;
        }, limit);
      } else {
        for_each_tree(g, req.rule, [&](const AssemblyTree& t) {
          out_ << serialize_tree(t, format) << separator;
        }, limit);
      }
    } catch (const LimitExceeded& e) {
      throw InvalidRequest(e.what());
    } catch (const std::invalid_argument& e) {
      throw InvalidRequest(e.what());
    }
    return 0;
  }

  int series_cmd(const std::string& which, int order) {
    using series::Rational;
    if (order < 1) throw InvalidRequest("--order must be >= 1");
    std::vector<Rational> values;
    std::function<std::optional<Natural>(int)> expected;
    int compare_from = 1;
    if (which == "fubini-egf") {
      values = series::egf_scaled(series::egf_fubini(order));
      expected = [&](int k) { return options_.formula({Family::Star, GluingRule::Connected, false}, k + 1); };
    } else if (which == "super-catalan-ogf") {
      values = series::ogf_super_catalan(order).coefficients();
      expected = [&](int k) { return options_.formula({Family::Path, GluingRule::Connected, false}, k); };
    } else if (which == "cycle-ogf") {
      values = series::ogf_connected_cycle(order).coefficients();
      expected = [&](int k) { return options_.formula({Family::Cycle, GluingRule::Connected, false}, k); };
      compare_from = 3;
    } else if (which == "td-cycle-egf") {
      values = series::egf_scaled(series::egf_td_cycle(order));
      expected = [&](int k) { return options_.formula({Family::Cycle, GluingRule::Connected, true}, k); };
    } else if (which == "td-path-funceq") {
      if (order < 2) throw InvalidRequest("td-path-funceq needs --order >= 2");
      std::vector<Natural> coeffs;
      for (int k = 1; k <= order; ++k) {
        auto v = options_.formula({Family::Path, GluingRule::Edge, true}, k);
        coeffs.push_back(v ? *v : Natural(0));
        out_ << k << '\t' << coeffs.back() << '\n';
      }
      const auto check = series::check_path_functional_equation(coeffs, order);
      if (check.ok) {
        out_ << "PASS\n";
        return 0;
      }
      out_ << "FAIL at index " << *check.first_mismatch << '\n';
      return kExitMismatch;
    } else {
      throw InvalidRequest("unknown series: " + which +
                           " (expected fubini-egf, super-catalan-ogf, cycle-ogf, td-cycle-egf, td-path-funceq)");
    }

    out_ << series::dump_coefficients(values, 1);
    int status = 0;
    for (int k = 1; k <= order; ++k) {
      if (!series::is_integer(values[k])) {
        err_ << "asmtree: coefficient " << k << " is not an integer: " << series::format_rational(values[k]) << '\n';
        status = kExitMismatch;
        continue;
      }
      if (k < compare_from) continue;
      const auto want = expected(k);
      if (!want || Rational(want->backend()) != values[k]) {
        err_ << "asmtree: coefficient " << k << " is " << series::format_rational(values[k])
             << ", formula gives " << (want ? want->str() : "nothing") << '\n';
        status = kExitMismatch;
      }
    }
    return status;
  }

  int oeis(const CountRequest& base, const std::string& bfile, const std::string& fetch_id,
           long offset, int n_max, const std::string& generator, int oracle_max) {
    if (bfile.empty() == fetch_id.empty()) throw InvalidRequest("give exactly one of --bfile and --fetch");
    std::filesystem::path file = bfile;
    if (!fetch_id.empty()) {
      if (!options_.oeis_base_url) throw InvalidRequest("--fetch needs ASMTREE_OEIS_BASE_URL");
      if (!options_.cache_dir) throw InvalidRequest("--fetch needs a cache directory (ASMTREE_CACHE_DIR)");
      try {
        file = fetch_bfile(*options_.oeis_base_url, fetch_id, *options_.cache_dir / "bfiles");
      } catch (const FetchError& e) {
        throw InvalidRequest(e.what());
      }
    }
    std::vector<BFileTerm> terms;
    try {
      terms = read_bfile(file);
    } catch (const MalformedBFile& e) {
      throw InvalidRequest(e.what());
    }

    const auto seq = base.sequence();
    std::function<std::optional<Natural>(int)> generate;
    if (generator == "formula") {
      if (!seq || !formulas::has_formula(*seq)) throw InvalidRequest("no formula for this family and rule");
      generate = [&](int n) { return options_.formula(*seq, n); };
    } else if (generator == "closed-a" || generator == "closed-b") {
      if (base.family != FamilyKind::Cycle || base.rule != GluingRule::Connected || base.timed) {
        throw InvalidRequest("closed forms exist only for cycle/connected untimed counts");
      }
      const auto variant = generator == "closed-a" ? formulas::CycleClosedForm::A : formulas::CycleClosedForm::B;
      generate = [variant](int n) -> std::optional<Natural> {
        if (n < 3) return std::nullopt;
        return formulas::connected_cycle_closed(n, variant);
      };
    } else if (generator == "enumerate") {
      generate = [&](int n) -> std::optional<Natural> {
        if (n > oracle_max) return std::nullopt;
        CountRequest req = base;
        req.n = n;
        try {
          return oracle(req, oracle_max);
        } catch (const InvalidRequest&) {
          return std::nullopt;
        }
      };
    } else {
      throw InvalidRequest("unknown generator: " + generator);
    }

    int compared = 0;
    for (const auto& term : terms) {
      const long long n = term.index + offset;
      if (n < 1 || n > n_max) continue;
      const auto got = generate(static_cast<int>(n));
      if (!got) continue;
      ++compared;
      const bool ok = *got == term.value;
      out_ << term.index << '\t' << n << '\t' << term.value << '\t' << *got << '\t'
           << (ok ? "ok" : "MISMATCH") << '\n';
      if (!ok) {
        out_ << "FAIL at index " << term.index << '\n';
        return kExitMismatch;
      }
    }
    if (compared == 0) {
      out_ << "FAIL no overlapping terms\n";
      return kExitMismatch;
    }
    out_ << "PASS " << compared << " terms\n";
    return 0;
  }

private:
  const AppOptions& options_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<CountCache> cache_;
};

}  // namespace

int App::run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and lists assembly trees of graphs", "asmtree"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--no-cache", common.no_cache, "do not read or write the count cache");
  app.add_flag("--no-banner", common.no_banner, "omit the version banner");

  RequestFlags count_flags;
  int count_max_n = -1;
  auto* count_cmd = app.add_subcommand("count", "print one count");
  add_request_flags(count_cmd, count_flags, true);
  count_cmd->add_option("--method", count_flags.method, "formula|enumerate|both");
  count_cmd->add_option("--max-n", count_max_n, "size cap for the oracle");

  RequestFlags table_flags;
  int n_min = 1;
  int n_max = 10;
  std::string table_format = "csv";
  int table_oracle_max = kDefaultEnumerationLimit;
  auto* table_cmd = app.add_subcommand("table", "formula and oracle values over a range of n");
  add_request_flags(table_cmd, table_flags, false);
  table_cmd->add_option("--n-min", n_min);
  table_cmd->add_option("--n-max", n_max);
  table_cmd->add_option("--format", table_format, "csv|json|markdown");
  table_cmd->add_option("--oracle-max", table_oracle_max, "largest n checked against the oracle");

  RequestFlags tree_flags;
  std::string tree_format = "json";
  int tree_max_n = kDefaultEnumerationLimit;
  auto* trees_cmd = app.add_subcommand("trees", "list every assembly tree");
  add_request_flags(trees_cmd, tree_flags, true);
  trees_cmd->add_option("--format", tree_format, "json|dot");
  trees_cmd->add_option("--max-n", tree_max_n, "enumeration size cap");

  std::string which;
  int order = 12;
  auto* series_cmd = app.add_subcommand("series", "generating-function coefficients");
  series_cmd->add_option("which", which,
                         "fubini-egf|super-catalan-ogf|cycle-ogf|td-cycle-egf|td-path-funceq")
      ->required();
  series_cmd->add_option("--order", order);

  RequestFlags oeis_flags;
  std::string bfile;
  std::string fetch_id;
  long offset = 0;
  int oeis_n_max = 30;
  std::string generator = "formula";
  int oeis_oracle_max = kDefaultEnumerationLimit;
  auto* oeis_cmd = app.add_subcommand("oeis", "compare a sequence with a b-file");
  add_request_flags(oeis_cmd, oeis_flags, false);
  oeis_cmd->add_option("--bfile", bfile, "local b-file");
  oeis_cmd->add_option("--fetch", fetch_id, "sequence id to download, e.g. A000670");
  oeis_cmd->add_option("--offset", offset, "graph size n = b-file index + offset");
  oeis_cmd->add_option("--n-max", oeis_n_max);
  oeis_cmd->add_option("--method", generator, "formula|enumerate|closed-a|closed-b");
  oeis_cmd->add_option("--oracle-max", oeis_oracle_max);

  std::vector<std::string> argv_store{"asmtree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "asmtree: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    Runner runner(options_, common, out, err);
    if (*count_cmd) {
      CountRequest req = to_request(count_flags);
      const int limit = count_max_n > 0 ? count_max_n : (req.timed ? kDefaultTimedCountLimit : kDefaultCountLimit);
      return runner.count(req, limit);
    }
    if (*table_cmd) return runner.table(to_request(table_flags), n_min, n_max, table_format, table_oracle_max);
    if (*trees_cmd) return runner.trees(to_request(tree_flags), tree_format, tree_max_n);
    if (*series_cmd) return runner.series_cmd(which, order);
    if (*oeis_cmd) {
      return runner.oeis(to_request(oeis_flags), bfile, fetch_id, offset, oeis_n_max, generator, oeis_oracle_max);
    }
  } catch (const InvalidRequest& e) {
    err << "asmtree: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "asmtree: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace asmtree::cli

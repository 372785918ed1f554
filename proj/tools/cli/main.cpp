// unitysum: exact minima, constructions and plot data from the command line.
//
// Exit codes: 0 ok, 1 verify failure, 2 bad arguments, 3 I/O, 4 cost guard,
// 5 empty selection.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unitysum/closed_forms.hpp"
#include "unitysum/constructions.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/plot_data.hpp"
#include "unitysum/pte.hpp"
#include "unitysum/results_store.hpp"
#include "unitysum/search.hpp"
#include "verify.hpp"

namespace us = unitysum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitCost = 4;
constexpr int kExitEmpty = 5;

int exit_code(us::ErrorCode code) {
  switch (code) {
    case us::ErrorCode::kIo: return kExitIo;
    case us::ErrorCode::kCostGuard:
    case us::ErrorCode::kOracleTooLarge: return kExitCost;
    case us::ErrorCode::kEmptySelection: return kExitEmpty;
    default: return kExitArgs;
  }
}

using Filter = std::optional<std::pair<std::int64_t, std::int64_t>>;

// "m,r" -> n = r (mod m)
Filter parse_filter(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) us::fail(us::ErrorCode::kInvalidArgument, "filter must look like m,r");
  std::int64_t m = 0;
  std::int64_t r = 0;
  try {
    m = std::stoll(text.substr(0, comma));
    r = std::stoll(text.substr(comma + 1));
  } catch (const std::exception&) {
    us::fail(us::ErrorCode::kInvalidArgument, "filter must look like m,r");
  }
  if (m < 1 || r < 0 || r >= m) us::fail(us::ErrorCode::kInvalidArgument, "filter needs m >= 1 and 0 <= r < m");
  return std::make_pair(m, r);
}

us::Shard parse_shard(const std::string& text) {
  us::Shard s;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("shard");
    s.index = std::stoi(text.substr(0, slash));
    s.total = std::stoi(text.substr(slash + 1));
  } catch (const std::exception&) {
    us::fail(us::ErrorCode::kInvalidArgument, "shard must look like i/t");
  }
  if (s.total < 1 || s.index < 0 || s.index >= s.total) {
    us::fail(us::ErrorCode::kInvalidArgument, "shard needs 0 <= i < t");
  }
  return s;
}

int default_threads() {
  const char* env = std::getenv("UNITY_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) us::fail(us::ErrorCode::kInvalidArgument, "UNITY_THREADS must be a positive integer");
  return static_cast<int>(v);
}

struct RangeArgs {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  std::int64_t stride = 1;
  std::string mod;

  void add_to(CLI::App* cmd) {
    auto* single = cmd->add_option("--n", n, "single n");
    auto* lo = cmd->add_option("--from", from, "first n of the range");
    auto* hi = cmd->add_option("--to", to, "last n of the range");
    cmd->add_option("--stride", stride, "step between n values");
    cmd->add_option("--mod", mod, "keep n = r (mod m), given as m,r");
    single->excludes(lo)->excludes(hi);
    lo->needs(hi);
    hi->needs(lo);
  }

  bool given() const { return n || from; }

  std::vector<std::int64_t> values() const {
    us::SweepRange r;
    if (n) {
      r.from = r.to = *n;
    } else if (from && to) {
      r.from = *from;
      r.to = *to;
    } else {
      us::fail(us::ErrorCode::kInvalidArgument, "give --n or --from/--to");
    }
    r.stride = stride;
    r.filter = parse_filter(mod);
    auto v = r.values();
    if (v.empty()) us::fail(us::ErrorCode::kInvalidArgument, "no n in the range passes the filter");
    return v;
  }
};

// ---- exact / sweep -------------------------------------------------------

struct ExactArgs {
  int k = 5;
  RangeArgs range;
  std::optional<int> threads;
  int refine_digits = 30;
  std::string out;
  bool resume = false;
  bool no_prune = false;
  std::string shard;
};

void add_exact_options(CLI::App* cmd, ExactArgs& a) {
  cmd->add_option("--k", a.k, "number of roots, 1..8")->required();
  a.range.add_to(cmd);
  cmd->add_option("--threads", a.threads, "worker threads (default: UNITY_THREADS or 1)");
  cmd->add_option("--refine-digits", a.refine_digits, "decimal digits of the reported value");
  cmd->add_option("--out", a.out, "results CSV; rows go to stdout when absent");
  cmd->add_flag("--resume", a.resume, "skip (k, n) already in --out");
  cmd->add_flag("--no-prune", a.no_prune, "disable pruning in the k = 5 search");
  cmd->add_option("--shard", a.shard, "process only n values i, i+t, ... of the selection (i/t)");
}

int run_exact(const ExactArgs& a) {
  us::SearchOptions opts;
  opts.threads = a.threads ? *a.threads : default_threads();
  opts.refine_digits = a.refine_digits;
  opts.prune_enabled = !a.no_prune;
  opts.validate();
  if (a.k < 1 || a.k > 8) us::fail(us::ErrorCode::kUnsupportedK, "k must lie in [1, 8]");
  if (a.resume && a.out.empty()) us::fail(us::ErrorCode::kInvalidArgument, "--resume needs --out");

  auto ns = a.range.values();
  if (!a.shard.empty()) {
    const us::Shard s = parse_shard(a.shard);
    std::vector<std::int64_t> mine;
    for (std::size_t i = static_cast<std::size_t>(s.index); i < ns.size(); i += static_cast<std::size_t>(s.total)) {
      mine.push_back(ns[i]);
    }
    ns = std::move(mine);
  }

  std::optional<us::ResultsStore> store;
  if (!a.out.empty()) store.emplace(a.out);
  else std::cout << us::kCsvHeader << '\n';

  std::size_t computed = 0;
  std::size_t skipped = 0;
  for (std::int64_t n : ns) {
    if (a.resume && store->contains(a.k, n)) {
      ++skipped;
      continue;
    }
    const us::MinRecord rec = us::compute_min(a.k, n, opts);
    if (store) {
      store->append(rec);
      std::ostringstream msg;
      msg << "k=" << a.k << " n=" << n << " evaluated=" << rec.evaluated_count << " pruned=" << rec.pruned_count;
      store->log(msg.str());
    } else {
      std::cout << us::format_record(rec) << '\n' << std::flush;
    }
    ++computed;
  }
  if (store) store->compact();
  std::cerr << "computed " << computed << ", skipped " << skipped << '\n';
  return kExitOk;
}

// ---- construct -----------------------------------------------------------

struct FamilyArgs {
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<int> j;
  std::optional<std::int64_t> Q;
  std::optional<int> m;
  std::string pte_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--a", a, "first family parameter");
    cmd->add_option("--b", b, "second family parameter");
    cmd->add_option("--j", j, "approximant index (z5-dip)");
    cmd->add_option("--Q", Q, "search bound of the quadratic approximation (z3r-quad)");
    cmd->add_option("--m", m, "PTE size (pte)");
    cmd->add_option("--pte-file", pte_file, "PTE solutions file (pte)");
  }

  us::FamilyParams params(us::Family family) const {
    us::FamilyParams p;
    p.a = a;
    p.b = b;
    p.j = j;
    p.Q = Q;
    if (family == us::Family::kPte) {
      if (!pte_file.empty()) {
        for (const auto& s : us::load_pte_file(pte_file)) {
          if (!m || static_cast<int>(s.m()) == *m) {
            p.pte = s;
            break;
          }
        }
        if (!p.pte) us::fail(us::ErrorCode::kInvalidArgument, "no matching solution in " + pte_file);
      } else {
        p.pte = us::curated_pte(m.value_or(2));
      }
    }
    return p;
  }
};

std::string join_params(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

struct ConstructArgs {
  std::string family;
  RangeArgs range;
  FamilyArgs params;
  bool window = false;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  const us::Family family = us::parse_family(a.family);
  const us::FamilyParams params = a.params.params(family);
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t stride = a.range.stride;
  Filter filter = parse_filter(a.range.mod);
  if (a.window) {
    if (family != us::Family::kZ5Dip || !a.params.j) {
      us::fail(us::ErrorCode::kInvalidArgument, "--window needs --family z5-dip and --j");
    }
    if (a.range.given()) us::fail(us::ErrorCode::kInvalidArgument, "--window replaces --n/--from/--to");
    const us::DipLocation d = us::dip_locate(*a.params.j);
    from = (d.n_star / 500) * 500 - 500;
    to = ((d.n_star + 499) / 500) * 500 + 500;
    stride = 5;
    filter.reset();
  } else if (a.range.n) {
    from = to = *a.range.n;
  } else if (a.range.from && a.range.to) {
    from = *a.range.from;
    to = *a.range.to;
  } else {
    us::fail(us::ErrorCode::kInvalidArgument, "give --n, --from/--to or --window");
  }
  if (stride < 1) us::fail(us::ErrorCode::kInvalidArgument, "stride must be >= 1");
  const auto rows = us::envelope(family, from, to, filter, params, stride);

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::trunc);
    if (!file) us::fail(us::ErrorCode::kIo, "cannot write " + a.out);
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  os << "n,value,params,legal\n";
  for (const auto& r : rows) {
    os << r.n << ',' << (r.legal ? r.value.str() : std::string("nan")) << ',' << join_params(r.params) << ','
       << (r.legal ? 1 : 0) << '\n';
  }
  os.flush();
  if (!os) us::fail(us::ErrorCode::kIo, "write failed");
  return kExitOk;
}

// ---- plotdata ------------------------------------------------------------

struct PlotArgs {
  std::string store;
  int k = 5;
  std::string transform = "raw";
  std::vector<std::string> overlays;
  FamilyArgs params;
  std::string filter;
  std::string out;
};

int run_plotdata(const PlotArgs& a) {
  const us::Transform t = us::parse_transform(a.transform);
  const Filter filter = parse_filter(a.filter);
  std::vector<us::Overlay> overlays;
  bool reference = false;
  for (const auto& name : a.overlays) {
    if (name == "ref") {
      reference = true;
      continue;
    }
    const us::Family f = us::parse_family(name);
    overlays.push_back({f, a.params.params(f), us::to_string(f)});
  }
  if (!std::filesystem::exists(a.store)) us::fail(us::ErrorCode::kIo, "no store at " + a.store);
  const us::ResultsStore store(a.store);
  std::vector<us::MinRecord> rows;
  for (auto& r : store.select(a.k)) {
    if (!filter || r.n % filter->first == filter->second) rows.push_back(std::move(r));
  }
  if (rows.empty()) us::fail(us::ErrorCode::kEmptySelection, "no rows match k and filter");
  const us::PlotSeries series = us::make_series(rows, t, overlays, reference);
  if (a.out.empty()) us::write_series(std::cout, series);
  else us::write_series(std::filesystem::path(a.out), series);
  return kExitOk;
}

// ---- closed-form ---------------------------------------------------------

int run_closed(int k, std::int64_t n, int digits) {
  const us::ClosedFormResult r = us::closed_form(k, n, digits);
  std::cout << "f(" << r.k << "," << r.n << ") = " << r.value.str() << '\n'
            << "witness " << r.witness.to_string() << '\n'
            << "regime " << r.regime << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal nonzero sums of roots of unity"};
  app.require_subcommand(1);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "exact minima f(k, n) for one n or a range");
  add_exact_options(exact, exact_args);

  ExactArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "exact minima over a range into a results store");
  add_exact_options(sweep, sweep_args);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "constructive upper bounds of a family");
  construct->add_option("--family", cons.family, "z5-fib|thm1, z5-dip, z3i, lift6, z3r-quad|z3r-lift, pte")
      ->required();
  cons.range.add_to(construct);
  cons.params.add_to(construct);
  construct->add_flag("--window", cons.window, "z5-dip: the window around the dip of --j, step 5");
  construct->add_option("--out", cons.out, "output CSV; stdout when absent");

  PlotArgs plot;
  auto* plotdata = app.add_subcommand("plotdata", "plot-ready columns from a results store");
  plotdata->add_option("--store", plot.store, "results CSV")->required();
  plotdata->add_option("--k", plot.k, "number of roots");
  plotdata->add_option("--transform", plot.transform, "raw, ln or loglog");
  plotdata->add_option("--overlay", plot.overlays, "family names, or ref for slope -2/-3 lines")->delimiter(',');
  plot.params.add_to(plotdata);
  plotdata->add_option("--filter", plot.filter, "keep n = r (mod m), given as m,r");
  plotdata->add_option("--out", plot.out, "output file; stdout when absent");

  std::string level = "quick";
  std::string store_path;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--store", store_path, "also re-evaluate every row of this store");
  verify->add_option("--fault", fault, "inject a fault (prune) to exercise the harness")
      ->check(CLI::IsMember({"prune"}));

  int cf_k = 2;
  std::int64_t cf_n = 1;
  int cf_digits = 30;
  auto* closed = app.add_subcommand("closed-form", "f(k, n) for k <= 4 from the closed forms");
  closed->add_option("--k", cf_k, "2, 3 or 4")->required();
  closed->add_option("--n", cf_n, "n")->required();
  closed->add_option("--digits", cf_digits, "decimal digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitArgs;
  }

  try {
    if (*exact) return run_exact(exact_args);
    if (*sweep) {
      if (!sweep_args.range.from) us::fail(us::ErrorCode::kInvalidArgument, "sweep needs --from/--to");
      return run_exact(sweep_args);
    }
    if (*construct) return run_construct(cons);
    if (*plotdata) return run_plotdata(plot);
    if (*closed) return run_closed(cf_k, cf_n, cf_digits);
    if (*verify) {
      us::cli::VerifyOptions vo;
      vo.level = level == "full" ? us::cli::VerifyLevel::kFull : us::cli::VerifyLevel::kQuick;
      if (!store_path.empty()) {
        if (!std::filesystem::exists(store_path)) us::fail(us::ErrorCode::kIo, "no store at " + store_path);
        vo.store = store_path;
      }
      vo.fault_prune = fault == "prune";
      const int failures = us::cli::run_verify(vo, std::cout);
      std::cout << (failures == 0 ? "all invariants hold" : std::to_string(failures) + " invariant(s) failed") << '\n';
      return failures == 0 ? kExitOk : kExitVerify;
    }
  } catch (const us::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitArgs;
}

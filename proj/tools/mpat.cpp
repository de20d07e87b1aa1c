// mpat: command-line workbench for forbidden patterns in d-dimensional 0-1
// matrices. Dimensions on the command line are 1-based.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpat/cache.hpp"
#include "mpat/classify.hpp"
#include "mpat/constructions.hpp"
#include "mpat/containment.hpp"
#include "mpat/pattern_io.hpp"
#include "mpat/search.hpp"
#include "mpat/transforms.hpp"
#include "mpat/verify.hpp"

namespace {

using nlohmann::json;
using namespace mpat;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kGuardAbort = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Shared {
  int max_cells = 0;
  std::uint64_t max_nodes = 0;
  int workers = 0;
  std::string cache_dir;
  std::string format = "text";
  std::uint64_t seed = VerifyOptions{}.seed;

  SearchLimits limits() const { return {max_cells, max_nodes, workers}; }
};

int to_dim(int one_based, int rank) {
  if (one_based < 1 || one_based > rank)
    throw UsageError("dimension " + std::to_string(one_based) + " outside 1.." + std::to_string(rank));
  return one_based - 1;
}

Coord parse_coord(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> v;
  for (int x; in >> x;) v.push_back(x);
  if (!in.eof() || v.empty()) throw UsageError("bad coordinate '" + s + "'");
  return Coord(std::span<const int>(v));
}

void require_no_csv(const Shared& sh) {
  if (sh.format == "csv") throw UsageError("csv output is only available for ex, sat, ssat and report");
}

void print_pattern(const Tensor01& t, const Shared& sh) {
  require_no_csv(sh);
  if (sh.format == "json")
    std::cout << tensor_to_json(t).dump(2) << '\n';
  else
    std::cout << serialize_pattern(t);
}

void print_family(const Family& fam, const Shared& sh) {
  require_no_csv(sh);
  if (sh.format == "json") {
    std::cout << family_to_json(fam).dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) std::cout << "---\n";
    std::cout << serialize_pattern(fam[i]);
  }
}

json embedding_json(const Embedding& e) { return e.maps; }

std::string csv_header() { return "family_hash,function,n,value,witness_weight,nodes,elapsed_ms,exact"; }

std::string csv_row(const ResultRecord& r) {
  std::ostringstream out;
  out << r.family_hash << ',' << r.function << ',' << r.n << ',' << r.value << ',' << r.witness.weight() << ','
      << r.nodes << ',' << r.elapsed_ms << ',' << (r.exact ? "true" : "false");
  return out.str();
}

void print_record(const ResultRecord& r, const Shared& sh) {
  if (sh.format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (sh.format == "csv") {
    std::cout << csv_header() << '\n' << csv_row(r) << '\n';
  } else {
    std::cout << "function: " << r.function << "\nn: " << r.n << "\nvalue: " << r.value
              << "\nexact: " << (r.exact ? "true" : "false") << "\nstatus: " << r.status << "\nnodes: " << r.nodes
              << "\nelapsed_ms: " << r.elapsed_ms << "\nfamily_hash: " << r.family_hash << "\nwitness:\n"
              << serialize_pattern(r.witness);
  }
}

int run_search(const std::string& function, const std::string& path, int n, const Shared& sh) {
  if (n < 1) throw UsageError("n must be positive");
  const Family fam = load_family(path);
  const ResultCache cache(sh.cache_dir);
  const std::string hash = family_hash(fam);
  if (auto hit = cache.load(hash, function, n)) {
    std::cerr << "cache hit: " << hash << '-' << function << '-' << n << '\n';
    print_record(*hit, sh);
    return kOk;
  }
  SearchOutcome o;
  if (function == "ex")
    o = ex_exact(fam, n, sh.limits());
  else if (function == "sat")
    o = sat_exact(fam, n, sh.limits());
  else
    o = ssat_exact(fam, n, sh.limits());
  const ResultRecord rec = make_record(fam, function, n, o);
  cache.store(rec);
  print_record(rec, sh);
  if (!o.exact) {
    std::cerr << function << " aborted: " << rec.status << " (" << o.free_cells << " free cells)\n";
    return kGuardAbort;
  }
  return kOk;
}

json entry_json(const std::optional<EntryRef>& e) {
  if (!e) return nullptr;
  return {{"pattern", e->pattern}, {"entry", std::vector<int>(e->entry.begin(), e->entry.end())}};
}

json face_json(const FaceSpec& f) {
  json fixed = json::array();
  for (int i : f.fixed.dims()) fixed.push_back({{"dim", i + 1}, {"side", f.side(i) == Side::High ? "high" : "low"}});
  return fixed;
}

json property_json(const PropertyResult& p) {
  json faces = json::array();
  for (const auto& [f, e] : p.faces) faces.push_back({{"face", face_json(f)}, {"witness", entry_json(e)}});
  return {{"holds", p.holds}, {"faces", faces}, {"entry", entry_json(p.entry)}};
}

int run_classify(const std::string& path, const Shared& sh) {
  require_no_csv(sh);
  const Family fam = load_family(path);
  const SsatClassification c = ssat_exponent(fam);
  if (sh.format == "json") {
    std::cout << json{{"family_hash", family_hash(fam)},
                      {"exponent", c.exponent},
                      {"failures", c.failures},
                      {"property_i", property_json(c.property_i)},
                      {"property_ii", property_json(c.property_ii)}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "exponent: " << c.exponent << "\n";
  for (std::size_t k = 0; k < c.failures.size(); ++k)
    std::cout << "k=" << k << ": property " << c.failures[k] << " fails\n";
  if (c.property_ii.entry)
    std::cout << "alone entry: pattern " << c.property_ii.entry->pattern + 1 << " at "
              << to_string(c.property_ii.entry->entry) << "\n";
  return kOk;
}

int run_decide(const std::string& path, int depth, const Shared& sh) {
  require_no_csv(sh);
  if (depth < 1) throw UsageError("depth must be positive");
  const Family fam = load_family(path);
  const O1Verdict v = ex_o1_decide(fam, depth);
  if (sh.format == "json") {
    json avoiders = json::array();
    for (const Tensor01& a : v.avoiders) avoiders.push_back(tensor_to_json(a));
    std::cout << json{{"status", to_string(v.status)}, {"n0", v.n0}, {"bound", v.bound.str()},
                      {"avoiders", avoiders}, {"note", v.note}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "status: " << to_string(v.status) << "\n";
    if (v.status == O1Status::BoundedO1) std::cout << "n0: " << v.n0 << "\nbound: " << v.bound.str() << "\n";
    for (std::size_t i = 0; i < v.avoiders.size(); ++i)
      std::cout << "avoider at depth " << i + 1 << ":\n" << serialize_pattern(v.avoiders[i]);
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
  }
  return v.status == O1Status::Aborted ? kGuardAbort : kOk;
}

int run_filters(const std::string& path, const Shared& sh) {
  require_no_csv(sh);
  const Tensor01 p = load_pattern(path);
  const MinNonlinReport r = minnonlin_filters(p);
  std::vector<int> dims(p.dims().begin(), p.dims().end());
  const std::string bound = minnonlin_count_bound(dims).str();
  auto fc = [](const FilterCheck& f) { return json{{"pass", f.pass}, {"detail", f.detail}}; };
  if (sh.format == "json") {
    std::cout << json{{"dims_bound", fc(r.dims_bound)},   {"weight_bound", fc(r.weight_bound)},
                      {"alternation", fc(r.alternation)}, {"end_layers", fc(r.end_layers)},
                      {"all_pass", r.all_pass()},         {"count_bound", bound}}
                     .dump(2)
              << '\n';
  } else {
    auto line = [](const char* name, const FilterCheck& f) {
      std::cout << name << ": " << (f.pass ? "pass" : "fail") << (f.detail.empty() ? "" : " (" + f.detail + ")") << "\n";
    };
    line("dims bound", r.dims_bound);
    line("weight bound", r.weight_bound);
    line("alternation", r.alternation);
    line("end layers", r.end_layers);
    std::cout << "candidate: " << (r.all_pass() ? "yes" : "no") << "\ncount bound: " << bound << "\n";
  }
  return kOk;
}

int run_verify(const std::string& suite, const std::string& report_path, const Shared& sh) {
  if (sh.format == "csv") throw UsageError("verify reports are json or text");
  std::vector<int> ids;
  try {
    ids = suite_criteria(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  VerifyOptions opts;
  opts.workers = sh.workers;
  opts.seed = sh.seed;
  if (sh.max_cells > 0) opts.max_cells = sh.max_cells;
  std::vector<CriterionResult> results;
  json report = {{"suite", suite}, {"schema", kCacheSchema}, {"criteria", json::array()}};
  bool pass = true;
  for (int id : ids) {
    CriterionResult r = run_criterion(id, opts, results);
    pass = pass && r.pass;
    if (sh.format == "text") {
      std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
      for (const std::string& f : r.failures) std::cout << "    failed: " << f << "\n";
    }
    report["criteria"].push_back(to_json(r));
    results.push_back(std::move(r));
  }
  report["pass"] = pass;
  if (sh.format == "json") std::cout << report.dump(2) << '\n';
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << report.dump(2) << '\n';
  }
  return pass ? kOk : kVerifyFailed;
}

int run_report(const Shared& sh) {
  const ResultCache cache(sh.cache_dir);
  if (!cache.enabled()) throw UsageError("report needs --cache-dir or MPAT_CACHE_DIR");
  std::vector<ResultRecord> records;
  if (std::filesystem::is_directory(cache.dir()))
    for (const auto& entry : std::filesystem::directory_iterator(cache.dir())) {
      if (entry.path().extension() != ".json") continue;
      std::ifstream in(entry.path());
      try {
        records.push_back(record_from_json(json::parse(in)));
      } catch (const std::exception& e) {
        std::cerr << "skipping " << entry.path().string() << ": " << e.what() << "\n";
      }
    }
  std::sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
    return std::tie(a.family_hash, a.function, a.n) < std::tie(b.family_hash, b.function, b.n);
  });
  if (sh.format == "json") {
    json all = json::array();
    for (const ResultRecord& r : records) all.push_back(to_json(r));
    std::cout << json{{"schema", kCacheSchema}, {"records", all}}.dump(2) << '\n';
  } else if (sh.format == "csv") {
    std::cout << csv_header() << '\n';
    for (const ResultRecord& r : records) std::cout << csv_row(r) << '\n';
  } else {
    for (const ResultRecord& r : records)
      std::cout << r.family_hash.substr(0, 12) << "  " << r.function << "  n=" << r.n << "  value=" << r.value
                << (r.exact ? "" : " (inexact)") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-pattern workbench for d-dimensional 0-1 matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared sh;
  app.add_option("--max-cells", sh.max_cells, "Free-cell guard for exact search (0 = default)");
  app.add_option("--max-nodes", sh.max_nodes, "Node budget for exact search (0 = unlimited)");
  app.add_option("--workers", sh.workers, "OpenMP threads (0 = runtime default)");
  app.add_option("--cache-dir", sh.cache_dir, "Result cache directory (MPAT_CACHE_DIR overrides)");
  app.add_option("--format", sh.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", sh.seed, "Seed for generated corpora");

  std::function<int()> action;

  std::string host_path, pattern_path, family_path;
  int n = 0;

  auto* c_contains = app.add_subcommand("contains", "Test whether HOST contains PATTERN");
  c_contains->add_option("host", host_path, "Host pattern file")->required();
  c_contains->add_option("pattern", pattern_path, "Pattern file")->required();
  c_contains->callback([&] {
    action = [&] {
      require_no_csv(sh);
      const Tensor01 host = load_pattern(host_path);
      const Tensor01 pat = load_pattern(pattern_path);
      const auto e = contains(host, pat);
      if (sh.format == "json")
        std::cout << json{{"contains", e.has_value()}, {"embedding", e ? embedding_json(*e) : json(nullptr)}}.dump(2)
                  << '\n';
      else {
        std::cout << (e ? "contains" : "avoids") << "\n";
        if (e)
          for (std::size_t i = 0; i < e->maps.size(); ++i) {
            std::cout << "dim " << i + 1 << ":";
            for (int v : e->maps[i]) std::cout << ' ' << v;
            std::cout << "\n";
          }
      }
      return kOk;
    };
  });

  for (const char* fn : {"ex", "sat", "ssat"}) {
    auto* sub = app.add_subcommand(fn, std::string("Exact ") + fn + " value with a witness");
    sub->add_option("family", family_path, "Family JSON or pattern text file")->required();
    sub->add_option("-n,--n", n, "Host side length")->required();
    sub->callback([&, name = std::string(fn)] { action = [&, name] { return run_search(name, family_path, n, sh); }; });
  }

  auto* classify = app.add_subcommand("classify-ssat", "Semisaturation exponent of a family");
  classify->add_option("family", family_path)->required();
  classify->callback([&] { action = [&] { return run_classify(family_path, sh); }; });

  int depth = 4;
  auto* decide = app.add_subcommand("decide-o1", "Decide whether ex is bounded, up to a depth");
  decide->add_option("family", family_path)->required();
  decide->add_option("--depth", depth, "Largest n0 tried")->capture_default_str();
  decide->callback([&] { action = [&] { return run_decide(family_path, depth, sh); }; });

  auto* gen = app.add_subcommand("gen", "Generate explicit matrices and families");
  gen->require_subcommand(1);
  gen->fallthrough();
  int n0 = 2, d = 2, k = 1, r = 1;
  auto* g_id = gen->add_subcommand("identity-equivalents", "Monotone diagonal n0^d matrices");
  g_id->add_option("--n0", n0)->required();
  g_id->add_option("-d,--d", d)->required();
  g_id->callback([&] { action = [&] { print_family(identity_equivalents(n0, d), sh); return kOk; }; });
  auto* g_j = gen->add_subcommand("j-family", "n0^d matrices with n0 pairwise-aligned ones");
  g_j->add_option("--n0", n0)->required();
  g_j->add_option("-d,--d", d)->required();
  g_j->callback([&] {
    action = [&] {
      print_family(Family(j_family(n0, d, sh.max_cells > 0 ? static_cast<std::uint64_t>(sh.max_cells) : 4096)), sh);
      return kOk;
    };
  });
  auto* g_pkr = gen->add_subcommand("pkr", "Family with ex = sat = k n^r");
  g_pkr->add_option("-d,--d", d)->required();
  g_pkr->add_option("-k,--k", k)->required();
  g_pkr->add_option("-r,--r", r)->required();
  g_pkr->callback([&] { action = [&] { print_family(family_pkr(d, k, r), sh); return kOk; }; });
  auto* g_bdr = gen->add_subcommand("bdr", "Corner block with one 0 flipped, every way");
  g_bdr->add_option("-d,--d", d)->required();
  g_bdr->add_option("-r,--r", r)->required();
  g_bdr->callback([&] {
    action = [&] {
      const BdrFamily b = family_bdr(d, r);
      if (sh.format == "json") {
        require_no_csv(sh);
        std::cout << json{{"base", tensor_to_json(b.base)}, {"family", family_to_json(b.fam)}}.dump(2) << '\n';
      } else {
        print_family(b.fam, sh);
      }
      return kOk;
    };
  });
  auto* g_wit = gen->add_subcommand("ssat-witness", "Semisaturated n^d matrix of weight O(n^k)");
  g_wit->add_option("family", family_path)->required();
  g_wit->add_option("-k,--k", k)->required();
  g_wit->add_option("-n,--n", n)->required();
  g_wit->callback([&] { action = [&] { print_pattern(ssat_witness(load_family(family_path), k, n), sh); return kOk; }; });
  auto* g_pat = gen->add_subcommand("ssat-pattern", "Pattern with semisaturation exponent k");
  g_pat->add_option("-d,--d", d)->required();
  g_pat->add_option("-k,--k", k)->required();
  g_pat->callback([&] { action = [&] { print_pattern(ssat_exponent_pattern(d, k).pattern, sh); return kOk; }; });

  auto* tr = app.add_subcommand("transform", "Pattern transformations");
  tr->require_subcommand(1);
  tr->fallthrough();
  int dim = 1, pos = 0, t = 1;
  std::string entry, row;
  auto* t_rep = tr->add_subcommand("replicate", "Duplicate every layer along a dimension");
  t_rep->add_option("pattern", pattern_path)->required();
  t_rep->add_option("--dim", dim)->required();
  t_rep->callback([&] {
    action = [&] {
      const Tensor01 p = load_pattern(pattern_path);
      print_pattern(replicate_dim(p, to_dim(dim, p.rank())), sh);
      return kOk;
    };
  });
  for (const char* name : {"lower", "lift"}) {
    auto* sub = tr->add_subcommand(name, std::string(name) == "lower" ? "Move a last-layer 1 into a new layer below"
                                                                      : "Move a first-layer 1 into a new layer above");
    sub->add_option("pattern", pattern_path)->required();
    sub->add_option("--dim", dim)->required();
    sub->add_option("--entry", entry, "1-based coordinates, e.g. \"2 1\"")->required();
    sub->callback([&, lower = std::string(name) == "lower"] {
      action = [&, lower] {
        const Tensor01 p = load_pattern(pattern_path);
        const int i = to_dim(dim, p.rank());
        const Coord c = parse_coord(entry);
        print_pattern(lower ? lower_entry(p, i, c) : lift_entry(p, i, c), sh);
        return kOk;
      };
    });
  }
  auto* t_ins = tr->add_subcommand("insert-layer", "Insert an empty layer, or t layers holding a single 1");
  t_ins->add_option("pattern", pattern_path)->required();
  t_ins->add_option("--dim", dim)->required();
  t_ins->add_option("--pos", pos, "Number of existing layers before the insertion")->required();
  t_ins->add_option("--row", row, "Coordinates of the 1 in the other dimensions");
  t_ins->add_option("--t", t, "Layers to insert when --row is given")->capture_default_str();
  t_ins->callback([&] {
    action = [&] {
      const Tensor01 p = load_pattern(pattern_path);
      const int i = to_dim(dim, p.rank());
      print_pattern(row.empty() ? insert_empty_layer(p, i, pos) : insert_one_layers(p, i, pos, parse_coord(row), t), sh);
      return kOk;
    };
  });

  auto* filters = app.add_subcommand("filters", "Necessary-condition filters");
  filters->require_subcommand(1);
  filters->fallthrough();
  auto* minnonlin = filters->add_subcommand("minnonlin", "Filters for minimal non-O(n^{d-1}) patterns");
  minnonlin->add_option("pattern", pattern_path)->required();
  minnonlin->callback([&] { action = [&] { return run_filters(pattern_path, sh); }; });

  std::string suite, report_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "exact-values, inequalities, ssat, decisions, determinism or all")->required();
  verify->add_option("--report", report_path, "Also write the JSON report here");
  verify->callback([&] { action = [&] { return run_verify(suite, report_path, sh); }; });

  auto* report = app.add_subcommand("report", "List cached results");
  report->callback([&] { action = [&] { return run_report(sh); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuardAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

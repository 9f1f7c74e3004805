// Command-line front end: construct, verify, sweep and oracle subcommands.
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 infeasible parameters,
// 3 invalid code, 4 budget exceeded or instance too large.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ldic/ldic.hpp"

namespace {

using namespace ldic;

enum Exit { kOk = 0, kIo = 1, kInfeasible = 2, kInvalid = 3, kBudget = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

struct Options {
  std::uint32_t q = 2;
  std::optional<int> n;
  int M = 1;
  std::vector<int> r;
  std::vector<int> pi;
  std::optional<int> pivot;
  std::optional<int> t;
  std::optional<int> ell;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::vector<std::string> providers{"partial-clique", "cycle", "minrank"};
  std::string graph_file;
  std::optional<SideInfoGraph> graph;
};

const SideInfoGraph& need_graph(const Options& o) {
  if (!o.graph) throw Error(Errc::InvalidInput, "this scheme needs a graph file or --n");
  return *o.graph;
}

int need_n(const Options& o) {
  if (o.n) return *o.n;
  if (o.graph) {
    if (!(*o.graph == SideInfoGraph::directed_cycle(o.graph->n())))
      throw Error(Errc::InvalidInput, "graph is not the directed cycle 1 -> 2 -> ... -> N -> 1");
    return o.graph->n();
  }
  throw Error(Errc::InvalidInput, "this scheme needs --n");
}

unsigned provider_bits(const std::vector<std::string>& names) {
  unsigned bits = 0;
  for (const auto& s : names) {
    if (s == "partial-clique") bits |= PartialClique;
    else if (s == "cycle") bits |= CycleCover;
    else if (s == "minrank") bits |= MinrankCover;
    else throw Error(Errc::InvalidInput, "unknown provider '" + s + "'");
  }
  return bits;
}

MinrankFn minrank_callback(const Field& f, std::uint64_t budget) {
  return [f, budget](const SideInfoGraph& h) -> std::optional<std::pair<int, FMatrix>> {
    try {
      auto res = minrank_bruteforce(h, f, {budget, true});
      return std::make_pair(res.rank, res.witness);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };
}

// Fitting matrix of rank --ell (default: the minrank) from the brute-force witness.
FMatrix base_fitting(const SideInfoGraph& g, const Field& f, const Options& o) {
  auto mr = minrank_bruteforce(g, f, {o.budget, true});
  return fitting_matrix_of_rank(g, mr.witness, o.ell.value_or(mr.rank));
}

IndexCode construct_scheme(const std::string& scheme, const Options& o) {
  const Field f = Field::make(o.q);
  if (scheme == "uncoded") return uncoded(need_graph(o), f, o.M);
  if (scheme == "frac-coloring") {
    const auto& g = need_graph(o);
    return fractional_coloring_code(g, optimal_ab_coloring(interference_graph(g)), f);
  }
  if (scheme == "cycle-scalar") {
    const int n = need_n(o);
    return cycle_scalar_code(n, o.pivot.value_or(n), f);
  }
  if (scheme == "cycle-vector") return cycle_vector_code(need_n(o), f);
  if (scheme == "cycle-M") return cycle_code_for_message_length(need_n(o), o.M, f);
  if (scheme == "feasible-localities") {
    if (o.pi.empty() || o.r.empty()) throw Error(Errc::InvalidInput, "feasible-localities needs --pi and --r");
    return feasible_locality_code(o.pi, o.r, f);
  }
  if (scheme == "minrank-nm1") return minrank_nm1_code(need_graph(o), f);
  if (scheme == "ais-cover" || scheme == "t-cover") {
    const auto& g = need_graph(o);
    const auto base = scalar_code_from_fitting(g, base_fitting(g, f, o));
    AISCover cover = scheme == "t-cover" ? t_subset_cover(g, o.t.value_or(1)) : t_subset_cover(g, 1);
    return ais_cover_code(g, cover, base);
  }
  if (scheme == "cyclic-symmetry") {
    const auto& g = need_graph(o);
    auto a = base_fitting(g, f, o);
    return cyclic_symmetry_code(g, a, static_cast<int>(rank(a)));
  }
  if (scheme == "covering-sep") {
    const auto& g = need_graph(o);
    const auto base = scalar_code_from_fitting(g, base_fitting(g, f, o));
    const int radius = o.r.empty() ? 1 : o.r.front();
    return covering_separation_code(g, base, covering_code_for(base.len, radius, f), radius);
  }
  if (scheme == "partition-cover") {
    const auto& g = need_graph(o);
    const int r_max = o.r.empty() ? 2 : o.r.front();
    return partition_cover_code(g, r_max, provider_bits(o.providers), f, minrank_callback(f, o.budget)).code;
  }
  throw Error(Errc::InvalidInput, "unknown scheme '" + scheme + "'");
}

std::string profile_text(const IndexCode& c) {
  const auto p = locality_profile(c);
  std::ostringstream os;
  os << "beta=" << to_string(p.beta) << " r=" << to_string(p.r) << " r_avg=" << to_string(p.r_avg) << " M=" << c.M
     << " len=" << c.len << " q=" << c.field.q() << "\n";
  os << "r_i:";
  for (const auto& v : p.per_receiver) os << ' ' << to_string(v);
  os << "\n";
  if (p.degenerate) os << "note: some receiver reads no symbols\n";
  for (const auto& n : c.notes) os << "note: " << n << "\n";
  return os.str();
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError: return kIo;
    case Errc::BudgetExceeded:
    case Errc::TooLarge: return kBudget;
    case Errc::Undecodable: return kInvalid;
    default: return kInfeasible;
  }
}

std::optional<SideInfoGraph> load_graph(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return parse_graph(read_file(path));
}

int cmd_construct(const std::string& scheme, Options o, const std::string& out) {
  o.graph = load_graph(o.graph_file);
  if (!o.graph && o.n) o.graph = SideInfoGraph::directed_cycle(*o.n);
  const auto code = construct_scheme(scheme, o);
  const std::string text = code_to_json(code).dump() + "\n";
  if (out.empty()) {
    std::cout << text;
    std::cerr << profile_text(code);
  } else {
    write_file(out, text);
    std::cout << profile_text(code);
  }
  return kOk;
}

int cmd_verify(const std::string& graph_file, const std::string& code_file, bool exhaustive) {
  const auto g = parse_graph(read_file(graph_file));
  IndexCode code;
  try {
    code = parse_code(read_file(code_file));
    check_shape(g, code);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    std::cout << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
  const auto rep = validate(g, code);
  if (rep.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid: receiver " << rep.failed_receiver << " cannot decode symbol " << rep.failed_symbol << "\n";
  }
  std::cout << profile_text(code);
  if (!rep.unqueried_columns.empty()) std::cout << "unqueried columns: " << rep.unqueried_columns.size() << "\n";
  const auto sq = single_query_stats(code);
  std::cout << "single-query symbols: " << sq.total_single << " bound: " << to_string(sq.bound) << " "
            << (sq.holds ? "holds" : "VIOLATED") << "\n";
  if (exhaustive) {
    const bool ok = exhaustive_decodability(g, code);
    std::cout << "exhaustive: " << (ok ? "decodable" : "undecodable") << " ("
              << (ok == rep.valid ? "agrees" : "DISAGREES") << ")\n";
  }
  return rep.valid ? kOk : kInvalid;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

int cmd_sweep(Options o, const std::vector<std::string>& schemes, const std::string& grid_text,
              const std::string& out, const std::string& svg) {
  o.graph = load_graph(o.graph_file);
  if (!o.graph && o.n) o.graph = SideInfoGraph::directed_cycle(*o.n);
  const auto& g = need_graph(o);
  const bool is_cycle = g.n() >= 3 && g == SideInfoGraph::directed_cycle(g.n());

  std::vector<LabeledCode> codes;
  for (const auto& s : schemes) {
    if (s.rfind("cycle-", 0) == 0 && !is_cycle) {
      std::cerr << "skip " << s << ": graph is not a directed cycle\n";
      continue;
    }
    try {
      if (s == "partition-cover") {
        for (int r = 1; r <= std::min(g.n(), 4); ++r) {
          Options ro = o;
          ro.r = {r};
          codes.push_back({s + "@" + std::to_string(r), construct_scheme(s, ro)});
        }
      } else {
        codes.push_back({s, construct_scheme(s, o)});
      }
    } catch (const Error& e) {
      if (exit_code_for(e) == kBudget || e.code() == Errc::InvalidInput) throw;
      std::cerr << "skip " << s << ": " << e.what() << "\n";
    }
  }

  std::vector<Rational> grid;
  if (!grid_text.empty()) {
    grid = parse_grid(grid_text);
  } else {
    for (int k = 0; k <= 12; ++k) grid.emplace_back(12 + k, 12);
    for (const auto& lc : codes) {
      const auto r = locality_profile(lc.code).r;
      if (r <= 2) grid.push_back(r);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }

  const auto id = o.graph_file.empty() ? "cycle" + std::to_string(g.n())
                                       : std::filesystem::path(o.graph_file).stem().string();
  const auto res = sweep(g, codes, grid, id);
  const auto csv = to_csv(res);
  if (out.empty()) std::cout << csv;
  else write_file(out, csv);
  if (!svg.empty()) write_file(svg, to_svg(res));
  return kOk;
}

int cmd_oracle(const std::string& which, const std::string& file, const Options& o) {
  const Field f = Field::make(o.q);
  const auto j = detail::parse_json(read_file(file));
  if (which == "minrank") {
    const auto g = graph_from_json(j);
    const auto res = minrank_bruteforce(g, f, {o.budget, true});
    std::cout << "minrank=" << res.rank << "\n";
    std::cout << "provenance: exhaustive search over fitting matrices over " << f.name() << ", " << res.examined
              << " examined\n";
    return kOk;
  }
  if (which == "chif" || which == "chromatic") {
    const auto h = j.contains("edges") ? undirected_from_json(j) : interference_graph(graph_from_json(j));
    if (which == "chif") {
      std::cout << "chif=" << to_string(fractional_chromatic(h)) << "\n";
      std::cout << "provenance: exact LP over maximal independent sets\n";
    } else {
      std::cout << "chromatic=" << chromatic_number(h) << "\n";
      std::cout << "provenance: backtracking colouring search\n";
    }
    return kOk;
  }
  if (which == "covering-radius") {
    const auto h = matrix_from_json(j);
    const auto rho = covering_radius(h);
    std::cout << "covering-radius=" << (rho ? std::to_string(*rho) : std::string("inf")) << "\n";
    std::cout << "provenance: syndrome breadth-first search\n";
    return kOk;
  }
  if (which == "max-acyclic") {
    std::cout << "max-acyclic=" << max_acyclic_induced_subgraph(graph_from_json(j)) << "\n";
    std::cout << "provenance: exhaustive subset search\n";
    return kOk;
  }
  if (which == "codim-one") {
    const auto g = graph_from_json(j);
    const auto res = min_total_queries_codim_one(g, f, o.budget);
    std::cout << "total-queries=" << res.total_queries << "\n";
    std::cout << "r_avg=" << to_string(Rational(res.total_queries, g.n())) << "\n";
    std::cout << "provenance: exhaustive search over length N-1 encoders over " << f.name() << ", "
              << res.bases_examined << " bases examined\n";
    return kOk;
  }
  throw Error(Errc::InvalidInput, "unknown oracle '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally decodable index codes: constructions, verification and trade-off sweeps"};
  app.require_subcommand(1);
  Options o;
  std::string out, svg, code_file, which, scheme, grid;
  bool exhaustive = false;
  std::vector<std::string> schemes{"uncoded", "frac-coloring", "cycle-vector", "minrank-nm1", "partition-cover"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "field size (prime power)");
    sub->add_option("--budget", o.budget, "work budget for brute-force oracles");
  };

  auto* construct = app.add_subcommand("construct", "build a code and print it as JSON");
  construct->add_option("scheme", scheme, "scheme name")->required();
  construct->add_option("graph", o.graph_file, "side-information graph JSON")->check(CLI::ExistingFile);
  add_common(construct);
  construct->add_option("--n", o.n, "directed cycle length");
  construct->add_option("--M", o.M, "message length");
  construct->add_option("--r", o.r, "locality (list for feasible-localities)")->delimiter(',');
  construct->add_option("--pi", o.pi, "permutation for feasible-localities")->delimiter(',');
  construct->add_option("--pivot", o.pivot, "cycle-scalar pivot receiver");
  construct->add_option("--t", o.t, "subset size for t-cover");
  construct->add_option("--ell", o.ell, "length of the base scalar code");
  construct->add_option("--providers", o.providers, "partition-cover providers")->delimiter(',');
  construct->add_option("--out", out, "write the code JSON here");

  auto* verify = app.add_subcommand("verify", "check a code against a graph");
  verify->add_option("graph", o.graph_file, "side-information graph JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("code", code_file, "code JSON")->required()->check(CLI::ExistingFile);
  verify->add_flag("--exhaustive", exhaustive, "also run the exhaustive decodability oracle");

  auto* sw = app.add_subcommand("sweep", "trade-off between rate and locality as CSV");
  sw->add_option("graph", o.graph_file, "side-information graph JSON")->check(CLI::ExistingFile);
  add_common(sw);
  sw->add_option("--n", o.n, "directed cycle length (instead of a graph file)");
  sw->add_option("--schemes", schemes, "schemes to include")->delimiter(',');
  sw->add_option("--grid", grid, "comma-separated localities, e.g. 1,7/6,4/3");
  sw->add_option("--ell", o.ell, "length of the base scalar code");
  sw->add_option("--providers", o.providers, "partition-cover providers")->delimiter(',');
  sw->add_option("--out", out, "write the CSV here");
  sw->add_option("--svg", svg, "also write an SVG plot here");

  auto* oracle = app.add_subcommand("oracle", "exact reference values");
  oracle->add_option("which", which, "minrank | chif | chromatic | covering-radius | max-acyclic | codim-one")
      ->required();
  oracle->add_option("file", o.graph_file, "graph or matrix JSON")->required()->check(CLI::ExistingFile);
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kIo;
  }

  try {
    if (*construct) return cmd_construct(scheme, o, out);
    if (*verify) return cmd_verify(o.graph_file, code_file, exhaustive);
    if (*sw) {
      // An explicitly empty --schemes "" yields a reference-only sweep.
      if (schemes.size() == 1 && schemes.front().empty()) schemes.clear();
      return cmd_sweep(o, schemes, grid, out, svg);
    }
    if (*oracle) return cmd_oracle(which, o.graph_file, o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}

#include "starsys/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "starsys/colouring.hpp"
#include "starsys/constructions.hpp"
#include "starsys/format.hpp"
#include "starsys/graph.hpp"
#include "starsys/search.hpp"

namespace starsys::cli {

namespace {

// A failure that maps to an exit code and one stderr line.
struct cli_failure {
  int code;
  std::string kind;
  std::string message;
};

std::string quoted(const std::string& s) {
  std::ostringstream os;
  os << std::quoted(s);
  return os.str();
}

void require_order(int n, int e) {
  if (e < 3) throw cli_failure{usage, "usage", "e must be at least 3"};
  if (n < 1) throw cli_failure{usage, "usage", "n must be positive"};
}

void require_admissible(int n, int e) {
  require_order(n, e);
  if (!is_admissible(n, e))
    throw cli_failure{unsupported, "inadmissible",
                      "order " + std::to_string(n) + " is not admissible for " + std::to_string(e) + "-stars"};
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& ex) {
    throw cli_failure{usage, "io", ex.what()};
  }
}

void store(const std::string& path, std::string_view text) {
  try {
    write_file(path, text);
  } catch (const std::exception& ex) {
    throw cli_failure{usage, "io", ex.what()};
  }
}

budget seconds(double s) {
  if (s <= 0) return std::nullopt;
  return std::chrono::duration<double>(s);
}

// Unlimited up to 40 blocks, one minute above, unless given explicitly.
budget default_budget(std::optional<double> given, std::size_t blocks) {
  if (given) return seconds(*given);
  if (blocks <= 40) return std::nullopt;
  return std::chrono::duration<double>(60.0);
}

struct options {
  int n = 0;
  int e = 0;
  std::string file;
  std::string output;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 0;
  std::optional<double> budget_s;
  std::string cyclic;
  std::string json;
  std::string input;
  std::string witness;
  std::string dimacs;
  bool sample = false;
  bool orbits = false;
  bool graph = false;
  bool reproducible = false;
  unsigned threads = 0;

  unsigned workers() const {
    if (reproducible) return 1;
    if (threads) return threads;
    return std::max(1U, std::thread::hardware_concurrency());
  }
};

void print_system_report(std::ostream& out, const system_report& r, const star_system& s,
                         std::optional<std::size_t> index) {
  if (index) out << "index=" << *index << ' ';
  if (r.valid) {
    out << "status=VALID kind=system n=" << s.n << " e=" << s.e << " blocks=" << s.blocks.size() << '\n';
    return;
  }
  out << "status=INVALID kind=system defect=" << to_string(r.kind);
  if (r.block) out << " block=" << *r.block + 1;
  if (r.duplicate) out << " duplicate=" << r.duplicate->u << '-' << r.duplicate->v;
  if (r.missing) out << " missing=" << r.missing->u << '-' << r.missing->v;
  out << " message=" << quoted(r.message) << '\n';
}

int do_bound(const options& o, std::ostream& out) {
  require_order(o.n, o.e);
  if (!is_admissible(o.n, o.e)) {
    out << "admissible=no\n";
    throw cli_failure{unsupported, "inadmissible",
                      "order " + std::to_string(o.n) + " is not admissible for " + std::to_string(o.e) + "-stars"};
  }
  out << "L=" << lower_bound(o.n, o.e) << " blocks=" << block_count(o.n, o.e) << " admissible=yes\n";
  return ok;
}

int do_check(const options& o, std::ostream& out) {
  const std::string text = load(o.file);
  if (looks_coloured(text)) {
    const auto c = parse_cstar(text);
    const auto r = verify_colouring(c);
    if (r.valid) {
      out << "status=VALID kind=colouring n=" << c.system.n << " e=" << c.system.e
          << " blocks=" << c.system.blocks.size() << " classes=" << c.classes.size() << '\n';
      return ok;
    }
    out << "status=INVALID kind=colouring defect=" << to_string(r.kind);
    if (r.colour) out << " class=" << c.classes[*r.colour].label;
    if (r.first_block) out << " first_block=" << *r.first_block + 1;
    if (r.second_block) out << " second_block=" << *r.second_block + 1;
    out << " message=" << quoted(r.message) << '\n';
    return invalid;
  }
  const auto systems = parse_star_stream(text);
  if (systems.empty()) throw cli_failure{usage, "parse", "no system in " + o.file};
  bool all = true;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto r = verify_system(systems[i]);
    all = all && r.valid;
    print_system_report(out, r, systems[i], systems.size() > 1 ? std::optional(i + 1) : std::nullopt);
  }
  return all ? ok : invalid;
}

int do_construct(const options& o, std::ostream& out) {
  require_order(o.n, o.e);
  construction_plan plan;
  coloured_star_system c;
  try {
    plan = plan_construction(o.n, o.e);
    c = construct(o.n, o.e);
  } catch (const construction_error& ex) {
    const bool bad = ex.reason() == construction_error::kind::inadmissible;
    throw cli_failure{unsupported, bad ? "inadmissible" : "unsupported_class", ex.what()};
  }
  std::ostringstream summary;
  summary << "family=" << plan.family << " t=" << plan.t << " n=" << o.n << " e=" << o.e
          << " blocks=" << c.system.blocks.size() << " classes=" << c.classes.size()
          << " lower_bound=" << lower_bound(o.n, o.e);
  if (o.output.empty()) {
    out << "# " << summary.str() << '\n' << to_cstar(c);
  } else {
    store(o.output, "# " + summary.str() + "\n" + to_cstar(c));
    out << summary.str() << '\n';
  }
  return ok;
}

void print_chi(std::ostream& out, const chromatic_result& r, std::optional<std::size_t> index) {
  if (index) out << "index=" << *index << ' ';
  if (r.exact())
    out << "chi=" << r.chi << " status=exact";
  else
    out << "status=timeout lower=" << r.lower << " upper=" << r.upper;
  out << " nodes=" << r.nodes << '\n';
}

int do_chi(const options& o, std::ostream& out) {
  const std::string text = load(o.file);
  if (o.graph) {
    const auto g = parse_dimacs(text);
    const auto r = exact_chromatic_number(g, default_budget(o.budget_s, static_cast<std::size_t>(g.vertex_count())));
    print_chi(out, r, std::nullopt);
    return r.exact() ? ok : timeout;
  }
  std::vector<star_system> systems;
  if (looks_coloured(text))
    systems.push_back(parse_cstar(text).system);
  else
    systems = parse_star_stream(text);
  if (systems.empty()) throw cli_failure{usage, "parse", "no system in " + o.file};
  if (!o.witness.empty() && systems.size() > 1)
    throw cli_failure{usage, "usage", "--witness needs a file holding one system"};

  bool all_exact = true;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (auto v = verify_system(systems[i]); !v) {
      print_system_report(out, v, systems[i], systems.size() > 1 ? std::optional(i + 1) : std::nullopt);
      return invalid;
    }
    const auto r = chromatic_index(systems[i], default_budget(o.budget_s, systems[i].blocks.size()));
    print_chi(out, r, systems.size() > 1 ? std::optional(i + 1) : std::nullopt);
    all_exact = all_exact && r.exact();
    if (!o.witness.empty()) store(o.witness, to_cstar(to_coloured(systems[i], r.witness)));
  }
  return all_exact ? ok : timeout;
}

// Feeds the systems selected by the options to `sink`; returns the count.
std::size_t produce(const options& o, const system_sink& sink, std::string& mode, bool& complete) {
  complete = true;
  if (!o.input.empty()) {
    mode = "input";
    std::size_t count = 0;
    for (const auto& s : parse_star_stream(load(o.input))) {
      if (s.n != o.n || s.e != o.e)
        throw cli_failure{usage, "usage", "input systems do not have n=" + std::to_string(o.n) +
                                              " e=" + std::to_string(o.e)};
      if (auto r = verify_system(s); !r) throw cli_failure{invalid, "invalid", r.message};
      if (o.limit && count >= *o.limit) {
        complete = false;
        break;
      }
      ++count;
      if (!sink(s)) break;
    }
    return count;
  }
  require_admissible(o.n, o.e);
  if (o.sample) {
    mode = "sample";
    const std::size_t count = o.limit.value_or(1);
    for (std::size_t i = 0; i < count; ++i)
      if (!sink(sample_system(o.n, o.e, o.seed + i))) return i + 1;
    return count;
  }
  if (o.orbits) {
    mode = "orbits";
    if (block_count(o.n, o.e) > 16)
      throw cli_failure{usage, "usage", "--orbits is limited to systems of at most 16 blocks"};
    std::size_t count = 0;
    const auto r = orbit_representatives(o.n, o.e, std::nullopt, [&](const star_system& s) {
      ++count;
      return sink(s) && !(o.limit && count >= *o.limit);
    });
    complete = r.complete && !(o.limit && count >= *o.limit);
    return count;
  }
  search_options so;
  so.limit = o.limit;
  so.seed = o.seed;
  so.threads = o.workers();
  if (!o.cyclic.empty()) {
    mode = "cyclic";
    permutation sigma;
    try {
      sigma = parse_cycles(o.cyclic, o.n);
    } catch (const std::invalid_argument& ex) {
      throw cli_failure{usage, "usage", ex.what()};
    }
    bool identity = true;
    for (int i = 0; i < o.n; ++i) identity = identity && sigma[static_cast<std::size_t>(i)] == i + 1;
    if (identity) throw cli_failure{usage, "usage", "--cyclic is the identity; omit it to enumerate every system"};
    const auto count = enumerate_invariant_systems(o.n, o.e, sigma, so, sink);
    complete = !(o.limit && count >= *o.limit);
    return count;
  }
  mode = "enumerate";
  const auto count = enumerate_systems(o.n, o.e, so, sink);
  complete = !(o.limit && count >= *o.limit);
  return count;
}

int do_search(const options& o, std::ostream& out, std::ostream& err) {
  std::string mode;
  bool complete = true;
  std::size_t written = 0;
  if (!o.output.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.output, ec);
    if (ec) throw cli_failure{usage, "io", "cannot create " + o.output + ": " + ec.message()};
  }
  const std::size_t count = produce(
      o,
      [&](const star_system& s) {
        ++written;
        if (o.output.empty()) {
          if (written > 1) out << "---\n";
          out << to_star(s);
        } else {
          std::ostringstream name;
          name << "system_" << std::setw(6) << std::setfill('0') << written << ".star";
          store((std::filesystem::path(o.output) / name.str()).string(), to_star(s));
        }
        return true;
      },
      mode, complete);
  std::ostream& summary = o.output.empty() ? err : out;
  summary << "systems=" << count << " mode=" << mode << " complete=" << (complete ? "yes" : "no") << '\n';
  return ok;
}

int do_census(const options& o, std::ostream& out) {
  std::string mode;
  bool complete = true;
  std::vector<star_system> systems;
  const auto start = std::chrono::steady_clock::now();
  produce(
      o,
      [&](const star_system& s) {
        systems.push_back(s);
        return true;
      },
      mode, complete);
  auto report = census(systems, default_budget(o.budget_s, static_cast<std::size_t>(block_count(o.n, o.e))),
                       o.workers());
  report.n = o.n;
  report.e = o.e;
  report.mode = mode;
  report.seed = o.seed;
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << to_text(report);
  if (!o.json.empty()) store(o.json, to_json(report));
  return ok;
}

int do_big(const options& o, std::ostream& out) {
  const std::string text = load(o.file);
  const star_system sys = looks_coloured(text) ? parse_cstar(text).system : parse_star(text);
  if (auto r = verify_system(sys); !r) {
    print_system_report(out, r, sys, std::nullopt);
    return invalid;
  }
  const auto g = block_intersection_graph(sys);
  const std::string dimacs =
      to_dimacs(g, "block-intersection graph, n=" + std::to_string(sys.n) + " e=" + std::to_string(sys.e));
  if (o.dimacs.empty()) {
    out << dimacs;
  } else {
    store(o.dimacs, dimacs);
    out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, colour and enumerate e-star systems", "starsys"};
  app.require_subcommand(1);
  options o;
  unsigned long long limit = 0;
  double budget_s = 0;

  auto add_threads = [&](CLI::App* sc) {
    sc->add_option("--threads", o.threads, "Worker threads (default: all cores)");
    sc->add_flag("--reproducible", o.reproducible, "Single-threaded, fully deterministic");
  };

  auto* bound = app.add_subcommand("bound", "Print L(n,e), the block count and admissibility");
  bound->add_option("n", o.n)->required();
  bound->add_option("e", o.e)->required();

  auto* check = app.add_subcommand("check", "Verify a .star or .cstar file");
  check->add_option("file", o.file)->required();

  auto* cons = app.add_subcommand("construct", "Build a coloured system by the dispatcher");
  cons->add_option("n", o.n)->required();
  cons->add_option("e", o.e)->required();
  cons->add_option("-o,--output", o.output, "Write the .cstar here instead of stdout");

  auto* chi = app.add_subcommand("chi", "Exact chromatic index of each system in a file");
  chi->add_option("file", o.file)->required();
  auto* chi_budget = chi->add_option("--budget", budget_s, "Wall-clock seconds per system (0 = unlimited)");
  chi->add_option("--witness", o.witness, "Write an optimal colouring as .cstar");
  chi->add_flag("--graph", o.graph, "Input is a DIMACS graph");

  auto* search = app.add_subcommand("search", "Enumerate or sample systems");
  search->add_option("n", o.n)->required();
  search->add_option("e", o.e)->required();
  auto* search_limit = search->add_option("--limit", limit, "Stop after this many systems");
  search->add_option("--seed", o.seed, "Branching order (0 = natural) or first sample seed");
  search->add_option("--cyclic", o.cyclic, "Only systems fixed by this permutation, e.g. (1,2,3)");
  search->add_flag("--sample", o.sample, "Randomized samples with seeds seed, seed+1, ...");
  search->add_flag("--orbits", o.orbits, "One canonical system per isomorphism class");
  search->add_option("-o,--output", o.output, "Directory for one .star file per system");
  add_threads(search);

  auto* cen = app.add_subcommand("census", "Chromatic-index histogram");
  cen->add_option("n", o.n)->required();
  cen->add_option("e", o.e)->required();
  auto* census_limit = cen->add_option("--limit", limit, "Stop after this many systems");
  cen->add_option("--seed", o.seed, "Branching order (0 = natural) or first sample seed");
  auto* census_budget = cen->add_option("--budget", budget_s, "Wall-clock seconds per system (0 = unlimited)");
  cen->add_option("--json", o.json, "Also write the JSON report here");
  cen->add_option("--input", o.input, "Take the systems from this .star stream");
  cen->add_option("--cyclic", o.cyclic, "Only systems fixed by this permutation");
  cen->add_flag("--sample", o.sample, "Randomized samples instead of enumeration");
  cen->add_flag("--orbits", o.orbits, "One system per isomorphism class");
  add_threads(cen);

  auto* big = app.add_subcommand("big", "Export the block-intersection graph");
  big->add_option("file", o.file)->required();
  big->add_option("--dimacs", o.dimacs, "Write DIMACS here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& ex) {
    err << "error=usage message=" << quoted(ex.what()) << '\n';
    return usage;
  }
  if (*search_limit || *census_limit) o.limit = static_cast<std::size_t>(limit);
  if (*chi_budget || *census_budget) o.budget_s = budget_s;

  try {
    if (*bound) return do_bound(o, out);
    if (*check) return do_check(o, out);
    if (*cons) return do_construct(o, out);
    if (*chi) return do_chi(o, out);
    if (*search) return do_search(o, out, err);
    if (*cen) return do_census(o, out);
    return do_big(o, out);
  } catch (const cli_failure& f) {
    err << "error=" << f.kind << " message=" << quoted(f.message) << '\n';
    return f.code;
  } catch (const parse_error& ex) {
    err << "error=parse line=" << ex.line() << " message=" << quoted(ex.what()) << '\n';
    return usage;
  } catch (const std::invalid_argument& ex) {
    err << "error=usage message=" << quoted(ex.what()) << '\n';
    return usage;
  } catch (const std::exception& ex) {
    err << "error=internal message=" << quoted(ex.what()) << '\n';
    return usage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace starsys::cli

// tabdyn command-line interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tabdyn/acceptance.hpp"
#include "tabdyn/corner_growth.hpp"
#include "tabdyn/error.hpp"
#include "tabdyn/experiments.hpp"
#include "tabdyn/io.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/laws.hpp"
#include "tabdyn/particles.hpp"
#include "tabdyn/plancherel.hpp"

using namespace tabdyn;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Output stream selected by --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw Error(Errc::IoError, "write to " + (path.empty() ? "stdout" : path) + " failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string num(double x) { return format_number(x); }

Metadata meta(const std::string& command, const RunConfig& c,
              std::vector<std::pair<std::string, std::string>> params) {
  return {command, c.seed, std::move(params)};
}

int cmd_growth(const RunConfig& c) {
  if (c.n < 0) throw Error(Errc::DomainError, "--n must be >= 0");
  if (c.sampler != "rsk" && c.sampler != "markov")
    throw Error(Errc::Usage, "--sampler must be rsk or markov");
  Rng rng(c.seed, 0);
  const auto trace = c.sampler == "rsk" ? sample_growth_rsk(c.n, rng) : sample_growth_markov(c.n, rng);
  Output out(c.out);
  TableWriter w(out.stream(), c.format,
                meta("growth", c, {{"n", std::to_string(c.n)}, {"sampler", c.sampler}}),
                {"step", "i", "j"});
  for (std::size_t k = 0; k < trace.boxes.size(); ++k)
    w.row({double(k + 1), double(trace.boxes[k].i), double(trace.boxes[k].j)});
  out.finish(c.out);
  return 0;
}

int cmd_jdt_path(const RunConfig& c) {
  if (c.n < 1) throw Error(Errc::DomainError, "--n must be >= 1");
  Missing mode;
  if (c.mode == "undetermined") mode = Missing::Undetermined;
  else if (c.mode == "infinity") mode = Missing::Infinity;
  else throw Error(Errc::Usage, "--mode must be undetermined or infinity");
  Rng rng(c.seed, 0);
  const auto t = sample_growth_rsk(c.n, rng).tableau();
  const auto path = infinite_path_prefix(t, mode);
  Output out(c.out);
  TableWriter w(out.stream(), c.format,
                meta("jdt-path", c,
                     {{"n", std::to_string(c.n)},
                      {"mode", c.mode},
                      {"undetermined_tail", path.undetermined_tail ? "true" : "false"}}),
                {"k", "i", "j"});
  for (std::size_t k = 0; k < path.boxes.size(); ++k)
    w.row({double(k), double(path.boxes[k].i), double(path.boxes[k].j)});
  out.finish(c.out);
  return 0;
}

int cmd_second_class(const RunConfig& c) {
  if (c.n < 1) throw Error(Errc::DomainError, "--n must be >= 1");
  Rng rng(c.seed, 0);
  // X(0..n) needs q_1..q_{n+1}
  const auto traj = second_class_from_growth(sample_growth_rsk(c.n + 1, rng));
  Output out(c.out);
  TableWriter w(out.stream(), c.format, meta("second-class", c, {{"n", std::to_string(c.n)}}),
                {"n", "X", "v"});
  for (std::size_t k = 0; k < traj.x.size(); ++k)
    w.row({double(k), double(traj.x[k]), double(traj.v[k])});
  out.finish(c.out);
  return 0;
}

int cmd_corner_growth(const RunConfig& c) {
  if (c.m < 1) throw Error(Errc::DomainError, "--m must be >= 1");
  Rng rng(c.seed, 0);
  const CornerGrowthRun run(c.m, rng);
  Output out(c.out);
  TableWriter w(out.stream(), c.format,
                meta("corner-growth", c,
                     {{"m", std::to_string(c.m)},
                      {"horizon", num(run.horizon())},
                      {"color_codes", "0=none,1=red,2=green"}}),
                {"i", "j", "G", "color"});
  for (const Box b : run.growth_order())
    w.row({double(b.i), double(b.j), run.grid().G(b.i, b.j),
           double(static_cast<int>(run.grid().colour(b.i, b.j)))});
  out.finish(c.out);
  return 0;
}

int cmd_interface(const RunConfig& c) {
  if (c.steps < 0) throw Error(Errc::DomainError, "--steps must be >= 0");
  Rng rng(c.seed, 0);
  LastPassageGrid grid(rng);
  const auto path = follow_interface(grid, c.steps);
  Output out(c.out);
  TableWriter w(out.stream(), c.format,
                meta("interface", c,
                     {{"steps", std::to_string(c.steps)},
                      {"angle", num(box_angle(path.back()))}}),
                {"k", "i", "j", "G"});
  for (std::size_t k = 0; k < path.size(); ++k)
    w.row({double(k), double(path[k].i), double(path[k].j), grid.G(path[k].i, path[k].j)});
  out.finish(c.out);
  return 0;
}

int cmd_pieri(const RunConfig& c) {
  const int k = c.k > 0 ? c.k : default_pieri_k(c.n);
  const auto rep = experiment_pieri(c.n, k, {c.trials, c.seed, c.jobs});
  Output out(c.out);
  write_report(rep, out.stream(), c.format);
  out.finish(c.out);
  return 0;
}

int cmd_invert(const RunConfig& c) {
  const auto rep = experiment_inverse_rsk(c.n, c.depth, {c.trials, c.seed, c.jobs});
  Output out(c.out);
  write_report(rep, out.stream(), c.format);
  out.finish(c.out);
  return 0;
}

int cmd_law(const RunConfig& c) {
  const auto law = law_by_name(c.name);
  if (!law) {
    std::string names;
    for (const auto& n : law_names()) names += (names.empty() ? "" : ", ") + n;
    throw Error(Errc::Usage, "--name must be one of " + names);
  }
  if (c.grid < 2) throw Error(Errc::DomainError, "--grid must be >= 2");
  const bool shape = law->name == "omega_star";
  Output out(c.out);
  TableWriter w(out.stream(), c.format,
                meta("law", c, {{"name", law->name}, {"grid", std::to_string(c.grid)}}),
                shape ? std::vector<std::string>{"x", "omega", "slope"}
                      : std::vector<std::string>{"x", "cdf", "density"});
  for (int k = 0; k < c.grid; ++k) {
    const double x =
        k + 1 == c.grid ? law->hi : law->lo + (law->hi - law->lo) * k / double(c.grid - 1);
    w.row({x, law->cdf(x), law->density(x)});
  }
  out.finish(c.out);
  return 0;
}

int cmd_verify(const RunConfig& c) {
  AcceptanceOptions o;
  o.suite = parse_suite(c.suite);
  o.scale = parse_scale(c.scale);
  o.seed = c.seed;
  o.jobs = c.jobs;
  int failed = 0;
  o.on_result = [&](const CriterionResult& r) {
    std::printf("%s\n", format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  };
  const auto results = run_acceptance(o);
  std::printf("%zu/%zu criteria passed (seed %llu, scale %s)\n", results.size() - failed,
              results.size(), static_cast<unsigned long long>(c.seed), c.scale.c_str());
  if (!c.out.empty()) {
    nlohmann::ordered_json j;
    j["seed"] = c.seed;
    j["suite"] = c.suite;
    j["scale"] = c.scale;
    j["version"] = constants::kVersion;
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json e;
      e["id"] = r.id;
      e["title"] = r.title;
      e["exact"] = r.exact;
      e["pass"] = r.pass;
      e["detail"] = r.detail;
      e["seconds"] = r.seconds;
      e["experiments"] = nlohmann::ordered_json::array();
      for (const auto& rep : r.reports) {
        nlohmann::ordered_json x;
        x["name"] = rep.name;
        x["n"] = rep.n;
        x["trials"] = rep.trials;
        x["statistic_name"] = rep.statistic_name;
        x["statistic"] = rep.statistic;
        x["threshold"] = rep.threshold;
        for (const auto& [k, v] : rep.extras) x["extras"][k] = v;
        e["experiments"].push_back(x);
      }
      j["criteria"].push_back(e);
    }
    Output out(c.out);
    out.stream() << j.dump(2) << '\n';
    out.finish(c.out);
  }
  return failed == 0 ? 0 : kExitFailed;
}

// --config is read before the flags so that flags override it.
RunConfig initial_config(int argc, char** argv) {
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--config" && a + 1 < argc) return read_config(argv[a + 1]);
    if (arg.rfind("--config=", 0) == 0) return read_config(arg.substr(9));
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tabdyn: Plancherel growth, RSK and jeu de taquin dynamics"};
  app.require_subcommand(1);
  RunConfig c;
  std::string config_path;
  std::string format = "csv";
  try {
    c = initial_config(argc, argv);
  } catch (const Error& e) {
    std::fprintf(stderr, "tabdyn: %s\n", e.what());
    return kExitUsage;
  }
  format = std::string(format_name(c.format));
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);

  const auto common = [&](CLI::App* s, bool trials) {
    s->add_option("--seed", c.seed, "master seed")->capture_default_str();
    s->add_option("--out", c.out, "output path (default: standard output)");
    s->add_option("--format", format, "csv | jsonl")->capture_default_str();
    if (trials) {
      s->add_option("--trials", c.trials, "number of trials")->capture_default_str();
      s->add_option("--jobs", c.jobs, "trial-parallel threads (0 = all cores)")->capture_default_str();
    }
  };

  auto* growth = app.add_subcommand("growth", "Plancherel growth trace (step,i,j)");
  growth->add_option("--n", c.n, "number of boxes")->capture_default_str();
  growth->add_option("--sampler", c.sampler, "rsk | markov")->capture_default_str();
  common(growth, false);

  auto* jdt = app.add_subcommand("jdt-path", "jeu de taquin path of a Plancherel tableau");
  jdt->add_option("--n", c.n, "tableau size")->capture_default_str();
  jdt->add_option("--mode", c.mode, "undetermined | infinity")->capture_default_str();
  common(jdt, false);

  auto* sc = app.add_subcommand("second-class", "second-class particle trajectory (n,X,v)");
  sc->add_option("--n", c.n, "number of steps")->capture_default_str();
  common(sc, false);

  auto* cg = app.add_subcommand("corner-growth", "corner growth run on an m x m box (i,j,G,color)");
  cg->add_option("--m", c.m, "box side")->capture_default_str();
  common(cg, false);

  auto* iface = app.add_subcommand("interface", "competition interface (k,i,j,G)");
  iface->add_option("--steps", c.steps, "interface steps")->capture_default_str();
  common(iface, false);

  auto* pieri = app.add_subcommand("pieri", "Pieri growth (trial,n,k,u_scaled)");
  pieri->add_option("--n", c.n, "Plancherel size")->capture_default_str();
  pieri->add_option("--k", c.k, "strip length (0 = ceil(n^(1/4)))")->capture_default_str();
  common(pieri, true);

  auto* law = app.add_subcommand("law", "tabulate a limit law (x,cdf,density)");
  law->add_option("--name", c.name, "omega_star | semicircle | theta | phi | uniform")->required();
  law->add_option("--grid", c.grid, "grid points over the support")->capture_default_str();
  common(law, false);

  auto* invert = app.add_subcommand("invert", "recover inputs from the recording tableau");
  invert->add_option("--n", c.n, "input length")->capture_default_str();
  invert->add_option("--depth", c.depth, "inputs to recover")->capture_default_str();
  common(invert, true);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", c.suite, "exact | mc | all")->capture_default_str();
  verify->add_option("--scale", c.scale, "small | full")->capture_default_str();
  verify->add_option("--seed", c.seed, "master seed")->capture_default_str();
  verify->add_option("--jobs", c.jobs, "trial-parallel threads (0 = all cores)")->capture_default_str();
  verify->add_option("--out", c.out, "JSON report path");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "tabdyn: %s\n\n%s", e.what(), app.help().c_str());
    return kExitUsage;
  }

  try {
    c.format = parse_format(format);
    if (growth->parsed()) return cmd_growth(c);
    if (jdt->parsed()) return cmd_jdt_path(c);
    if (sc->parsed()) return cmd_second_class(c);
    if (cg->parsed()) return cmd_corner_growth(c);
    if (iface->parsed()) return cmd_interface(c);
    if (pieri->parsed()) return cmd_pieri(c);
    if (law->parsed()) return cmd_law(c);
    if (invert->parsed()) return cmd_invert(c);
    if (verify->parsed()) return cmd_verify(c);
  } catch (const Error& e) {
    std::fprintf(stderr, "tabdyn: %s\n", e.what());
    if (e.code() == Errc::Usage || e.code() == Errc::DomainError)
      std::fprintf(stderr, "\n%s", app.help().c_str());
    return kExitUsage;
  }
  return kExitUsage;
}

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/cohomology.hpp"
#include "blowup/divisor.hpp"
#include "blowup/fan.hpp"
#include "blowup/forbidden.hpp"
#include "blowup/graph.hpp"
#include "blowup/lemmas.hpp"
#include "blowup/report.hpp"

using namespace blowup;
using nlohmann::json;

namespace {

constexpr int kFailed = 1;
constexpr int kBadConfig = 2;

struct RunConfig {
  std::int64_t n = 0;
  std::string divisor;
  std::string window;
  std::string format = "text";
  std::optional<std::int64_t> radius;
  unsigned jobs = 1;
  bool seedless = false;
  std::string lemma;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<DivisorClass> targets(const RunConfig& cfg) {
  if (!cfg.divisor.empty() && !cfg.window.empty())
    throw ConfigError("give either --divisor or --window, not both");
  if (!cfg.divisor.empty())
    return {parse_divisor(cfg.divisor)};
  if (!cfg.window.empty())
    return parse_window(cfg.window).points();
  throw ConfigError("--divisor or --window is required");
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f)
      return;
  throw ConfigError("format '" + cfg.format + "' not supported by this subcommand");
}

int cmd_classify(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  FamilyParam n(cfg.n);
  json out = json::array();
  for (const auto& d : targets(cfg)) {
    auto w = forbidden_witness(n, d);
    if (cfg.format == "json") {
      json row = {{"divisor", d}, {"forbidden", w.has_value()}};
      if (w) {
        row["pattern"] = {{"start", w->first.block().start}, {"length", w->first.block().length}};
        row["alpha"] = w->second;
      }
      out.push_back(row);
    } else {
      std::cout << to_string(d) << (w ? " forbidden" : " allowed");
      if (w)
        std::cout << " block=" << w->first.block().start << "+" << w->first.block().length;
      std::cout << "\n";
    }
  }
  if (cfg.format == "json")
    std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  FamilyParam n(cfg.n);
  CohomologyOracle oracle(build_fan(n));
  json out = json::array();
  for (const auto& d : targets(cfg)) {
    auto rep = oracle.analyse(d, cfg.radius);
    if (cfg.format == "json") {
      out.push_back(rep);
    } else {
      std::cout << to_string(d) << (rep.has_higher_cohomology() ? " higher-cohomology" : " acyclic")
                << " chambers=" << rep.chambers_checked << " radius=" << rep.radius << "\n";
      for (const auto& w : rep.witnesses) {
        std::cout << "  H^" << w.degree << " at m=(";
        for (std::size_t i = 0; i < w.m.size(); ++i)
          std::cout << (i ? "," : "") << w.m[i];
        std::cout << ")\n";
      }
    }
  }
  if (cfg.format == "json")
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return 0;
}

int cmd_crosscheck(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  FamilyParam n(cfg.n);
  CohomologyOracle oracle(build_fan(n));
  auto points = targets(cfg);
  std::vector<char> oracle_says(points.size());
  unsigned jobs = std::max(1u, cfg.jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < points.size(); i += jobs)
          oracle_says[i] = cfg.radius ? oracle.has_higher_cohomology(points[i], *cfg.radius)
                                      : oracle.has_higher_cohomology(points[i]);
      });
  }
  json bad = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool cls = is_forbidden(n, points[i]);
    if (cls != static_cast<bool>(oracle_says[i]))
      bad.push_back({{"divisor", points[i]}, {"classifier", cls}, {"oracle", oracle_says[i] != 0}});
  }
  if (cfg.format == "json") {
    std::cout << json{{"n", cfg.n}, {"checked", points.size()}, {"disagreements", bad}}.dump(2)
              << "\n";
  } else {
    for (const auto& b : bad)
      std::cout << "DISAGREE " << b["divisor"].dump() << " classifier=" << b["classifier"]
                << " oracle=" << b["oracle"] << "\n";
    std::cout << (bad.empty() ? "PASS" : "FAIL") << " crosscheck n=" << cfg.n
              << " checked=" << points.size() << " disagreements=" << bad.size() << "\n";
  }
  return bad.empty() ? 0 : kFailed;
}

int cmd_fan(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  auto f = build_fan(FamilyParam(cfg.n));
  auto rep = verify_batyrev_data(f);
  if (cfg.format == "json") {
    std::cout << json{{"fan", f},
                      {"smooth", is_smooth(f)},
                      {"complete", is_complete(f)},
                      {"picard_rank", picard_rank(f)},
                      {"batyrev", rep}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "rays=" << f.num_rays() << " max_cones=" << f.max_cones.size()
              << " picard_rank=" << picard_rank(f) << " smooth=" << is_smooth(f)
              << " complete=" << is_complete(f) << "\n";
    for (std::size_t r = 0; r < f.num_rays(); ++r) {
      std::cout << "  ray " << r << " " << class_name(f.labels[r].label) << " (";
      for (std::size_t i = 0; i < f.rays[r].size(); ++i)
        std::cout << (i ? "," : "") << f.rays[r][i];
      std::cout << ")\n";
    }
    std::cout << to_text(rep);
  }
  return rep.verified() ? 0 : kFailed;
}

CompatGraph graph_for(const RunConfig& cfg) {
  if (cfg.window.empty())
    throw ConfigError("--window is required");
  return build_graph(FamilyParam(cfg.n), parse_window(cfg.window), std::max(1u, cfg.jobs));
}

int cmd_graph(const RunConfig& cfg) {
  auto g = graph_for(cfg);
  if (cfg.format == "json")
    std::cout << json(g).dump(2) << "\n";
  else if (cfg.format == "dot")
    std::cout << to_dot(g);
  else
    std::cout << "vertices=" << g.size() << " edges=" << g.edge_count() << "\n";
  return 0;
}

int cmd_clique(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  auto g = graph_for(cfg);
  auto c = max_clique(g);
  std::vector<DivisorClass> members;
  for (auto i : c.members)
    members.push_back(g.vertex(i));
  if (cfg.format == "json") {
    std::cout << json{{"n", cfg.n}, {"window", *g.window()}, {"size", c.size}, {"members", members}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "clique=" << c.size;
    for (const auto& d : members)
      std::cout << " " << to_string(d);
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  FamilyParam n(cfg.n);
  std::vector<std::string> ids;
  if (cfg.lemma == "all") {
    ids = lemma_ids();
  } else {
    std::string why;
    if (!lemma_applies(cfg.lemma, n, why))
      throw ConfigError(cfg.lemma + ": " + why);
    ids = {cfg.lemma};
  }
  json out = json::array();
  bool ok = true;
  for (const auto& id : ids) {
    std::string why;
    if (!lemma_applies(id, n, why)) {
      if (cfg.format == "json")
        out.push_back({{"lemma_id", id}, {"skipped", why}});
      else
        std::cout << "SKIP " << id << " n=" << cfg.n << " " << why << "\n";
      continue;
    }
    auto rep = run_lemma(id, n);
    ok = ok && rep.verified();
    if (cfg.format == "json")
      out.push_back(rep);
    else
      std::cout << to_text(rep);
  }
  if (cfg.format == "json")
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return ok ? 0 : kFailed;
}

int cmd_bound(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  FamilyParam n(cfg.n);
  json out = json::array();
  bool ok = true;
  for (std::int64_t k = 1; k <= n.value() + 1; ++k) {
    auto b = theorem_bound(n.value(), k);
    ok = ok && b.chain_within_closed_form();
    if (cfg.format == "json") {
      out.push_back({{"k", k},
                     {"chain", b.chain.str()},
                     {"closed_form", b.closed_form.str()},
                     {"low_cap", b.low_cap.str()},
                     {"rank", b.rank},
                     {"below_rank", b.below_rank()}});
    } else {
      std::cout << "k=" << k << " chain=" << b.chain.str() << " closed_form=" << b.closed_form.str()
                << " low_cap=" << b.low_cap.str() << " rank=" << b.rank
                << (b.below_rank() ? " below" : " not-below") << "\n";
    }
  }
  if (cfg.format == "json")
    std::cout << json{{"n", n.value()}, {"rows", out}}.dump(2) << "\n";
  return ok ? 0 : kFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly exceptional collections on the blow-up of P^n in two points"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--n", cfg.n, "dimension n >= 2")->required();
  app.add_option("--divisor", cfg.divisor, "divisor class a,b,c");
  app.add_option("--window", cfg.window, "aMin..aMax,bMin..bMax,cMin..cMax");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--radius", cfg.radius, "character box radius for the oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--seedless", cfg.seedless, "reserved; rejected");

  int (*handler)(const RunConfig&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  sub("classify", "decide forbiddenness by sign patterns", cmd_classify);
  sub("oracle", "toric cohomology witnesses", cmd_oracle);
  sub("crosscheck", "classifier against the oracle over a window", cmd_crosscheck);
  sub("fan", "fan counts and primitive collections", cmd_fan);
  sub("graph", "export the compatibility graph of a window", cmd_graph);
  sub("clique", "maximum clique of a window", cmd_clique);
  sub("verify", "verify lemmas by enumeration", cmd_verify)
      ->add_option("lemma", cfg.lemma, "lemma id or 'all'")
      ->required();
  sub("bound", "bound table over k", cmd_bound);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cfg.seedless)
      throw ConfigError("--seedless is reserved: nothing here is random");
    return handler(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}

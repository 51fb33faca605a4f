#include "k3walls/cli.hpp"

#include "k3walls/error.hpp"
#include "k3walls/irrationality.hpp"
#include "k3walls/monomial_ideal.hpp"
#include "k3walls/report.hpp"
#include "k3walls/scenario.hpp"
#include "k3walls/walls.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>

namespace k3walls {

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "7..14" or "7,9,11" or "8"
std::vector<int> parse_genus_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const std::size_t dots = item.find("..");
    if (dots != std::string::npos) {
      const int lo = static_cast<int>(parse_integer(item.substr(0, dots)));
      const int hi = static_cast<int>(parse_integer(item.substr(dots + 2)));
      if (lo > hi) throw UsageError("empty range '" + item + "'");
      for (int g = lo; g <= hi; ++g) out.push_back(g);
    } else {
      out.push_back(static_cast<int>(parse_integer(item)));
    }
    start = comma + 1;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path.string());
  file << content;
}

bool is_genus_token(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == ',';
  });
}

struct ScenarioOutcome {
  Scenario scenario;
  ScenarioReport report;
};

int run_scenarios(const std::vector<std::string>& targets, const std::string& json_out,
                  const std::string& svg_out, std::ostream& out) {
  std::vector<Scenario> scenarios;
  for (const std::string& t : targets) {
    if (is_genus_token(t))
      for (int g : parse_genus_list(t)) scenarios.push_back(builtin_scenario(g));
    else
      scenarios.push_back(load_scenario_file(t));
  }
  std::stable_sort(scenarios.begin(), scenarios.end(),
                   [](const Scenario& a, const Scenario& b) { return a.genus < b.genus; });

  SubidealSearchCache cache;
  std::vector<std::future<ScenarioReport>> pending;
  for (const Scenario& s : scenarios)
    pending.push_back(std::async(std::launch::async, [&cache, &s] { return run_scenario(s, cache); }));

  const bool many = scenarios.size() > 1;
  auto output_path = [&](const std::string& base, int genus, const char* ext) {
    if (!many) return std::filesystem::path(base);
    std::filesystem::create_directories(base);
    char name[32];
    std::snprintf(name, sizeof name, "genus%02d.%s", genus, ext);
    return std::filesystem::path(base) / name;
  };

  bool all_green = true;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const ScenarioReport report = pending[i].get();
    const auto failures = report.failures();
    std::size_t computed = 0;
    for (const CheckResult& c : report.checks) computed += c.kind == CheckKind::computed;
    out << "genus " << report.genus << ": " << (failures.empty() ? "green" : "red") << " ("
        << computed - failures.size() << "/" << computed << " computed checks pass)\n";
    for (const CheckResult* f : failures)
      out << "  FAIL " << f->id << ": expected " << f->expected << ", got " << f->actual << "\n";
    all_green = all_green && failures.empty();
    if (!json_out.empty()) write_file(output_path(json_out, report.genus, "json"), serialize_report(report));
    if (!svg_out.empty() && scenarios[i].plot)
      write_file(output_path(svg_out, report.genus, "svg"), render_svg(plot_spec_for(scenarios[i])));
  }
  return all_green ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walls, holes and base-ideal bounds for polarized K3 surfaces of Picard rank one",
               "k3walls"};
  app.require_subcommand(1);

  int genus = 0;
  std::string v_text, w_text;
  int r_max = default_hole_rank();

  auto* pairing_cmd = app.add_subcommand("pairing", "Mukai pairing and Euler characteristic");
  pairing_cmd->add_option("genus", genus)->required();
  pairing_cmd->add_option("v", v_text)->required();
  pairing_cmd->add_option("w", w_text)->required();

  auto* wall_cmd = app.add_subcommand("wall", "Numerical wall W(v, w)");
  wall_cmd->add_option("genus", genus)->required();
  wall_cmd->add_option("v", v_text)->required();
  wall_cmd->add_option("w", w_text)->required();

  auto* holes_cmd = app.add_subcommand("holes", "Spherical holes on W(v, w)");
  holes_cmd->add_option("genus", genus)->required();
  holes_cmd->add_option("v", v_text)->required();
  holes_cmd->add_option("w", w_text)->required();
  holes_cmd->add_option("--rmax", r_max, "largest rank searched")->check(CLI::PositiveNumber);

  auto* scenario_cmd = app.add_subcommand("scenario", "Per-genus scenarios");
  scenario_cmd->require_subcommand(1);
  auto* run_cmd = scenario_cmd->add_subcommand("run", "Run scenarios by genus (7, 7..14) or config path");
  std::vector<std::string> targets;
  std::string json_out, svg_out;
  run_cmd->add_option("targets", targets)->required();
  run_cmd->add_option("--json", json_out, "report output (directory when several scenarios run)");
  run_cmd->add_option("--svg", svg_out, "figure output (directory when several scenarios run)");

  auto* table_cmd = app.add_subcommand("table", "Admissible c2 table");
  std::string genus_list = "7..14", degree_list = "3,4";
  table_cmd->add_option("--genus", genus_list);
  table_cmd->add_option("--degrees", degree_list);

  auto* ideal_cmd = app.add_subcommand("ideal", "Monomial ideal tools");
  ideal_cmd->require_subcommand(1);
  auto* min_cmd = ideal_cmd->add_subcommand("min-colength", "Minimal colength of a k-generated subideal");
  std::string ideal_a, ideal_b;
  int max_gens = 3;
  int horizon = 0;
  min_cmd->add_option("ideal", ideal_a)->required();
  min_cmd->add_option("--max-gens", max_gens)->check(CLI::PositiveNumber);
  min_cmd->add_option("--horizon", horizon, "largest generator degree searched")->check(CLI::PositiveNumber);
  auto* product_cmd = ideal_cmd->add_subcommand("product", "Product of two monomial ideals");
  product_cmd->add_option("a", ideal_a)->required();
  product_cmd->add_option("b", ideal_b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (pairing_cmd->parsed()) {
      const PolarizedK3 s(genus);
      const MukaiVector v = parse_mukai_vector(s, v_text);
      const MukaiVector w = parse_mukai_vector(s, w_text);
      out << "<v,w> = " << to_string(pairing(v, w)) << "\n";
      out << "chi(v,w) = " << to_string(euler_characteristic(v, w)) << "\n";
      return 0;
    }
    if (wall_cmd->parsed()) {
      const PolarizedK3 s(genus);
      const NumericalWall wall = wall_between(parse_mukai_vector(s, v_text), parse_mukai_vector(s, w_text));
      out << to_string(wall.equation().normalized()) << "\n";
      out << "kind: " << to_string(wall.kind()) << "\n";
      if (wall.kind() == WallKind::semicircle) {
        out << "center: " << to_string(wall.center()) << "\n";
        out << "radius^2: " << to_string(wall.radius_sq()) << "\n";
        out << "endpoints: " << to_string(wall_endpoints(wall)) << "\n";
      } else if (wall.kind() == WallKind::vertical) {
        out << "beta: " << to_string(wall.line_beta()) << "\n";
      }
      return 0;
    }
    if (holes_cmd->parsed()) {
      const PolarizedK3 s(genus);
      const NumericalWall wall = wall_between(parse_mukai_vector(s, v_text), parse_mukai_vector(s, w_text));
      const auto holes = holes_on_wall(wall, r_max);
      for (const Hole& h : holes) out << to_string(h) << "\n";
      if (holes.empty()) out << "no holes with rank <= " << r_max << "\n";
      return 0;
    }
    if (run_cmd->parsed()) return run_scenarios(targets, json_out, svg_out, out);
    if (table_cmd->parsed()) {
      const auto genera = parse_genus_list(genus_list);
      const auto degrees = parse_genus_list(degree_list);
      for (int g : genera) {
        out << "g=" << g;
        for (int d : degrees) {
          out << "  d=" << d << ": {";
          const auto cs = admissible_c2(PolarizedK3(g), d);
          for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << to_string(cs[i]);
          out << "}";
        }
        out << "\n";
      }
      return 0;
    }
    if (min_cmd->parsed()) {
      const MonomialIdeal j = parse_monomial_ideal(ideal_a);
      const int bound = horizon > 0 ? horizon
                                    : default_horizon(j, max_gens) + SubidealSearchCache::horizon_slack();
      const SubidealSearchResult r = min_colength_subideal(j, max_gens, bound);
      out << "colength: " << r.colength << "\n";
      out << "witness: " << to_string(r.witness) << "\n";
      return 0;
    }
    if (product_cmd->parsed()) {
      out << to_string(product(parse_monomial_ideal(ideal_a), parse_monomial_ideal(ideal_b))) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace k3walls

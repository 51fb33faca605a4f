#include "k3walls/scenario.hpp"

#include "k3walls/error.hpp"
#include "k3walls/irrationality.hpp"
#include "k3walls/tilt_plane.hpp"
#include "k3walls/walls.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>

namespace k3walls {

std::string_view to_string(CheckKind kind) {
  return kind == CheckKind::computed ? "computed" : "assumed";
}

std::string_view to_string(Comparison cmp) { return cmp == Comparison::equal ? "eq" : "ge"; }

const MukaiVector& Scenario::resolve(std::string_view label) const {
  for (const NamedClass& c : classes)
    if (c.label == label) return c.vector;
  throw Error(ErrorKind::config, "unknown class label '" + std::string(label) + "'");
}

const WallSpec& Scenario::wall(std::string_view id) const {
  for (const WallSpec& w : walls)
    if (w.id == id) return w;
  throw Error(ErrorKind::config, "unknown wall '" + std::string(id) + "'");
}

bool ScenarioReport::green() const { return failures().empty(); }

std::vector<const CheckResult*> ScenarioReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const CheckResult& c : checks)
    if (c.kind == CheckKind::computed && c.pass != true) out.push_back(&c);
  return out;
}

int default_hole_rank() {
  static const int rank = [] {
    const char* env = std::getenv("K3WALLS_RMAX");
    const int value = env != nullptr ? std::atoi(env) : 0;
    return value > 0 ? value : 20;
  }();
  return rank;
}

namespace {

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

// "G + 3*E_shift - I_xi"
MukaiVector class_sum(const Scenario& scenario, std::string_view expr) {
  std::optional<MukaiVector> total;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  };
  int sign = 1;
  while (true) {
    skip();
    if (pos < expr.size() && (expr[pos] == '+' || expr[pos] == '-')) {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    Integer coeff = 1;
    const std::size_t digits = pos;
    while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
    if (pos > digits) {
      coeff = parse_integer(expr.substr(digits, pos - digits));
      skip();
      if (pos < expr.size() && expr[pos] == '*') ++pos;
      skip();
    }
    const std::size_t start = pos;
    while (pos < expr.size() &&
           (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected class label", pos);
    const MukaiVector term = Integer(sign) * coeff * scenario.resolve(expr.substr(start, pos - start));
    total = total ? *total + term : term;
    skip();
    if (pos == expr.size()) break;
    if (expr[pos] != '+' && expr[pos] != '-') throw ParseError("expected '+' or '-'", pos);
  }
  return *total;
}

// "(1,2)+(1,2)"; a trailing "nc" marks a non-curvilinear point.
std::vector<LocalPoint> parse_configuration(std::string_view text) {
  std::vector<LocalPoint> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t open = text.find('(', pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find(')', open);
    if (close == std::string_view::npos) throw ParseError("unterminated point", open);
    const std::string_view body = text.substr(open + 1, close - open - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected (m,f)", open);
    LocalPoint p;
    p.m = static_cast<int>(parse_integer(body.substr(0, comma)));
    p.f = static_cast<int>(parse_integer(body.substr(comma + 1)));
    pos = close + 1;
    if (text.substr(pos, 2) == "nc") {
      p.curvilinear = false;
      pos += 2;
    }
    out.push_back(p);
  }
  return out;
}

std::string vector_list(const std::vector<Integer>& values) {
  std::vector<std::string> parts;
  for (const Integer& v : values) parts.push_back(to_string(v));
  return "{" + join(parts, ",") + "}";
}

NumericalWall build_wall(const Scenario& scenario, std::string_view id) {
  const WallSpec& spec = scenario.wall(id);
  return wall_between(scenario.resolve(spec.first), scenario.resolve(spec.second));
}

int wall_rank(const Scenario& scenario, std::string_view id) {
  const WallSpec& spec = scenario.wall(id);
  return spec.r_max > 0 ? spec.r_max : default_hole_rank();
}

using OpFn = std::function<std::string(const Scenario&, const std::vector<std::string>&,
                                       SubidealSearchCache&)>;

struct OpEntry {
  std::size_t arity;  // minimum number of args
  OpFn fn;
};

const std::map<std::string, OpEntry, std::less<>>& operations() {
  static const std::map<std::string, OpEntry, std::less<>> ops = {
      {"pairing", {2, [](const Scenario& s, const auto& a, auto&) {
         return to_string(pairing(class_sum(s, a[0]), class_sum(s, a[1])));
       }}},
      {"euler_characteristic", {2, [](const Scenario& s, const auto& a, auto&) {
         return to_string(euler_characteristic(class_sum(s, a[0]), class_sum(s, a[1])));
       }}},
      {"self_pairing", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(self_pairing(class_sum(s, a[0])));
       }}},
      {"spherical", {1, [](const Scenario& s, const auto& a, auto&) {
         return bool_string(is_spherical(class_sum(s, a[0])));
       }}},
      {"moduli_dimension", {1, [](const Scenario& s, const auto& a, auto&) {
         const auto dim = moduli_dimension(class_sum(s, a[0]));
         return dim ? to_string(*dim) : std::string("empty");
       }}},
      {"slope", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(slope(class_sum(s, a[0])));
       }}},
      {"class_sum", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(class_sum(s, a[0]));
       }}},
      {"wall_equation", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(build_wall(s, a[0]).equation().normalized());
       }}},
      {"wall_kind", {1, [](const Scenario& s, const auto& a, auto&) {
         return std::string(to_string(build_wall(s, a[0]).kind()));
       }}},
      {"wall_endpoints", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(wall_endpoints(build_wall(s, a[0])));
       }}},
      {"wall_top_point", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(top_point(build_wall(s, a[0])));
       }}},
      {"wall_holes", {1, [](const Scenario& s, const auto& a, auto&) {
         std::vector<std::string> parts;
         for (const Hole& h : holes_on_wall(build_wall(s, a[0]), wall_rank(s, a[0])))
           parts.push_back(to_string(h));
         return "[" + join(parts, "; ") + "]";
       }}},
      {"point_on_wall", {2, [](const Scenario& s, const auto& a, auto&) {
         // alpha^2 of the wall point above beta
         const WallEquation e = build_wall(s, a[0]).equation();
         if (e.quad == 0) throw Error(ErrorKind::not_semicircular, "wall is not a semicircle");
         const Rational beta = parse_rational(a[1]);
         const Rational alpha_sq = -(Rational(e.lin) * beta + Rational(e.constant)) / Rational(e.quad) -
                                   beta * beta;
         return alpha_sq > 0 ? to_string(alpha_sq) : std::string("none");
       }}},
      {"top_on_nu_curve", {2, [](const Scenario& s, const auto& a, auto&) {
         const StabPoint top = top_point(build_wall(s, a[0]));
         return bool_string(nu_zero_curve(class_sum(s, a[1])).evaluate(top.beta(), top.alpha_sq()) == 0);
       }}},
      {"nu_curve_shape", {1, [](const Scenario& s, const auto& a, auto&) {
         return std::string(to_string(nu_zero_curve(class_sum(s, a[0])).shape));
       }}},
      {"nesting", {2, [](const Scenario& s, const auto& a, auto&) {
         return std::string(to_string(nesting_relation(build_wall(s, a[0]), build_wall(s, a[1]))));
       }}},
      {"common_point", {2, [](const Scenario& s, const auto& a, auto&) {
         std::vector<MukaiVector> sample;
         for (std::size_t i = 1; i < a.size(); ++i) sample.push_back(class_sum(s, a[i]));
         return to_string(common_point_check(class_sum(s, a[0]), sample));
       }}},
      {"minimal_rank", {2, [](const Scenario& s, const auto& a, auto&) {
         return bool_string(minimal_rank_criterion(class_sum(s, a[0]), parse_rational(a[1])));
       }}},
      {"heart", {2, [](const Scenario& s, const auto& a, auto&) {
         return std::string(to_string(heart_membership(class_sum(s, a[0]), true, parse_rational(a[1]))));
       }}},
      {"tilt_slope", {3, [](const Scenario& s, const auto& a, auto&) {
         return to_string(tilt_slope(class_sum(s, a[0]),
                                     StabPoint(parse_rational(a[1]), parse_rational(a[2]))));
       }}},
      {"spherical_count", {4, [](const Scenario& s, const auto& a, auto&) {
         // rank range [a0, a1], slope window (a2, a3)
         const int lo = static_cast<int>(parse_integer(a[0]));
         const int hi = static_cast<int>(parse_integer(a[1]));
         std::int64_t count = 0;
         for (const MukaiVector& v :
              spherical_enumerate(s.surface(), hi, {parse_rational(a[2]), parse_rational(a[3])}))
           if (v.r() >= lo) ++count;
         return std::to_string(count);
       }}},
      {"expected_h0", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(expected_h0(class_sum(s, a[0])));
       }}},
      {"kernel_vector", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(kernel_mukai_vector(s.surface(), parse_integer(a[0])));
       }}},
      {"minimal_c2", {0, [](const Scenario& s, const auto&, auto&) {
         return to_string(minimal_c2(s.surface()));
       }}},
      {"admissible_c2", {1, [](const Scenario& s, const auto& a, auto&) {
         return vector_list(admissible_c2(s.surface(), parse_integer(a[0])));
       }}},
      {"polarization_genus", {0, [](const Scenario& s, const auto&, auto&) {
         return std::to_string(moduli_polarization_genus(s.genus));
       }}},
      {"degree_from_chern", {2, [](const Scenario&, const auto& a, auto&) {
         return to_string(degree_from_chern(parse_integer(a[0]), parse_integer(a[1])));
       }}},
      {"hs_degree_bound", {1, [](const Scenario& s, const auto& a, auto&) {
         return to_string(hs_degree_lower_bound(s.surface(), parse_integer(a[0])));
       }}},
      {"colength", {1, [](const Scenario&, const auto& a, auto&) {
         return std::to_string(colength(parse_monomial_ideal(a[0])));
       }}},
      {"ideal_product", {2, [](const Scenario&, const auto& a, auto&) {
         return to_string(product(parse_monomial_ideal(a[0]), parse_monomial_ideal(a[1])));
       }}},
      {"ideallemma_product", {2, [](const Scenario&, const auto& a, auto&) {
         return to_string(ideallemma_product(static_cast<int>(parse_integer(a[0])),
                                             static_cast<int>(parse_integer(a[1]))));
       }}},
      {"min_colength", {2, [](const Scenario&, const auto& a, SubidealSearchCache& cache) {
         return std::to_string(
             cache.get(parse_monomial_ideal(a[0]), static_cast<int>(parse_integer(a[1]))).colength);
       }}},
      {"stratum", {3, [](const Scenario& s, const auto& a, SubidealSearchCache& cache) {
         // degree, c2, configuration
         const Integer d = parse_integer(a[0]);
         const Integer c2 = parse_integer(a[1]);
         const auto config = parse_configuration(a[2]);
         Integer m = 0, f = 0;
         for (const LocalPoint& p : config) {
           m += p.m;
           f += p.f;
         }
         const ProjectionDatum datum(s.surface(), d, c2, m, f);
         return std::string(to_string(stratum_feasibility(datum, config, &cache).status));
       }}},
      {"theorem_irr", {0, [](const Scenario& s, const auto&, auto&) {
         return theorem_summary(s.genus).irrationality;
       }}},
  };
  return ops;
}

bool compare(const std::string& expected, const std::string& actual, Comparison cmp) {
  if (cmp == Comparison::equal) return expected == actual;
  try {
    return parse_rational(actual) >= parse_rational(expected);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string evaluate_check(const Scenario& scenario, const CheckSpec& check,
                           SubidealSearchCache& cache) {
  const auto& ops = operations();
  const auto it = ops.find(check.op);
  if (it == ops.end()) throw Error(ErrorKind::config, "unknown check operation '" + check.op + "'");
  if (check.args.size() < it->second.arity)
    throw Error(ErrorKind::config, "check '" + check.id + "' needs " +
                                       std::to_string(it->second.arity) + " arguments");
  return it->second.fn(scenario, check.args, cache);
}

ScenarioReport run_scenario(const Scenario& scenario, SubidealSearchCache& cache) {
  ScenarioReport report;
  report.genus = scenario.genus;
  report.title = scenario.title;

  for (const CheckSpec& spec : scenario.checks) {
    CheckResult result{spec.id, spec.kind, spec.op, spec.expected, "", spec.comparison,
                       spec.citation, spec.derived, std::nullopt};
    if (spec.kind == CheckKind::computed) {
      try {
        result.actual = evaluate_check(scenario, spec, cache);
        result.pass = compare(spec.expected, result.actual, spec.comparison);
      } catch (const std::exception& e) {
        result.actual = std::string("error: ") + e.what();
        result.pass = false;
      }
    }
    report.checks.push_back(std::move(result));
  }

  for (const WallSpec& spec : scenario.walls) {
    WallRecord record;
    record.id = spec.id;
    record.first_label = spec.first;
    record.second_label = spec.second;
    try {
      const MukaiVector& v = scenario.resolve(spec.first);
      const MukaiVector& w = scenario.resolve(spec.second);
      record.first = to_string(v);
      record.second = to_string(w);
      const NumericalWall wall = wall_between(v, w);
      record.kind = to_string(wall.kind());
      record.equation = to_string(wall.equation().normalized());
      if (wall.kind() == WallKind::semicircle) {
        record.center = to_string(wall.center());
        record.radius_sq = to_string(wall.radius_sq());
        record.endpoints = to_string(wall_endpoints(wall));
      } else if (wall.kind() == WallKind::vertical) {
        record.line_beta = to_string(wall.line_beta());
      }
      for (const Hole& h : holes_on_wall(wall, spec.r_max > 0 ? spec.r_max : default_hole_rank()))
        report.holes.push_back({spec.id, to_string(h.delta), to_string(h.point.beta()),
                                to_string(h.point.alpha_sq())});
    } catch (const std::exception& e) {
      record.kind = std::string("error: ") + e.what();
    }
    report.walls.push_back(std::move(record));
  }
  return report;
}

ScenarioReport run_scenario(const Scenario& scenario) {
  SubidealSearchCache cache;
  return run_scenario(scenario, cache);
}

ScenarioReport run_scenario(int genus) { return run_scenario(builtin_scenario(genus)); }

TheoremSummary theorem_summary(int genus) {
  switch (genus) {
    case 7: return {7, "=4", "W^2_4 isomorphic to S x M", {}};
    case 8: return {8, "=4", "component birational to a P^3-bundle over S", {}};
    case 9:
      return {9, "=4",
              "3-dimensional component (P^1-bundle over M) and 2-dimensional component "
              "(correspondence between S and M)",
              {}};
    case 10:
      return {10, "≤4", "components isomorphic to S^[2] (dim 4) and P(E) (dim 3)", {}};
    case 11: return {11, "=4", "component isomorphic to M", {}};
    case 12: return {12, "≤4", "unirational 3-dimensional component", {}};
    case 13:
      return {13, "≤4", "W^2_4 at least 1-dimensional",
              {"the genus 4 polarization on M carries curves with a triple point"}};
    case 14: return {14, "≤4", "component isomorphic to S", {}};
    default:
      throw Error(ErrorKind::unknown_genus, "no theorem summary for genus " + std::to_string(genus));
  }
}

}  // namespace k3walls

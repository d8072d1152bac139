#include "fintop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fintop/axioms.hpp"
#include "fintop/census.hpp"
#include "fintop/lifting.hpp"
#include "fintop/notation.hpp"

namespace fintop {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string text;
  std::string method = "both";
  std::string left;
  std::string right;
  std::size_t points = 0;
  bool up_to_iso = false;
  bool verify = false;
  std::string output;
  unsigned threads = 0;
};

// A map has "->" outside any braces; a space does not.
bool looks_like_map(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}') --depth;
    if (depth == 0 && text.substr(i, 2) == "->") return true;
    if (depth == 0 && text.substr(i, 3) == "⟶") return true;
  }
  return false;
}

Json space_json(const FiniteSpace& space) {
  Json points = Json::array();
  for (PointIndex x = 0; x < space.size(); ++x) points.push_back(space.display_name(x));
  Json arrows = Json::array();
  for (auto [x, y] : generating_arrows(space)) arrows.push_back({x, y});
  Json j;
  j["kind"] = "space";
  j["points"] = std::move(points);
  j["arrows"] = std::move(arrows);
  j["notation"] = format_space(space);
  return j;
}

void print_space_table(const FiniteSpace& space, std::ostream& out) {
  out << "notation  " << format_space(space) << '\n';
  out << "points    " << space.size() << '\n';
  std::size_t width = 5;
  for (PointIndex x = 0; x < space.size(); ++x) width = std::max(width, space.display_name(x).size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "POINT" << "CLOSURE\n";
  for (PointIndex x = 0; x < space.size(); ++x) {
    out << std::setw(static_cast<int>(width) + 2) << space.display_name(x);
    const char* sep = "";
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (!space.leq(x, y)) continue;
      out << sep << space.display_name(y);
      sep = " ";
    }
    out << '\n';
  }
  out << std::right;
}

int cmd_parse(const Options& o, std::ostream& out) {
  if (!looks_like_map(o.text)) {
    const auto space = parse_space(o.text);
    if (o.json) {
      out << space_json(space).dump() << '\n';
    } else {
      print_space_table(space, out);
    }
    return kExitOk;
  }
  const auto map = parse_map(o.text);
  if (o.json) {
    Json j;
    j["kind"] = "map";
    j["domain"] = space_json(map.domain());
    j["codomain"] = space_json(map.codomain());
    j["image"] = map.image();
    j["notation"] = format_map(map);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "notation  " << format_map(map) << '\n';
  out << "domain    " << format_space(map.domain()) << '\n';
  out << "codomain  " << format_space(map.codomain()) << '\n';
  for (PointIndex x = 0; x < map.domain().size(); ++x) {
    out << map.domain().display_name(x) << " -> " << map.codomain().display_name(map(x)) << '\n';
  }
  return kExitOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const auto space = parse_space(o.text);
  const bool direct = o.method != "lifting";
  const bool lifting = o.method != "direct";
  bool hard_disagreement = false;
  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(26) << "AXIOM";
  if (direct) table << std::setw(8) << "DIRECT";
  if (lifting) table << std::setw(9) << "LIFTING";
  if (direct && lifting) table << "AGREE";
  table << '\n';
  for (auto id : kAllAxioms) {
    const std::string name(axiom_name(id));
    Json row;
    row["axiom"] = name;
    table << std::setw(26) << name;
    std::optional<bool> d, l;
    if (direct) {
      d = check_axiom_direct(space, id);
      row["direct"] = *d;
      table << std::setw(8) << (*d ? "true" : "false");
    }
    if (lifting) {
      if (has_lifting_formula(id)) l = check_axiom_lifting(space, id).holds;
      row["lifting"] = l ? Json(*l) : Json(nullptr);
      table << std::setw(9) << (l ? (*l ? "true" : "false") : "n/a");
    }
    if (direct && lifting) {
      if (l) {
        const bool agree = *d == *l;
        row["agree"] = agree;
        table << (agree ? "AGREE" : "DIFFER");
        if (!agree && is_hard_equivalence(id)) hard_disagreement = true;
      } else {
        row["agree"] = nullptr;
        table << "n/a";
      }
    }
    table << '\n';
    rows.push_back(std::move(row));
  }
  if (o.json) {
    Json j;
    j["space"] = format_space(space);
    j["axioms"] = std::move(rows);
    out << j.dump() << '\n';
  } else {
    std::string text = table.str();
    // Trim the padding left at line ends.
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
  }
  return hard_disagreement ? kExitDisagreement : kExitOk;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const LiftingProblem problem{parse_map(o.left), parse_map(o.right)};
  const auto result = has_lifting(problem);
  if (o.json) {
    Json j;
    j["verdict"] = result.lifts ? "LIFTS" : "FAILS";
    if (result.counterexample) {
      j["top"] = format_map(result.counterexample->top);
      j["bottom"] = format_map(result.counterexample->bottom);
    }
    out << j.dump() << '\n';
  } else {
    out << (result.lifts ? "LIFTS" : "FAILS") << '\n';
    if (result.counterexample) {
      out << "top     " << format_map(result.counterexample->top) << '\n';
      out << "bottom  " << format_map(result.counterexample->bottom) << '\n';
    }
  }
  return result.lifts ? kExitOk : kExitLiftFails;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  const auto mode = o.up_to_iso ? EnumerationMode::up_to_iso : EnumerationMode::labeled;
  if (o.points > max_census_points(mode)) {
    err << "error: census supports n <= " << max_census_points(mode) << (o.up_to_iso ? " up to homeomorphism" : "")
        << '\n';
    return kExitParseError;
  }
  const unsigned threads = o.threads != 0 ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  const auto records = classify_all(enumerate_topologies(o.points, mode), threads);
  const auto equivalence = equivalence_report(records);
  std::optional<ImplicationReport> implications;
  if (o.verify) implications = implication_report(records);
  const ImplicationReport* imp = implications ? &*implications : nullptr;

  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot open " << o.output << " for writing\n";
      return kExitIoError;
    }
    write_census(file, records, equivalence, imp);
    file.flush();
    if (!file) {
      err << "error: failed writing " << o.output << '\n';
      return kExitIoError;
    }
  }

  if (o.json) {
    if (o.output.empty()) {
      write_census(out, records, equivalence, imp);
    } else {
      out << census_summary_line(records, equivalence, imp) << '\n';
    }
  } else {
    out << records.size() << (o.up_to_iso ? " spaces up to homeomorphism" : " labeled spaces")
        << "; equivalence suite: " << equivalence.hard_mismatches() << " hard mismatches";
    if (imp != nullptr) out << "; implication suite: " << imp->violation_count() << " violations";
    out << '\n';
    for (const auto& a : equivalence.per_axiom) {
      if (a.hard || a.mismatches.empty()) continue;
      out << axiom_name(a.id) << ": lifting agrees on " << a.agreements << " of " << a.checked << " spaces\n";
    }
    for (const auto& a : equivalence.per_axiom) {
      if (!a.hard || a.mismatches.empty()) continue;
      out << "mismatch " << axiom_name(a.id) << " on " << a.mismatches.front().space << '\n';
    }
    if (imp != nullptr) {
      for (const auto& r : imp->results) {
        if (!r.violations.empty()) out << "violated " << r.name << " on " << r.violations.front() << '\n';
      }
    }
  }
  return equivalence.hard_mismatches() > 0 ? kExitDisagreement : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces, lifting properties and separation axioms", "fintop"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* parse = app.add_subcommand("parse", "Parse a space or a map and print it back");
  parse->add_option("text", o.text, "Space or map in notation")->required();

  auto* axioms = app.add_subcommand("axioms", "Classify a space against every separation axiom");
  axioms->add_option("space", o.text, "Space in notation")->required();
  axioms->add_option("--method", o.method, "direct, lifting or both")
      ->check(CLI::IsMember({"direct", "lifting", "both"}));

  auto* lift = app.add_subcommand("lift", "Decide whether the left map lifts against the right map");
  lift->add_option("left", o.left, "Left map in notation")->required();
  lift->add_option("right", o.right, "Right map in notation")->required();

  auto* census = app.add_subcommand("census", "Classify every topology on n points");
  census->add_option("-n,--points", o.points, "Number of points")->required();
  census->add_flag("--up-to-iso", o.up_to_iso, "One space per homeomorphism class");
  census->add_flag("--verify", o.verify, "Also run the implication suite");
  census->add_option("-o,--output", o.output, "Census file to write");
  census->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (axioms->parsed()) return cmd_axioms(o, out);
    if (lift->parsed()) return cmd_lift(o, out);
    return cmd_census(o, out, err);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitParseError;
}

}  // namespace fintop

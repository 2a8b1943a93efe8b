#include "granulex/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "granulex/classes.hpp"
#include "granulex/errors.hpp"
#include "granulex/json_io.hpp"
#include "granulex/measures.hpp"
#include "granulex/morphisms.hpp"
#include "granulex/table.hpp"
#include "granulex/verify.hpp"

namespace granulex {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

/// Comma-separated tokens, trimmed; an empty or all-blank input is the empty
/// list.
std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> tokens;
  if (trim(text).empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        trim(text.substr(start, comma == std::string::npos
                                    ? std::string::npos
                                    : comma - start));
    if (token.empty()) throw domain_error("empty item in list: \"" + text + "\"");
    tokens.push_back(token);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return tokens;
}

ElementSet parse_label_set(const Universe& universe, const std::string& csv) {
  ElementSet set(universe.size());
  for (const std::string& label : split_commas(csv)) {
    set.set(universe.require_index(label));
  }
  return set;
}

std::vector<std::uint32_t> parse_map(const Universe& source,
                                     const Universe& target,
                                     const std::string& text) {
  std::vector<std::uint32_t> assignment(source.size(), UINT32_MAX);
  for (const std::string& pair : split_commas(text)) {
    const std::size_t colon = pair.find(':');
    if (colon == std::string::npos) {
      throw domain_error("map entries must look like source:target, got \"" +
                         pair + "\"");
    }
    const std::string from = trim(pair.substr(0, colon));
    const std::string to = trim(pair.substr(colon + 1));
    const std::size_t index = source.require_index(from);
    if (assignment[index] != UINT32_MAX) {
      throw domain_error("element mapped twice: " + from);
    }
    assignment[index] = static_cast<std::uint32_t>(target.require_index(to));
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == UINT32_MAX) {
      throw domain_error("map must assign every source element; missing " +
                         source.label(i));
    }
  }
  return assignment;
}

ClassifyOptions classify_options_from_env() {
  ClassifyOptions options;
  if (const char* env = std::getenv("GRANULEX_BRUTE_CUTOFF")) {
    const std::string text(env);
    std::size_t consumed = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != text.size() || text.empty()) {
      throw domain_error(
          "GRANULEX_BRUTE_CUTOFF must be a nonnegative integer, got \"" + text +
          "\"");
    }
    options.brute_cutoff = static_cast<std::size_t>(value);
  }
  return options;
}

Json map_to_json(const SpaceMap& map) {
  Json json = Json::object();
  for (std::size_t i = 0; i < map.assignment.size(); ++i) {
    json[map.source.universe.label(i)] =
        map.target.universe.label(map.assignment[i]);
  }
  return json;
}

void print_json(std::ostream& out, const Json& json) {
  out << json.dump(2) << "\n";
}

void print_report_table(std::ostream& out,
                        const std::vector<TheoremReport>& reports) {
  std::size_t id_width = 6;
  for (const TheoremReport& r : reports) id_width = std::max(id_width, r.id.size());
  out << std::left << std::setw(static_cast<int>(id_width) + 2) << "report"
      << std::right << std::setw(12) << "instances" << std::setw(12)
      << "violations" << "  status\n";
  std::size_t failed = 0;
  for (const TheoremReport& r : reports) {
    out << std::left << std::setw(static_cast<int>(id_width) + 2) << r.id
        << std::right << std::setw(12) << r.instances << std::setw(12)
        << r.violations.size() << "  "
        << (r.passed() ? "pass" : "FAIL")
        << (r.complete ? "" : " (incomplete)") << "\n";
    if (!r.passed()) ++failed;
  }
  for (const TheoremReport& r : reports) {
    if (r.passed()) continue;
    out << "\n" << r.id << " violations:\n";
    for (const std::string& witness : r.violations) {
      out << "  " << witness << "\n";
    }
  }
  out << "\n";
  if (failed == 0) {
    out << "all " << reports.size() << " reports passed\n";
  } else {
    out << failed << " of " << reports.size() << " reports failed\n";
  }
}

struct Args {
  std::string space_path;
  std::string set_csv;
  bool members = false;
  bool brute_force = false;
  bool exact_terms = false;
  std::string source_path;
  std::string target_path;
  std::string map_text;
  bool search = false;
  bool all_maps = false;
  std::string csv_path;
  std::string attributes;
  std::string id_column;
  std::size_t n_max = 7;
  double margin = tol::strict_margin;
  bool json_output = false;
  bool mutate_natural_log = false;
};

int run_approx(const Args& a, std::ostream& out) {
  const ApproximationSpace space = load_space(a.space_path);
  const ElementSet x = parse_label_set(space.universe, a.set_csv);
  const RoughPair pair = rough_pair(space, x);
  Json json;
  json["set"] = set_to_json(x, space.universe);
  json["lower"] = set_to_json(pair.lower, space.universe);
  json["upper"] = set_to_json(pair.upper, space.universe);
  json["definable"] = pair.lower == pair.upper;
  print_json(out, json);
  return 0;
}

int run_classes(const Args& a, std::ostream& out) {
  const ApproximationSpace space = load_space(a.space_path);
  ClassifyOptions options = classify_options_from_env();
  ClassProfile profile;
  if (a.members || a.brute_force) {
    if (a.members) {
      if (space.size() > 16) {
        throw domain_error("--members requires a universe of at most 16 elements");
      }
      options.materialize_members = true;
    }
    profile = classify_bruteforce(space, options);
  } else {
    profile = classify_closed_form(space, options);
  }
  print_json(out, profile_to_json(profile, space.universe, a.members));
  return 0;
}

int run_entropy(const Args& a, std::ostream& out) {
  const ApproximationSpace space = load_space(a.space_path);
  Json json = measure_report_to_json(measure_report(space));
  if (a.exact_terms) {
    json["terms"] = exact_terms_json(classify_closed_form(space));
  }
  print_json(out, json);
  return 0;
}

int run_compare(const Args& a, std::ostream& out, std::ostream& err) {
  const ApproximationSpace source = load_space(a.source_path);
  const ApproximationSpace target = load_space(a.target_path);
  const int modes = (!a.map_text.empty() ? 1 : 0) + (a.search ? 1 : 0) +
                    (a.all_maps ? 1 : 0);
  if (modes != 1) {
    throw domain_error("compare needs exactly one of --map, --search, --all");
  }

  if (!a.map_text.empty()) {
    const SpaceMap map(source, target,
                       parse_map(source.universe, target.universe, a.map_text));
    const MorphismKind kind = classify_map(map);
    if (!is_monomorphism(kind)) {
      err << "error: the map is not a monomorphism (kind=" << to_string(kind)
          << ")\n";
      return 2;
    }
    print_json(out, comparison_to_json(kind, compare_coentropy(map)));
    return 0;
  }

  if (a.search) {
    const auto witness = embeddable(source, target);
    if (!witness) {
      Json json;
      json["embeddable"] = false;
      print_json(out, json);
      return 1;
    }
    const MorphismKind kind = classify_map(*witness);
    Json json = comparison_to_json(kind, compare_coentropy(*witness));
    json["map"] = map_to_json(*witness);
    print_json(out, json);
    return 0;
  }

  const std::vector<SpaceMap> maps = all_monomorphisms(source, target);
  Json json;
  json["count"] = maps.size();
  Json list = Json::array();
  for (const SpaceMap& map : maps) {
    const MorphismKind kind = classify_map(map);
    Json entry = comparison_to_json(kind, compare_coentropy(map));
    entry["map"] = map_to_json(map);
    list.push_back(std::move(entry));
  }
  json["maps"] = std::move(list);
  print_json(out, json);
  return 0;
}

int run_ingest(const Args& a, std::ostream& out) {
  const InformationTable table = InformationTable::from_csv_file(a.csv_path);
  IngestOptions options;
  options.attributes = split_commas(a.attributes);
  if (!a.id_column.empty()) options.id_column = a.id_column;
  print_json(out, space_to_json(ingest_table(table, options)));
  return 0;
}

int run_verify(const Args& a, std::ostream& out) {
  VerifyConfig config;
  config.n_max = a.n_max;
  config.margin = a.margin;
  if (a.mutate_natural_log) config.fault = FaultMode::NaturalLog;
  const std::vector<TheoremReport> reports = verify_all(config);
  if (a.json_output) {
    print_json(out, reports_to_json(reports));
  } else {
    print_report_table(out, reports);
  }
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "granulex: rough-set approximation spaces, their entropy/co-entropy "
      "measures, and exhaustive verification of the measures' laws"};
  app.require_subcommand(1);
  app.footer(
      "Environment:\n  GRANULEX_BRUTE_CUTOFF  largest universe size the "
      "brute-force subset\n                         enumeration accepts "
      "(default 24)");
  Args a;

  CLI::App* approx = app.add_subcommand(
      "approx", "Lower and upper approximations of a subset");
  approx->add_option("--space", a.space_path, "Space JSON file")->required();
  approx->add_option("--set", a.set_csv,
                     "Comma-separated element labels (empty for the empty set)");

  CLI::App* classes = app.add_subcommand(
      "classes", "All distinct rough approximations with their counts");
  classes->add_option("--space", a.space_path, "Space JSON file")->required();
  classes->add_flag("--members", a.members,
                    "List the member subsets of each class (implies "
                    "--brute-force; universe of at most 16 elements)");
  classes->add_flag("--brute-force", a.brute_force,
                    "Enumerate all 2^n subsets instead of using the "
                    "closed form");

  CLI::App* entropy = app.add_subcommand(
      "entropy",
      "Classical (h_classical, g_classical) and approximation-aware "
      "(h_new, g_new) measures");
  entropy->add_option("--space", a.space_path, "Space JSON file")->required();
  entropy->add_flag("--exact-terms", a.exact_terms,
                    "Also emit each class count with its log2");

  CLI::App* compare = app.add_subcommand(
      "compare",
      "Compare co-entropies of two spaces along a structure-preserving map");
  compare->add_option("--source", a.source_path, "Source space JSON file")
      ->required();
  compare->add_option("--target", a.target_path, "Target space JSON file")
      ->required();
  compare->add_option("--map", a.map_text,
                      "Explicit map as source:target pairs, e.g. \"1:a,2:b\"");
  compare->add_flag("--search", a.search,
                    "Search for an embedding and compare along it");
  compare->add_flag("--all", a.all_maps,
                    "Enumerate every monomorphism and compare along each");

  CLI::App* ingest = app.add_subcommand(
      "ingest",
      "Build a space from a CSV information table: rows agreeing on every "
      "selected attribute fall in one block");
  ingest->add_option("--csv", a.csv_path, "CSV file (RFC 4180, header row)")
      ->required();
  ingest->add_option(
      "--attributes", a.attributes,
      "Comma-separated attribute columns; with none selected every pair of "
      "rows agrees vacuously, giving the one-block partition");
  ingest->add_option("--id-column", a.id_column,
                     "Column providing element labels (default: 1-based row "
                     "numbers)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustively check the measures' laws on small universes");
  verify->add_option("--n-max", a.n_max,
                     "Largest universe size for the exhaustive sweeps");
  verify->add_option("--margin", a.margin,
                     "Margin for strict inequalities and equalities");
  verify->add_flag("--json", a.json_output, "Emit the report list as JSON");
  verify
      ->add_flag("--mutate-natural-log", a.mutate_natural_log,
                 "Deliberately rescale all measures to natural logarithms")
      ->group("");  // test hook, hidden from help

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("granulex");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out_buffer, err_buffer;
    const int code = app.exit(e, out_buffer, err_buffer);
    out << out_buffer.str();
    err << err_buffer.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (approx->parsed()) return run_approx(a, out);
    if (classes->parsed()) return run_classes(a, out);
    if (entropy->parsed()) return run_entropy(a, out);
    if (compare->parsed()) return run_compare(a, out, err);
    if (ingest->parsed()) return run_ingest(a, out);
    if (verify->parsed()) return run_verify(a, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace granulex

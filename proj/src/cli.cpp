#include "predraw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "predraw/bracket.hpp"
#include "predraw/geometry.hpp"
#include "predraw/matroid.hpp"
#include "predraw/purecond.hpp"
#include "predraw/redraw.hpp"
#include "predraw/version.hpp"

namespace predraw::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

enum class Format { text, json_doc };

struct CommonOptions {
  std::string file;
  Format format = Format::text;
  std::string pin;
  std::string normals_file;
  std::uint64_t seed = 0;
};

NormalAssignment resolve_normals(const GeometryDocument& doc,
                                 const std::string& normals_file) {
  if (!normals_file.empty())
    return parse_normals_document(read_file(normals_file), doc.geometry);
  if (doc.normals) return *doc.normals;
  throw ValidationError(
      "no normals: provide --normals or embed them in the geometry file");
}

std::string pick_pin(const GeometryDocument& doc, const std::string& pin) {
  if (!pin.empty()) {
    doc.geometry.point_index(pin);
    return pin;
  }
  if (doc.geometry.points().empty())
    throw ValidationError("geometry has no points to pin");
  return doc.geometry.points().front();
}

void emit(std::ostream& out, Format format, const json& doc,
          const std::vector<std::string>& text_lines) {
  if (format == Format::json_doc) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : text_lines) out << line << "\n";
  }
}

json incidence_list_json(const std::vector<IncidencePair>& incidences) {
  json arr = json::array();
  for (const auto& [p, h] : incidences) arr.push_back({p, h});
  return arr;
}

int cmd_validate(const CommonOptions& opt, std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;
  json j;
  j["version"] = kVersion;
  j["ok"] = true;
  j["d"] = g.d();
  j["points"] = g.num_points();
  j["hyperplanes"] = g.num_hyperplanes();
  j["incidences"] = g.num_incidences();
  j["fingerprint"] = geometry_fingerprint(g);
  emit(out, opt.format, j,
       {"ok: true", "d: " + std::to_string(g.d()),
        "points: " + std::to_string(g.num_points()),
        "hyperplanes: " + std::to_string(g.num_hyperplanes()),
        "incidences: " + std::to_string(g.num_incidences()),
        "fingerprint: " + geometry_fingerprint(g)});
  return kExitOk;
}

int cmd_matroid(const CommonOptions& opt, const MatroidOptions& mopts,
                std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;
  const MatroidReport report = is_independent(g, mopts);
  const int cols = g.num_hyperplanes() + g.d() * g.num_points();

  json j;
  j["version"] = kVersion;
  j["seed"] = mopts.seed;
  j["method"] = report.method == MatroidMethod::deterministic
                    ? "deterministic"
                    : "randomized";
  j["independent"] = report.independent;
  j["basis"] = report.basis;
  j["generic_rank"] = report.generic_rank;
  j["generic_corank"] = cols - report.generic_rank;
  if (report.violating_subset)
    j["violating_subset"] = incidence_list_json(*report.violating_subset);

  std::vector<std::string> lines = {
      std::string("method: ") + j["method"].get<std::string>(),
      std::string("independent: ") + (report.independent ? "true" : "false"),
      std::string("basis: ") + (report.basis ? "true" : "false"),
      "generic_rank: " + std::to_string(report.generic_rank),
      "generic_corank: " + std::to_string(cols - report.generic_rank)};
  if (report.violating_subset) {
    std::string vs = "violating_subset:";
    for (const auto& [p, h] : *report.violating_subset)
      vs += " (" + p + "," + h + ")";
    lines.push_back(vs);
  }
  emit(out, opt.format, j, lines);
  return kExitOk;
}

int cmd_purecond(const CommonOptions& opt, bool with_bracket,
                 std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;
  const std::string pin_point = pick_pin(doc, opt.pin);
  const PureCondition pc = pure_condition(g, pin_point);

  json j;
  j["version"] = kVersion;
  j["d"] = pc.d;
  j["pinned_point"] = pin_point;
  j["fingerprint"] = pc.fingerprint;
  j["degree"] = pc.degree();
  j["monomials"] = pc.polynomial.term_count();
  j["polynomial"] = pc.to_text();
  std::vector<std::string> lines = {
      "pinned_point: " + pin_point, "degree: " + std::to_string(pc.degree()),
      "polynomial: " + pc.to_text()};
  if (with_bracket) {
    if (g.d() != 2) {
      j["bracket_experimental"] = true;
      lines.push_back("bracket_experimental: true");
    }
    try {
      const BracketPolynomial bp = bracketize(pc.polynomial, g.d());
      j["bracket"] = to_string(bp, g.hyperplanes());
      lines.push_back("bracket: " + to_string(bp, g.hyperplanes()));
    } catch (const SubductionError& e) {
      j["bracket_error"] = e.what();
      lines.push_back(std::string("bracket_error: ") + e.what());
    }
  }
  emit(out, opt.format, j, lines);
  return kExitOk;
}

int cmd_eval(const CommonOptions& opt, std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const NormalAssignment normals = resolve_normals(doc, opt.normals_file);
  const PureCondition pc = pure_condition(doc.geometry);
  const Rational value = evaluate(pc, normals);
  const bool vanishes = value == 0;

  json j;
  j["version"] = kVersion;
  j["value"] = format_rational(value);
  j["vanishes"] = vanishes;
  emit(out, opt.format, j,
       {"value: " + format_rational(value),
        std::string("vanishes: ") + (vanishes ? "true" : "false")});
  return vanishes ? kExitVanishes : kExitOk;
}

json realization_json(const IncidenceGeometry& g, const Realization& r) {
  json coords = json::object();
  for (const auto& p : g.points()) {
    json vec = json::array();
    for (const auto& q : r.coords.coords.at(p)) vec.push_back(format_rational(q));
    coords[p] = std::move(vec);
  }
  json offsets = json::object();
  for (const auto& h : g.hyperplanes())
    offsets[h] = format_rational(r.offsets.at(h));
  json out;
  out["coordinates"] = std::move(coords);
  out["offsets"] = std::move(offsets);
  return out;
}

int cmd_realize(const CommonOptions& opt, std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;
  const NormalAssignment normals = resolve_normals(doc, opt.normals_file);
  const std::string pin_point = pick_pin(doc, opt.pin);
  const RedrawingReport report = redrawing_space(g, normals, pin_point);

  json j;
  j["version"] = kVersion;
  j["pinned_point"] = report.pinned_point;
  j["kernel_dimension"] = report.kernel_dimension;
  json reds = json::array();
  for (std::size_t i = 0; i < report.redrawings.size(); ++i) {
    json r = realization_json(g, report.redrawings[i]);
    json entry;
    entry["classification"] = to_string(report.classifications[i]);
    entry["coordinates"] = r["coordinates"];
    entry["offsets"] = r["offsets"];
    reds.push_back(std::move(entry));
  }
  j["redrawings"] = std::move(reds);

  std::vector<std::string> lines = {
      "pinned_point: " + report.pinned_point,
      "kernel_dimension: " + std::to_string(report.kernel_dimension)};
  for (std::size_t i = 0; i < report.redrawings.size(); ++i) {
    lines.push_back("redrawing " + std::to_string(i) + ": " +
                    to_string(report.classifications[i]));
    const Realization& r = report.redrawings[i];
    for (const auto& p : g.points()) {
      std::string line = "  " + p + ":";
      for (const auto& q : r.coords.coords.at(p))
        line += " " + format_rational(q);
      lines.push_back(line);
    }
    for (const auto& h : g.hyperplanes())
      lines.push_back("  " + h + ": offset " +
                      format_rational(r.offsets.at(h)));
  }
  emit(out, opt.format, j, lines);
  return kExitOk;
}

int cmd_invariance(const CommonOptions& opt, int trials, int assignments,
                   std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;

  MatroidOptions mopts;
  mopts.seed = opt.seed;
  const bool basis = is_basis(g, mopts);

  json j;
  j["version"] = kVersion;
  j["seed"] = opt.seed;
  j["basis"] = basis;
  std::vector<std::string> lines = {
      std::string("basis: ") + (basis ? "true" : "false")};

  const RankPinReport rank_report =
      rank_pin_invariance_check(g, assignments, opt.seed);
  j["rank"] = {{"assignments", rank_report.assignments},
               {"all_equal", rank_report.all_equal}};
  lines.push_back("rank_pin_independent (" +
                  std::to_string(rank_report.assignments) +
                  " assignments): " +
                  (rank_report.all_equal ? "true" : "false"));

  if (basis) {
    const PinInvarianceReport pin_report = pin_invariance_check(g);
    json lambda = json::object();
    for (const auto& [point, l] : pin_report.lambda)
      lambda[point] = format_rational(l);
    j["pin"] = {{"all_equal", pin_report.all_equal},
                {"lambda", std::move(lambda)}};
    std::string lam = "pin_lambda:";
    for (const auto& [point, l] : pin_report.lambda)
      lam += " " + point + "=" + format_rational(l);
    lines.push_back(std::string("pin_invariant: ") +
                    (pin_report.all_equal ? "true" : "false"));
    lines.push_back(lam);

    const SlInvarianceReport sl_report =
        sl_invariance_check(g, trials, opt.seed);
    j["sl"] = {{"trials", sl_report.trials},
               {"dets_equal", sl_report.dets_equal},
               {"kernel_dims_equal", sl_report.kernel_dims_equal}};
    lines.push_back("sl_trials: " + std::to_string(sl_report.trials));
    lines.push_back(std::string("sl_dets_equal: ") +
                    (sl_report.dets_equal ? "true" : "false"));
    lines.push_back(std::string("sl_kernel_dims_equal: ") +
                    (sl_report.kernel_dims_equal ? "true" : "false"));
  }
  emit(out, opt.format, j, lines);
  return kExitOk;
}

int cmd_overconstrained(const CommonOptions& opt, bool with_minors,
                        std::ostream& out) {
  const GeometryDocument doc = parse_geometry_document(read_file(opt.file));
  const IncidenceGeometry& g = doc.geometry;
  const NormalAssignment normals = resolve_normals(doc, opt.normals_file);
  const std::string pin_point = pick_pin(doc, opt.pin);
  const OverconstrainedReport report =
      overconstrained_report(g, normals, pin_point, with_minors, opt.seed);

  json j;
  j["version"] = kVersion;
  j["seed"] = opt.seed;
  j["pinned_point"] = report.pinned_point;
  j["pinned_rank"] = report.pinned_rank;
  j["full_column_rank"] = report.full_column_rank;
  j["feasible"] = report.feasible;
  std::vector<std::string> lines = {
      "pinned_point: " + report.pinned_point,
      "pinned_rank: " + std::to_string(report.pinned_rank),
      "full_column_rank: " + std::to_string(report.full_column_rank),
      std::string("feasible: ") + (report.feasible ? "true" : "false")};
  if (report.minors) {
    j["minors"] = {{"total", report.minors->total},
                   {"nonzero_at_given", report.minors->nonzero_at_given},
                   {"nonzero_at_random", report.minors->nonzero_at_random}};
    lines.push_back("minors_total: " + std::to_string(report.minors->total));
    lines.push_back("minors_nonzero_at_given: " +
                    std::to_string(report.minors->nonzero_at_given));
    lines.push_back("minors_nonzero_at_random: " +
                    std::to_string(report.minors->nonzero_at_random));
  }
  emit(out, opt.format, j, lines);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact pure conditions for parallel redrawings of incidence "
               "geometries"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions opt;
  std::string format = "text";
  bool with_bracket = false;
  bool with_minors = false;
  int trials = 100;
  int assignments = 20;
  MatroidOptions mopts;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file)
      cmd->add_option("file", opt.file, "geometry document")->required();
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate",
                                          "parse and validate a geometry");
  add_common(validate);

  CLI::App* matroid = app.add_subcommand(
      "matroid", "independence and basis status in the d-plane matroid");
  add_common(matroid);
  matroid->add_option("--seed", opt.seed, "seed for randomized paths");
  matroid->add_option("--threshold", mopts.deterministic_threshold,
                      "max |I| for the deterministic subset check");
  matroid->add_option("--reps", mopts.repetitions,
                      "randomized rank repetitions");
  matroid->add_option("--prime", mopts.prime, "prime modulus");

  CLI::App* purecond = app.add_subcommand(
      "purecond", "canonical pure condition of a basis geometry");
  add_common(purecond);
  purecond->add_option("--pin", opt.pin, "pinned point (default: first)");
  purecond->add_flag("--bracket", with_bracket,
                     "also print the bracket form");

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate the pure condition at concrete normals");
  add_common(eval);
  eval->add_option("--normals", opt.normals_file,
                   "normals document (overrides embedded normals)");

  CLI::App* realize = app.add_subcommand(
      "realize", "parallel redrawings at concrete normals");
  add_common(realize);
  realize->add_option("--normals", opt.normals_file, "normals document");
  realize->add_option("--pin", opt.pin, "pinned point (default: first)");

  CLI::App* invariance = app.add_subcommand(
      "invariance", "pinned-point and SL-invariance property checks");
  add_common(invariance);
  invariance->add_option("--seed", opt.seed, "seed for random draws");
  invariance->add_option("--trials", trials, "SL-invariance trials");
  invariance->add_option("--assignments", assignments,
                         "assignments for the rank check");

  CLI::App* overconstrained = app.add_subcommand(
      "overconstrained", "rank and minor analysis of |I| > |H|+d|P|-d");
  add_common(overconstrained);
  overconstrained->add_option("--normals", opt.normals_file,
                              "normals document");
  overconstrained->add_option("--pin", opt.pin,
                              "pinned point (default: first)");
  overconstrained->add_flag("--minors", with_minors,
                            "evaluate all maximal minors");
  overconstrained->add_option("--seed", opt.seed,
                              "seed for the random minor census");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  opt.format = (format == "json") ? Format::json_doc : Format::text;
  mopts.seed = opt.seed;

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (matroid->parsed()) return cmd_matroid(opt, mopts, out);
    if (purecond->parsed()) return cmd_purecond(opt, with_bracket, out);
    if (eval->parsed()) return cmd_eval(opt, out);
    if (realize->parsed()) return cmd_realize(opt, out);
    if (invariance->parsed())
      return cmd_invariance(opt, trials, assignments, out);
    if (overconstrained->parsed())
      return cmd_overconstrained(opt, with_minors, out);
    err << "error: no command\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace predraw::cli

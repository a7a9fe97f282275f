#include "fintop/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <future>
#include <ostream>

#include "CLI11.hpp"

#include "fintop/beat_retracts.hpp"
#include "fintop/cofibration.hpp"
#include "fintop/cylinder.hpp"
#include "fintop/io.hpp"

namespace fintop::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

struct Options {
  std::string input;
  std::string batch_dir;
  std::vector<std::string> sub;
  std::string map_path;
  std::vector<std::string> contain;
  bool up = false;
  bool timing = false;
  std::size_t budget = 1'000'000;
};

struct Outcome {
  Json doc;
  std::string text;  // raw output (DOT) instead of a document
  int code = kVerdictTrue;
};

using Handler = std::function<Outcome(const std::string& input, const Options& opts)>;

Json query_with(const std::string& key, const std::string& input) {
  Json q;
  q[key] = input;
  return q;
}

Json document(const std::string& command, Json query) {
  Json doc;
  doc["command"] = command;
  doc["query"] = std::move(query);
  return doc;
}

void set_verdict(Outcome& o, bool verdict) {
  o.doc["verdict"] = verdict;
  o.code = verdict ? kVerdictTrue : kVerdictFalse;
}

[[noreturn]] void certificate_broken(const std::string& what) {
  throw std::logic_error("emitted certificate failed re-validation: " + what);
}

void validate_inclusion_report(const CofibrationReport& report) {
  for (const auto& check : report.per_component)
    if (!validates_as_dbp_certificate(check.component_space, check.target, check.certificate))
      certificate_broken("component certificate");
  if (report.assembled_retraction) {
    const SpaceMap& r = *report.assembled_retraction;
    for (Element x = 0; x < report.space.size(); ++x) {
      const Element rx = report.subspace.indices()[r(x)];
      if (!report.space.leq(rx, x) || (report.subspace.contains(x) && rx != x)) certificate_broken("retraction");
    }
  }
}

Outcome check_cofibration(const std::string& input, const Options& opts) {
  Outcome o;
  CofibrationReport report;
  if (!opts.map_path.empty()) {
    o.doc = document("check-cofibration", query_with("map", opts.map_path));
    report = is_cofibration_map(io::load_map(opts.map_path));
  } else {
    const FiniteSpace x = io::load_space(input);
    Json q = query_with("space", input);
    q["sub"] = opts.sub;
    o.doc = document("check-cofibration", std::move(q));
    report = is_cofibration_inclusion(x, Subspace::from_labels(x, opts.sub));
  }
  validate_inclusion_report(report);
  set_verdict(o, report.verdict);
  o.doc["certificate"] = io::cofibration_report_json(report);
  return o;
}

Outcome dbp_retract(const std::string& input, const Options& opts) {
  const FiniteSpace x = io::load_space(input);
  const Subspace a = Subspace::from_labels(x, opts.sub);
  Json q = query_with("space", input);
  q["sub"] = opts.sub;
  Outcome o;
  o.doc = document("dbp-retract", std::move(q));

  const auto cert = is_dbp_retract_maxcriterion(x, a);
  const auto removal = is_dbp_retract_removal(x, a);
  if (!validates_as_dbp_certificate(x, a, cert)) certificate_broken("max criterion");
  if (!replays_as_dbp_trace(x, removal.trace, removal.residue)) certificate_broken("removal trace");
  if (cert.ok() != removal.is_retract) throw std::logic_error("dbp-retract algorithms disagree");

  set_verdict(o, cert.ok());
  Json certificate;
  certificate["max_criterion"] = io::retract_certificate_json(x, a, cert);
  Json rem;
  rem["verdict"] = removal.is_retract;
  rem["trace"] = io::removal_trace_json(x, removal.trace);
  rem["residue"] = io::labels_json(x, removal.residue.indices());
  certificate["removal"] = std::move(rem);
  o.doc["certificate"] = std::move(certificate);
  return o;
}

Outcome core(const std::string& input, const Options& opts) {
  const FiniteSpace x = io::load_space(input);
  const Subspace a = Subspace::from_labels(x, opts.contain);
  Json q = query_with("space", input);
  q["contain"] = opts.contain;
  Outcome o;
  o.doc = document("core", std::move(q));
  const auto result = minimal_dbp_retract(x, a);
  if (!replays_as_dbp_trace(x, result.trace, result.retract)) certificate_broken("removal trace");
  set_verdict(o, true);
  Json certificate;
  certificate["subset"] = io::labels_json(x, result.retract.indices());
  certificate["trace"] = io::removal_trace_json(x, result.trace);
  o.doc["certificate"] = std::move(certificate);
  return o;
}

Outcome beat_points(const std::string& input, const Options& opts) {
  const FiniteSpace x = io::load_space(input);
  Json q = query_with("space", input);
  q["up"] = opts.up;
  Outcome o;
  o.doc = document("beat-points", std::move(q));
  o.doc["result"] = io::labels_json(x, opts.up ? up_beat_points(x) : down_beat_points(x));
  return o;
}

Outcome beat_search(const std::string& input, const Options& opts) {
  const FiniteSpace x = io::load_space(input);
  const Subspace a = Subspace::from_labels(x, opts.sub);
  Json q = query_with("space", input);
  q["sub"] = opts.sub;
  q["budget"] = opts.budget;
  Outcome o;
  o.doc = document("beat-search", std::move(q));
  const auto result = beat_point_retract_search(x, a, opts.budget);
  if (result.found && !replays_as_beat_sequence(x, result.sequence, a)) certificate_broken("beat sequence");
  set_verdict(o, result.found);
  o.doc["certificate"] = io::beat_search_json(x, result);
  return o;
}

Outcome quotient(const std::string& input, const Options&) {
  const FiniteSpace x = io::load_space(input);
  const QuotientData q = kolmogorov_quotient(x);
  Outcome o;
  o.doc = document("quotient", query_with("space", input));
  Json result;
  result["space"] = io::space_to_json(q.quotient);
  Json classes = Json::array();
  for (const auto& cls : q.classes()) classes.push_back(io::labels_json(x, cls));
  result["classes"] = std::move(classes);
  o.doc["result"] = std::move(result);
  return o;
}

Outcome components(const std::string& input, const Options&) {
  const FiniteSpace x = io::load_space(input);
  Outcome o;
  o.doc = document("components", query_with("space", input));
  Json comps = Json::array();
  for (const auto& c : connected_components(x)) comps.push_back(io::labels_json(x, c));
  o.doc["result"] = std::move(comps);
  return o;
}

Outcome opposite_space(const std::string& input, const Options&) {
  const FiniteSpace x = io::load_space(input);
  Outcome o;
  o.doc = document("opposite", query_with("space", input));
  o.doc["result"] = io::space_to_json(opposite(x));
  return o;
}

Outcome cylinder(const std::string& input, const Options&) {
  const SpaceMap f = io::load_map(input);
  const CylinderSpace c = build_cylinder(f);
  Outcome o;
  o.doc = document("cylinder", query_with("map", input));
  const auto jx = jX_cofibration(c);
  set_verdict(o, jx.verdict);
  Json certificate;
  certificate["cylinder"] = io::space_to_json(c.space);
  certificate["jX"] = io::jx_diagnostics_json(c, jx);
  if (!c.x_part.empty() && !c.y_part.empty()) {
    certificate["jY_cofibration"] = !jY_not_cofibration_check(c);
  }
  certificate["jY_op_cofibration"] = is_cofibration_inclusion(opposite(c.space), c.y_part).verdict;
  certificate["retraction_to_Y"] = io::retraction_json(cylinder_retraction(c), c.y_part);
  o.doc["certificate"] = std::move(certificate);
  return o;
}

Outcome render(const std::string& input, const Options&) {
  Outcome o;
  o.text = io::render_dot(io::load_space(input));
  return o;
}

struct Failure {
  int code;
  std::string message;
  std::string kind;
};

Failure classify(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    const int code = e.code() == Errc::ParseError ? kUsageError : kInvariantViolation;
    return {code, e.what(), std::string(errc_name(e.code()))};
  } catch (const std::ios_base::failure& e) {
    return {kUsageError, e.what(), "IOError"};
  } catch (const std::exception& e) {
    return {kInvariantViolation, std::string("internal error: ") + e.what(), "InternalError"};
  }
}

Outcome run_one(const Handler& handler, const std::string& input, const Options& opts,
                std::string& diagnostics) {
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = handler(input, opts);
    if (opts.timing && o.text.empty()) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      o.doc["timing_ms"] = elapsed.count();
    }
    return o;
  } catch (...) {
    const Failure f = classify(std::current_exception());
    diagnostics = (input.empty() ? std::string{} : input + ": ") + f.message;
    Outcome o;
    o.code = f.code;
    o.doc["input"] = input;
    o.doc["error"] = {{"kind", f.kind}, {"message", f.message}};
    return o;
  }
}

int run_batch(const Handler& handler, const Options& opts, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(opts.batch_dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    err << "cannot read batch directory '" << opts.batch_dir << "': " << ec.message() << "\n";
    return kUsageError;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::string> diagnostics(files.size());
  std::vector<std::future<Outcome>> jobs;
  jobs.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return run_one(handler, files[i].string(), opts, diagnostics[i]);
    }));
  }
  int code = kVerdictTrue;
  Json docs = Json::array();
  std::string text;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Outcome o = jobs[i].get();
    if (!diagnostics[i].empty()) err << diagnostics[i] << "\n";
    code = std::max(code, o.code);  // errors outrank false, false outranks true
    if (!o.text.empty()) {
      text += o.text;
    } else {
      docs.push_back(std::move(o.doc));
    }
  }
  if (!text.empty()) out << text;
  if (!docs.empty() || text.empty()) out << docs.dump(2) << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces: beat points, dbp-retracts and cofibrations", "fintop"};
  app.require_subcommand(1, 1);
  Options opts;
  Handler handler;
  app.add_flag("--timing", opts.timing, "Report elapsed time in verdict documents");

  auto add_command = [&](const std::string& name, const std::string& about, Handler h, bool input_is_map = false) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("input", opts.input, input_is_map ? "map document" : "space document");
    if (!input_is_map) sub->add_option("--batch", opts.batch_dir, "Run on every .json file in a directory");
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };

  auto* cof = add_command("check-cofibration", "Decide whether an inclusion or a map is a cofibration", check_cofibration);
  auto* cof_sub = cof->add_option("--sub", opts.sub, "Subspace labels (comma separated)")->delimiter(',')->expected(0, -1);
  cof->add_option("--map", opts.map_path, "Map document instead of a subspace")->excludes(cof_sub);

  auto* dbp = add_command("dbp-retract", "Decide whether a subspace is a dbp-retract (both algorithms)", dbp_retract);
  dbp->add_option("--sub", opts.sub, "Subspace labels (comma separated)")->delimiter(',')->expected(0, -1)->required();

  auto* cr = add_command("core", "Minimal dbp-retract containing a subspace", core);
  cr->add_option("--contain", opts.contain, "Labels that must survive (comma separated)")->delimiter(',')->expected(0, -1);

  auto* bp = add_command("beat-points", "List down (or up) beat points", beat_points);
  bp->add_flag("--up", opts.up, "Up beat points instead of down beat points");

  auto* bs = add_command("beat-search", "Search for mixed beat point removals ending at a subspace", beat_search);
  bs->add_option("--sub", opts.sub, "Subspace labels (comma separated)")->delimiter(',')->expected(0, -1)->required();
  bs->add_option("--budget", opts.budget, "Maximum number of search states");

  add_command("quotient", "Kolmogorov (T0) quotient", quotient);
  add_command("components", "Connected components", components);
  add_command("opposite", "Opposite space", opposite_space);
  add_command("cylinder", "Non-Hausdorff mapping cylinder of a map and its cofibration diagnostics", cylinder, true);
  add_command("render-dot", "Hasse diagram in DOT format", render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerdictTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerdictTrue;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  const bool has_input = !opts.input.empty();
  const bool has_batch = !opts.batch_dir.empty();
  const bool map_mode = !opts.map_path.empty();
  if (map_mode && (has_input || has_batch)) {
    err << "--map replaces the space argument\n";
    return kUsageError;
  }
  if (!map_mode && has_input == has_batch) {
    err << "give exactly one of a document path or --batch <dir>\n";
    return kUsageError;
  }

  if (has_batch) return run_batch(handler, opts, out, err);

  std::string diagnostics;
  Outcome o = run_one(handler, opts.input, opts, diagnostics);
  if (!diagnostics.empty()) {
    err << diagnostics << "\n";
    return o.code;
  }
  if (!o.text.empty()) {
    out << o.text;
  } else {
    out << o.doc.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace fintop::cli

#include "srcomplex/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srcomplex/bouquet.hpp"
#include "srcomplex/error.hpp"
#include "srcomplex/graver.hpp"
#include "srcomplex/graver_cache.hpp"
#include "srcomplex/lattice.hpp"
#include "srcomplex/lawrence.hpp"
#include "srcomplex/matrix_io.hpp"
#include "srcomplex/robustness.hpp"

namespace srcomplex::cli {
namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string output;
  bool json = false;
  std::string cache_dir;
  std::size_t threads = 1;
  bool oracle = false;
  bool timing = false;
};

// What a subcommand hands back for rendering.
struct Outcome {
  json operands = json::array();
  std::optional<std::string> input_hash;
  json result = json::object();
  std::string text;
  int exit_code = 0;
  std::optional<IntMatrix> matrix_output;
};

// Oracle runs refuse boxes beyond this many lattice points.
constexpr double kOracleBoxLimit = 5e7;

json integer_json(const Integer& x) {
  if (x.fits_int64()) return json(x.to_int64());
  return json(x.to_string());
}

json vector_json(const IntVec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

json matrix_json(const IntMatrix& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) rows.push_back(vector_json(a.row(i).transpose()));
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

json faces_json(const std::vector<SimplicialComplex::Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(f);
  return out;
}

std::string vector_text(const IntVec& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v(i).to_string();
  }
  return out + ")";
}

std::string indices_text(const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(members[k]);
  }
  return out + "}";
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto value = Integer::parse(item);
    if (!value || !value->fits_int64()) throw Error(ErrorCode::InvalidArgument, "bad integer list '" + text + "'");
    out.push_back(value->to_int64());
  }
  return out;
}

IntMatrix load_input(const std::string& path, Outcome& outcome) {
  IntMatrix a = read_matrix_file(path);
  outcome.operands.push_back(path);
  outcome.input_hash = matrix_hash(a);
  return a;
}

// Brute-force cross-check of a computed Graver basis.
json graver_oracle(const GraverBasis<Integer>& graver) {
  // Two past the largest observed norm: a missed element of norm max + 1
  // would still be visible in the box.
  const Integer bound = graver.max_norm() + Integer(2);
  double box = 1.0;
  for (Index j = 0; j < graver.dimension(); ++j) box *= 2.0 * static_cast<double>(bound.to_int64()) + 1.0;
  if (box > kOracleBoxLimit) return json{{"bound", integer_json(bound)}, {"skipped", "search box too large"}};
  const auto brute = graver_brute_force(graver.source(), bound.to_int64());
  bool agrees = brute.size() == graver.size();
  for (std::size_t i = 0; agrees && i < brute.size(); ++i) agrees = equal_vectors(brute[i], graver.representatives()[i]);
  if (!agrees) throw Error(ErrorCode::OracleMismatch, "completion and brute-force Graver sets differ");
  return json{{"bound", integer_json(bound)}, {"agrees", true}};
}

Outcome run_graver(const std::string& path, const Settings& settings) {
  Outcome o;
  const IntMatrix a = load_input(path, o);
  const auto cache = GraverCache::from_settings(settings.cache_dir);
  const auto graver = cached_graver_basis(a, cache ? &*cache : nullptr, GraverOptions{settings.threads});
  json elements = json::array();
  for (const auto& g : graver.representatives()) elements.push_back(vector_json(g));
  o.result = json{{"graver_size", graver.size()}, {"max_norm", integer_json(graver.max_norm())},
                  {"elements", std::move(elements)}};
  o.text = "graver basis: " + std::to_string(graver.size()) + " elements (one per sign pair)\n" +
           write_matrix(graver.to_matrix());
  if (settings.oracle) {
    o.result["oracle"] = graver_oracle(graver);
    o.text += "oracle: " + o.result["oracle"].dump() + "\n";
  }
  o.matrix_output = graver.to_matrix();
  return o;
}

Outcome run_bouquets(const std::string& path, const Settings&) {
  Outcome o;
  const IntMatrix a = load_input(path, o);
  const auto decomposition = bouquet_decomposition(a);
  json table = json::array();
  std::string text;
  std::size_t index = 1;
  for (const auto& b : decomposition.bouquets()) {
    std::vector<std::size_t> members;
    for (Index j : b.members) members.push_back(static_cast<std::size_t>(j) + 1);
    json row{{"index", index}, {"members", members}, {"class", bouquet_class_name(b.kind)}};
    row["c"] = b.c ? vector_json(*b.c) : json(nullptr);
    row["a"] = b.a ? vector_json(*b.a) : json(nullptr);
    text += "B" + std::to_string(index) + " " + indices_text(members) + " " + std::string(bouquet_class_name(b.kind));
    if (b.c) text += " c=" + vector_text(*b.c) + " a=" + vector_text(*b.a);
    text += "\n";
    table.push_back(std::move(row));
    ++index;
  }
  const bool simple = decomposition.size() == static_cast<std::size_t>(a.cols());
  o.result = json{{"columns", a.cols()}, {"simple", simple}, {"bouquets", std::move(table)}};
  if (decomposition.has_free_bouquet()) {
    o.result["bouquet_ideal"] = nullptr;
  } else {
    const auto ideal = bouquet_ideal(a);
    o.result["bouquet_ideal"] = matrix_json(ideal.matrix);
    text += "bouquet ideal matrix:\n" + write_matrix(ideal.matrix);
  }
  o.text = (simple ? "simple configuration\n" : "non-simple configuration\n") + text;
  return o;
}

Outcome run_robust(const std::string& path, const Settings& settings) {
  Outcome o;
  const IntMatrix a = load_input(path, o);
  const auto cache = GraverCache::from_settings(settings.cache_dir);
  const auto graver = cached_graver_basis(a, cache ? &*cache : nullptr, GraverOptions{settings.threads});
  const auto indispensable = indispensable_set(graver, settings.threads);
  const bool robust = indispensable.size() == graver.size();
  json dispensable = json::array();
  for (const auto& g : graver.representatives()) {
    if (!is_indispensable(g, graver)) dispensable.push_back(vector_json(g));
  }
  o.result = json{{"graver_size", graver.size()},
                  {"indispensable_size", indispensable.size()},
                  {"strongly_robust", robust},
                  {"dispensable", std::move(dispensable)}};
  o.text = std::string(robust ? "strongly robust" : "not strongly robust") + ": " +
           std::to_string(indispensable.size()) + " of " + std::to_string(graver.size()) +
           " Graver elements are indispensable\n";
  if (settings.oracle) {
    o.result["oracle"] = graver_oracle(graver);
    o.text += "oracle: " + o.result["oracle"].dump() + "\n";
  }
  return o;
}

struct ComplexRun {
  SimplicialComplex complex;
  Index rank = 0;
  std::size_t evaluated = 0;
  GraverBasis<Integer> graver;
};

ComplexRun compute_complex(const IntMatrix& t, const Settings& settings) {
  validate_simple_base(t);
  const auto cache = GraverCache::from_settings(settings.cache_dir);
  ComplexRun run;
  run.graver = cached_graver_basis(t, cache ? &*cache : nullptr, GraverOptions{settings.threads});
  EnumerationStats stats;
  run.complex = strongly_robust_complex(run.graver, ComplexOptions{settings.threads}, &stats);
  run.evaluated = stats.candidates_evaluated;
  run.rank = rank(t);
  return run;
}

Outcome run_complex(const std::string& path, const Settings& settings) {
  Outcome o;
  const IntMatrix t = load_input(path, o);
  const ComplexRun run = compute_complex(t, settings);
  const auto& maximal = run.complex.maximal_faces();
  o.result = json{{"ground_size", run.complex.ground_size()},
                  {"rank", run.rank},
                  {"maximal_faces", faces_json(maximal)},
                  {"dimension", run.complex.dimension()},
                  {"face_count", run.complex.face_count()},
                  {"candidates_evaluated", run.evaluated}};
  o.text = "maximal faces:";
  for (const auto& f : maximal) o.text += " " + indices_text(f);
  o.text += "\ndimension " + std::to_string(run.complex.dimension()) + ", " +
            std::to_string(run.complex.face_count()) + " faces, rank " + std::to_string(run.rank) + "\n";
  if (settings.oracle) {
    // Recompute Gr(Λ(T)_ω) by completion for every maximal face.
    for (const auto& f : maximal) {
      const OmegaSet omega(run.complex.ground_size(), f);
      const auto direct = graver_basis(lawrence_lift_omega(t, omega), GraverOptions{settings.threads});
      if (!(direct == lifted_graver(run.graver, omega))) {
        throw Error(ErrorCode::OracleMismatch, "lifted and direct Graver bases differ at " + omega.to_string());
      }
    }
    o.result["oracle"] = json{{"checked_faces", maximal.size()}, {"agrees", true}};
    o.text += "oracle: lifted Graver bases agree on " + std::to_string(maximal.size()) + " maximal faces\n";
  }
  return o;
}

Outcome run_check_dimension(const std::string& path, const Settings& settings) {
  Outcome o;
  const IntMatrix t = load_input(path, o);
  const ComplexRun run = compute_complex(t, settings);
  const bool holds = run.complex.dimension() < run.rank;
  json general_position = nullptr;
  if (t.cols() >= t.rows() + 2) general_position = is_general_position(t, settings.threads);
  o.result = json{{"dimension", run.complex.dimension()},
                  {"rank", run.rank},
                  {"general_position", general_position},
                  {"holds", holds}};
  o.text = "dim = " + std::to_string(run.complex.dimension()) + (holds ? " < " : " >= ") + "rank = " +
           std::to_string(run.rank) + "\n";
  o.exit_code = holds ? 0 : kExitViolation;
  return o;
}

Outcome run_lift(const std::string& path, const std::string& omega_text, const Settings&) {
  Outcome o;
  const IntMatrix t = load_input(path, o);
  std::vector<std::size_t> members;
  for (long long v : parse_int_list(omega_text)) {
    if (v < 1) throw Error(ErrorCode::InvalidOmega, "omega members are one-based");
    members.push_back(static_cast<std::size_t>(v));
  }
  const OmegaSet omega(static_cast<std::size_t>(t.cols()), members);
  o.operands.push_back("--omega=" + omega_text);
  const IntMatrix lifted = lawrence_lift_omega(t, omega);
  o.result = json{{"omega", omega.members()}, {"matrix", matrix_json(lifted)}};
  o.text = write_matrix(lifted);
  o.matrix_output = lifted;
  return o;
}

Outcome run_glm(const std::string& path, const std::vector<std::string>& c_specs,
                const std::vector<std::string>& lambda_specs, const Settings&) {
  Outcome o;
  GLMSpec<Integer> spec;
  spec.base = load_input(path, o);
  for (const auto& c : c_specs) {
    spec.c.push_back(make_vector(parse_int_list(c)));
    o.operands.push_back("--c=" + c);
  }
  if (!lambda_specs.empty()) {
    std::vector<IntVec> lambdas;
    for (const auto& l : lambda_specs) {
      lambdas.push_back(make_vector(parse_int_list(l)));
      o.operands.push_back("--lambda=" + l);
    }
    spec.lambda = std::move(lambdas);
  }
  const IntMatrix a = build_generalized_lawrence(spec);
  o.result = json{{"matrix", matrix_json(a)}};
  o.text = write_matrix(a);
  o.matrix_output = a;
  return o;
}

Outcome run_cyclic(long long d, const std::vector<long long>& ts, const Settings&) {
  Outcome o;
  o.operands.push_back(d);
  for (long long t : ts) o.operands.push_back(t);
  const IntMatrix a = cyclic_configuration(static_cast<Index>(d), std::span<const long long>(ts));
  o.result = json{{"matrix", matrix_json(a)}};
  o.text = write_matrix(a);
  o.matrix_output = a;
  return o;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "short write to " + path);
}

std::string error_json(std::string_view code, const std::string& message) {
  json e{{"schema", kReportSchema}, {"status", kExitError}, {"error", {{"code", code}, {"message", message}}}};
  return e.dump() + "\n";
}

}  // namespace

Report execute(const std::vector<std::string>& args) {
  CLI::App app{"Strongly robust complexes of toric ideals", "srcomplex"};
  app.require_subcommand(1, 1);

  Settings settings;
  app.add_option("-o,--output", settings.output, "Write the matrix (or the report) to this path");
  app.add_flag("--json", settings.json, "Emit a JSON report on stdout");
  app.add_option("--cache-dir", settings.cache_dir, std::string("Graver cache directory (default: $") + kCacheDirEnv + ")");
  app.add_option("--threads", settings.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", settings.oracle, "Cross-check results by brute force");
  app.add_flag("--timing", settings.timing, "Include wall-clock timing in the report");

  std::string matrix_path;
  std::string omega_text;
  std::vector<std::string> c_specs;
  std::vector<std::string> lambda_specs;
  long long cyclic_d = 0;
  std::vector<long long> cyclic_ts;

  auto add_matrix_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("matrix", matrix_path, "Matrix file")->required();
    sub->fallthrough();
    return sub;
  };
  add_matrix_command("graver", "Graver basis of a pointed configuration");
  add_matrix_command("bouquets", "Bouquet decomposition and bouquet ideal");
  add_matrix_command("robust", "Decide strong robustness");
  add_matrix_command("complex", "Strongly robust complex of a simple configuration");
  add_matrix_command("check-dimension", "Exit 0 iff dim of the complex is below rank");
  add_matrix_command("lift", "Partial second Lawrence lifting")
      ->add_option("--omega", omega_text, "Comma-separated one-based indices to remove");
  CLI::App* glm = add_matrix_command("glm", "Generalized Lawrence matrix");
  glm->add_option("--c", c_specs, "c-vector for the next column, comma-separated (repeat per column)")->required();
  glm->add_option("--lambda", lambda_specs, "lambda-vector per column (all or none)");
  CLI::App* cyclic = app.add_subcommand("cyclic", "Cyclic configuration with columns (1, t, ..., t^{d-1})");
  cyclic->add_option("d", cyclic_d, "Number of rows")->required();
  cyclic->add_option("t", cyclic_ts, "Strictly increasing parameters")->required();
  cyclic->fallthrough();

  Report report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.out = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.exit_code = kExitError;
    report.err = error_json("InvalidArgument", e.what());
    return report;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (name == "graver") o = run_graver(matrix_path, settings);
    else if (name == "bouquets") o = run_bouquets(matrix_path, settings);
    else if (name == "robust") o = run_robust(matrix_path, settings);
    else if (name == "complex") o = run_complex(matrix_path, settings);
    else if (name == "check-dimension") o = run_check_dimension(matrix_path, settings);
    else if (name == "lift") o = run_lift(matrix_path, omega_text, settings);
    else if (name == "glm") o = run_glm(matrix_path, c_specs, lambda_specs, settings);
    else o = run_cyclic(cyclic_d, cyclic_ts, settings);

    // Thread count, cache and output locations never enter the report.
    json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = json{{"name", name}, {"operands", o.operands}, {"oracle", settings.oracle}};
    doc["input_hash"] = o.input_hash ? json(*o.input_hash) : json(nullptr);
    doc["result"] = std::move(o.result);
    doc["status"] = o.exit_code;
    if (settings.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      doc["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    const std::string rendered = settings.json ? doc.dump(2) + "\n" : o.text;

    if (!settings.output.empty() && o.matrix_output) {
      write_matrix_file(settings.output, *o.matrix_output);
      if (settings.json) report.out = rendered;
    } else if (!settings.output.empty()) {
      write_text_file(settings.output, rendered);
    } else {
      report.out = rendered;
    }
    report.exit_code = o.exit_code;
  } catch (const Error& e) {
    report.exit_code = kExitError;
    report.err = error_json(error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    report.exit_code = kExitError;
    report.err = error_json("Internal", e.what());
  }
  return report;
}

}  // namespace srcomplex::cli

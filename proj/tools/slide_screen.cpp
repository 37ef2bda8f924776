// slide-screen: command-line front end for the framed-link slide calculus,
// surgery homology, fibered-monodromy screening, and fiber bookkeeping.
// All structured output is JSON (schema 1) with deterministic key and list
// ordering, so runs are byte-identical for identical inputs.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slidescreen/fiber_calc.hpp"
#include "slidescreen/framed_link.hpp"
#include "slidescreen/lattice.hpp"
#include "slidescreen/monodromy.hpp"
#include "slidescreen/screen.hpp"

namespace ss = slidescreen;
using json = nlohmann::ordered_json;

namespace {

// Malformed input files or flag combinations; maps to exit code 2.
struct InputFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputFormatError("cannot open file: " + path);
      j = json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputFormatError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputFormatError(what + " must be an integer");
  return j.get<std::int64_t>();
}

ss::IntMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputFormatError(what + " must be a nonempty array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputFormatError(what + " rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) r.push_back(as_int(v, what + " entry"));
    rows.push_back(std::move(r));
  }
  return ss::IntMatrix::from_rows(rows);
}

json matrix_to_json(const ss::IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

ss::FramedLink link_from_file(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix"))
    throw InputFormatError("link file must be an object with \"n\" and \"matrix\"");
  const std::int64_t n = as_int(j["n"], "link component count");
  const ss::IntMatrix m = matrix_from_json(j["matrix"], "link matrix");
  if (n < 1 || m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
    throw ss::DomainError("link matrix must be n x n with n >= 1");
  return ss::FramedLink(m);  // symmetry checked here
}

ss::FiberedMonodromy monodromy_from_file(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_object() || !j.contains("genus") || !j.contains("matrix"))
    throw InputFormatError("monodromy file must be an object with \"genus\" and \"matrix\"");
  const std::int64_t g = as_int(j["genus"], "genus");
  const ss::IntMatrix m = matrix_from_json(j["matrix"], "monodromy matrix");
  if (g < 1 || m.rows() != static_cast<std::size_t>(2 * g))
    throw ss::DomainError("monodromy matrix must be 2g x 2g with g >= 1");
  return ss::FiberedMonodromy(m);
}

ss::FiberedMonodromy monodromy_by_name(const std::string& name) {
  if (name == "figure8") return ss::make_figure_eight();
  if (name == "trefoil") return ss::make_trefoil();
  // treat anything else as a path so `monodromy sum` can mix names and files
  return monodromy_from_file(name);
}

ss::FiberedMonodromy resolve_monodromy(const std::string& name, const std::string& file) {
  if (!name.empty() && !file.empty())
    throw InputFormatError("give either --monodromy or --monodromy-file, not both");
  if (!name.empty()) {
    if (name != "figure8" && name != "trefoil")
      throw InputFormatError("unknown monodromy name (built-ins: figure8, trefoil)");
    return monodromy_by_name(name);
  }
  if (!file.empty()) return monodromy_from_file(file);
  throw InputFormatError("a monodromy is required (--monodromy or --monodromy-file)");
}

std::vector<std::int64_t> parse_class(const std::string& s) {
  std::vector<std::int64_t> coords;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputFormatError("bad class coordinate: '" + tok + "'");
    }
  }
  if (coords.empty()) throw InputFormatError("empty class");
  return coords;
}

unsigned workers_from_env() {
  const char* env = std::getenv("SLIDE_SCREEN_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const long v = std::stol(env);
    if (v < 1) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InputFormatError("SLIDE_SCREEN_THREADS must be a positive integer");
  }
}

json solution_report(const ss::SolutionSet& s, const std::optional<std::string>& note) {
  json out;
  out["schema"] = 1;
  out["constraint"] = {{"lower", s.constraint.lower}, {"upper", s.constraint.upper}};
  out["bound"] = s.bound;
  json classes = json::array();
  for (const auto& c : s.classes) classes.push_back(c.coords());
  out["solutions"] = std::move(classes);
  out["values"] = s.values;
  if (note) out["note"] = *note;
  return out;
}

json surface_to_json(const ss::FiberSurface& f) {
  return json{{"components", f.components()},
              {"genera", f.genera()},
              {"euler_characteristic", f.euler_characteristic()},
              {"total_genus", f.total_genus()}};
}

void print_result(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string())
      std::cout << key << ": " << value.get<std::string>() << "\n";
    else
      std::cout << key << ": " << value.dump() << "\n";
  }
}

struct FiberArgs {
  std::int64_t genus = 0;
  bool non_separating = false;
  std::string split;  // "g1,g2"
  bool fixed = false;
  std::string orientation;  // "preserved" | "reversed"

  ss::CurveOnFiber curve() const {
    ss::CurveOnFiber c;
    if (!split.empty() && non_separating)
      throw InputFormatError("give either --separating or --non-separating, not both");
    if (split.empty() && !non_separating)
      throw InputFormatError("curve type required: --non-separating or --separating g1,g2");
    if (!split.empty()) {
      const auto parts = parse_class(split);
      if (parts.size() != 2) throw InputFormatError("--separating expects two genera: g1,g2");
      c.separating = true;
      c.split = {parts[0], parts[1]};
    }
    if (fixed) c.isotopy_class_fixed = true;
    if (!orientation.empty()) {
      if (orientation != "preserved" && orientation != "reversed")
        throw InputFormatError("--orientation must be 'preserved' or 'reversed'");
      c.orientation_preserved = (orientation == "preserved");
    }
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "slide-screen: handle-slide calculus on framing/linking matrices, surgery homology,\n"
      "and screening of homology classes in fiber surfaces against the monodromy\n"
      "intersection constraint."};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = true;
  app.add_flag("--json,!--no-json", as_json,
               "emit JSON (default on; --no-json prints key: value lines)");

  json result;
  const auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // ---- snf ----------------------------------------------------------------
  auto* snf_cmd = sub(&app, "snf", "Smith normal form U*A*V = D of an integer matrix");
  std::string snf_file;
  snf_cmd->add_option("--matrix-file", snf_file, "JSON file {\"matrix\": [[int]]}; '-' for stdin")
      ->required();
  snf_cmd->callback([&] {
    const json j = read_json_file(snf_file);
    if (!j.is_object() || !j.contains("matrix"))
      throw InputFormatError("matrix file must be an object with \"matrix\"");
    const ss::IntMatrix a = matrix_from_json(j["matrix"], "matrix");
    const ss::SmithDecomposition d = ss::smith_normal_form(a);
    json diag = json::array();
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) diag.push_back(d.d.at(i, i));
    result = {{"schema", 1},
              {"rows", a.rows()},
              {"cols", a.cols()},
              {"U", matrix_to_json(d.u)},
              {"D", matrix_to_json(d.d)},
              {"V", matrix_to_json(d.v)},
              {"diagonal", std::move(diag)}};
  });

  // ---- link ---------------------------------------------------------------
  auto* link_cmd = sub(&app, "link", "framed-link operations on the framing/linking matrix");
  link_cmd->require_subcommand(1);
  std::string link_file;
  link_cmd->add_option("--link-file", link_file, "JSON file {\"n\": int, \"matrix\": [[int]]}")
      ->required();

  auto* link_check = sub(link_cmd, "check",
                         "necessary condition for surgery to give #_n(S^1 x S^2)");
  link_check->callback([&] {
    result = {{"schema", 1}, {"gpr_admissible", ss::is_gpr_admissible(link_from_file(link_file))}};
  });

  auto* link_slide = sub(link_cmd, "slide", "slide one component over another");
  std::int64_t slider = 0, over = 0;
  int sign = 1;
  link_slide->add_option("--slider", slider, "component being slid (0-based)")->required();
  link_slide->add_option("--over", over, "component slid over (0-based)")->required();
  link_slide->add_option("--sign", sign, "band sign, +1 or -1 (default +1)");
  link_slide->callback([&] {
    const ss::FramedLink l = link_from_file(link_file);
    if (slider < 0 || over < 0) throw ss::DomainError("component indices must be >= 0");
    const ss::FramedLink slid = ss::apply_slide(
        l, ss::SlideMove(static_cast<std::size_t>(slider), static_cast<std::size_t>(over), sign));
    result = {{"schema", 1}, {"n", slid.components()}, {"matrix", matrix_to_json(slid.matrix())}};
  });

  auto* link_hom = sub(link_cmd, "homology", "H_1 of the surgered manifold (cokernel invariants)");
  link_hom->callback([&] {
    const ss::AbelianGroupInvariants inv = ss::surgery_homology(link_from_file(link_file));
    result = {{"schema", 1}, {"torsion", inv.torsion}, {"free_rank", inv.free_rank}};
  });

  // ---- seq ----------------------------------------------------------------
  auto* seq_cmd = sub(&app, "seq", "slide-sequence operations");
  seq_cmd->require_subcommand(1);
  auto* seq_dual = sub(seq_cmd, "dual", "dual sequence: swap each move's roles, reverse order");
  std::string seq_file;
  seq_dual
      ->add_option("--seq-file", seq_file,
                   "JSON file {\"moves\": [{\"slider\", \"over\", \"sign\"}]}")
      ->required();
  seq_dual->callback([&] {
    const json j = read_json_file(seq_file);
    if (!j.is_object() || !j.contains("moves") || !j["moves"].is_array())
      throw InputFormatError("sequence file must be an object with a \"moves\" array");
    ss::SlideSequence seq;
    for (const auto& m : j["moves"]) {
      if (!m.is_object() || !m.contains("slider") || !m.contains("over") || !m.contains("sign"))
        throw InputFormatError("each move needs \"slider\", \"over\" and \"sign\"");
      const std::int64_t s = as_int(m["slider"], "slider");
      const std::int64_t o = as_int(m["over"], "over");
      if (s < 0 || o < 0) throw ss::DomainError("component indices must be >= 0");
      seq.moves.emplace_back(static_cast<std::size_t>(s), static_cast<std::size_t>(o),
                             static_cast<int>(as_int(m["sign"], "sign")));
    }
    const ss::SlideSequence dual = ss::dual_slide_sequence(seq);
    json moves = json::array();
    for (const auto& m : dual.moves)
      moves.push_back({{"slider", m.slider}, {"over", m.over}, {"sign", m.sign}});
    result = {{"schema", 1}, {"moves", std::move(moves)}};
  });

  // ---- monodromy ----------------------------------------------------------
  auto* mono_cmd = sub(&app, "monodromy", "fibered-monodromy operations");
  mono_cmd->require_subcommand(1);

  auto* mono_show = sub(mono_cmd, "show", "matrix and screening form of a monodromy");
  std::string mono_name, mono_file;
  mono_show->add_option("--monodromy", mono_name, "built-in name: figure8 or trefoil");
  mono_show->add_option("--monodromy-file", mono_file,
                        "JSON file {\"genus\": int, \"matrix\": [[int]]}");
  mono_show->callback([&] {
    const ss::FiberedMonodromy h = resolve_monodromy(mono_name, mono_file);
    const ss::QuadraticForm q = ss::screening_form(h);
    json form;
    if (h.genus() == 1) {
      const auto c = q.genus_one_coefficients();
      form = {{"m2", c.m2}, {"mn", c.mn}, {"n2", c.n2}};
    }
    form["matrix"] = matrix_to_json(q.coefficient_matrix());
    result = {{"schema", 1},
              {"genus", h.genus()},
              {"matrix", matrix_to_json(h.matrix())},
              {"symplectic", true},
              {"screening_form", std::move(form)}};
  });

  auto* mono_sum = sub(mono_cmd, "sum", "connected sum (block diagonal) of monodromies");
  std::vector<std::string> mono_parts;
  mono_sum
      ->add_option("--monodromy", mono_parts,
                   "block list, in order; each a built-in name or a monodromy file path")
      ->required()
      ->expected(-1);
  mono_sum->callback([&] {
    std::vector<ss::FiberedMonodromy> parts;
    for (const auto& p : mono_parts) parts.push_back(monodromy_by_name(p));
    const ss::ConnectedSumDecomposition d = ss::connected_sum(std::move(parts));
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(b.genus());
    const ss::FiberedMonodromy h = d.assembled();
    result = {{"schema", 1},
              {"genus", h.genus()},
              {"blocks", std::move(blocks)},
              {"matrix", matrix_to_json(h.matrix())}};
  });

  // ---- screen -------------------------------------------------------------
  auto* screen_cmd = sub(&app, "screen", "enumerate and test homology classes");
  screen_cmd->require_subcommand(1);

  std::int64_t bound = 0, lower = -1, upper = 1;
  bool allow_zero = false, allow_imprimitive = false, paper_form = false;
  std::string screen_mono, screen_mono_file;

  auto* screen_brute = sub(screen_cmd, "brute", "exhaustive box scan of the screening form");
  screen_brute->add_option("--monodromy", screen_mono, "built-in name: figure8 or trefoil");
  screen_brute->add_option("--monodromy-file", screen_mono_file, "monodromy JSON file");
  screen_brute->add_option("--bound", bound, "box bound: every |coordinate| <= bound, inclusive")
      ->required();
  screen_brute->add_option("--lower", lower, "constraint lower bound (default -1)");
  screen_brute->add_option("--upper", upper, "constraint upper bound (default +1)");
  screen_brute->add_flag("--allow-zero", allow_zero, "include the zero class");
  screen_brute->add_flag("--allow-imprimitive", allow_imprimitive, "include imprimitive classes");
  screen_brute->add_flag("--paper-form", paper_form,
                         "use the printed catalog form for a built-in monodromy (trefoil: "
                         "m^2+mn+n^2 instead of the matrix-derived m^2-mn+n^2)");
  screen_brute->callback([&] {
    std::optional<std::string> note;
    ss::QuadraticForm q = [&] {
      if (paper_form) {
        if (screen_mono == "trefoil") {
          note = "paper-form: trefoil form m^2+mn+n^2 (matrix-derived form m^2-mn+n^2 under "
                 "n -> -n)";
          return ss::QuadraticForm(ss::IntMatrix::from_rows({{1, 1}, {0, 1}}));
        }
        if (screen_mono == "figure8") {
          note = "paper-form: figure8 form -m^2+mn+n^2 coincides with the matrix-derived form";
          return ss::screening_form(ss::make_figure_eight());
        }
        throw InputFormatError("--paper-form needs --monodromy figure8 or trefoil");
      }
      return ss::screening_form(resolve_monodromy(screen_mono, screen_mono_file));
    }();
    ss::ScreenOptions opts;
    opts.allow_zero = allow_zero;
    opts.allow_imprimitive = allow_imprimitive;
    opts.workers = workers_from_env();
    const ss::SolutionSet s =
        ss::brute_force_solutions(q, bound, ss::ScreenConstraint(lower, upper), opts);
    result = solution_report(s, note);
  });

  auto* screen_fib = sub(screen_cmd, "fib", "Fibonacci parametrization of figure-eight solutions");
  screen_fib->add_option("--bound", bound, "box bound, inclusive")->required();
  screen_fib->callback([&] { result = solution_report(ss::fibonacci_solutions(bound), {}); });

  auto* screen_descend = sub(screen_cmd, "descend", "descend a class to its orbit representative");
  std::string class_arg;
  screen_descend->add_option("--monodromy", screen_mono, "built-in name: figure8 or trefoil");
  screen_descend->add_option("--monodromy-file", screen_mono_file, "monodromy JSON file");
  screen_descend->add_option("--class", class_arg, "class coordinates, e.g. '5,3'")->required();
  screen_descend->callback([&] {
    const ss::FiberedMonodromy h = resolve_monodromy(screen_mono, screen_mono_file);
    const ss::HomologyClass x{parse_class(class_arg)};
    const ss::HomologyClass r = ss::descent_reduce(h, x);
    result = {{"schema", 1},
              {"input", x.coords()},
              {"reduced", r.coords()},
              {"value", ss::screening_form(h).evaluate(r)}};
  });

  auto* screen_family = sub(screen_cmd, "family", "pairwise intersection table of a class family");
  std::vector<std::string> class_args;
  screen_family->add_option("--class", class_args, "class coordinates (repeatable)")
      ->required()
      ->expected(-1);
  screen_family->callback([&] {
    std::vector<ss::HomologyClass> classes;
    for (const auto& s : class_args) classes.emplace_back(parse_class(s));
    const ss::FamilyPairingTable t = ss::family_pairing_table(classes);
    json cj = json::array();
    for (const auto& c : classes) cj.push_back(c.coords());
    result = {{"schema", 1},
              {"classes", std::move(cj)},
              {"table", matrix_to_json(t.table)},
              {"admissible", t.admissible}};
  });

  // ---- fiber --------------------------------------------------------------
  auto* fiber_cmd = sub(&app, "fiber", "fiber-surface bookkeeping");
  fiber_cmd->require_subcommand(1);
  FiberArgs fargs;

  auto* fiber_compress = sub(fiber_cmd, "compress", "compress the fiber along an essential curve");
  fiber_compress->add_option("--genus", fargs.genus, "genus of the connected fiber")->required();
  fiber_compress->add_flag("--non-separating", fargs.non_separating, "curve does not separate");
  fiber_compress->add_option("--separating", fargs.split, "curve separates into genera g1,g2");
  fiber_compress->callback([&] {
    const ss::FiberSurface out =
        ss::compress(ss::FiberSurface::closed(fargs.genus), fargs.curve());
    json j;
    j["schema"] = 1;
    const json fields = surface_to_json(out);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    result = std::move(j);
  });

  auto* fiber_classify =
      sub(fiber_cmd, "classify", "decision table when h(c) is isotopic to c");
  fiber_classify->add_option("--genus", fargs.genus, "genus of the connected fiber")->required();
  fiber_classify->add_flag("--non-separating", fargs.non_separating, "curve does not separate");
  fiber_classify->add_option("--separating", fargs.split, "curve separates into genera g1,g2");
  fiber_classify->add_flag("--fixed", fargs.fixed, "h(c) is isotopic to c (required hypothesis)");
  fiber_classify->add_option("--orientation", fargs.orientation,
                             "isotopy orientation on c: 'preserved' or 'reversed'");
  fiber_classify->callback([&] {
    const ss::IsotopicClassification r =
        ss::isotopic_case_classify(ss::FiberSurface::closed(fargs.genus), fargs.curve());
    const char* case_name = nullptr;
    switch (r.surgery_case) {
      case ss::IsotopicSurgeryCase::kNonSeparating:
        case_name = "non-separating";
        break;
      case ss::IsotopicSurgeryCase::kSeparatingOrientationReversing:
        case_name = "separating-orientation-reversing";
        break;
      case ss::IsotopicSurgeryCase::kSeparatingOrientationPreserving:
        case_name = "separating-orientation-preserving";
        break;
    }
    result = {{"schema", 1},
              {"case", case_name},
              {"conclusion", r.conclusion},
              {"fiber_after", surface_to_json(r.fiber_after)},
              {"fiber_is_torus", r.fiber_is_torus},
              {"two_s1xs2_target_possible", r.two_s1xs2_target_possible},
              {"notes", r.notes}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputFormatError& e) {
    std::cerr << "slide-screen: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "slide-screen: " << e.what() << "\n";
    return 1;
  }

  print_result(result, as_json);
  return 0;
}

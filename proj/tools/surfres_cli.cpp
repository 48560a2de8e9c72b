// surfres: command line front end.
#include "acceptance/criteria.hpp"
#include "surfres/bounds.hpp"
#include "surfres/newton.hpp"
#include "surfres/parse.hpp"
#include "surfres/prepare.hpp"
#include "surfres/report.hpp"
#include "surfres/resolve.hpp"
#include "surfres/svg.hpp"
#include "surfres/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace surfres;

namespace {

enum Exit { kOk = 0, kInput = 1, kStepLimit = 2, kInternal = 3 };

struct Options {
  bool porcelain = false;
  std::string expr;
  // polygon
  bool levels = false;
  std::string svg_path;
  // prepare
  std::optional<unsigned> degree_bound;
  // transform
  std::string quadratic, monoidal_zx, monoidal_zy, transvection;
  // resolve
  std::string strategy = "generic";
  unsigned max_steps = 64;
};

void emit(const Options& opt, const std::vector<Record>& records) {
  if (!opt.porcelain) {
    std::cout << render_human(records);
    return;
  }
  std::cout << R"({"format":1})" << '\n';
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["record"] = rec.name.empty() ? "result" : rec.name;
    for (const auto& f : rec.fields) std::visit([&](const auto& v) { j[f.key] = v; }, f.value);
    std::cout << j.dump() << '\n';
  }
}

Rat rat_arg(const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

Transvection transvection_arg(const std::string& text) {
  std::vector<Rat> c;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    c.push_back(rat_arg(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Transvection(std::move(c));
}

Surface surface_arg(const std::string& text) { return as_surface(parse_poly(text)); }

int cmd_polygon(const Options& opt) {
  Surface s = surface_arg(opt.expr);
  Staircase delta = hironaka_polygon(s);
  std::vector<Record> out{equation_record(s), polygon_record("delta", delta)};
  if (opt.levels)
    for (unsigned k = 0; k < s.n(); ++k) {
      Record r = polygon_record("gamma[" + std::to_string(k) + "]", level_polygon(s, k));
      r.fields.insert(r.fields.begin(), Field{"a", to_string(s.level(k))});
      out.push_back(std::move(r));
    }
  if (!opt.svg_path.empty()) {
    std::ofstream f(opt.svg_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + opt.svg_path);
    SvgOptions so;
    so.title = to_string(s.poly());
    so.marks = projected_cloud(s.poly(), s.n());
    f << render_svg(delta, so);
  }
  emit(opt, out);
  return kOk;
}

int cmd_prepare(const Options& opt) {
  Surface s = surface_arg(opt.expr);
  std::vector<Record> out{equation_record(s)};
  Surface wt = tchirnhausen(s);
  out.push_back(Record{"tchirnhausen", {}}.add("applied", !s.is_wt()).add("equation", to_string(wt.poly())));
  auto [gwt, alpha] = to_gwt(wt);
  out.push_back(Record{"gwt", {}}.add("alpha", to_string(alpha)).add("equation", to_string(gwt.poly())));
  if (!wt.has_plane_cone()) {
    out.push_back(Record{"preparation", {}}.add("status", std::string(error_name(ErrorCode::NotPlaneCone))));
  } else {
    auto rep = preparation_report(wt, opt.degree_bound);
    out.push_back(preparation_record(rep));
    for (unsigned k = 0; k < rep.witnesses.size(); ++k)
      if (rep.witnesses[k]) out.push_back(witness_record(k, *rep.witnesses[k]));
  }
  emit(opt, out);
  return kOk;
}

int cmd_transform(const Options& opt) {
  Surface s = surface_arg(opt.expr);
  StepKind kind = Transvection();
  TriPoly result;
  if (!opt.quadratic.empty()) {
    Direction d = parse_direction(opt.quadratic);
    kind = QuadraticStep{d};
    result = quadratic(s, d);
  } else if (!opt.monoidal_zx.empty() || !opt.monoidal_zy.empty()) {
    Axis axis = opt.monoidal_zx.empty() ? Axis::ZY : Axis::ZX;
    Rat gamma = rat_arg(axis == Axis::ZX ? opt.monoidal_zx : opt.monoidal_zy);
    kind = MonoidalStep{axis, gamma};
    result = monoidal(s, axis, gamma);
  } else {
    Transvection t = transvection_arg(opt.transvection);
    kind = t;
    result = apply_transvection(s.poly(), t);
  }
  const unsigned ord = *order(result);
  Record r{"transform", {}};
  r.add("step", to_string(kind))
      .add("equation", to_string(result))
      .add("order", static_cast<std::int64_t>(ord))
      .add("dropped", ord < s.n());
  emit(opt, {equation_record(s), r});
  return kOk;
}

Strategy strategy_arg(const std::string& text) {
  if (text == "generic") return Strategy::generic();
  if (text == "worst") return Strategy::worst_case();
  if (text.rfind("dirs=", 0) == 0) {
    std::vector<Direction> dirs;
    std::string list = text.substr(5);
    std::size_t start = 0;
    while (start <= list.size() && !list.empty()) {
      auto comma = list.find(',', start);
      dirs.push_back(parse_direction(list.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Strategy::given(std::move(dirs));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + text + "'");
}

int cmd_resolve(const Options& opt) {
  Surface s = surface_arg(opt.expr);
  Strategy strat = strategy_arg(opt.strategy);
  std::vector<Record> out{equation_record(s)};
  Surface start = s.n() >= 2 ? tchirnhausen(s) : s;
  if (!(start == s)) out.push_back(Record{"tchirnhausen", {}}.add("equation", to_string(start.poly())));
  Trace t = resolve_trace(start, strat, opt.max_steps);
  Record tr = trace_record(t);
  tr.fields.insert(tr.fields.begin(), Field{"strategy", opt.strategy});
  out.push_back(std::move(tr));
  for (std::size_t i = 0; i < t.steps.size(); ++i) out.push_back(step_record(i + 1, t.steps[i]));
  emit(opt, out);
  return t.outcome == Outcome::StepLimit ? kStepLimit : kOk;
}

int cmd_bounds(const Options& opt) {
  Surface s = surface_arg(opt.expr);
  emit(opt, {equation_record(s), bounds_record(bound_report(s))});
  return kOk;
}

int cmd_verify(const Options& opt) {
  std::vector<Record> out;
  bool all = true;
  for (const auto& c : acceptance::run_all()) {
    all = all && c.pass;
    Record r{"criterion[" + std::to_string(c.id) + "]", {}};
    r.add("status", std::string(c.pass ? "PASS" : "FAIL")).add("title", c.title).add("detail", c.detail);
    out.push_back(std::move(r));
  }
  out.push_back(Record{}.add("verified", all));
  emit(opt, out);
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial resolution of algebroid surfaces"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--porcelain", opt.porcelain, "One JSON object per line");

  auto* polygon = app.add_subcommand("polygon", "Hironaka polygon and level polygons");
  polygon->add_option("expr", opt.expr, "Weierstrass equation")->required();
  polygon->add_flag("--levels", opt.levels, "Also print every Gamma[k]");
  polygon->add_option("--svg", opt.svg_path, "Write an SVG drawing of Delta");

  auto* prepare = app.add_subcommand("prepare", "Tchirnhausen, GWT form and preparation report");
  prepare->add_option("expr", opt.expr, "Weierstrass equation")->required();
  prepare->add_option("--degree-bound", opt.degree_bound, "X-degree for witness verification");

  auto* transform = app.add_subcommand("transform", "Apply one transform");
  transform->add_option("expr", opt.expr, "Weierstrass equation")->required();
  auto* group = transform->add_option_group("step");
  group->add_option("--quadratic", opt.quadratic, "Direction a:b:c");
  group->add_option("--monoidal-zx", opt.monoidal_zx, "Blow up (Z,X) with Z -> X(Z+G)");
  group->add_option("--monoidal-zy", opt.monoidal_zy, "Blow up (Z,Y) with Z -> Y(Z+G)");
  group->add_option("--transvection", opt.transvection, "Coefficients a1,a2,... of Y -> Y + a1 X + a2 X^2 ...");
  group->require_option(1);

  auto* resolve = app.add_subcommand("resolve", "Run the resolution algorithm until the multiplicity drops");
  resolve->add_option("expr", opt.expr, "Weierstrass equation")->required();
  resolve->add_option("--strategy", opt.strategy, "generic | worst | dirs=a:b:c,...")->capture_default_str();
  resolve->add_option("--max-steps", opt.max_steps, "Step limit per branch")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the number of transforms");
  bounds->add_option("expr", opt.expr, "Weierstrass equation")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (polygon->parsed()) return cmd_polygon(opt);
    if (prepare->parsed()) return cmd_prepare(opt);
    if (transform->parsed()) return cmd_transform(opt);
    if (resolve->parsed()) return cmd_resolve(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const Error& e) {
    if (opt.porcelain)
      std::cout << nlohmann::ordered_json{{"record", "error"}, {"code", error_name(e.code())}, {"message", e.what()}}
                       .dump()
                << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::StepLimitExceeded ? kStepLimit : kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInput;
}

#include "surfres/report.hpp"

#include <sstream>

namespace surfres {

std::vector<std::string> to_strings(const std::vector<Point2>& pts) {
  std::vector<std::string> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

Record equation_record(const Surface& s) {
  Record r;
  r.add("equation", to_string(s.poly()))
      .add("n", static_cast<std::int64_t>(s.n()))
      .add("wt", s.is_wt())
      .add("gwt", s.is_gwt())
      .add("plane_cone", s.has_plane_cone());
  return r;
}

Record polygon_record(std::string name, const Staircase& st) {
  Record r{std::move(name), {}};
  auto m = polygon_metrics(st);
  r.add("vertices", to_strings(st.vertices()));
  std::vector<std::string> slopes;
  for (const auto& f : m.facets) slopes.push_back(to_string(f.slope));
  std::vector<std::string> facets;
  for (const auto& f : m.facets) facets.push_back(to_string(f.upper) + "-" + to_string(f.lower));
  r.add("facets", facets);
  r.add("slopes", slopes);
  r.add("quadrant", m.is_quadrant);
  if (m.left) r.add("L", to_string(*m.left)).add("R", to_string(*m.right));
  return r;
}

Record witness_record(unsigned k, const GQWitness& w) {
  Record r{"witness[" + std::to_string(k) + "]", {}};
  r.add("r", static_cast<std::int64_t>(w.r))
      .add("s", static_cast<std::int64_t>(w.s))
      .add("phi", to_string(w.phi))
      .add("verified_to", static_cast<std::int64_t>(w.verified_to));
  return r;
}

Record preparation_record(const PreparationReport& rep) {
  Record r{"preparation", {}};
  std::vector<std::string> unresolved;
  for (unsigned k : rep.unresolved) unresolved.push_back(std::to_string(k));
  r.add("is_prepared", rep.is_prepared).add("unresolved", unresolved);
  if (rep.unresolved.empty()) r.add("r_bound", static_cast<std::int64_t>(rep.r_bound)).add("psi", to_string(rep.psi));
  return r;
}

Record trace_record(const Trace& t) {
  Record r;
  r.add("outcome", std::string(outcome_name(t.outcome)))
      .add("depth", static_cast<std::int64_t>(t.steps.size()))
      .add("smooth", t.smooth);
  if (t.warning) r.add("warning", *t.warning);
  return r;
}

Record step_record(std::size_t index, const TraceStep& st) {
  Record r{"step[" + std::to_string(index) + "]", {}};
  r.add("kind", to_string(st.kind))
      .add("equation", to_string(st.after_poly))
      .add("order", static_cast<std::int64_t>(st.after_order));
  if (st.delta) r.add("delta", to_strings(st.delta->vertices()));
  return r;
}

Record bounds_record(const BoundReport& rep) {
  Record r;
  std::vector<std::string> names;
  for (const auto& [rule, v] : rep.values) names.push_back(rule_name(rule));
  r.add("applicable", names);
  for (const auto& [rule, v] : rep.values) r.add(rule_name(rule), v.get_str());
  if (rep.theta_tan) r.add("theta_tan", to_string(*rep.theta_tan));
  return r;
}

std::string render_human(const std::vector<Record>& records) {
  struct Printer {
    std::ostream& os;
    void operator()(const std::string& s) const { os << s; }
    void operator()(std::int64_t v) const { os << v; }
    void operator()(bool b) const { os << (b ? "true" : "false"); }
    void operator()(const std::vector<std::string>& v) const {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    }
  };
  std::ostringstream os;
  os << "format: 1\n";
  for (const auto& rec : records)
    for (const auto& f : rec.fields) {
      if (!rec.name.empty()) os << rec.name << '.';
      os << f.key << ':';
      bool empty = std::holds_alternative<std::vector<std::string>>(f.value) &&
                   std::get<std::vector<std::string>>(f.value).empty();
      if (!empty) {
        os << ' ';
        std::visit(Printer{os}, f.value);
      }
      os << '\n';
    }
  return os.str();
}

}  // namespace surfres

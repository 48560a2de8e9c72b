#include "surfres/resolve.hpp"

#include <algorithm>
#include <map>

namespace surfres {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Dropped: return "DROPPED";
    case Outcome::Smooth: return "SMOOTH";
    case Outcome::StepLimit: return "STEP_LIMIT";
  }
  return "UNKNOWN";
}

namespace {

void require_wt(const Surface& s) {
  if (!s.is_wt()) throw Error(ErrorCode::NotWt, to_string(s.poly()));
}

void require_singular(const Surface& s) {
  if (s.n() < 2) throw Error(ErrorCode::InvalidArgument, "multiplicity " + std::to_string(s.n()) + " < 2");
}

// h(1, Y) for a form h of degree d in X, Y.
UniPoly dehomogenize(const BiPoly& h) {
  std::vector<Rat> c;
  for (const auto& [e, coef] : h.terms()) {
    if (c.size() <= e.j) c.resize(e.j + 1);
    c[e.j] = coef;
  }
  return UniPoly(std::move(c));
}

// Degree-d homogeneous part of a.
BiPoly form_of_degree(const BiPoly& a, unsigned d) {
  BiPoly h;
  for (const auto& [e, c] : a.terms())
    if (e.total() == d) h.add_term(e, c);
  return h;
}

UniPoly tangent_product(const Surface& s) {
  UniPoly prod({Rat(1)});
  for (unsigned k = 0; k + 2 <= s.n(); ++k)
    if (!s.level(k).is_zero()) prod = prod * dehomogenize(initial_form(s.level(k)));
  return prod;
}

Rat least_non_root(const std::vector<Rat>& roots) {
  long g = 0;
  while (std::find(roots.begin(), roots.end(), Rat(g)) != roots.end()) ++g;
  return Rat(g);
}

// (1:beta:0) keeps order n iff every h_{d,k}(1,Y) vanishes to order
// 2(n-k)-d at beta. An irrational beta can only do so at a root of the gcd
// of the relevant derivatives.
std::optional<std::string> irrational_warning(const Surface& s, const UniPoly& product) {
  const unsigned n = s.n();
  UniPoly g;
  bool constrained = false;
  for (unsigned k = 0; k + 2 <= n; ++k) {
    const BiPoly& a = s.level(k);
    if (a.is_zero()) continue;
    for (unsigned d = *s.nu(k); d < 2 * (n - k); ++d) {
      UniPoly h = dehomogenize(form_of_degree(a, d));
      if (h.is_zero()) continue;
      constrained = true;
      for (unsigned t = 0; t < 2 * (n - k) - d; ++t) {
        g = gcd(g, h);
        h = h.derivative();
      }
    }
  }
  if (!constrained) g = product;
  if (g.degree() < 1) return std::nullopt;
  UniPoly rest = rational_roots(g).cofactor;
  if (rest.degree() < 1) return std::nullopt;
  return "directions (1:t:0) with t a root of an irrational factor of degree " + std::to_string(rest.degree()) +
         " were not explored";
}

}  // namespace

StepLimitError::StepLimitError(std::vector<StepKind> prefix, unsigned max_steps)
    : Error(ErrorCode::StepLimitExceeded,
            [&] {
              std::string msg = "branch exceeds " + std::to_string(max_steps) + " steps:";
              for (const auto& k : prefix) msg += " [" + to_string(k) + "]";
              return msg;
            }()),
      prefix_(std::move(prefix)) {}

TraceStep step(const Surface& s, const std::optional<Direction>& choice) {
  require_singular(s);
  TraceStep st{QuadraticStep{Direction(1, 0, 0)}, s.n(), 0, {}, std::nullopt};
  if (permissible(s, Axis::ZX)) {
    st.kind = MonoidalStep{Axis::ZX, 0};
    st.after_poly = monoidal(s, Axis::ZX, 0);
  } else if (permissible(s, Axis::ZY)) {
    st.kind = MonoidalStep{Axis::ZY, 0};
    st.after_poly = monoidal(s, Axis::ZY, 0);
  } else {
    if (!choice)
      throw Error(ErrorCode::MissingDirection, "quadratic step on " + to_string(s.poly()) + " needs a direction");
    st.kind = QuadraticStep{*choice};
    st.after_poly = quadratic(s, *choice);
  }
  st.after_order = *order(st.after_poly);
  if (st.after_order >= s.n()) st.delta = hironaka_polygon(as_surface(st.after_poly));
  return st;
}

Direction generic_direction(const Surface& s) {
  return Direction(1, least_non_root(rational_roots(tangent_product(s)).roots), 0);
}

CriticalDirections critical_directions(const Surface& s) {
  require_wt(s);
  require_singular(s);
  const UniPoly product = tangent_product(s);
  const auto roots = rational_roots(product).roots;
  const Rat g = least_non_root(roots);

  CriticalDirections out;
  auto consider = [&](const Direction& d, bool generic) {
    TriPoly t = quadratic(s, d);
    bool persists = *order(t) >= s.n();
    out.examined.push_back({d, persists, generic, std::move(t)});
    if (persists || generic) out.list.push_back(out.examined.back());
  };
  consider(Direction(0, 1, 0), false);
  bool generic_done = false;
  for (const Rat& alpha : roots) {
    if (!generic_done && g < alpha) {
      consider(Direction(1, g, 0), true);
      generic_done = true;
    }
    consider(Direction(1, alpha, 0), false);
  }
  if (!generic_done) consider(Direction(1, g, 0), true);
  out.warning = irrational_warning(s, product);
  return out;
}

namespace {

struct Subtree {
  unsigned depth = 0;
  std::vector<StepKind> path;
  bool irrational = false;
};

class Explorer {
 public:
  explicit Explorer(unsigned max_steps) : max_steps_(max_steps) {}

  Subtree run(const Surface& s) {
    std::vector<StepKind> prefix;
    return explore(s, prefix);
  }

 private:
  Subtree explore(const Surface& s, std::vector<StepKind>& prefix) {
    const std::string key = to_string(s.poly());
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (prefix.size() + it->second.depth > max_steps_) {
        std::vector<StepKind> branch = prefix;
        branch.insert(branch.end(), it->second.path.begin(),
                      it->second.path.begin() + static_cast<long>(max_steps_ - prefix.size()));
        throw StepLimitError(std::move(branch), max_steps_);
      }
      return it->second;
    }
    if (prefix.size() >= max_steps_) throw StepLimitError(prefix, max_steps_);

    std::vector<std::pair<StepKind, TriPoly>> children;
    bool irrational = false;
    if (permissible(s, Axis::ZX)) {
      children.emplace_back(MonoidalStep{Axis::ZX, 0}, monoidal(s, Axis::ZX, 0));
    } else if (permissible(s, Axis::ZY)) {
      children.emplace_back(MonoidalStep{Axis::ZY, 0}, monoidal(s, Axis::ZY, 0));
    } else {
      auto crit = critical_directions(s);
      irrational = crit.warning.has_value();
      // Dropping candidates add nothing to the maximum but decide ties.
      for (auto& c : crit.examined) children.emplace_back(QuadraticStep{c.direction}, std::move(c.transform));
    }

    Subtree best;
    bool have = false;
    for (auto& [kind, poly] : children) {
      Subtree r;
      prefix.push_back(kind);
      if (*order(poly) < s.n()) {
        r.depth = 1;
        r.path = {kind};
      } else {
        Subtree sub = explore(as_surface(poly), prefix);
        r.depth = sub.depth + 1;
        r.path.reserve(sub.path.size() + 1);
        r.path.push_back(kind);
        r.path.insert(r.path.end(), sub.path.begin(), sub.path.end());
        r.irrational = sub.irrational;
      }
      prefix.pop_back();
      irrational = irrational || r.irrational;
      if (!have || r.depth > best.depth) {
        best = std::move(r);
        have = true;
      }
    }
    best.irrational = irrational;
    memo_.emplace(key, best);
    return best;
  }

  unsigned max_steps_;
  std::map<std::string, Subtree> memo_;
};

}  // namespace

WorstCaseResult explore_worst_case(const Surface& s, unsigned max_steps) {
  require_wt(s);
  require_singular(s);
  if (max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
  Subtree t = Explorer(max_steps).run(s);
  return {t.depth, std::move(t.path), t.irrational};
}

unsigned worst_case_depth(const Surface& s, unsigned max_steps) { return explore_worst_case(s, max_steps).depth; }

Trace resolve_trace(const Surface& s, const Strategy& strat, unsigned max_steps) {
  if (max_steps == 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
  Trace trace{s, {}, Outcome::StepLimit, false, std::nullopt};
  if (s.n() <= 1) {
    trace.outcome = Outcome::Smooth;
    trace.smooth = true;
    return trace;
  }

  std::vector<Direction> given = strat.directions();
  if (strat.kind() != Strategy::Kind::Given) require_wt(s);
  if (strat.kind() == Strategy::Kind::WorstCase) {
    std::vector<StepKind> path;
    try {
      auto w = explore_worst_case(s, max_steps);
      path = std::move(w.path);
      if (w.irrational_warning) trace.warning = "some branch has irrational critical directions";
    } catch (const StepLimitError& e) {
      path = e.prefix();
    }
    given.clear();
    for (const auto& k : path)
      if (auto q = std::get_if<QuadraticStep>(&k)) given.push_back(q->direction);
  }

  std::size_t next = 0;
  Surface cur = s;
  for (unsigned i = 0; i < max_steps; ++i) {
    std::optional<Direction> choice;
    if (!permissible(cur, Axis::ZX) && !permissible(cur, Axis::ZY)) {
      if (strat.kind() == Strategy::Kind::Generic) {
        choice = generic_direction(cur);
      } else if (next < given.size()) {
        choice = given[next++];
      }
    }
    TraceStep st = step(cur, choice);
    const bool dropped = st.after_order < cur.n();
    TriPoly after = st.after_poly;
    trace.steps.push_back(std::move(st));
    if (dropped) {
      trace.outcome = Outcome::Dropped;
      trace.smooth = trace.steps.back().after_order <= 1;
      return trace;
    }
    cur = as_surface(after);
  }
  trace.outcome = Outcome::StepLimit;
  return trace;
}

}  // namespace surfres

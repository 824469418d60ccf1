#include "ssg/trace.hpp"

namespace ssg {

std::optional<std::vector<Rational>> feasible_point(
    int nvars, const std::vector<LinearConstraint>& constraints) {
  const int m = static_cast<int>(constraints.size());
  int nslack = 0;
  for (const auto& c : constraints)
    if (c.kind == LinearConstraint::Kind::Ge) ++nslack;

  // columns: original | slacks | artificials, one artificial per row
  const int ncols = nvars + nslack + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(ncols + 1));
  std::vector<int> basis(m);

  int slack_at = nvars;
  for (int r = 0; r < m; ++r) {
    const auto& c = constraints[r];
    for (int j = 0; j < nvars; ++j) tab[r][j] = c.coeff[j];
    if (c.kind == LinearConstraint::Kind::Ge) tab[r][slack_at++] = -1;
    tab[r][ncols] = c.rhs;
    if (tab[r][ncols] < 0)
      for (auto& x : tab[r]) x = -x;
    tab[r][nvars + nslack + r] = 1;
    basis[r] = nvars + nslack + r;
  }

  // phase-one cost: sum of artificials
  auto reduced_cost = [&](int j) {
    Rational c = j >= nvars + nslack ? 1 : 0;
    for (int r = 0; r < m; ++r)
      if (basis[r] >= nvars + nslack) c -= tab[r][j];
    return c;
  };

  while (true) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (reduced_cost(j) < 0) {  // Bland: smallest index
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][ncols] / tab[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded phase one: cannot happen

    Rational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      Rational f = tab[r][enter];
      for (int j = 0; j <= ncols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= nvars + nslack) objective += tab[r][ncols];
  if (objective != 0) return std::nullopt;

  std::vector<Rational> point(nvars, 0);
  for (int r = 0; r < m; ++r)
    if (basis[r] < nvars) point[basis[r]] = tab[r][ncols];
  return point;
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

namespace {

std::vector<LinearConstraint> trace_constraints(const Graph& g) {
  const int nv = g.vertex_count();
  std::vector<LinearConstraint> cons;

  // monotonicity along every edge (implied by balance and nonnegativity at
  // receiving vertices, kept for faithfulness; exact arithmetic, no cost)
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    LinearConstraint c{LinearConstraint::Kind::Ge,
                       std::vector<Rational>(nv, 0), 0};
    c.coeff[g.ran(e)] += 1;
    c.coeff[g.dom(e)] -= 1;
    cons.push_back(std::move(c));
  }

  // balance at receiving vertices
  for (VertexId v = 0; v < nv; ++v) {
    if (g.in_degree(v) == 0) continue;
    LinearConstraint c{LinearConstraint::Kind::Eq,
                       std::vector<Rational>(nv, 0), 0};
    c.coeff[v] += 1;
    for (EdgeId e : g.in_edges(v)) c.coeff[g.dom(e)] -= 1;
    cons.push_back(std::move(c));
  }

  // normalization selects a representative of the cone of solutions
  LinearConstraint norm{LinearConstraint::Kind::Eq,
                        std::vector<Rational>(nv, 1), 1};
  cons.push_back(std::move(norm));
  return cons;
}

}  // namespace

std::optional<TraceSolution> graph_trace_exists(const Graph& g) {
  auto point = feasible_point(g.vertex_count(), trace_constraints(g));
  if (!point) return std::nullopt;
  return TraceSolution{std::move(*point)};
}

std::optional<TraceSolution> graph_g_trace_exists(const SelfSimilarGraph& ssg) {
  const Graph& g = ssg.graph();
  auto cons = trace_constraints(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : ssg.vertex_orbit(v)) {
      if (w <= v) continue;
      LinearConstraint c{LinearConstraint::Kind::Eq,
                         std::vector<Rational>(g.vertex_count(), 0), 0};
      c.coeff[v] = 1;
      c.coeff[w] = -1;
      cons.push_back(std::move(c));
    }
  auto point = feasible_point(g.vertex_count(), cons);
  if (!point) return std::nullopt;
  return TraceSolution{std::move(*point)};
}

bool verify_graph_trace(const Graph& g, const TraceSolution& t) {
  if (static_cast<int>(t.weights.size()) != g.vertex_count()) return false;
  Rational total = 0;
  for (const Rational& w : t.weights) {
    if (w < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (t.weights[g.ran(e)] < t.weights[g.dom(e)]) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) == 0) continue;
    Rational sum = 0;
    for (EdgeId e : g.in_edges(v)) sum += t.weights[g.dom(e)];
    if (t.weights[v] != sum) return false;
  }
  return true;
}

bool verify_graph_g_trace(const SelfSimilarGraph& ssg, const TraceSolution& t) {
  if (!verify_graph_trace(ssg.graph(), t)) return false;
  for (VertexId v = 0; v < ssg.graph().vertex_count(); ++v)
    for (VertexId w : ssg.vertex_orbit(v))
      if (t.weights[v] != t.weights[w]) return false;
  return true;
}

}  // namespace ssg

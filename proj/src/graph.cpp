#include "ssg/graph.hpp"

#include <stdexcept>

namespace ssg {

VertexId Graph::add_vertex(const std::string& name) {
  if (vindex_.count(name))
    throw std::invalid_argument("duplicate vertex id: " + name);
  VertexId v = vertex_count();
  vertex_names_.push_back(name);
  in_edges_.emplace_back();
  vindex_.emplace(name, v);
  return v;
}

EdgeId Graph::add_edge(const std::string& name, const std::string& dom,
                       const std::string& ran) {
  auto d = vertex_index(dom);
  auto r = vertex_index(ran);
  if (!d) throw std::invalid_argument("edge " + name + ": unknown vertex " + dom);
  if (!r) throw std::invalid_argument("edge " + name + ": unknown vertex " + ran);
  return add_edge(name, *d, *r);
}

EdgeId Graph::add_edge(const std::string& name, VertexId dom, VertexId ran) {
  if (eindex_.count(name))
    throw std::invalid_argument("duplicate edge id: " + name);
  if (dom < 0 || dom >= vertex_count() || ran < 0 || ran >= vertex_count())
    throw std::invalid_argument("edge " + name + ": endpoint out of range");
  EdgeId e = edge_count();
  edges_.push_back({name, dom, ran});
  in_edges_[ran].push_back(e);
  eindex_.emplace(name, e);
  return e;
}

std::optional<VertexId> Graph::vertex_index(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::edge_index(const std::string& name) const {
  auto it = eindex_.find(name);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Graph::sources() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (in_edges_[v].empty()) out.push_back(v);
  return out;
}

Path Path::empty_at(VertexId v) {
  Path p;
  p.anchor_ = v;
  return p;
}

Path Path::of(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty())
    throw std::invalid_argument("empty path needs an anchor vertex");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (g.dom(edges[i]) != g.ran(edges[i + 1]))
      throw std::invalid_argument("path not composable at position " +
                                  std::to_string(i));
  Path p;
  p.edges_ = std::move(edges);
  p.anchor_ = g.ran(p.edges_.front());
  return p;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.empty()) {
    VertexId v = p.range(g);
    return v >= 0 && v < g.vertex_count();
  }
  for (EdgeId e : p.edges())
    if (e < 0 || e >= g.edge_count()) return false;
  for (std::size_t i = 0; i + 1 < p.edges().size(); ++i)
    if (g.dom(p.edges()[i]) != g.ran(p.edges()[i + 1])) return false;
  return true;
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.empty()) return "(" + g.vertex_name(p.range(g)) + ")";
  std::string out;
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i) out += ".";
    out += g.edge(p.edges()[i]).name;
  }
  return out;
}

}  // namespace ssg

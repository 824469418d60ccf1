#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ssg {

using VertexId = int;
using EdgeId = int;

struct EdgeRec {
  std::string name;
  VertexId dom;  // d(e)
  VertexId ran;  // r(e)
};

// Finite directed graph. We use the receiving convention throughout: the
// in-edges of v are r^{-1}(v), a source is a vertex with r^{-1}(v) empty,
// and paths are traversed range-to-domain.
class Graph {
 public:
  VertexId add_vertex(const std::string& name);
  // Endpoints given by vertex name; throws std::invalid_argument on a
  // duplicate edge name or an undeclared endpoint.
  EdgeId add_edge(const std::string& name, const std::string& dom,
                  const std::string& ran);
  EdgeId add_edge(const std::string& name, VertexId dom, VertexId ran);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const EdgeRec& edge(EdgeId e) const { return edges_[e]; }
  VertexId dom(EdgeId e) const { return edges_[e].dom; }
  VertexId ran(EdgeId e) const { return edges_[e].ran; }

  std::optional<VertexId> vertex_index(const std::string& name) const;
  std::optional<EdgeId> edge_index(const std::string& name) const;

  // { e : r(e) = v }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_edges_[v]; }
  int in_degree(VertexId v) const {
    return static_cast<int>(in_edges_[v].size());
  }

  std::vector<VertexId> sources() const;
  bool source_free() const { return sources().empty(); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::unordered_map<std::string, VertexId> vindex_;
  std::unordered_map<std::string, EdgeId> eindex_;
};

// A finite path e_1...e_n with d(e_i) = r(e_{i+1}), or the empty path
// anchored at a vertex. r(path) = r(e_1), d(path) = d(e_n).
class Path {
 public:
  static Path empty_at(VertexId v);
  // Validates composability; throws std::invalid_argument otherwise.
  static Path of(const Graph& g, std::vector<EdgeId> edges);

  bool empty() const { return edges_.empty(); }
  std::size_t length() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }

  VertexId range(const Graph& g) const {
    return edges_.empty() ? anchor_ : g.ran(edges_.front());
  }
  VertexId domain(const Graph& g) const {
    return edges_.empty() ? anchor_ : g.dom(edges_.back());
  }

  bool operator==(const Path& other) const = default;

 private:
  VertexId anchor_ = -1;  // only meaningful when edges_ is empty
  std::vector<EdgeId> edges_;
};

bool is_valid_path(const Graph& g, const Path& p);

// Human-readable "e1.e2.e3" / "(v)" rendering for reports.
std::string path_to_string(const Graph& g, const Path& p);

}  // namespace ssg

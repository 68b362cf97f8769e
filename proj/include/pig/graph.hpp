#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pig {

// Vertex ids are internal, 0-based; the rotation file format uses id + 1.
using Vertex = int;

enum class GraphErrorKind {
  parse,
  asymmetric,
  not_simple,
  invalid_embedding,
  bad_vertex,
  precondition,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

struct FaceList {
  std::vector<std::vector<Vertex>> walks;

  std::size_t size() const { return walks.size(); }
  std::size_t total_length() const;
};

// A simple plane graph given by a clockwise rotation at every vertex.
//
// Ids are never reused: deleting a vertex leaves a tombstone and contraction
// allocates a fresh id at the end, so vertex names stay meaningful along
// a reduction trace. Values are immutable once built; every mutating operation
// returns a new graph that has been re-validated.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // Throws GraphError when symmetry, simplicity or the Euler trace fails.
  static EmbeddedGraph from_rotations(std::vector<std::vector<Vertex>> rotations);
  // Builds rotations from consistently oriented triangles (a, b, c) with the
  // walk a -> b -> c bounding a face.
  static EmbeddedGraph from_triangles(int n, std::span<const std::array<Vertex, 3>> triangles);

  int capacity() const { return static_cast<int>(rot_.size()); }
  int vertex_count() const { return alive_count_; }
  int edge_count() const { return edge_count_; }
  bool alive(Vertex v) const { return v >= 0 && v < capacity() && alive_[v] != 0; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Vertex> vertices() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  int min_degree() const;

  // Index of u in rotation(v), or -1.
  int position(Vertex v, Vertex u) const;
  // Clockwise successor of u in rotation(v).
  Vertex next_around(Vertex v, Vertex u) const;

  std::vector<std::vector<Vertex>> components() const;
  bool connected() const { return components().size() <= 1; }
  bool is_triangulation() const;

  // Keeps exactly the given vertices (by id); the rest become tombstones.
  EmbeddedGraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  friend class GraphBuilder;

  void validate() const;
  void recount();

  std::vector<std::vector<Vertex>> rot_;
  std::vector<char> alive_;
  int alive_count_ = 0;
  int edge_count_ = 0;
};

// Mutable rotation editing used by the graph operations; finish() validates.
class GraphBuilder {
 public:
  explicit GraphBuilder(const EmbeddedGraph& g) : g_(g) {}

  Vertex add_vertex();
  void remove_vertex(Vertex v);
  // Inserts `x` into rotation(v) right after `after`.
  void insert_after(Vertex v, Vertex after, Vertex x);
  void erase_neighbor(Vertex v, Vertex u);
  void set_rotation(Vertex v, std::vector<Vertex> rotation);
  // Diagonal exchange on edge uv; the caller guarantees both sides are triangles.
  void flip(Vertex u, Vertex v);
  const EmbeddedGraph& peek() const { return g_; }
  EmbeddedGraph finish();

 private:
  EmbeddedGraph g_;
};

struct TriangulationResult {
  EmbeddedGraph graph;
  std::vector<std::pair<Vertex, Vertex>> added_edges;
};

struct CommonNeighbors {
  std::vector<Vertex> vertices;
  // Components of the subgraph induced by the common neighbors.
  std::vector<std::vector<Vertex>> components;
  // True when every component is a K1 or a K2.
  bool only_k1_k2 = true;
};

struct NeighborCycle {
  std::vector<Vertex> order;
  // True when N(v) induces exactly the rotation cycle (no chords).
  bool induced_cycle = false;
};

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 0;
  bool min_degree_5 = false;
  bool no_separating_triangle = false;
};

using Triangle = std::array<Vertex, 3>;

EmbeddedGraph parse_rotation_graph(std::string_view text);
std::string serialize_rotation_graph(const EmbeddedGraph& g);
// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
std::string graph_hash(const EmbeddedGraph& g);

FaceList faces(const EmbeddedGraph& g);
TriangulationResult triangulate(const EmbeddedGraph& g);
std::vector<Triangle> separating_triangles(const EmbeddedGraph& g);
CommonNeighbors common_neighbors(const EmbeddedGraph& g, Vertex u, Vertex v);
NeighborCycle neighbor_cycle(const EmbeddedGraph& g, Vertex v);
EmbeddedGraph delete_set(const EmbeddedGraph& g, std::span<const Vertex> s);
std::pair<EmbeddedGraph, Vertex> contract_set(const EmbeddedGraph& g, std::span<const Vertex> s);
// Exchanges the diagonal of the two triangles on edge uv. Requires a triangulation.
EmbeddedGraph flip_edge(const EmbeddedGraph& g, Vertex u, Vertex v);

EmbeddedGraph generate(const GenSpec& spec);

// Vertices in N(S) \ S for a vertex set S.
std::vector<Vertex> open_neighborhood(const EmbeddedGraph& g, std::span<const Vertex> s);
// Members of S whose whole neighborhood lies in S.
std::vector<Vertex> interior(const EmbeddedGraph& g, std::span<const Vertex> s);
bool induces_connected(const EmbeddedGraph& g, std::span<const Vertex> s);

}  // namespace pig

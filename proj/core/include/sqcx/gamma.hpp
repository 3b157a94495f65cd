/*
  The 36-vertex base graph: four copies of Z/9Z glued by modular edge
  rules, its girth and sign-selected 18-cycles, and its Z/p covering
  graphs defined by an edge-weight cocycle.
*/
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqcx {

// A verification that was expected to succeed did not.
struct CertError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Part : std::uint8_t { AMinus = 0, APlus = 1, BMinus = 2, BPlus = 3 };
enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline constexpr int kResidues = 9;
inline constexpr int kGammaVertices = 36;
inline constexpr int kGammaEdges = 72;

bool part_is_a(Part p);
Sign part_sign(Part p);
Part make_part(bool a_side, Sign s);
std::string part_str(Part p);

// One of the 36 vertices; id = 9*part + residue.
struct GammaVertex {
  Part part{};
  std::uint8_t residue{};

  GammaVertex() = default;
  GammaVertex(Part p, int r) : part(p), residue(static_cast<std::uint8_t>(((r % 9) + 9) % 9)) {}

  int id() const { return static_cast<int>(part) * kResidues + residue; }
  static GammaVertex from_id(int id);
  bool in_a() const { return part_is_a(part); }
  Sign sign() const { return part_sign(part); }
  std::string str() const;  // e.g. "A-,3"
  static GammaVertex parse(const std::string&);

  friend bool operator==(const GammaVertex&, const GammaVertex&) = default;
  friend auto operator<=>(const GammaVertex& x, const GammaVertex& y) { return x.id() <=> y.id(); }
};

using GammaEdge = std::pair<GammaVertex, GammaVertex>;  // stored (A-vertex, B-vertex)

// The modular adjacency rules, one per (A-part, B-part) pair.
bool gamma_edge_rule(GammaVertex a, GammaVertex b);

// A simple bipartite graph on a subset of the 36 canonical vertices.
// Every edge must join an A-vertex to a B-vertex.
class ModGraph {
 public:
  ModGraph() = default;
  static ModGraph from_edges(const std::vector<bool>& present, std::vector<GammaEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(GammaVertex v) const { return present_[v.id()]; }
  bool has_edge(GammaVertex a, GammaVertex b) const;
  int degree(GammaVertex v) const { return static_cast<int>(adj_[v.id()].size()); }
  const std::vector<int>& neighbors(int vid) const { return adj_[vid]; }
  const std::vector<GammaEdge>& edges() const { return edges_; }  // sorted by (a.id, b.id)

  // Index of an edge in the canonical sorted list, -1 if absent.
  int edge_index(GammaVertex a, GammaVertex b) const;

  ModGraph without_edge(GammaVertex a, GammaVertex b) const;
  ModGraph induced(const std::vector<GammaVertex>& verts) const;

  bool connected() const;
  std::string serialize(int girth_value) const;  // versioned text format

  friend bool operator==(const ModGraph&, const ModGraph&) = default;

 private:
  std::array<bool, kGammaVertices> present_{};
  int vertex_count_ = 0;
  std::vector<GammaEdge> edges_;
  std::array<std::vector<int>, kGammaVertices> adj_;
};

// The full graph under the four modular rules. Deterministic.
ModGraph build_gamma();

// Returned by girth() when the graph has no cycle at all.
inline constexpr int kGirthForest = 0;

// Length of a shortest embedded cycle (kGirthForest for forests).
int girth(const ModGraph& g);

// An ordered closed cycle; consecutive entries (cyclically) are edges of
// the host graph and all entries are distinct.
class CycleCert {
 public:
  CycleCert(const ModGraph& host, std::vector<GammaVertex> order);
  const std::vector<GammaVertex>& order() const { return order_; }
  int length() const { return static_cast<int>(order_.size()); }
  int index_of(GammaVertex v) const;

 private:
  std::vector<GammaVertex> order_;
};

// Certifies that the full subgraph on A^a_sign u B^b_sign is one embedded
// 18-cycle, and returns it in canonical order (starts at (A^s, 0), steps
// to the smaller of its two neighbours). Throws CertError otherwise.
CycleCert special_cycle(const ModGraph& g, Sign a_sign, Sign b_sign);

// Z/p cover of a ModGraph given by an integer weight per canonical edge:
// the lift of edge (a,b) at sheet s joins (a,s) to (b, s + w mod p).
class CoveredGraph {
 public:
  CoveredGraph(ModGraph base, int p, std::vector<int> edge_weights);

  const ModGraph& base() const { return base_; }
  int p() const { return p_; }
  int weight(int edge_idx) const { return weights_[edge_idx]; }

  int vertex_count() const { return base_.vertex_count() * p_; }
  int edge_lift_count() const { return base_.edge_count() * p_; }

  // Lift ids: vertex (v, sheet) -> v.id()*p + sheet.
  int lift_id(GammaVertex v, int sheet) const { return v.id() * p_ + sheet; }

  bool connected() const;
  int component_count() const;

  // The deck map (v, s) -> (v, s+1): checks it is a free automorphism of
  // order exactly p that preserves the lifted edge set.
  bool deck_rotation_ok() const;

  // Number of cycles in the preimage of a base cycle, and their common
  // length; for total weight w it is gcd(w, p) cycles of length L*p/gcd.
  std::pair<int, int> cycle_preimage(const CycleCert& c) const;

  // Sum of weights along a cycle, oriented via the canonical edge order.
  int cycle_weight(const CycleCert& c) const;

  std::string serialize() const;

 private:
  ModGraph base_;
  int p_;
  std::vector<int> weights_;
};

// Canonical designated edges: the lexicographically least edge of each of
// the two special cycles used for branching, 18-cycles (A+,B+) and (A-,B-).
std::pair<GammaEdge, GammaEdge> canonical_designated_edges(const ModGraph& g);

// The cover defined by the cocycle assigning weight 1 to each designated
// edge and 0 elsewhere. Requires one designated edge on the (A+,B+) cycle
// and one on the (A-,B-) cycle; throws std::invalid_argument otherwise.
CoveredGraph build_link_cover(const ModGraph& g, int p,
                              std::pair<GammaEdge, GammaEdge> designated);
CoveredGraph build_link_cover(const ModGraph& g, int p);

bool is_prime(int n);

}  // namespace sqcx

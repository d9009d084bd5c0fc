#pragma once

#include "scf/graph.hpp"

#include <functional>
#include <optional>

namespace scf {

/// Induced claw witness: center adjacent to three pairwise non-adjacent
/// leaves.
struct ClawWitness {
  int center;
  std::array<int, 3> leaves;
};

bool is_claw_free(const Graph &g, std::optional<ClawWitness> *witness = nullptr);

/// All cliques K (including singletons) such that for every v in K the
/// set Gamma(v)\K induces a clique. Each clique ascending, list sorted
/// lexicographically. Empty iff the graph has no simplicial clique.
std::vector<std::vector<int>> find_simplicial_cliques(const Graph &g);

std::vector<std::vector<int>> independent_sets(const Graph &g, int k);
int independence_number(const Graph &g);
void for_each_independent_set(const Graph &g,
                              const std::function<void(std::uint64_t)> &fn);

/// An induced cycle of even length >= 4, canonicalized so the lowest id
/// comes first followed by its lower-id cycle neighbor. `class_a` is the
/// coloring class containing the lowest id.
struct EvenHole {
  std::vector<int> cycle;
  std::vector<int> class_a, class_b;

  std::uint64_t mask() const { return mask_of(cycle); }
  int length() const { return int(cycle.size()); }

  friend bool operator==(const EvenHole &a, const EvenHole &b) {
    return a.cycle == b.cycle;
  }
  friend bool operator<(const EvenHole &a, const EvenHole &b) {
    return a.cycle < b.cycle;
  }
};

EvenHole make_even_hole(const Graph &g, const std::vector<int> &cycle);
std::vector<EvenHole> even_holes(const Graph &g, int max_len = 0);

/// A single-vertex deformation of a hole or induced path: vertex j outside
/// L whose neighborhood in L is an induced length-2 subpath u-k-v; the
/// clone k is replaced by j.
struct Deformation {
  int vertex; // j
  int clone;  // k
  std::vector<int> deformed;
};

// L is a hole (closed=true) or an induced path (closed=false), given in
// cycle/path order.
std::vector<Deformation> single_vertex_deformations(const Graph &g,
                                                    const std::vector<int> &L,
                                                    bool closed);

struct DeformationClosure {
  EvenHole representative; // canonically smallest member
  std::vector<EvenHole> members;
  std::uint64_t neighborhood = 0; // shared Gamma[C]

  std::uint64_t vertex_union() const;
};

DeformationClosure deformation_closure(const Graph &g, const EvenHole &c0);
/// All closures, indexed; together they partition the even holes.
std::vector<DeformationClosure> deformation_closures(const Graph &g,
                                                     int max_len = 0);

bool compatible(const Graph &g, const EvenHole &c, const EvenHole &d);
bool compatible_closures(const Graph &g, const DeformationClosure &a,
                         const DeformationClosure &b);
/// All subsets of pairwise-compatible closures (as index lists into
/// `closures`), including the empty set, sorted lexicographically.
std::vector<std::vector<int>>
compatible_closure_collections(const Graph &g,
                               const std::vector<DeformationClosure> &closures);

/// Connected components of the token-sliding solution graph TS_k. Each
/// component lists its independent sets; components sorted by smallest
/// member.
std::vector<std::vector<std::vector<int>>>
token_sliding_components(const Graph &g, int k);

/// Tree of induced paths of G* = G + j* (j* adjacent to the clique) with
/// endpoint j*. Node 0 is the trivial path {j*}; each node stores the
/// path as graph vertex ids with -1 standing for j*.
struct InducedPathTree {
  struct Node {
    std::vector<int> path; // path[0] == -1 (j*)
    int parent;            // -1 for the root
    std::vector<int> children;
  };
  struct HoopArc {
    int from;    // node index (the long path P)
    int to;      // node index (the handle P')
    int via;     // external vertex k closing the hoop
    int closure; // closure index (set by the caller), -1 if unresolved
    EvenHole hoop;
  };
  std::vector<int> clique;
  std::vector<Node> nodes;
  std::vector<HoopArc> hoop_arcs;
};

InducedPathTree induced_path_tree(const Graph &g, const std::vector<int> &k_s);

/// Root graph recovery for line graphs via Krausz clique partitions.
struct LineGraphRoot {
  Graph root;
  // vertex j of G -> edge {first, second} of the root, first < second.
  std::vector<std::pair<int, int>> vertex_to_edge;
};

std::optional<LineGraphRoot> line_graph_root(const Graph &g);

} // namespace scf

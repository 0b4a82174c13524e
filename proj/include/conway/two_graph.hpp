#pragma once

#include <string>
#include <vector>

#include "conway/design.hpp"

namespace conway {

struct TwoGraphReport {
  bool is_regular = false;   // constant pair coverage and the 0/2/4 condition
  bool mu_constant = false;
  int mu = 0;
  bool s_constant = false;   // coherent 4-sets through a triple of C
  int s = 0;
  bool identity_ok = false;  // n == 3*mu - 2*s
  bool n_even = false;
  std::string witness;       // offending 4-set or pair when not regular
};

TwoGraphReport two_graph_report(Pt n, const TripleSet& C, int threads = 1);

/// Graph on the points other than `base`, joining a and b when {base, a, b}
/// is a collinear triple. base == n gives a plain graph on all n points,
/// which the tests use for hand-built graphs.
struct DerivedGraph {
  Pt base = 0;
  Pt n = 0;
  std::vector<std::uint8_t> adj;  // n*n, symmetric, zero diagonal

  bool adjacent(Pt a, Pt b) const { return adj[std::size_t{a} * n + b] != 0; }
  bool is_vertex(Pt a) const { return a < n && a != base; }
  std::vector<Pt> vertices() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  std::size_t degree_of(Pt a) const;
};

DerivedGraph derived_graph(const Design& d, const CollinearityIndex& idx, Pt base);
DerivedGraph graph_from_edges(Pt vertex_count, const std::vector<std::pair<Pt, Pt>>& edges);

constexpr Pt kNoVertex = 0xFFFF;

struct TriangleReport {
  bool has_triangle_property = false;
  bool has_strong_triangle_property = false;
  // f[a*n+b] is the unique completing vertex of edge {a,b} when strong.
  std::vector<Pt> f;
  std::string witness;
};

// For every edge {u,v}, collects the vertices w adjacent to both ends such
// that every other vertex is adjacent to exactly one or exactly three of
// {u,v,w}. Strong means that vertex is unique for every edge.
TriangleReport triangle_report(const DerivedGraph& g, int threads = 1);

// Checks that the blocks through `base` are exactly {base, a, b, f(a, b)}
// over adjacent pairs. Falls back to the unique fourth point when the graph
// is complete and the design has n = 2*lambda + 2; throws otherwise when
// the report is not strong.
bool verify_f_lines(const Design& d, Pt base, const TriangleReport& t);

}  // namespace conway

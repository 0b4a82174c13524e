#include "conway/two_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "conway/parallel.hpp"
#include "conway/util.hpp"

namespace conway {

namespace {

std::string set4_string(Pt a, Pt b, Pt c, Pt d) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + "}";
}

}  // namespace

TwoGraphReport two_graph_report(Pt n, const TripleSet& C, int threads) {
  TwoGraphReport rep;
  rep.n_even = (n % 2 == 0);

  // Pair coverage.
  std::vector<int> pair_count(std::size_t{n} * n, 0);
  for (const auto& t : C.triples())
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        ++pair_count[std::size_t{t[i]} * n + t[j]];
        ++pair_count[std::size_t{t[j]} * n + t[i]];
      }
  int lo = INT32_MAX, hi = 0;
  Pt bad_a = 0, bad_b = 0;
  for (Pt a = 0; a < n; ++a)
    for (Pt b = a + 1; b < n; ++b) {
      int c = pair_count[std::size_t{a} * n + b];
      if (c < lo) lo = c;
      if (c > hi) {
        hi = c;
        bad_a = a;
        bad_b = b;
      }
    }
  rep.mu_constant = (n >= 2 && lo == hi);
  rep.mu = rep.mu_constant ? lo : 0;
  if (!rep.mu_constant) {
    rep.witness = "pair {" + std::to_string(bad_a) + "," + std::to_string(bad_b) +
                  "} lies in " + std::to_string(hi) + " triples, minimum is " + std::to_string(lo);
  }

  // The 0/2/4 condition over all 4-subsets.
  std::uint64_t total = n >= 4 ? binom(n, 4) : 0;
  auto unrank4 = [n](std::uint64_t r, Pt& x, Pt& y, Pt& z, Pt& w) {
    // Combinatorial number system, descending digits.
    auto pick = [&](int k, std::uint64_t& rem, Pt hint) {
      Pt v = hint;
      while (binom(v + 1, k) <= rem) ++v;
      rem -= binom(v, k);
      return v;
    };
    std::uint64_t rem = r;
    w = pick(4, rem, 3);
    z = pick(3, rem, 2);
    y = pick(2, rem, 1);
    x = static_cast<Pt>(rem);
  };
  auto probe = [&](std::size_t r) {
    Pt x, y, z, w;
    unrank4(r, x, y, z, w);
    int c = C.contains(x, y, z) + C.contains(x, y, w) + C.contains(x, z, w) + C.contains(y, z, w);
    return c == 1 || c == 3;
  };
  auto hit = parallel_first_hit(static_cast<std::size_t>(total), threads, probe);
  if (hit) {
    Pt x, y, z, w;
    unrank4(*hit, x, y, z, w);
    int c = C.contains(x, y, z) + C.contains(x, y, w) + C.contains(x, z, w) + C.contains(y, z, w);
    rep.witness = "4-set " + set4_string(x, y, z, w) + " contains " + std::to_string(c) +
                  " collinear triples";
  }
  rep.is_regular = rep.mu_constant && !hit.has_value() && !C.triples().empty();

  // Coherent 4-sets through each triple of C.
  if (!C.triples().empty()) {
    const auto& first = C.triples().front();
    auto count_coherent = [&](const Triple& t) {
      int s = 0;
      for (Pt x = 0; x < n; ++x) {
        if (x == t[0] || x == t[1] || x == t[2]) continue;
        if (C.contains(t[0], t[1], x) && C.contains(t[0], t[2], x) && C.contains(t[1], t[2], x)) ++s;
      }
      return s;
    };
    int s0 = count_coherent(first);
    auto bad = parallel_first_hit(C.triples().size(), threads, [&](std::size_t i) {
      return count_coherent(C.triples()[i]) != s0;
    });
    rep.s_constant = !bad.has_value();
    rep.s = s0;
    rep.identity_ok = rep.s_constant && rep.mu_constant && (3 * rep.mu - 2 * s0 == static_cast<int>(n));
  }
  return rep;
}

std::vector<Pt> DerivedGraph::vertices() const {
  std::vector<Pt> out;
  for (Pt a = 0; a < n; ++a)
    if (a != base) out.push_back(a);
  return out;
}

std::size_t DerivedGraph::vertex_count() const { return base < n ? n - 1 : n; }

std::size_t DerivedGraph::edge_count() const {
  std::size_t e = 0;
  for (Pt a = 0; a < n; ++a)
    for (Pt b = a + 1; b < n; ++b)
      if (adjacent(a, b)) ++e;
  return e;
}

std::size_t DerivedGraph::degree_of(Pt a) const {
  std::size_t deg = 0;
  for (Pt b = 0; b < n; ++b)
    if (adjacent(a, b)) ++deg;
  return deg;
}

DerivedGraph derived_graph(const Design& d, const CollinearityIndex& idx, Pt base) {
  if (base >= d.n) throw std::invalid_argument("derived_graph: base out of range");
  DerivedGraph g;
  g.base = base;
  g.n = d.n;
  g.adj.assign(std::size_t{d.n} * d.n, 0);
  for (Pt a = 0; a < d.n; ++a) {
    if (a == base) continue;
    for (Pt b = static_cast<Pt>(a + 1); b < d.n; ++b) {
      if (b == base) continue;
      if (idx.collinear_triples().contains(base, a, b)) {
        g.adj[std::size_t{a} * d.n + b] = 1;
        g.adj[std::size_t{b} * d.n + a] = 1;
      }
    }
  }
  return g;
}

DerivedGraph graph_from_edges(Pt vertex_count, const std::vector<std::pair<Pt, Pt>>& edges) {
  DerivedGraph g;
  g.n = vertex_count;
  g.base = vertex_count;  // no base point: all points are vertices
  g.adj.assign(std::size_t{vertex_count} * vertex_count, 0);
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count || a == b)
      throw std::invalid_argument("graph_from_edges: bad edge");
    g.adj[std::size_t{a} * vertex_count + b] = 1;
    g.adj[std::size_t{b} * vertex_count + a] = 1;
  }
  return g;
}

TriangleReport triangle_report(const DerivedGraph& g, int threads) {
  TriangleReport rep;
  auto verts = g.vertices();
  std::vector<std::pair<Pt, Pt>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) edges.push_back({verts[i], verts[j]});
  if (edges.empty()) {
    rep.witness = "E=\xE2\x88\x85";  // empty edge set
    return rep;
  }

  // Completing vertices per edge.
  auto completions = [&](Pt u, Pt v) {
    std::vector<Pt> ws;
    for (Pt w : verts) {
      if (w == u || w == v || !g.adjacent(u, w) || !g.adjacent(v, w)) continue;
      bool ok = true;
      for (Pt x : verts) {
        if (x == u || x == v || x == w) continue;
        int c = g.adjacent(x, u) + g.adjacent(x, v) + g.adjacent(x, w);
        if (c != 1 && c != 3) {
          ok = false;
          break;
        }
      }
      if (ok) ws.push_back(w);
    }
    return ws;
  };

  std::vector<std::uint8_t> counts(edges.size(), 0);
  std::vector<Pt> first_w(edges.size(), kNoVertex);
  parallel_chunks(edges.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto ws = completions(edges[i].first, edges[i].second);
      counts[i] = static_cast<std::uint8_t>(std::min<std::size_t>(ws.size(), 255));
      if (!ws.empty()) first_w[i] = ws.front();
    }
  });

  rep.has_triangle_property = true;
  rep.has_strong_triangle_property = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (counts[i] == 0) {
      rep.has_triangle_property = false;
      rep.has_strong_triangle_property = false;
      rep.witness = "edge {" + std::to_string(edges[i].first) + "," +
                    std::to_string(edges[i].second) + "} has no completing vertex";
      return rep;
    }
    if (counts[i] != 1) rep.has_strong_triangle_property = false;
  }
  if (rep.has_strong_triangle_property) {
    rep.f.assign(std::size_t{g.n} * g.n, kNoVertex);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      rep.f[std::size_t{u} * g.n + v] = first_w[i];
      rep.f[std::size_t{v} * g.n + u] = first_w[i];
    }
  } else if (rep.witness.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (counts[i] > 1) {
        rep.witness = "edge {" + std::to_string(edges[i].first) + "," +
                      std::to_string(edges[i].second) + "} has " + std::to_string(counts[i]) +
                      " completing vertices";
        break;
      }
  }
  return rep;
}

bool verify_f_lines(const Design& d, Pt base, const TriangleReport& t) {
  DesignStats s = validate(d);
  if (!s.is_2_design) throw std::invalid_argument("verify_f_lines requires a 2-design");

  // f(a, b) lookup; complete graphs of a design with n = 2*lambda + 2 use
  // the unique fourth point through {base, a, b} instead.
  std::vector<Pt> fourth;
  bool use_fourth = false;
  if (!t.has_strong_triangle_property) {
    if (d.n != 2 * s.lambda + 2)
      throw std::invalid_argument("verify_f_lines requires the strong triangle property");
    use_fourth = true;
    fourth.assign(std::size_t{d.n} * d.n, kNoVertex);
    for (const auto& b : d.blocks) {
      if (std::find(b.begin(), b.end(), base) == b.end()) continue;
      Triple rest;
      int k = 0;
      for (Pt p : b)
        if (p != base) rest[k++] = p;
      fourth[std::size_t{rest[0]} * d.n + rest[1]] = rest[2];
      fourth[std::size_t{rest[1]} * d.n + rest[0]] = rest[2];
      fourth[std::size_t{rest[0]} * d.n + rest[2]] = rest[1];
      fourth[std::size_t{rest[2]} * d.n + rest[0]] = rest[1];
      fourth[std::size_t{rest[1]} * d.n + rest[2]] = rest[0];
      fourth[std::size_t{rest[2]} * d.n + rest[1]] = rest[0];
    }
  }
  auto f_of = [&](Pt a, Pt b) -> Pt {
    return use_fourth ? fourth[std::size_t{a} * d.n + b] : t.f[std::size_t{a} * d.n + b];
  };

  // Every block through base is {base, a, b, f(a,b)} for each of its pairs.
  for (const auto& blk : d.blocks) {
    if (std::find(blk.begin(), blk.end(), base) == blk.end()) continue;
    Triple rest;
    int k = 0;
    for (Pt p : blk)
      if (p != base) rest[k++] = p;
    if (f_of(rest[0], rest[1]) != rest[2] || f_of(rest[0], rest[2]) != rest[1] ||
        f_of(rest[1], rest[2]) != rest[0])
      return false;
  }
  // Conversely every pair with a defined f completes to a block.
  for (Pt a = 0; a < d.n; ++a) {
    if (a == base) continue;
    for (Pt b = static_cast<Pt>(a + 1); b < d.n; ++b) {
      if (b == base) continue;
      Pt w = f_of(a, b);
      if (w == kNoVertex) continue;
      if (!d.has_block({base, a, b, w})) return false;
    }
  }
  return true;
}

}  // namespace conway

#include "conway/design.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace conway {

TripleSet::TripleSet(Pt n) : n_(n) {
  std::size_t total = (std::size_t{n} * (n > 1 ? n - 1 : 0) * (n > 2 ? n - 2 : 0)) / 6;
  bits_.assign((total + 63) / 64, 0);
}

std::size_t TripleSet::rank(Pt x, Pt y, Pt z) const {
  // Combinatorial number system for x < y < z.
  std::size_t zc = (std::size_t{z} * (z - 1) * (z - 2)) / 6;
  std::size_t yc = (std::size_t{y} * (y - 1)) / 2;
  return zc + yc + x;
}

namespace {
void sort3(Pt& x, Pt& y, Pt& z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
}
}  // namespace

bool TripleSet::insert(Pt x, Pt y, Pt z) {
  sort3(x, y, z);
  if (x == y || y == z || z >= n_) throw std::invalid_argument("TripleSet: bad triple");
  std::size_t r = rank(x, y, z);
  std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (bits_[r >> 6] & bit) return false;
  bits_[r >> 6] |= bit;
  list_.push_back({x, y, z});
  return true;
}

bool TripleSet::contains(Pt x, Pt y, Pt z) const {
  sort3(x, y, z);
  if (x == y || y == z || z >= n_) return false;
  std::size_t r = rank(x, y, z);
  return (bits_[r >> 6] >> (r & 63)) & 1;
}

std::uint64_t block_key(Block b) {
  std::sort(b.begin(), b.end());
  return (std::uint64_t{b[0]} << 48) | (std::uint64_t{b[1]} << 32) | (std::uint64_t{b[2]} << 16) |
         std::uint64_t{b[3]};
}

bool Design::has_block(Block b) const { return block_keys.count(block_key(b)) != 0; }

Design make_design(std::string name, Pt n, std::vector<Block> blocks) {
  Design d;
  d.name = std::move(name);
  d.n = n;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (b[3] >= n) throw std::invalid_argument("block point out of range");
    if (b[0] == b[1] || b[1] == b[2] || b[2] == b[3])
      throw std::invalid_argument("block has repeated points");
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw std::invalid_argument("duplicate block");
  d.blocks = std::move(blocks);
  d.block_keys.reserve(d.blocks.size() * 2);
  for (const auto& b : d.blocks) d.block_keys.insert(block_key(b));
  return d;
}

DesignStats validate(const Design& d) {
  DesignStats s;
  s.block_count = d.blocks.size();
  if (d.blocks.empty()) {
    s.issue = "degenerate";
    return s;
  }

  // Pair coverage.
  std::vector<int> pair_count(std::size_t{d.n} * d.n, 0);
  for (const auto& b : d.blocks)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        ++pair_count[std::size_t{b[i]} * d.n + b[j]];
        ++pair_count[std::size_t{b[j]} * d.n + b[i]];
      }
  int lo = INT32_MAX, hi = 0;
  for (Pt a = 0; a < d.n; ++a)
    for (Pt b = a + 1; b < d.n; ++b) {
      int c = pair_count[std::size_t{a} * d.n + b];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  s.lambda_min = lo;
  s.lambda_max = hi;
  s.is_2_design = (lo == hi && lo >= 1);
  s.lambda = s.is_2_design ? lo : 0;
  if (!s.is_2_design) s.issue = "not a 2-design";

  // Supersimple: no two blocks share three points, i.e. every triple lies
  // in at most one block.
  TripleSet seen(d.n);
  s.is_supersimple = true;
  for (const auto& b : d.blocks) {
    for (int i = 0; i < 4 && s.is_supersimple; ++i) {
      Triple t;
      int k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) t[k++] = b[j];
      if (!seen.insert(t[0], t[1], t[2])) s.is_supersimple = false;
    }
    if (!s.is_supersimple) break;
  }

  // Symmetric-difference closure over blocks meeting in two points.
  // Every such meeting is witnessed by the shared pair, so walk blocks
  // through each pair.
  s.triangle_delta = true;
  if (s.is_supersimple) {
    std::vector<std::vector<Block>> through(std::size_t{d.n} * d.n);
    for (const auto& b : d.blocks)
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) through[std::size_t{b[i]} * d.n + b[j]].push_back(b);
    for (Pt a = 0; a < d.n && s.triangle_delta; ++a)
      for (Pt b = a + 1; b < d.n && s.triangle_delta; ++b) {
        const auto& list = through[std::size_t{a} * d.n + b];
        for (std::size_t i = 0; i < list.size() && s.triangle_delta; ++i)
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            Block diff;
            int k = 0;
            for (Pt p : list[i])
              if (p != a && p != b) diff[k++] = p;
            for (Pt p : list[j])
              if (p != a && p != b) diff[k++] = p;
            if (!d.has_block(diff)) {
              s.triangle_delta = false;
              break;
            }
          }
      }
  } else {
    // With three-point meetings the symmetric difference is not 4-element.
    s.triangle_delta = false;
  }
  return s;
}

std::vector<Pt> CollinearityIndex::pair_closure(Pt a, Pt b) const {
  std::vector<Pt> out{a, b};
  for (auto [x, y] : completing_pairs(a, b)) {
    out.push_back(x);
    out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CollinearityIndex::in_pair_closure(Pt a, Pt b, Pt z) const {
  if (z == a || z == b) return true;
  return collinear_.contains(a, b, z);
}

CollinearityIndex collinearity_index(const Design& d, const DesignStats& s) {
  if (!s.is_2_design || !s.is_supersimple)
    throw std::invalid_argument("collinearity index requires a supersimple 2-design");
  CollinearityIndex idx(d.n, s.lambda);
  for (const auto& b : d.blocks) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Pt a = b[i], c = b[j];
        Pt r0 = 0, r1 = 0;
        int k = 0;
        for (int t = 0; t < 4; ++t)
          if (t != i && t != j) (k++ ? r1 : r0) = b[t];
        idx.completing_[std::size_t{a} * d.n + c].push_back({r0, r1});
        idx.completing_[std::size_t{c} * d.n + a].push_back({r0, r1});
      }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) idx.collinear_.insert(b[i], b[j], b[k]);
  }
  return idx;
}

namespace {

Design design_from_vectors(std::string name, const std::vector<std::uint32_t>& points,
                           const std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t,
                                                    std::uint32_t)>& accept) {
  // Points are indexed by ascending word value; blocks are the accepted
  // zero-sum 4-subsets.
  std::map<std::uint32_t, Pt> id_of;
  for (std::size_t i = 0; i < points.size(); ++i) id_of[points[i]] = static_cast<Pt>(i);
  std::vector<Block> blocks;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::uint32_t w = points[i] ^ points[j] ^ points[k];
        if (w <= points[k]) continue;  // keep i<j<k<l by word order
        auto it = id_of.find(w);
        if (it == id_of.end()) continue;
        if (!accept(points[i], points[j], points[k], w)) continue;
        blocks.push_back({static_cast<Pt>(i), static_cast<Pt>(j), static_cast<Pt>(k), it->second});
      }
  return make_design(std::move(name), static_cast<Pt>(n), std::move(blocks));
}

}  // namespace

Design boolean_design(int m) {
  if (m < 2) throw std::invalid_argument("boolean_design: m must be at least 2");
  if (m > 14) throw std::invalid_argument("boolean_design: m too large");
  std::vector<std::uint32_t> pts(1u << m);
  for (std::uint32_t v = 0; v < pts.size(); ++v) pts[v] = v;
  return design_from_vectors("boolean_m" + std::to_string(m), pts,
                             [](auto, auto, auto, auto) { return true; });
}

Design symplectic_design(int m) {
  FormSpace fs(m);
  std::vector<std::uint32_t> pts(fs.vector_count());
  for (std::uint32_t v = 0; v < pts.size(); ++v) pts[v] = v;
  return design_from_vectors(
      "symplectic_m" + std::to_string(m), pts, [&fs](auto a, auto b, auto c, auto d) {
        return ((fs.theta(a) + fs.theta(b) + fs.theta(c) + fs.theta(d)) & 1) == 0;
      });
}

Design orthogonal_design(int m, Sign type) {
  FormSpace fs(m);
  std::vector<std::uint32_t> pts;
  for (std::uint32_t v = 0; v < fs.vector_count(); ++v)
    if (fs.quad(v, type) == 0) pts.push_back(v);
  std::uint32_t half = 1u << (2 * m - 1), off = 1u << (m - 1);
  std::uint32_t expected = type == Sign::plus ? half + off : half - off;
  if (pts.size() != expected) throw std::logic_error("orthogonal_design: singular count mismatch");
  std::string name = std::string("orthogonal_m") + std::to_string(m) +
                     (type == Sign::plus ? "_plus" : "_minus");
  Design d = design_from_vectors(name, pts, [](auto, auto, auto, auto) { return true; });
  if (d.blocks.empty()) throw std::invalid_argument("orthogonal_design: degenerate: not a 2-design");
  return d;
}

Design projective_plane_3() {
  // Normalized representatives of the 13 projective points over F_3,
  // enumerated in ascending base-3 word order.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < 3 && reps.size() < 13; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
        if (lead != 1) continue;
        reps.push_back(v);
      }
  std::vector<Block> blocks;
  for (const auto& h : reps) {
    Block blk{};
    int k = 0;
    for (std::size_t p = 0; p < reps.size(); ++p) {
      int dot = (h[0] * reps[p][0] + h[1] * reps[p][1] + h[2] * reps[p][2]) % 3;
      if (dot == 0) blk[k++] = static_cast<Pt>(p);
    }
    if (k != 4) throw std::logic_error("projective_plane_3: line size mismatch");
    blocks.push_back(blk);
  }
  return make_design("pg23", 13, std::move(blocks));
}

BooleanReconstruction reconstruct_boolean(const Design& d, Pt base) {
  DesignStats s = validate(d);
  if (!s.is_2_design || !s.is_supersimple || d.n != 2 * s.lambda + 2)
    throw std::invalid_argument("reconstruct_boolean requires a supersimple 2-design with n = 2*lambda + 2");
  if (base >= d.n) throw std::invalid_argument("base point out of range");

  BooleanReconstruction out;
  const Pt n = d.n;
  constexpr Pt kNone = 0xFFFF;
  std::vector<Pt> star(std::size_t{n} * n, kNone);
  auto at = [&](Pt a, Pt b) -> Pt& { return star[std::size_t{a} * n + b]; };
  for (Pt a = 0; a < n; ++a) {
    at(a, a) = base;
    at(a, base) = a;
    at(base, a) = a;
  }
  for (const auto& b : d.blocks) {
    if (std::find(b.begin(), b.end(), base) == b.end()) continue;
    Triple rest;
    int k = 0;
    for (Pt p : b)
      if (p != base) rest[k++] = p;
    at(rest[0], rest[1]) = rest[2];
    at(rest[1], rest[0]) = rest[2];
    at(rest[0], rest[2]) = rest[1];
    at(rest[2], rest[0]) = rest[1];
    at(rest[1], rest[2]) = rest[0];
    at(rest[2], rest[1]) = rest[0];
  }
  for (Pt a = 0; a < n; ++a)
    for (Pt b = 0; b < n; ++b)
      if (at(a, b) == kNone) {
        out.reason = "pair has no completing block through the base point";
        return out;
      }
  for (Pt a = 0; a < n; ++a)
    for (Pt b = 0; b < n; ++b)
      for (Pt c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          out.reason = "operation not associative; design is not Boolean";
          return out;
        }

  // (Omega, *) is an elementary abelian 2-group. Assign coordinates by a
  // greedy basis walk.
  std::vector<std::uint32_t> coords(n, 0);
  std::vector<bool> in_span(n, false);
  in_span[base] = true;
  std::vector<Pt> span{base};
  int m = 0;
  for (Pt p = 0; p < n; ++p) {
    if (in_span[p]) continue;
    std::uint32_t unit = 1u << m;
    ++m;
    std::vector<Pt> snapshot = span;
    for (Pt q : snapshot) {
      Pt r = at(p, q);
      if (in_span[r]) {
        out.reason = "span collapse; design is not Boolean";
        return out;
      }
      coords[r] = unit ^ coords[q];
      in_span[r] = true;
      span.push_back(r);
    }
  }
  if (span.size() != n || (std::size_t{1} << m) != n) {
    out.reason = "point count is not a power of two";
    return out;
  }
  for (const auto& b : d.blocks)
    if ((coords[b[0]] ^ coords[b[1]] ^ coords[b[2]] ^ coords[b[3]]) != 0) {
      out.reason = "block is not a zero-sum 4-subset";
      return out;
    }
  std::uint64_t expected_blocks = (std::uint64_t{n} * (n - 1) * (n - 2)) / 24;
  if (d.blocks.size() != expected_blocks) {
    out.reason = "block count differs from the zero-sum count";
    return out;
  }
  out.ok = true;
  out.m = m;
  out.coordinates = std::move(coords);
  return out;
}

Design relabel(const Design& d, const Perm& g) {
  if (g.degree() != d.n) throw std::invalid_argument("relabel: degree mismatch");
  std::vector<Block> blocks;
  blocks.reserve(d.blocks.size());
  for (const auto& b : d.blocks) blocks.push_back({g[b[0]], g[b[1]], g[b[2]], g[b[3]]});
  return make_design(d.name + "_relabeled", d.n, std::move(blocks));
}

Design design_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("name") || !j.contains("n") || !j.contains("blocks"))
    throw std::invalid_argument("design file must carry name, n and blocks");
  std::string name = j.at("name").get<std::string>();
  std::int64_t n = j.at("n").get<std::int64_t>();
  if (n < 4 || n > 0xFFFF) throw std::invalid_argument("point count out of range");
  std::vector<Block> blocks;
  for (const auto& jb : j.at("blocks")) {
    if (!jb.is_array() || jb.size() != 4) throw std::invalid_argument("block must have 4 points");
    Block b{};
    for (int i = 0; i < 4; ++i) {
      std::int64_t p = jb[i].get<std::int64_t>();
      if (p < 0 || p >= n) throw std::invalid_argument("block point out of range");
      b[i] = static_cast<Pt>(p);
    }
    blocks.push_back(b);
  }
  return make_design(std::move(name), static_cast<Pt>(n), std::move(blocks));
}

std::string design_to_json_text(const Design& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["n"] = d.n;
  auto& jb = j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : d.blocks) jb.push_back({b[0], b[1], b[2], b[3]});
  return j.dump() + "\n";
}

}  // namespace conway

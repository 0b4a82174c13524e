#include "conway/move_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "conway/parallel.hpp"

namespace conway {

MoveTable::MoveTable(const Design& d, const CollinearityIndex& idx)
    : n_(d.n), lambda_(idx.lambda()) {
  table_.reserve(std::size_t{n_} * n_);
  for (Pt a = 0; a < n_; ++a)
    for (Pt b = 0; b < n_; ++b) {
      if (a == b) {
        table_.push_back(Perm::identity(n_));
        continue;
      }
      std::vector<Pt> img(n_);
      for (Pt x = 0; x < n_; ++x) img[x] = x;
      img[a] = b;
      img[b] = a;
      for (auto [p, q] : idx.completing_pairs(a, b)) {
        if (img[p] != p || img[q] != q) throw std::logic_error("completing pairs overlap");
        img[p] = q;
        img[q] = p;
      }
      table_.push_back(Perm(std::move(img)));
    }
  for (Pt a = 0; a < n_; ++a)
    for (Pt b = static_cast<Pt>(a + 1); b < n_; ++b) distinct_.push_back(move(a, b));
  std::sort(distinct_.begin(), distinct_.end());
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
}

Perm MoveTable::move_sequence(std::span<const Pt> points) const {
  if (points.empty()) throw std::invalid_argument("move_sequence: empty path");
  Perm acc = Perm::identity(n_);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) acc = acc * move(points[i], points[i + 1]);
  return acc;
}

CheckResult check_line_move_identity(const Design& d, const MoveTable& t, int threads) {
  CheckResult res;
  res.checked = d.blocks.size() * 3;
  auto hit = parallel_first_hit(d.blocks.size(), threads, [&](std::size_t i) {
    const Block& b = d.blocks[i];
    return !(t.move(b[0], b[1]) == t.move(b[2], b[3]) && t.move(b[0], b[2]) == t.move(b[1], b[3]) &&
             t.move(b[0], b[3]) == t.move(b[1], b[2]));
  });
  if (hit) {
    const Block& b = d.blocks[*hit];
    res.ok = false;
    res.witness = "block {" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                  std::to_string(b[2]) + "," + std::to_string(b[3]) + "}: [" +
                  t.move(b[0], b[1]).cycle_string() + "] vs [" + t.move(b[2], b[3]).cycle_string() +
                  "]";
  }
  return res;
}

namespace {

// Ordered triples of distinct points, indexed for the parallel scans.
struct TripleIndexer {
  Pt n;
  std::size_t count() const { return std::size_t{n} * (n - 1) * (n - 2); }
  void unrank(std::size_t r, Pt& x, Pt& y, Pt& z) const {
    std::size_t rest = r / (n - 2);
    std::size_t zo = r % (n - 2);
    x = static_cast<Pt>(rest / (n - 1));
    std::size_t yo = rest % (n - 1);
    y = static_cast<Pt>(yo < x ? yo : yo + 1);
    z = static_cast<Pt>(zo);
    if (z >= std::min(x, y)) ++z;
    if (z >= std::max(x, y)) ++z;
  }
};

std::string triple_witness(Pt x, Pt y, Pt z, const Perm& lhs, const Perm& rhs) {
  return "triple (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
         "): " + lhs.cycle_string() + " vs " + rhs.cycle_string();
}

}  // namespace

CheckResult check_move_conjugation_rule(const CollinearityIndex& idx, const MoveTable& t,
                                        int threads) {
  CheckResult res;
  TripleIndexer ti{t.degree()};
  res.checked = ti.count();
  auto violates = [&](std::size_t r, Pt& x, Pt& y, Pt& z, Perm& lhs, const Perm*& rhs) {
    ti.unrank(r, x, y, z);
    lhs = t.move(y, z) * t.move(x, y) * t.move(y, z);
    rhs = idx.in_pair_closure(y, z, x) ? &t.move(x, y) : &t.move(x, z);
    return !(lhs == *rhs);
  };
  auto hit = parallel_first_hit(ti.count(), threads, [&](std::size_t r) {
    Pt x, y, z;
    Perm lhs;
    const Perm* rhs;
    return violates(r, x, y, z, lhs, rhs);
  });
  if (hit) {
    Pt x, y, z;
    Perm lhs;
    const Perm* rhs;
    violates(*hit, x, y, z, lhs, rhs);
    res.ok = false;
    res.witness = triple_witness(x, y, z, lhs, *rhs);
  }
  return res;
}

CheckResult check_braid_orders(const CollinearityIndex& idx, const MoveTable& t, int threads) {
  CheckResult res;
  TripleIndexer ti{t.degree()};
  res.checked = ti.count();
  auto violation = [&](std::size_t r) -> std::string {
    Pt x, y, z;
    ti.unrank(r, x, y, z);
    bool close = idx.in_pair_closure(y, z, x);
    Perm prod = t.move(x, y) * t.move(y, z);
    std::uint64_t want = close ? 2 : 3;
    if (prod.order() != want)
      return "product of moves of {" + std::to_string(x) + "," + std::to_string(y) + "} and {" +
             std::to_string(y) + "," + std::to_string(z) + "} has order " +
             std::to_string(prod.order()) + ", expected " + std::to_string(want);
    if (!close) {
      std::array<Pt, 4> path{z, x, y, z};
      Perm seq = t.move_sequence(path);
      if (!(seq == t.move(x, y)))
        return triple_witness(x, y, z, seq, t.move(x, y));
    }
    return {};
  };
  auto hit = parallel_first_hit(ti.count(), threads,
                                [&](std::size_t r) { return !violation(r).empty(); });
  if (hit) {
    res.ok = false;
    res.witness = violation(*hit);
  }
  return res;
}

CheckResult check_conjugation_covariance(const MoveTable& t, int threads) {
  CheckResult res;
  const Pt n = t.degree();
  const auto& gens = t.distinct_moves();
  std::size_t pairs = std::size_t{n} * (n - 1) / 2;
  res.checked = pairs * gens.size();
  auto unrank_pair = [n](std::size_t r, Pt& a, Pt& b) {
    a = 0;
    std::size_t row = n - 1;
    while (r >= row) {
      r -= row;
      --row;
      ++a;
    }
    b = static_cast<Pt>(a + 1 + r);
  };
  auto violates = [&](std::size_t r) {
    std::size_t pair_rank = r / gens.size();
    const Perm& g = gens[r % gens.size()];
    Pt a, b;
    unrank_pair(pair_rank, a, b);
    return !(t.move(a, b).conjugated_by(g) == t.move(g[a], g[b]));
  };
  auto hit = parallel_first_hit(res.checked, threads, violates);
  if (hit) {
    std::size_t pair_rank = *hit / gens.size();
    const Perm& g = gens[*hit % gens.size()];
    Pt a, b;
    unrank_pair(pair_rank, a, b);
    res.ok = false;
    res.witness = "pair {" + std::to_string(a) + "," + std::to_string(b) + "} conjugated by " +
                  g.cycle_string() + ": " + t.move(a, b).conjugated_by(g).cycle_string() + " vs " +
                  t.move(g[a], g[b]).cycle_string();
  }
  return res;
}

}  // namespace conway

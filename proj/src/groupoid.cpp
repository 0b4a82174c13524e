#include "conway/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "conway/parallel.hpp"

namespace conway {

HoleStabilizer hole_stabilizer(const MoveTable& t, Pt base, std::uint64_t cap, int threads) {
  const Pt n = t.degree();
  if (base >= n) throw std::invalid_argument("hole_stabilizer: base out of range");
  HoleStabilizer out;
  out.base = base;

  // Return paths base,x,y,base over all point pairs.
  PermWordSet seen(n);
  seen.insert(Perm::identity(n).images());
  for (Pt x = 0; x < n; ++x)
    for (Pt y = 0; y < n; ++y) {
      if (x == base || y == base || x == y) continue;
      Perm g = t.move(base, x) * t.move(x, y) * t.move(y, base);
      if (seen.insert(g.images()).second) out.generators.push_back(std::move(g));
    }
  std::sort(out.generators.begin(), out.generators.end());

  auto reduced = reduce_generators(out.generators, n);
  out.reduced_generators = std::move(reduced.generators);
  out.order = reduced.chain.order();

  if (out.order <= cap) {
    auto closure = enumerate_group(out.reduced_generators, n, cap, threads);
    if (!closure.complete || closure.order != out.order)
      throw std::logic_error("hole stabilizer enumeration disagrees with its chain order");
    out.enumerated = true;
    out.elements.emplace(std::move(closure.elements));
  }
  return out;
}

ConwayGroupoid conway_groupoid(const MoveTable& t, Pt base, const HoleStabilizer& pi,
                               std::uint64_t cap, int threads) {
  const Pt n = t.degree();
  ConwayGroupoid out;
  out.base = base;
  out.size = static_cast<std::uint64_t>(n) * pi.order;
  if (!pi.enumerated || out.size > cap) return out;

  const PermWordSet& stab = *pi.elements;
  PermWordSet elems(n);
  elems.reserve(out.size);
  bool disjoint = true;
  std::vector<Pt> buffer;
  for (Pt x = 0; x < n && disjoint; ++x) {
    const Perm& step = t.move(base, x);
    std::size_t count = stab.size();
    buffer.assign(count * n, 0);
    parallel_chunks(count, threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        auto h = stab.at(static_cast<std::uint32_t>(k));
        Pt* dst = buffer.data() + k * n;
        for (Pt p = 0; p < n; ++p) dst[p] = step[h[p]];
      }
    });
    for (std::size_t k = 0; k < count; ++k) {
      std::span<const Pt> img{buffer.data() + k * n, n};
      if (img[base] != x || !elems.insert(img).second) {
        disjoint = false;
        break;
      }
    }
  }
  out.coset_check = disjoint && elems.size() == out.size;
  out.enumerated = out.coset_check;
  if (out.enumerated) out.elements.emplace(std::move(elems));
  return out;
}

ConwayGroupoid conway_groupoid_direct(const MoveTable& t, Pt base, std::uint64_t cap) {
  const Pt n = t.degree();
  ConwayGroupoid out;
  out.base = base;
  PermWordSet elems(n);
  elems.insert(Perm::identity(n).images());
  std::uint32_t head = 0;
  bool complete = true;
  while (head < elems.size()) {
    Perm cur = elems.perm_at(head);
    ++head;
    Pt end = cur[base];
    for (Pt y = 0; y < n; ++y) {
      if (y == end) continue;
      Perm next = cur * t.move(end, y);
      elems.insert(next.images());
      if (elems.size() > cap) {
        complete = false;
        break;
      }
    }
    if (!complete) break;
  }
  out.enumerated = complete;
  out.size = elems.size();
  out.coset_check = complete;
  if (complete) out.elements.emplace(std::move(elems));
  return out;
}

GroupoidGroupCheck groupoid_group_check(const MoveTable& t, Pt base, const HoleStabilizer& pi) {
  GroupoidGroupCheck out;
  const Pt n = t.degree();
  auto reduced = reduce_generators(t.distinct_moves(), n);
  out.generated_order = reduced.chain.order();
  out.groupoid_size = static_cast<std::uint64_t>(n) * pi.order;
  if (out.generated_order < out.groupoid_size)
    throw std::logic_error("generated group is smaller than the groupoid");
  out.is_group = (out.generated_order == out.groupoid_size);
  out.moves_transitive = is_transitive(reduced.generators, n);
  if (out.is_group && out.moves_transitive) {
    // Orbit-stabilizer: the point stabilizer has order |G| / n, and the
    // hole stabilizer sits inside it, so equal orders mean equality.
    out.stabilizer_matches = (out.generated_order / n == pi.order);
  }
  (void)base;
  return out;
}

AutomorphismCheck moves_preserve_blocks(const Design& d, const MoveTable& t, int threads) {
  AutomorphismCheck out;
  const auto& gens = t.distinct_moves();
  std::size_t total = gens.size() * d.blocks.size();
  auto hit = parallel_first_hit(total, threads, [&](std::size_t k) {
    const Perm& g = gens[k / d.blocks.size()];
    const Block& b = d.blocks[k % d.blocks.size()];
    return !d.has_block({g[b[0]], g[b[1]], g[b[2]], g[b[3]]});
  });
  if (hit) {
    const Perm& g = gens[*hit / d.blocks.size()];
    const Block& b = d.blocks[*hit % d.blocks.size()];
    out.ok = false;
    out.witness = "move " + g.cycle_string() + " maps block {" + std::to_string(b[0]) + "," +
                  std::to_string(b[1]) + "," + std::to_string(b[2]) + "," + std::to_string(b[3]) +
                  "} outside the block set";
  }
  return out;
}

}  // namespace conway

#include "conway/group_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "conway/parallel.hpp"

namespace conway {

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, lvl] = sift(g, 0);
  return lvl == levels_.size() && residue.is_identity();
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Pt img = g[lv.beta];
    if (img == lv.beta) continue;
    std::int32_t s = lv.slot[img];
    if (s < 0) return {std::move(g), i};
    g = g * lv.transversal[s].inverse();
  }
  return {std::move(g), levels_.size()};
}

std::vector<const Perm*> StabChain::level_gens(std::size_t lvl) const {
  // The generators feeding level lvl are all strong generators fixing the
  // earlier base points, wherever they were inserted.
  std::vector<const Perm*> out;
  for (const Perm& s : strong_gens_) {
    bool fixes = true;
    for (std::size_t j = 0; j < lvl && fixes; ++j) fixes = s[levels_[j].beta] == levels_[j].beta;
    if (fixes) out.push_back(&s);
  }
  return out;
}

void StabChain::insert_residue(const Perm& g, std::size_t lvl) {
  if (lvl == levels_.size()) {
    Level lv;
    lv.beta = g.support().front();
    levels_.push_back(std::move(lv));
  }
  strong_gens_.push_back(g);
}

void StabChain::rebuild_orbit(std::size_t lvl) {
  Level& lv = levels_[lvl];
  auto gens = level_gens(lvl);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.slot.assign(degree_, -1);
  lv.orbit.push_back(lv.beta);
  lv.transversal.push_back(Perm::identity(degree_));
  lv.slot[lv.beta] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Pt p = lv.orbit[head];
    for (const Perm* s : gens) {
      Pt q = (*s)[p];
      if (lv.slot[q] >= 0) continue;
      lv.slot[q] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.transversal.push_back(lv.transversal[head] * *s);
    }
  }
}

bool StabChain::find_schreier_violation(std::size_t lvl, Perm& residue,
                                        std::size_t& stuck_at) const {
  const Level& lv = levels_[lvl];
  auto gens = level_gens(lvl);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    for (const Perm* s : gens) {
      Pt p = lv.orbit[head];
      std::int32_t to = lv.slot[(*s)[p]];
      Perm schreier = lv.transversal[head] * *s * lv.transversal[to].inverse();
      if (schreier.is_identity()) continue;
      auto [res, at] = sift(std::move(schreier), lvl + 1);
      if (at == levels_.size() && res.is_identity()) continue;
      residue = std::move(res);
      stuck_at = at;
      return true;
    }
  }
  return false;
}

void StabChain::extend(const Perm& g) {
  if (g.degree() != degree_) throw std::invalid_argument("StabChain: degree mismatch");
  if (g.is_identity()) return;
  auto [residue, lvl] = sift(g, 0);
  if (lvl == levels_.size() && residue.is_identity()) return;
  insert_residue(residue, lvl);

  // Bottom-up verification: fix the deepest dirty level, then climb. A new
  // residue jumps the cursor back down; the walk ends when level 0 and
  // everything below it verify with the final generator set.
  std::size_t i = lvl;
  while (true) {
    rebuild_orbit(i);
    Perm bad;
    std::size_t at = 0;
    if (find_schreier_violation(i, bad, at)) {
      insert_residue(bad, at);
      i = at;
      continue;
    }
    if (i == 0) break;
    --i;
  }
}

std::uint64_t StabChain::order() const {
  unsigned __int128 acc = 1;
  for (const Level& lv : levels_) {
    acc *= lv.orbit.size();
    if (acc > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Pt> StabChain::base() const {
  std::vector<Pt> out;
  for (const Level& lv : levels_) out.push_back(lv.beta);
  return out;
}

std::vector<std::size_t> StabChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

StabChain stabilizer_chain(const std::vector<Perm>& gens, Pt degree) {
  StabChain chain(degree);
  for (const Perm& g : gens) chain.extend(g);
  return chain;
}

std::vector<std::vector<Pt>> orbits(const std::vector<Perm>& gens, Pt degree) {
  std::vector<std::vector<Pt>> out;
  std::vector<bool> seen(degree, false);
  for (Pt start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Pt> orb{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Perm& g : gens) {
        Pt q = g[orb[head]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const std::vector<Perm>& gens, Pt degree) {
  if (degree == 0) return true;
  return orbits(gens, degree).front().size() == degree;
}

bool is_2_transitive(const std::vector<Perm>& gens, Pt degree) {
  if (degree < 2) return false;
  return transitivity_degree(stabilizer_chain(gens, degree)) >= 2;
}

int transitivity_degree(const StabChain& chain) {
  int t = 0;
  auto sizes = chain.orbit_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == static_cast<std::size_t>(chain.degree()) - i)
      ++t;
    else
      break;
  }
  // A trivial stabilizer with one point left acts transitively on it.
  if (t == static_cast<int>(sizes.size()) && chain.degree() - t == 1) ++t;
  return t;
}

BlockSystem minimal_blocks(const std::vector<Perm>& gens, Pt degree) {
  if (!is_transitive(gens, degree)) throw std::invalid_argument("minimal_blocks: group is intransitive");
  BlockSystem out;
  out.primitive = true;
  if (degree <= 2) return out;

  std::vector<Pt> parent(degree);
  auto find = [&](Pt x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (Pt beta = 1; beta < degree; ++beta) {
    std::iota(parent.begin(), parent.end(), Pt{0});
    std::vector<std::pair<Pt, Pt>> queue{{0, beta}};
    parent[find(beta)] = find(0);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const Perm& g : gens) {
        Pt ra = find(g[a]), rb = find(g[b]);
        if (ra == rb) continue;
        parent[ra] = rb;
        queue.push_back({g[a], g[b]});
      }
    }
    std::size_t size = 0;
    Pt rep = find(0);
    for (Pt x = 0; x < degree; ++x)
      if (find(x) == rep) ++size;
    if (size < degree) {
      out.primitive = false;
      out.block.clear();
      for (Pt x = 0; x < degree; ++x)
        if (find(x) == rep) out.block.push_back(x);
      return out;
    }
  }
  return out;
}

bool is_primitive(const std::vector<Perm>& gens, Pt degree) {
  return minimal_blocks(gens, degree).primitive;
}

ReducedGenerators reduce_generators(const std::vector<Perm>& gens, Pt degree) {
  ReducedGenerators out{{}, StabChain(degree)};
  for (const Perm& g : gens) {
    if (g.is_identity() || out.chain.contains(g)) continue;
    out.chain.extend(g);
    out.generators.push_back(g);
  }
  return out;
}

ClosureResult enumerate_group(const std::vector<Perm>& gens, Pt degree, std::uint64_t cap,
                              int threads) {
  ClosureResult res{false, 0, PermWordSet(degree)};
  std::vector<Perm> use;
  for (const Perm& g : gens)
    if (!g.is_identity()) use.push_back(g);
  res.elements.insert(Perm::identity(degree).images());
  if (use.empty()) {
    res.complete = true;
    res.order = 1;
    return res;
  }

  // Frontier products are computed in parallel batches but inserted in a
  // fixed order, so the element set and its insertion order match the
  // single-threaded run exactly.
  const std::size_t batch = 4096;
  std::vector<Pt> buffer;
  std::uint32_t head = 0;
  while (head < res.elements.size()) {
    std::size_t take = std::min<std::size_t>(batch, res.elements.size() - head);
    std::size_t products = take * use.size();
    buffer.assign(products * degree, 0);
    parallel_chunks(products, threads, [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) {
        auto elem = res.elements.at(head + static_cast<std::uint32_t>(k / use.size()));
        const Perm& g = use[k % use.size()];
        Pt* dst = buffer.data() + k * degree;
        for (Pt x = 0; x < degree; ++x) dst[x] = g[elem[x]];
      }
    });
    for (std::size_t k = 0; k < products; ++k) {
      std::span<const Pt> img{buffer.data() + k * degree, degree};
      auto [idx, inserted] = res.elements.insert(img);
      (void)idx;
      if (inserted && res.elements.size() > cap) return res;  // cap exceeded: incomplete
    }
    head += static_cast<std::uint32_t>(take);
  }
  res.complete = true;
  res.order = res.elements.size();
  return res;
}

ThreeTranspositionReport three_transposition_report(const std::vector<Perm>& E,
                                                    std::optional<std::uint64_t> expected_order,
                                                    int threads) {
  ThreeTranspositionReport rep;
  if (E.empty()) {
    rep.witness = "empty move set";
    return rep;
  }
  const Pt degree = E.front().degree();
  for (const Perm& e : E)
    if (e.order() != 2) {
      rep.witness = "element " + e.cycle_string() + " is not an involution";
      return rep;
    }

  // Pairwise product orders.
  std::size_t pairs = E.size() * E.size();
  auto bad_pair = parallel_first_hit(pairs, threads, [&](std::size_t k) {
    const Perm& a = E[k / E.size()];
    const Perm& b = E[k % E.size()];
    return (a * b).order() > 3;
  });
  rep.orders_ok = !bad_pair.has_value();
  if (bad_pair) {
    const Perm& a = E[*bad_pair / E.size()];
    const Perm& b = E[*bad_pair % E.size()];
    rep.witness = "product " + a.cycle_string() + " * " + b.cycle_string() + " has order " +
                  std::to_string((a * b).order());
  }

  // Closure of E under conjugation by E.
  PermWordSet members(degree);
  for (const Perm& e : E) members.insert(e.images());
  auto bad_conj = parallel_first_hit(pairs, threads, [&](std::size_t k) {
    const Perm& e = E[k / E.size()];
    const Perm& g = E[k % E.size()];
    return !members.contains(e.conjugated_by(g).images());
  });
  rep.class_closed = !bad_conj.has_value();

  // Conjugation orbit of the first element, expanded by the generators.
  PermWordSet orbit(degree);
  std::vector<std::uint32_t> queue;
  orbit.insert(E.front().images());
  queue.push_back(0);
  while (!queue.empty()) {
    Perm cur = orbit.perm_at(queue.back());
    queue.pop_back();
    for (const Perm& g : E) {
      Perm img = cur.conjugated_by(g);
      auto [idx, inserted] = orbit.insert(img.images());
      if (inserted) queue.push_back(idx);
    }
  }
  rep.single_class = true;
  for (const Perm& e : E)
    if (!orbit.contains(e.images())) {
      rep.single_class = false;
      break;
    }

  if (expected_order) {
    rep.generates = stabilizer_chain(E, degree).order() == *expected_order;
  } else {
    rep.generates = true;  // the group is taken to be <E> itself
  }
  return rep;
}

}  // namespace conway

#include "conway/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conway {

namespace {

void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
}

}  // namespace

Perm::Perm(std::vector<Pt> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Pt y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("image sequence is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(Pt degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Pt{0});
  return p;
}

Perm Perm::transposition(Pt degree, Pt a, Pt b) {
  if (a >= degree || b >= degree) throw std::invalid_argument("transposition point out of range");
  Perm p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Perm Perm::from_cycles(Pt degree, const std::vector<std::vector<Pt>>& cycles) {
  Perm p = identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Pt from = cyc[i];
      Pt to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || p.images_[from] != from)
        throw std::invalid_argument("cycles overlap or exceed degree");
      p.images_[from] = to;
    }
  }
  return Perm(std::move(p.images_));  // re-validate
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::operator*(const Perm& q) const {
  require_same_degree(*this, q);
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = q.images_[images_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Pt>(x);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  require_same_degree(*this, g);
  Perm gi = g.inverse();
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = g.images_[images_[gi.images_[x]]];
  return r;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Pt y = static_cast<Pt>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<Pt> Perm::support() const {
  std::vector<Pt> out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) out.push_back(static_cast<Pt>(x));
  return out;
}

std::vector<Pt> Perm::fixed_points() const {
  std::vector<Pt> out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) out.push_back(static_cast<Pt>(x));
  return out;
}

std::vector<std::vector<Pt>> Perm::cycles() const {
  std::vector<std::vector<Pt>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = true;
      continue;
    }
    std::vector<Pt> cyc;
    for (Pt y = static_cast<Pt>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      cyc.push_back(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

Perm restrict_away(const Perm& p, Pt fixed) {
  if (fixed >= p.degree() || p[fixed] != fixed)
    throw std::invalid_argument("restrict_away: point is not fixed");
  std::vector<Pt> img(p.degree() - 1);
  auto relabel = [fixed](Pt x) { return static_cast<Pt>(x > fixed ? x - 1 : x); };
  for (Pt x = 0; x < p.degree(); ++x) {
    if (x == fixed) continue;
    img[relabel(x)] = relabel(p[x]);
  }
  return Perm(std::move(img));
}

}  // namespace conway

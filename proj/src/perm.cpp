#include "gdh/perm.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gdh/util.hpp"

namespace gdh {

namespace {

void check_bijection(const std::vector<int>& images) {
  const int r = static_cast<int>(images.size());
  if (r < 1 || r > 8)
    throw std::invalid_argument("permutation arity must be in [1, 8]");
  std::vector<char> seen(r, 0);
  for (int v : images) {
    if (v < 0 || v >= r || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

std::vector<Perm> all_perms(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Perm Perm::identity(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < arity(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < arity(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.arity() != q.arity())
    throw std::invalid_argument("compose: arity mismatch");
  std::vector<int> img(p.arity());
  for (int i = 0; i < p.arity(); ++i) img[i] = p(q(i));
  return Perm(std::move(img));
}

std::vector<int> apply_to_positions(const Perm& p, const std::vector<int>& t) {
  if (p.arity() != static_cast<int>(t.size()))
    throw std::invalid_argument("apply_to_positions: arity mismatch");
  std::vector<int> out(t.size());
  for (int i = 0; i < p.arity(); ++i) out[i] = t[p(i)];
  return out;
}

PermGroup::PermGroup(int r, std::vector<Perm> elements)
    : r_(r), elems_(std::move(elements)) {
  for (const auto& p : elems_)
    if (p.arity() != r_)
      throw std::invalid_argument("group element arity mismatch");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

PermGroup PermGroup::trivial(int r) { return PermGroup(r, {Perm::identity(r)}); }

PermGroup PermGroup::symmetric(int r) { return PermGroup(r, all_perms(r)); }

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (r_ != other.r_) return false;
  for (const auto& p : elems_)
    if (!other.contains(p)) return false;
  return true;
}

bool PermGroup::verify_closed() const {
  if (elems_.empty() || !contains(Perm::identity(r_))) return false;
  for (const auto& a : elems_)
    for (const auto& b : elems_)
      if (!contains(compose(a, b))) return false;
  return true;
}

PermGroup closure(int r, const std::vector<Perm>& generators) {
  for (const auto& g : generators)
    if (g.arity() != r) throw std::invalid_argument("generator arity mismatch");
  std::set<Perm> elems;
  elems.insert(Perm::identity(r));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  for (const auto& g : generators)
    if (elems.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        Perm p = compose(a, g);
        if (elems.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(r, std::vector<Perm>(elems.begin(), elems.end()));
}

std::vector<PermGroup> enumerate_subgroups(int r) {
  if (r < 1 || r > 5)
    throw std::invalid_argument(
        "subgroup enumeration is exhaustive and limited to r <= 5");
  const std::vector<Perm> all = all_perms(r);
  const int sz = static_cast<int>(all.size());  // r! <= 120

  auto index_of = [&](const Perm& p) {
    return static_cast<int>(
        std::lower_bound(all.begin(), all.end(), p) - all.begin());
  };
  std::vector<std::vector<int>> table(sz, std::vector<int>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) table[i][j] = index_of(compose(all[i], all[j]));

  using Mask = std::array<std::uint64_t, 2>;
  auto test = [](const Mask& m, int i) {
    return (m[i >> 6] >> (i & 63)) & 1ull;
  };
  auto set = [](Mask& m, int i) { m[i >> 6] |= 1ull << (i & 63); };

  // Closure of a set of element indices under the composition table.
  auto close = [&](std::vector<int> work) {
    Mask m{0, 0};
    std::vector<int> members;
    for (int i : work)
      if (!test(m, i)) {
        set(m, i);
        members.push_back(i);
      }
    for (std::size_t w = 0; w < members.size(); ++w) {
      const int x = members[w];
      for (std::size_t v = 0; v < members.size(); ++v) {
        for (int p : {table[x][members[v]], table[members[v]][x]}) {
          if (!test(m, p)) {
            set(m, p);
            members.push_back(p);
          }
        }
      }
    }
    return m;
  };

  const int id = index_of(Perm::identity(r));
  std::set<Mask> seen;
  std::vector<Mask> queue;
  Mask triv{0, 0};
  set(triv, id);
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    Mask h = queue.back();
    queue.pop_back();
    for (int g = 0; g < sz; ++g) {
      if (test(h, g)) continue;
      std::vector<int> gens;
      for (int i = 0; i < sz; ++i)
        if (test(h, i)) gens.push_back(i);
      gens.push_back(g);
      Mask k = close(std::move(gens));
      if (seen.insert(k).second) queue.push_back(k);
    }
  }

  std::vector<PermGroup> out;
  out.reserve(seen.size());
  for (const Mask& m : seen) {
    std::vector<Perm> elems;
    for (int i = 0; i < sz; ++i)
      if (test(m, i)) elems.push_back(all[i]);
    out.emplace_back(r, std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

namespace {

void check_tuple(const std::vector<int>& t, const PermGroup& g) {
  if (static_cast<int>(t.size()) != g.arity())
    throw std::invalid_argument("tuple length does not match group arity");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j])
        throw std::invalid_argument("tuple entries must be pairwise distinct");
}

}  // namespace

std::vector<std::vector<int>> tuple_orbit(const std::vector<int>& t,
                                          const PermGroup& g) {
  check_tuple(t, g);
  std::set<std::vector<int>> orbit;
  for (const auto& p : g.elements()) orbit.insert(apply_to_positions(p, t));
  return {orbit.begin(), orbit.end()};
}

std::vector<int> canonical_rep(const std::vector<int>& t, const PermGroup& g) {
  check_tuple(t, g);
  std::vector<int> best = t;
  for (const auto& p : g.elements()) {
    std::vector<int> img = apply_to_positions(p, t);
    if (img < best) best = std::move(img);
  }
  return best;
}

}  // namespace gdh

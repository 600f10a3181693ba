#include "gdh/gdh.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gdh/util.hpp"

namespace gdh {

Theory::Theory(PermGroup group) : group_(std::move(group)) {
  if (group_.order() == 0)
    throw std::invalid_argument("theory group must be nonempty");
  if (!group_.contains(Perm::identity(group_.arity())))
    throw std::invalid_argument("theory group must contain the identity");
  if (factorial(group_.arity()) % static_cast<std::uint64_t>(group_.order()))
    throw std::invalid_argument("group order must divide r!");
  if (group_.order() <= 720 && !group_.verify_closed())
    throw std::invalid_argument("theory group is not closed");
}

std::uint64_t Theory::complete_edge_count(int n) const {
  const int r = arity();
  if (n < r) return 0;
  return factorial(r) / static_cast<std::uint64_t>(order()) * binomial(n, r);
}

Theory trivial_theory(int r) { return Theory(PermGroup::trivial(r)); }

Theory symmetric_theory(int r) { return Theory(PermGroup::symmetric(r)); }

Theory two_to_one_theory() { return Theory(closure(3, {Perm({1, 0, 2})})); }

namespace {

// Largest usable base so that base^r fits in 63 bits.
void check_capacity(int n, int r) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  unsigned __int128 p = 1;
  for (int i = 0; i < r; ++i) {
    p *= static_cast<unsigned>(std::max(n, 1));
    if (p > (static_cast<unsigned __int128>(1) << 62))
      throw std::invalid_argument("vertex count too large for this arity");
  }
}

}  // namespace

std::uint64_t encode_tuple(std::span<const int> t, int n) {
  std::uint64_t code = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(std::max(n, 1));
  for (int v : t) code = code * base + static_cast<std::uint64_t>(v);
  return code;
}

std::vector<int> decode_tuple(std::uint64_t code, int r, int n) {
  std::vector<int> t(r);
  const std::uint64_t base = static_cast<std::uint64_t>(std::max(n, 1));
  for (int i = r - 1; i >= 0; --i) {
    t[i] = static_cast<int>(code % base);
    code /= base;
  }
  return t;
}

GdhBuilder::GdhBuilder(Theory theory, int n) : theory_(std::move(theory)), n_(n) {
  check_capacity(n_, theory_.arity());
}

void GdhBuilder::add(const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != theory_.arity())
    throw std::invalid_argument("edge tuple has wrong arity");
  for (int v : tuple)
    if (v < 0 || v >= n_)
      throw std::invalid_argument("edge vertex out of range");
  // canonical_rep also rejects repeated entries
  codes_.push_back(encode_tuple(canonical_rep(tuple, theory_.group()), n_));
}

void GdhBuilder::add_code_unchecked(std::uint64_t code) {
  codes_.push_back(code);
}

Gdh GdhBuilder::build() {
  Gdh g;
  g.theory_ = std::move(theory_);
  g.n_ = n_;
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  g.codes_ = std::move(codes_);
  return g;
}

Gdh::Gdh(Theory theory, int n) : theory_(std::move(theory)), n_(n) {
  check_capacity(n_, theory_.arity());
}

std::vector<std::vector<int>> Gdh::edges() const {
  std::vector<std::vector<int>> out;
  out.reserve(codes_.size());
  for (std::uint64_t c : codes_)
    out.push_back(decode_tuple(c, theory_.arity(), n_));
  return out;
}

bool Gdh::has_edge(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != theory_.arity()) return false;
  for (int v : tuple)
    if (v < 0 || v >= n_) return false;
  return has_edge_code(encode_tuple(canonical_rep(tuple, theory_.group()), n_));
}

bool Gdh::has_edge_code(std::uint64_t canonical_code) const {
  return std::binary_search(codes_.begin(), codes_.end(), canonical_code);
}

Gdh Gdh::add_edge(const std::vector<int>& tuple) const {
  GdhBuilder b(theory_, n_);
  for (std::uint64_t c : codes_) b.add_code_unchecked(c);
  b.add(tuple);
  return b.build();
}

double Gdh::density() const {
  if (n_ < theory_.arity())
    throw std::invalid_argument("density needs at least r vertices");
  const std::uint64_t full = theory_.complete_edge_count(n_);
  return static_cast<double>(codes_.size()) / static_cast<double>(full);
}

Gdh Gdh::induced(const std::vector<int>& vertices) const {
  std::vector<int> s(vertices);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= n_)
      throw std::invalid_argument("induced vertex out of range");
  std::vector<int> remap(n_, -1);
  for (std::size_t i = 0; i < s.size(); ++i) remap[s[i]] = static_cast<int>(i);
  GdhBuilder b(theory_, static_cast<int>(s.size()));
  for (auto& t : edges()) {
    bool inside = true;
    for (int& v : t) {
      if (remap[v] < 0) {
        inside = false;
        break;
      }
      v = remap[v];
    }
    if (inside) b.add(t);
  }
  return b.build();
}

namespace {

void enumerate_distinct_tuples(int n, int r, std::vector<int>& t,
                               const std::function<void()>& emit) {
  if (static_cast<int>(t.size()) == r) {
    emit();
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (std::find(t.begin(), t.end(), v) != t.end()) continue;
    t.push_back(v);
    enumerate_distinct_tuples(n, r, t, emit);
    t.pop_back();
  }
}

}  // namespace

Gdh complete_gdh(const Theory& theory, int n) {
  GdhBuilder b(theory, n);
  std::vector<int> t;
  enumerate_distinct_tuples(n, theory.arity(), t, [&] {
    if (canonical_rep(t, theory.group()) == t)
      b.add_code_unchecked(encode_tuple(t, n));
  });
  return b.build();
}

Family::Family(Theory t, std::vector<Gdh> m)
    : theory(std::move(t)), members(std::move(m)) {
  for (const auto& g : members)
    if (!(g.theory() == theory))
      throw std::invalid_argument("family member theory mismatch");
}

}  // namespace gdh

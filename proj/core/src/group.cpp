#include "xprod/group.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "xprod/errors.hpp"

namespace xprod {

std::shared_ptr<const FiniteGroup> FiniteGroup::validate(std::vector<std::vector<uint32_t>> table) {
  const size_t n = table.size();
  if (n == 0 || n > kMaxOrder)
    throw GroupTableError(GroupTableError::Kind::BadShape, "table order out of range");
  for (const auto& row : table)
    if (row.size() != n)
      throw GroupTableError(GroupTableError::Kind::BadShape, "table is not square");
  for (const auto& row : table)
    for (uint32_t v : row)
      if (v >= n) throw GroupTableError(GroupTableError::Kind::BadShape, "entry out of range");

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw GroupTableError(GroupTableError::Kind::NotAssociative,
                                "associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")",
                                a, b, c);
  uint32_t id = UINT32_MAX;
  for (uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == UINT32_MAX)
    throw GroupTableError(GroupTableError::Kind::NoIdentity, "no identity element");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->id_ = id;
  g->table_ = std::move(table);
  g->inv_.assign(n, UINT32_MAX);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b)
      if (g->table_[a][b] == id && g->table_[b][a] == id) {
        g->inv_[a] = b;
        break;
      }
    if (g->inv_[a] == UINT32_MAX)
      throw GroupTableError(GroupTableError::Kind::NoInverse,
                            "element " + std::to_string(a) + " has no inverse", a);
  }
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::trivial() { return cyclic(1); }

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(uint32_t n) {
  std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate(std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  std::vector<std::array<uint32_t, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto compose = [&](size_t a, size_t b) {
    // (a o b)(x) = a(b(x))
    std::array<uint32_t, 3> c{};
    for (uint32_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == c) return uint32_t(i);
    return UINT32_MAX;
  };
  std::vector<std::vector<uint32_t>> t(6, std::vector<uint32_t>(6));
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return validate(std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::direct_product(const FiniteGroup& a,
                                                               const FiniteGroup& b) {
  size_t n = a.order() * b.order();
  auto idx = [&](uint32_t x, uint32_t y) { return x * uint32_t(b.order()) + y; };
  std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
  for (uint32_t x1 = 0; x1 < a.order(); ++x1)
    for (uint32_t y1 = 0; y1 < b.order(); ++y1)
      for (uint32_t x2 = 0; x2 < a.order(); ++x2)
        for (uint32_t y2 = 0; y2 < b.order(); ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  return validate(std::move(t));
}

uint32_t FiniteGroup::element_order(uint32_t a) const {
  uint32_t k = 1, cur = a;
  while (cur != id_) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

bool Subgroup::contains(uint32_t g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return {g, {g->identity()}}; }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<uint32_t> all(g->order());
  for (uint32_t i = 0; i < g->order(); ++i) all[i] = i;
  return {g, all};
}

Subgroup subgroup_from(const GroupPtr& g, std::vector<uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup h{g, elems};
  if (!h.contains(g->identity())) throw ValidationError("subgroup lacks the identity");
  for (uint32_t a : elems) {
    if (!h.contains(g->inv(a))) throw ValidationError("subgroup not closed under inverse");
    for (uint32_t b : elems)
      if (!h.contains(g->mul(a, b))) throw ValidationError("subgroup not closed under product");
  }
  return h;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<uint32_t>& gens) {
  std::set<uint32_t> cur{g->identity()};
  for (uint32_t x : gens) cur.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> snapshot(cur.begin(), cur.end());
    for (uint32_t a : snapshot)
      for (uint32_t b : snapshot)
        if (cur.insert(g->mul(a, b)).second) grew = true;
  }
  return {g, std::vector<uint32_t>(cur.begin(), cur.end())};
}

namespace {

bool is_p_power(size_t n, uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup sylow_subgroup(const GroupPtr& g, uint32_t p) {
  if (g->order() > FiniteGroup::kMaxOrder) throw OrderTooLarge();
  size_t q = 1;
  {
    size_t n = g->order();
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
  }
  if (q == 1) return trivial_subgroup(g);

  // Greedy growth: any p-subgroup extends inside some Sylow subgroup, so
  // adjoining p-elements that keep the closure a p-group always reaches q.
  Subgroup h = trivial_subgroup(g);
  while (h.order() < q) {
    bool grew = false;
    for (uint32_t x = 0; x < g->order() && !grew; ++x) {
      if (h.contains(x) || !is_p_power(g->element_order(x), p)) continue;
      std::vector<uint32_t> gens = h.elems;
      gens.push_back(x);
      Subgroup k = generated_subgroup(g, gens);
      if (is_p_power(k.order(), p) && k.order() <= q) {
        h = k;
        grew = true;
      }
    }
    if (!grew) throw Error("sylow search stalled");  // cannot happen
  }

  // All Sylow p-subgroups are conjugate; take the lexicographically least set.
  std::vector<uint32_t> best = h.elems;
  for (uint32_t c = 0; c < g->order(); ++c) {
    std::vector<uint32_t> conj;
    conj.reserve(h.order());
    for (uint32_t x : h.elems) conj.push_back(g->mul(g->mul(c, x), g->inv(c)));
    std::sort(conj.begin(), conj.end());
    if (conj < best) best = conj;
  }
  return {g, best};
}

std::vector<uint32_t> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> seen(g.order(), false);
  std::vector<uint32_t> reps;
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (uint32_t s : h.elems) seen[g.mul(x, s)] = true;
  }
  return reps;
}

SubgroupGroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<uint32_t> to_parent = h.elems;
  std::vector<uint32_t> to_local(g.order(), UINT32_MAX);
  for (uint32_t i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = i;
  std::vector<std::vector<uint32_t>> t(h.order(), std::vector<uint32_t>(h.order()));
  for (uint32_t a = 0; a < h.order(); ++a)
    for (uint32_t b = 0; b < h.order(); ++b)
      t[a][b] = to_local[g.mul(to_parent[a], to_parent[b])];
  return {FiniteGroup::validate(std::move(t)), to_parent};
}

}  // namespace xprod

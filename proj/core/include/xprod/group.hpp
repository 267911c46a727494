#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace xprod {

// Finite group as a Cayley table of element indices.  Validation is
// exhaustive; everything downstream assumes |G| stays small (<= 64).
class FiniteGroup {
 public:
  static constexpr size_t kMaxOrder = 64;

  // Verifies shape, associativity, identity, inverses; throws
  // GroupTableError with a witness.
  static std::shared_ptr<const FiniteGroup> validate(std::vector<std::vector<uint32_t>> table);

  static std::shared_ptr<const FiniteGroup> trivial();
  static std::shared_ptr<const FiniteGroup> cyclic(uint32_t n);
  static std::shared_ptr<const FiniteGroup> symmetric3();
  static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a,
                                                           const FiniteGroup& b);

  size_t order() const { return n_; }
  uint32_t identity() const { return id_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return table_[a][b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t element_order(uint32_t a) const;
  const std::vector<std::vector<uint32_t>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  size_t n_ = 0;
  uint32_t id_ = 0;
  std::vector<std::vector<uint32_t>> table_;
  std::vector<uint32_t> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<uint32_t> elems;  // sorted element indices; closed, with identity

  size_t order() const { return elems.size(); }
  bool contains(uint32_t g) const;
  bool is_full() const { return elems.size() == parent->order(); }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup subgroup_from(const GroupPtr& g, std::vector<uint32_t> elems);  // verifies closure
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<uint32_t>& gens);

// Deterministic Sylow p-subgroup: among all Sylow subgroups (conjugates of a
// greedily grown one), the lexicographically least element set.
Subgroup sylow_subgroup(const GroupPtr& g, uint32_t p);

// One representative per left coset xH, each the least index in its coset,
// listed in increasing order.
std::vector<uint32_t> left_cosets(const FiniteGroup& g, const Subgroup& h);

// The subgroup as a standalone group: table over its own indices plus the
// index-into-parent map.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<uint32_t> to_parent;
};
SubgroupGroup subgroup_as_group(const Subgroup& h);

}  // namespace xprod

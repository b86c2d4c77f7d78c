#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fgt/bsgs.hpp"
#include "fgt/perm.hpp"

namespace fgt {

struct ClassData;  // defined in analysis.hpp

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

// A permutation group given by generators. The stabilizer chain and the full
// element list are computed at most once and shared between copies; after
// first computation all reads are concurrency-safe.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators)
      : gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (gens_.empty())
      throw std::invalid_argument("group needs at least one generator");
    degree_ = gens_[0].degree();
    for (const auto& g : gens_)
      if (g.degree() != degree_)
        throw std::invalid_argument("generators of mixed degree");
  }

  static PermGroup trivial(int degree) {
    return PermGroup({Permutation::identity(degree)});
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const Bsgs& bsgs() const {
    std::call_once(cache_->bsgs_once, [this] {
      cache_->bsgs = std::make_shared<const Bsgs>(gens_);
    });
    return *cache_->bsgs;
  }

  std::uint64_t order() const { return bsgs().order(); }

  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("contains: degree mismatch");
    return bsgs().contains(p);
  }

  // Exhaustive element list (cached). Throws when the order exceeds the cap.
  const std::vector<Permutation>& elements(
      std::uint64_t cap = kDefaultEnumerationCap) const {
    if (order() > cap)
      throw std::runtime_error("group of order " + std::to_string(order()) +
                               " is too large to enumerate (cap " +
                               std::to_string(cap) + ")");
    std::call_once(cache_->elements_once, [this, cap] {
      cache_->elements = std::make_shared<const std::vector<Permutation>>(
          bsgs().enumerate(cap));
    });
    return *cache_->elements;
  }

  // Shared per-group analysis slot, filled by analysis.hpp.
  const std::shared_ptr<const ClassData>& class_cache_slot() const {
    return cache_->classes;
  }
  std::once_flag& class_cache_once() const { return cache_->classes_once; }
  void set_class_cache(std::shared_ptr<const ClassData> data) const {
    cache_->classes = std::move(data);
  }

 private:
  struct Cache {
    std::once_flag bsgs_once;
    std::shared_ptr<const Bsgs> bsgs;
    std::once_flag elements_once;
    std::shared_ptr<const std::vector<Permutation>> elements;
    std::once_flag classes_once;
    std::shared_ptr<const ClassData> classes;
  };

  int degree_ = 1;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

// Subgroup generated by `elements` inside a group of the given degree,
// built incrementally so the generator list stays short.
inline PermGroup subgroup_from_elements(int degree,
                                        const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const auto& e : elements) {
    if (!current.contains(e)) {
      gens.push_back(e);
      current = PermGroup(gens);
    }
  }
  if (gens.empty()) return PermGroup::trivial(degree);
  return current;
}

// Keep only the generators that enlarge the group, in order.
inline std::vector<Permutation> reduce_generators(
    const std::vector<Permutation>& gens) {
  std::vector<Permutation> kept;
  PermGroup current = PermGroup::trivial(gens.at(0).degree());
  for (const auto& g : gens) {
    if (!current.contains(g)) {
      kept.push_back(g);
      current = PermGroup(kept);
    }
  }
  if (kept.empty()) kept.push_back(Permutation::identity(gens[0].degree()));
  return kept;
}

// Element-set equality of two groups on the same degree.
inline bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

inline bool is_subgroup_of(const PermGroup& sub, const PermGroup& super) {
  if (sub.degree() != super.degree()) return false;
  for (const auto& g : sub.generators())
    if (!super.contains(g)) return false;
  return true;
}

}  // namespace fgt

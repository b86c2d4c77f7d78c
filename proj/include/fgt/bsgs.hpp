#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fgt/perm.hpp"

namespace fgt {

// Base and strong generating set built by the deterministic (non-randomized)
// Schreier-Sims algorithm. Membership is exact: a permutation belongs to the
// group iff it sifts to the identity through the chain, and the group order
// is the product of the basic orbit sizes.
class Bsgs {
 public:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;        // generators fixing all earlier base points
    std::map<int, Permutation> transversal;  // orbit point -> coset representative u with base^u = point
  };

  explicit Bsgs(const std::vector<Permutation>& generators) {
    if (generators.empty())
      throw std::invalid_argument("bsgs: empty generator list");
    degree_ = generators[0].degree();
    for (const auto& g : generators)
      if (g.degree() != degree_)
        throw std::invalid_argument("bsgs: generators of mixed degree");
    build(generators);
  }

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    if (!levels_.empty()) out = levels_[0].gens;
    return out;
  }

  // Sift g through levels [from..end); returns the residue and the number of
  // levels consumed. Membership corresponds to a trivial residue after all
  // levels.
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from = 0) const {
    std::size_t l = from;
    for (; l < levels_.size(); ++l) {
      int image = g(levels_[l].base_point);
      auto it = levels_[l].transversal.find(image);
      if (it == levels_[l].transversal.end()) return {std::move(g), l};
      g = g * it->second.inverse();
    }
    return {std::move(g), l};
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("contains: degree mismatch");
    auto [residue, level] = sift(p);
    return level == levels_.size() && residue.is_identity();
  }

  // Every group element exactly once, as products of transversal
  // representatives from the deepest level outwards. Deterministic order.
  std::vector<Permutation> enumerate(std::uint64_t cap) const {
    if (order_ > cap)
      throw std::runtime_error("group of order " + std::to_string(order_) +
                               " is too large to enumerate (cap " +
                               std::to_string(cap) + ")");
    std::vector<Permutation> acc{Permutation::identity(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(acc.size() * levels_[l].transversal.size());
      for (const auto& a : acc)
        for (const auto& [pt, u] : levels_[l].transversal) next.push_back(a * u);
      acc = std::move(next);
    }
    return acc;
  }

 private:
  void build(const std::vector<Permutation>& generators) {
    std::vector<Permutation> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(g);

    if (gens.empty()) {
      order_ = 1;
      return;
    }

    // Initial base: every generator must move some base point.
    for (const auto& g : gens) extend_base_for(g);
    for (const auto& g : gens) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        levels_[l].gens.push_back(g);
        if (g(levels_[l].base_point) != levels_[l].base_point) break;
      }
    }
    for (auto& level : levels_) recompute_orbit(level);

    // Verify Schreier generators bottom-up; insert residues where they fail.
    std::size_t i = levels_.size();
    while (i > 0) {
      --i;
      bool clean = verify_level(i);
      if (!clean) i = levels_.size();  // restart from the (possibly new) bottom
    }

    order_ = 1;
    for (const auto& level : levels_) order_ *= levels_size(level);
  }

  static std::uint64_t levels_size(const Level& level) {
    return static_cast<std::uint64_t>(level.transversal.size());
  }

  // Returns true if all Schreier generators of level i sift through the tail
  // of the chain; otherwise adds the offending residue as a strong generator
  // and returns false.
  bool verify_level(std::size_t i) {
    Level& level = levels_[i];
    // Iterate over a snapshot: orbit points in increasing order.
    std::vector<int> orbit;
    for (const auto& [pt, u] : level.transversal) orbit.push_back(pt);
    for (int beta : orbit) {
      const Permutation u_beta = level.transversal.at(beta);
      for (std::size_t si = 0; si < level.gens.size(); ++si) {
        const Permutation& s = level.gens[si];
        int gamma = s(beta);
        Permutation schreier = u_beta * s * level.transversal.at(gamma).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        // Residue fixes base points up to `stop`; add it there.
        if (stop == levels_.size()) extend_base_for(residue);
        for (std::size_t l = i + 1; l <= stop && l < levels_.size(); ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(levels_[l]);
        }
        return false;
      }
    }
    return true;
  }

  void extend_base_for(const Permutation& g) {
    // Ensure g moves at least one base point; append the first moved point.
    for (const auto& level : levels_)
      if (g(level.base_point) != level.base_point) return;
    for (int pt = 1; pt <= degree_; ++pt) {
      if (g(pt) != pt) {
        Level level;
        level.base_point = pt;
        levels_.push_back(std::move(level));
        return;
      }
    }
  }

  void recompute_orbit(Level& level) {
    level.transversal.clear();
    level.transversal.emplace(level.base_point,
                              Permutation::identity(degree_));
    std::vector<int> queue{level.base_point};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int beta = queue[qi];
      const Permutation u = level.transversal.at(beta);
      for (const auto& s : level.gens) {
        int gamma = s(beta);
        if (!level.transversal.count(gamma)) {
          level.transversal.emplace(gamma, u * s);
          queue.push_back(gamma);
        }
      }
    }
  }

  int degree_ = 1;
  std::uint64_t order_ = 1;
  std::vector<Level> levels_;

 public:
  // Base points in chain order.
  std::vector<int> base_points() const {
    std::vector<int> b;
    for (const auto& level : levels_) b.push_back(level.base_point);
    return b;
  }
};

}  // namespace fgt

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fgt/numeric.hpp"
#include "fgt/perm.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

struct ConjugacyClass {
  Permutation representative;  // lexicographically least element of the class
  std::uint64_t size = 0;
  std::uint64_t rep_order = 0;

  ConjugacyClass(Permutation rep, std::uint64_t sz)
      : representative(std::move(rep)), size(sz), rep_order(representative.order()) {}
};

// Conjugacy classes of a group together with an element index, the substrate
// for every predicate in this header. Computed once per group and shared.
struct ClassData {
  std::vector<Permutation> elements;  // enumeration order
  std::unordered_map<Permutation, int, PermHash> elem_index;
  std::vector<int> class_of;                   // element id -> class index
  std::vector<ConjugacyClass> classes;         // sorted by (order, size, rep)
  std::vector<std::vector<int>> class_members; // element ids per class
  int identity_class = 0;

  int index_of(const Permutation& p) const {
    auto it = elem_index.find(p);
    if (it == elem_index.end())
      throw std::invalid_argument("element does not belong to the group");
    return it->second;
  }

  int class_of_perm(const Permutation& p) const { return class_of[index_of(p)]; }

  // Class of representative(i)^m for any integer m >= 0.
  int power_class(int i, std::uint64_t m) const {
    const auto& rep = classes[i].representative;
    std::uint64_t d = classes[i].rep_order;
    m %= d;
    Permutation p = Permutation::identity(rep.degree());
    Permutation base = rep;
    while (m > 0) {  // square and multiply
      if (m & 1) p = p * base;
      base = base * base;
      m >>= 1;
    }
    return class_of_perm(p);
  }
};

// Conjugation-orbit BFS over the full element set, conjugating by the
// generators only.
inline std::shared_ptr<const ClassData> compute_class_data(
    const PermGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  auto data = std::make_shared<ClassData>();
  data->elements = g.elements(cap);
  const auto& elems = data->elements;
  data->elem_index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    data->elem_index.emplace(elems[i], static_cast<int>(i));

  data->class_of.assign(elems.size(), -1);
  std::vector<std::vector<int>> members;
  std::vector<int> queue;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (data->class_of[start] != -1) continue;
    int cls = static_cast<int>(members.size());
    members.emplace_back();
    queue.clear();
    queue.push_back(static_cast<int>(start));
    data->class_of[start] = cls;
    members[cls].push_back(static_cast<int>(start));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Permutation& x = elems[queue[qi]];
      for (const auto& gen : g.generators()) {
        Permutation y = conjugate(x, gen);
        int yid = data->elem_index.at(y);
        if (data->class_of[yid] == -1) {
          data->class_of[yid] = cls;
          members[cls].push_back(yid);
          queue.push_back(yid);
        }
      }
    }
  }

  // Canonical representatives and a deterministic class order.
  struct Entry {
    ConjugacyClass cls;
    std::vector<int> ids;
  };
  std::vector<Entry> entries;
  for (auto& ids : members) {
    int best = ids[0];
    for (int id : ids)
      if (elems[id] < elems[best]) best = id;
    entries.push_back(Entry{ConjugacyClass(elems[best], ids.size()), std::move(ids)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.cls.rep_order != b.cls.rep_order) return a.cls.rep_order < b.cls.rep_order;
    if (a.cls.size != b.cls.size) return a.cls.size < b.cls.size;
    return a.cls.representative < b.cls.representative;
  });
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (int id : entries[c].ids) data->class_of[id] = static_cast<int>(c);
    data->classes.push_back(entries[c].cls);
    data->class_members.push_back(std::move(entries[c].ids));
    if (data->classes.back().rep_order == 1) data->identity_class = static_cast<int>(c);
  }
  return data;
}

// Memoized on the group's shared cache; the reference stays valid as long as
// some copy of the group is alive.
inline const ClassData& class_data(const PermGroup& g,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  std::call_once(g.class_cache_once(),
                 [&] { g.set_class_cache(compute_class_data(g, cap)); });
  return *g.class_cache_slot();
}

inline std::vector<ConjugacyClass> conjugacy_classes(
    const PermGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  return class_data(g, cap).classes;
}

// ---------------------------------------------------------------------------
// Power map on classes.

// For each class, the class of representative^m for every residue m coprime
// to the representative order.
struct PowerMap {
  std::vector<std::map<std::uint64_t, int>> coprime_targets;
};

inline PowerMap power_map(const ClassData& cd) {
  PowerMap pm;
  pm.coprime_targets.resize(cd.classes.size());
  for (std::size_t i = 0; i < cd.classes.size(); ++i) {
    std::uint64_t d = cd.classes[i].rep_order;
    for (std::uint64_t m = 1; m < std::max<std::uint64_t>(d, 2); ++m)
      if (std::gcd(m, d) == 1)
        pm.coprime_targets[i][m] = cd.power_class(static_cast<int>(i), m);
  }
  return pm;
}

// ---------------------------------------------------------------------------
// Center and the ascending central series.

inline std::vector<Permutation> central_elements(const ClassData& cd) {
  std::vector<Permutation> out;
  for (const auto& c : cd.classes)
    if (c.size == 1) out.push_back(c.representative);
  return out;
}

// Z(G): the union of the singleton classes.
inline PermGroup center(const PermGroup& g,
                        std::uint64_t cap = kDefaultEnumerationCap) {
  return subgroup_from_elements(g.degree(), central_elements(class_data(g, cap)));
}

// Ascending chain starting at the trivial subgroup: each next term is the
// full preimage of the center of the quotient by the previous term, i.e.
// { x : [x, gen] lies in the previous term for every generator }. Stops when
// it stabilizes (at the hypercenter).
inline std::vector<PermGroup> upper_central_series(
    const PermGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  const auto& elems = cd.elements;
  std::vector<char> in_current(elems.size(), 0);
  in_current[cd.index_of(Permutation::identity(g.degree()))] = 1;
  std::vector<PermGroup> series{PermGroup::trivial(g.degree())};
  std::size_t current_size = 1;
  for (;;) {
    std::vector<char> next(elems.size(), 0);
    std::vector<Permutation> next_elems;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      bool ok = true;
      for (const auto& gen : g.generators()) {
        Permutation c = commutator(elems[i], gen);
        if (!in_current[cd.index_of(c)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[i] = 1;
        next_elems.push_back(elems[i]);
      }
    }
    if (next_elems.size() == current_size) break;
    series.push_back(subgroup_from_elements(g.degree(), next_elems));
    current_size = next_elems.size();
    in_current = std::move(next);
  }
  return series;
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

inline bool is_nilpotent(const PermGroup& g,
                         std::uint64_t cap = kDefaultEnumerationCap) {
  auto series = upper_central_series(g, cap);
  return series.back().order() == g.order();
}

inline std::uint64_t exponent(const PermGroup& g,
                              std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  std::uint64_t e = 1;
  for (const auto& c : cd.classes) e = lcm_u64(e, c.rep_order);
  return e;
}

// Set of element orders of an arbitrary element collection.
inline std::set<std::uint64_t> order_spectrum(const std::vector<Permutation>& elems) {
  std::set<std::uint64_t> out;
  for (const auto& e : elems) out.insert(e.order());
  return out;
}

inline std::set<std::uint64_t> order_spectrum(const PermGroup& g,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  std::set<std::uint64_t> out;
  for (const auto& c : class_data(g, cap).classes) out.insert(c.rep_order);
  return out;
}

// ---------------------------------------------------------------------------
// The four predicates.

// Every g is conjugate to g^m for all m coprime to the order of g.
inline bool is_rational_group(const PermGroup& g,
                              std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  for (std::size_t i = 0; i < cd.classes.size(); ++i) {
    std::uint64_t d = cd.classes[i].rep_order;
    for (std::uint64_t m = 2; m < d; ++m) {
      if (std::gcd(m, d) != 1) continue;
      if (cd.power_class(static_cast<int>(i), m) != static_cast<int>(i)) return false;
    }
  }
  return true;
}

// Any two non-central elements of equal order are conjugate. Non-central
// classes are exactly the classes of size > 1.
inline bool is_oc_group(const PermGroup& g,
                        std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  std::map<std::uint64_t, int> noncentral_per_order;
  for (const auto& c : cd.classes)
    if (c.size > 1 && ++noncentral_per_order[c.rep_order] > 1) return false;
  return true;
}

// At most one class per odd order value (central elements included).
inline bool odd_order_conjugacy(const PermGroup& g,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  std::map<std::uint64_t, int> per_order;
  for (const auto& c : cd.classes)
    if (c.rep_order % 2 == 1 && ++per_order[c.rep_order] > 1) return false;
  return true;
}

// At most one class per order value.
inline bool all_order_conjugacy(const PermGroup& g,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  std::map<std::uint64_t, int> per_order;
  for (const auto& c : cd.classes)
    if (++per_order[c.rep_order] > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Sylow subgroups and p-cores.

namespace detail {

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline Permutation perm_power(const Permutation& p, std::uint64_t m) {
  Permutation r = Permutation::identity(p.degree());
  Permutation base = p;
  while (m > 0) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

}  // namespace detail

// Grown by the normalizer method: starting from a cyclic p-subgroup, adjoin
// p-elements of the normalizer until the full p-part of |G| is reached.
inline PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  if (!is_prime_u64(p)) throw std::invalid_argument("sylow: p must be prime");
  const ClassData& cd = class_data(g, cap);
  std::uint64_t target = detail::p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());

  auto pure_p_part = [&](const Permutation& x) {
    std::uint64_t d = x.order();
    std::uint64_t m = d / detail::p_part(d, p);
    return detail::perm_power(x, m);
  };

  std::vector<Permutation> gens;
  for (const auto& x : cd.elements) {
    if (x.order() % p == 0) {
      gens.push_back(pure_p_part(x));
      break;
    }
  }
  PermGroup h(gens);
  while (h.order() < target) {
    std::unordered_set<Permutation, PermHash> hset;
    for (const auto& e : h.elements(cap)) hset.insert(e);
    bool grown = false;
    for (const auto& x : cd.elements) {
      bool normalizes = true;
      for (const auto& hg : h.generators())
        if (!hset.count(conjugate(hg, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      if (x.order() % p != 0) continue;
      Permutation px = pure_p_part(x);
      if (!hset.count(px)) {
        gens.push_back(px);
        h = PermGroup(gens);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw std::logic_error("sylow: normalizer growth stalled");
  }
  return h;
}

// Largest normal p-subgroup: the intersection of all conjugates of one
// Sylow p-subgroup, enumerated as the orbit under generator conjugation.
inline PermGroup p_core(const PermGroup& g, std::uint64_t p,
                        std::uint64_t cap = kDefaultEnumerationCap) {
  PermGroup sylow = sylow_subgroup(g, p, cap);
  if (sylow.is_trivial()) return PermGroup::trivial(g.degree());
  const ClassData& cd = class_data(g, cap);

  auto ids_of = [&](const std::vector<Permutation>& elems) {
    std::vector<int> ids;
    ids.reserve(elems.size());
    for (const auto& e : elems) ids.push_back(cd.index_of(e));
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  std::vector<int> core = ids_of(sylow.elements(cap));

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> queue{ids_of(sylow.elements(cap))};
  seen.insert(queue[0]);
  for (std::size_t qi = 0; qi < queue.size() && core.size() > 1; ++qi) {
    std::vector<int> current = queue[qi];
    for (const auto& gen : g.generators()) {
      std::vector<int> image;
      image.reserve(current.size());
      for (int id : current)
        image.push_back(cd.index_of(conjugate(cd.elements[id], gen)));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) {
        std::vector<int> merged;
        std::set_intersection(core.begin(), core.end(), image.begin(),
                              image.end(), std::back_inserter(merged));
        core = std::move(merged);
        if (core.size() == 1) break;
        queue.push_back(std::move(image));
      }
    }
  }
  if (core.size() == 1) return PermGroup::trivial(g.degree());
  std::vector<Permutation> core_elems;
  for (int id : core) core_elems.push_back(cd.elements[id]);
  return subgroup_from_elements(g.degree(), core_elems);
}

// ---------------------------------------------------------------------------
// Normal subgroups, derived series, quotients.

inline PermGroup normal_closure(const PermGroup& g,
                                const std::vector<Permutation>& seeds) {
  std::vector<Permutation> gens;
  PermGroup h = PermGroup::trivial(g.degree());
  std::vector<Permutation> queue;
  auto add = [&](const Permutation& x) {
    if (!h.contains(x)) {
      gens.push_back(x);
      h = PermGroup(gens);
      queue.push_back(x);
    }
  };
  for (const auto& s : seeds) add(s);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Permutation x = queue[qi];
    for (const auto& gen : g.generators()) add(conjugate(x, gen));
  }
  return h;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(commutator(gens[i], gens[j]));
  if (seeds.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, seeds);
}

inline bool is_solvable(const PermGroup& g) {
  PermGroup current = g;
  std::uint64_t last = current.order();
  for (;;) {
    if (last == 1) return true;
    PermGroup next = derived_subgroup(current);
    if (next.order() == last) return false;
    current = next;
    last = current.order();
  }
}

inline bool is_normal_in(const PermGroup& sub, const PermGroup& g) {
  for (const auto& n : sub.generators())
    for (const auto& gen : g.generators())
      if (!sub.contains(conjugate(n, gen))) return false;
  return true;
}

// All normal subgroups: the join-closure of the subgroups generated by
// single conjugacy classes, sorted by order.
inline std::vector<PermGroup> normal_subgroups(
    const PermGroup& g, std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);

  auto key_of = [&](const PermGroup& h) {
    std::vector<int> ids;
    for (const auto& e : h.elements(cap)) ids.push_back(cd.index_of(e));
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  std::map<std::vector<int>, PermGroup> found;
  auto insert = [&](const PermGroup& h) {
    auto key = key_of(h);
    if (found.count(key)) return false;
    found.emplace(std::move(key), h);
    return true;
  };

  insert(PermGroup::trivial(g.degree()));
  for (const auto& ids : cd.class_members) {
    std::vector<Permutation> members;
    for (int id : ids) members.push_back(cd.elements[id]);
    insert(subgroup_from_elements(g.degree(), members));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PermGroup> list;
    for (const auto& [k, grp] : found) list.push_back(grp);
    for (std::size_t i = 0; i < list.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        std::vector<Permutation> joint = list[i].generators();
        const auto& other = list[j].generators();
        joint.insert(joint.end(), other.begin(), other.end());
        PermGroup join = PermGroup(reduce_generators(joint));
        if (insert(join)) changed = true;
      }
  }

  std::vector<PermGroup> out;
  for (const auto& [k, grp] : found) out.push_back(grp);
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.order() < b.order();
  });
  return out;
}

// Faithful action of G/N on the right cosets of N; degree is the index.
// Throws when N is not normal in G.
inline PermGroup quotient(const PermGroup& g, const PermGroup& n,
                          std::uint64_t cap = kDefaultEnumerationCap) {
  if (g.degree() != n.degree())
    throw std::invalid_argument("quotient: degree mismatch");
  if (!is_subgroup_of(n, g))
    throw std::invalid_argument("quotient: N is not a subgroup of G");
  if (!is_normal_in(n, g))
    throw std::invalid_argument("quotient: N is not normal in G");
  if (n.order() == g.order()) return PermGroup::trivial(1);
  if (n.order() == 1) return g;

  const auto& nelems = n.elements(cap);
  auto canonical = [&](const Permutation& r) {
    Permutation best = nelems[0] * r;
    for (std::size_t i = 1; i < nelems.size(); ++i) {
      Permutation cand = nelems[i] * r;
      if (cand < best) best = cand;
    }
    return best;
  };

  std::uint64_t index = g.order() / n.order();
  if (index > cap)
    throw std::runtime_error("quotient: index exceeds enumeration cap");

  std::unordered_map<Permutation, int, PermHash> coset_id;
  std::vector<Permutation> reps;
  Permutation start = canonical(Permutation::identity(g.degree()));
  coset_id.emplace(start, 0);
  reps.push_back(start);
  std::vector<std::vector<int>> images(g.generators().size());
  for (std::size_t qi = 0; qi < reps.size(); ++qi) {
    Permutation rep = reps[qi];
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Permutation moved = canonical(rep * g.generators()[k]);
      auto [it, inserted] = coset_id.emplace(moved, static_cast<int>(reps.size()));
      if (inserted) reps.push_back(moved);
      images[k].push_back(it->second + 1);
    }
  }
  std::vector<Permutation> qgens;
  for (auto& img : images) qgens.push_back(Permutation(img));
  PermGroup q(qgens);
  if (q.order() != index)
    throw std::logic_error("quotient: coset action has wrong order");
  return q;
}

// ---------------------------------------------------------------------------
// Isomorphism testing: invariant fingerprint first, then a backtracking
// search mapping a short generating sequence of G onto order- and
// class-size-compatible elements of H, verified by rebuilding the Cayley
// graph. The fingerprint alone is only ever taken as proof of
// NON-isomorphism.

inline constexpr std::uint64_t kDefaultIsomorphismCap = 4096;

namespace detail {

struct Fingerprint {
  std::uint64_t order;
  std::uint64_t center_order;
  std::uint64_t derived_order;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_profile;  // (order, size)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const PermGroup& g, const ClassData& cd) {
  Fingerprint f;
  f.order = g.order();
  std::uint64_t central = 0;
  for (const auto& c : cd.classes)
    if (c.size == 1) ++central;
  f.center_order = central;
  f.derived_order = derived_subgroup(g).order();
  for (const auto& c : cd.classes) f.class_profile.emplace_back(c.rep_order, c.size);
  std::sort(f.class_profile.begin(), f.class_profile.end());
  return f;
}

// Short generating sequence, preferring high-order elements.
inline std::vector<Permutation> generating_sequence(const PermGroup& g,
                                                    const ClassData& cd) {
  std::vector<int> ids(cd.elements.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::uint64_t> orders(cd.elements.size());
  for (std::size_t i = 0; i < cd.elements.size(); ++i)
    orders[i] = cd.elements[i].order();
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (orders[a] != orders[b]) return orders[a] > orders[b];
    return cd.elements[a] < cd.elements[b];
  });
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(g.degree());
  for (int id : ids) {
    if (current.order() == g.order()) break;
    if (!current.contains(cd.elements[id])) {
      gens.push_back(cd.elements[id]);
      current = PermGroup(gens);
    }
  }
  return gens;
}

// Does mapping gens -> images extend to an isomorphism? Rebuilds the Cayley
// graph of G and checks every edge for consistency, then injectivity.
inline bool extends_to_isomorphism(const ClassData& cdg, const ClassData& cdh,
                                   const std::vector<int>& gen_ids,
                                   const std::vector<int>& image_ids) {
  const std::size_t n = cdg.elements.size();
  std::vector<int> phi(n, -1);
  std::vector<char> hit(cdh.elements.size(), 0);
  int id_g = cdg.index_of(Permutation::identity(cdg.elements[0].degree()));
  int id_h = cdh.index_of(Permutation::identity(cdh.elements[0].degree()));
  phi[id_g] = id_h;
  hit[id_h] = 1;
  std::vector<int> queue{id_g};
  std::size_t assigned = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t k = 0; k < gen_ids.size(); ++k) {
      int y = cdg.index_of(cdg.elements[x] * cdg.elements[gen_ids[k]]);
      int img = cdh.index_of(cdh.elements[phi[x]] * cdh.elements[image_ids[k]]);
      if (phi[y] == -1) {
        if (hit[img]) return false;  // not injective
        phi[y] = img;
        hit[img] = 1;
        ++assigned;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;  // not well defined
      }
    }
  }
  return assigned == n;  // the generators really generate G
}

}  // namespace detail

inline bool are_isomorphic(const PermGroup& g, const PermGroup& h,
                           std::uint64_t cap = kDefaultIsomorphismCap) {
  if (g.order() != h.order()) return false;
  if (g.order() > cap || h.order() > cap)
    throw std::runtime_error("isomorphism test cap exceeded (order " +
                             std::to_string(g.order()) + ", cap " +
                             std::to_string(cap) + ")");
  const ClassData& cdg = class_data(g);
  const ClassData& cdh = class_data(h);
  if (!(detail::fingerprint(g, cdg) == detail::fingerprint(h, cdh))) return false;

  bool g_abelian = is_abelian(g);
  bool h_abelian = is_abelian(h);
  if (g_abelian != h_abelian) return false;
  if (g_abelian) return true;  // equal order multisets determine an abelian group

  std::vector<Permutation> gens = detail::generating_sequence(g, cdg);
  std::vector<int> gen_ids;
  for (const auto& gen : gens) gen_ids.push_back(cdg.index_of(gen));

  // Candidate images per slot: elements of H whose class matches the G-class
  // of the generator in (order, size). For the first slot one representative
  // per class is enough, up to composing with inner automorphisms.
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int gc = cdg.class_of_perm(gens[k]);
    std::uint64_t want_order = cdg.classes[gc].rep_order;
    std::uint64_t want_size = cdg.classes[gc].size;
    for (std::size_t c = 0; c < cdh.classes.size(); ++c) {
      if (cdh.classes[c].rep_order != want_order || cdh.classes[c].size != want_size)
        continue;
      if (k == 0) {
        candidates[k].push_back(cdh.index_of(cdh.classes[c].representative));
      } else {
        for (int id : cdh.class_members[c]) candidates[k].push_back(id);
      }
    }
    if (candidates[k].empty()) return false;
  }

  std::vector<int> image_ids(gens.size(), -1);
  // Depth-first over candidate tuples.
  std::vector<std::size_t> cursor(gens.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      if (depth == 0) return false;
      cursor[depth] = 0;
      --depth;
      ++cursor[depth];
      continue;
    }
    image_ids[depth] = candidates[depth][cursor[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (detail::extends_to_isomorphism(cdg, cdh, gen_ids, image_ids)) return true;
    ++cursor[depth];
  }
}

// ---------------------------------------------------------------------------
// Per-group report record.

struct GroupReport {
  std::string label;
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  bool abelian = false;
  bool nilpotent = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_profile;  // (size, rep_order)
  std::vector<std::uint64_t> order_spectrum;
  bool rational = false;
  bool oc = false;
  bool odd_order_conjugate = false;
  bool all_order_conjugate = false;
};

inline GroupReport analyze_group(const PermGroup& g, const std::string& label,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
  const ClassData& cd = class_data(g, cap);
  GroupReport r;
  r.label = label;
  r.order = g.order();
  std::uint64_t central = 0;
  for (const auto& c : cd.classes)
    if (c.size == 1) ++central;
  r.center_order = central;
  r.abelian = is_abelian(g);
  r.nilpotent = is_nilpotent(g, cap);
  for (const auto& c : cd.classes) r.class_profile.emplace_back(c.size, c.rep_order);
  for (auto o : order_spectrum(g, cap)) r.order_spectrum.push_back(o);
  r.rational = is_rational_group(g, cap);
  r.oc = is_oc_group(g, cap);
  r.odd_order_conjugate = odd_order_conjugacy(g, cap);
  r.all_order_conjugate = all_order_conjugacy(g, cap);
  return r;
}

}  // namespace fgt

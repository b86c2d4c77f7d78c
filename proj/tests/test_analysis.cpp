#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "fgt/analysis.hpp"
#include "fgt/constructions.hpp"

using fgt::Permutation;
using fgt::PermGroup;

namespace {

// Independent oracle: conjugacy classes computed by conjugating with every
// group element, no generator BFS involved.
std::vector<std::set<Permutation>> brute_force_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  std::vector<std::set<Permutation>> classes;
  std::set<Permutation> assigned;
  for (const auto& x : elems) {
    if (assigned.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& t : elems) cls.insert(fgt::conjugate(x, t));
    for (const auto& m : cls) assigned.insert(m);
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::multiset<std::uint64_t> class_sizes(const PermGroup& g) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : fgt::conjugacy_classes(g)) out.insert(c.size);
  return out;
}

}  // namespace

TEST_CASE("class BFS agrees with whole-group conjugation on sample groups") {
  for (const auto& g : {fgt::symmetric(3), fgt::symmetric(4), fgt::q8(),
                        fgt::sd16(), fgt::dihedral(4), fgt::gl23(),
                        fgt::frobenius_w(), fgt::alternating(5)}) {
    auto oracle = brute_force_classes(g);
    auto classes = fgt::conjugacy_classes(g);
    REQUIRE(classes.size() == oracle.size());
    std::multiset<std::uint64_t> a, b;
    for (const auto& c : classes) a.insert(c.size);
    for (const auto& c : oracle) b.insert(c.size());
    CHECK(a == b);
    // representatives are the least members of their classes
    for (const auto& c : classes) {
      bool found = false;
      for (const auto& cls : oracle) {
        if (cls.count(c.representative)) {
          CHECK(*cls.begin() == c.representative);
          CHECK(cls.size() == c.size);
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("named class size profiles") {
  CHECK(class_sizes(fgt::symmetric(3)) == std::multiset<std::uint64_t>{1, 2, 3});
  CHECK(class_sizes(fgt::cyclic(4)) == std::multiset<std::uint64_t>{1, 1, 1, 1});
  CHECK(class_sizes(fgt::q8()) == std::multiset<std::uint64_t>{1, 1, 2, 2, 2});
  CHECK(fgt::conjugacy_classes(fgt::symmetric(5)).size() == 7);
}

TEST_CASE("class equation: sizes divide the order and sum to it") {
  for (const auto& g : {fgt::symmetric(4), fgt::sl25(), fgt::frobenius_w(),
                        fgt::gl23(), fgt::alternating(6)}) {
    std::uint64_t total = 0;
    for (const auto& c : fgt::conjugacy_classes(g)) {
      CHECK(g.order() % c.size == 0);
      total += c.size;
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("centralizer orders |C_G(x)| = |G| / |x^G| are integral") {
  PermGroup g = fgt::gl23();
  for (const auto& c : fgt::conjugacy_classes(g))
    CHECK(g.order() % c.size == 0);
}

TEST_CASE("centers") {
  CHECK(fgt::center(fgt::symmetric(3)).order() == 1);
  CHECK(fgt::center(fgt::q8()).order() == 2);
  CHECK(fgt::center(fgt::gl23()).order() == 2);
  CHECK(fgt::center(fgt::cyclic(6)).order() == 6);
  CHECK(fgt::center(fgt::frobenius_w()).order() == 1);
}

TEST_CASE("upper central series") {
  auto series_orders = [](const PermGroup& g) {
    std::vector<std::uint64_t> out;
    for (const auto& s : fgt::upper_central_series(g)) out.push_back(s.order());
    return out;
  };
  CHECK(series_orders(fgt::q8()) == std::vector<std::uint64_t>{1, 2, 8});
  CHECK(series_orders(fgt::symmetric(3)) == std::vector<std::uint64_t>{1});
  CHECK(series_orders(fgt::sd16()) == std::vector<std::uint64_t>{1, 2, 4, 16});
  CHECK(series_orders(fgt::cyclic(5)) == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("nilpotency") {
  CHECK_FALSE(fgt::is_nilpotent(fgt::symmetric(3)));
  CHECK(fgt::is_nilpotent(fgt::q8()));
  CHECK(fgt::is_nilpotent(fgt::direct_product(fgt::q8(), fgt::cyclic(3))));
  CHECK_FALSE(fgt::is_nilpotent(fgt::frobenius_w()));
  CHECK(fgt::is_nilpotent(fgt::sd16()));
}

TEST_CASE("exponent and order spectra") {
  CHECK(fgt::exponent(fgt::elementary_abelian(3, 2)) == 3);
  CHECK(fgt::exponent(fgt::symmetric(5)) == 60);
  CHECK(fgt::exponent(fgt::q8()) == 4);

  // order spectrum of the coset S_3 - A_3: the three transpositions
  PermGroup s3 = fgt::symmetric(3);
  PermGroup a3 = fgt::alternating(3);
  std::vector<Permutation> coset;
  for (const auto& e : s3.elements())
    if (!a3.contains(e)) coset.push_back(e);
  CHECK(fgt::order_spectrum(coset) == std::set<std::uint64_t>{2});

  CHECK(fgt::order_spectrum(fgt::symmetric(5)) ==
        std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("rationality predicate") {
  CHECK(fgt::is_rational_group(fgt::symmetric(5)));
  CHECK(fgt::is_rational_group(fgt::symmetric(3)));
  CHECK(fgt::is_rational_group(PermGroup::trivial(1)));
  CHECK(fgt::is_rational_group(fgt::q8()));
  CHECK_FALSE(fgt::is_rational_group(fgt::alternating(5)));
  CHECK_FALSE(fgt::is_rational_group(fgt::gl23()));
  CHECK_FALSE(fgt::is_rational_group(fgt::sd16()));
  CHECK_FALSE(fgt::is_rational_group(fgt::cyclic(3)));
  CHECK(fgt::is_rational_group(fgt::frobenius_w()));
}

TEST_CASE("oc predicate") {
  CHECK(fgt::is_oc_group(fgt::cyclic(12)));
  CHECK(fgt::is_oc_group(fgt::elementary_abelian(2, 3)));
  CHECK(fgt::is_oc_group(fgt::symmetric(3)));
  CHECK_FALSE(fgt::is_oc_group(fgt::q8()));
  CHECK_FALSE(fgt::is_oc_group(fgt::dihedral(4)));
}

TEST_CASE("odd and all order conjugacy") {
  CHECK(fgt::odd_order_conjugacy(fgt::symmetric(5)));
  CHECK_FALSE(fgt::odd_order_conjugacy(fgt::alternating(5)));
  CHECK(fgt::odd_order_conjugacy(fgt::q8()));
  CHECK(fgt::all_order_conjugacy(fgt::symmetric(3)));
  CHECK(fgt::all_order_conjugacy(fgt::symmetric(2)));
  CHECK_FALSE(fgt::all_order_conjugacy(fgt::symmetric(5)));
  CHECK_FALSE(fgt::all_order_conjugacy(fgt::cyclic(3)));
}

TEST_CASE("power map is well defined on alternate representatives") {
  PermGroup g = fgt::gl23();
  const fgt::ClassData& cd = fgt::class_data(g);
  fgt::PowerMap pm = fgt::power_map(cd);
  // recompute the coprime power classes from a different member of each class
  for (std::size_t i = 0; i < cd.classes.size(); ++i) {
    int alt = cd.class_members[i].back();
    const Permutation& x = cd.elements[alt];
    std::uint64_t d = cd.classes[i].rep_order;
    for (const auto& [m, target] : pm.coprime_targets[i]) {
      Permutation p = Permutation::identity(g.degree());
      for (std::uint64_t k = 0; k < m; ++k) p = p * x;
      CHECK(cd.class_of_perm(p) == target);
    }
    (void)d;
  }
}

TEST_CASE("power map fixes every class at m = 1") {
  PermGroup s4 = fgt::symmetric(4);
  const fgt::ClassData& cd = fgt::class_data(s4);
  fgt::PowerMap pm = fgt::power_map(cd);
  for (std::size_t i = 0; i < pm.coprime_targets.size(); ++i)
    CHECK(pm.coprime_targets[i].at(1) == static_cast<int>(i));
}

TEST_CASE("power-map Galois action permutes the classes of each order") {
  for (const auto& g : {fgt::alternating(5), fgt::gl23(), fgt::sd16()}) {
    const fgt::ClassData& cd = fgt::class_data(g);
    std::map<std::uint64_t, std::vector<int>> by_order;
    for (std::size_t i = 0; i < cd.classes.size(); ++i)
      by_order[cd.classes[i].rep_order].push_back(static_cast<int>(i));
    for (const auto& [d, classes] : by_order) {
      for (std::uint64_t m = 1; m < std::max<std::uint64_t>(d, 2); ++m) {
        if (std::gcd(m, d) != 1) continue;
        std::set<int> image;
        for (int i : classes) image.insert(cd.power_class(i, m));
        CHECK(image == std::set<int>(classes.begin(), classes.end()));
      }
    }
  }
}

TEST_CASE("sylow subgroups") {
  CHECK(fgt::sylow_subgroup(fgt::symmetric(4), 2).order() == 8);
  CHECK(fgt::sylow_subgroup(fgt::symmetric(5), 5).order() == 5);
  CHECK(fgt::sylow_subgroup(fgt::symmetric(5), 7).order() == 1);
  CHECK(fgt::sylow_subgroup(fgt::frobenius_w(), 3).order() == 9);
  CHECK(fgt::sylow_subgroup(fgt::frobenius_w(), 2).order() == 8);
  CHECK_THROWS(fgt::sylow_subgroup(fgt::symmetric(4), 6));
}

TEST_CASE("the Sylow 2-subgroup of GL(2,3) is semidihedral of order 16") {
  PermGroup syl = fgt::sylow_subgroup(fgt::gl23(), 2);
  CHECK(syl.order() == 16);
  CHECK(fgt::are_isomorphic(syl, fgt::sd16()));
  CHECK_FALSE(fgt::are_isomorphic(syl, fgt::generalized_quaternion(16)));
  CHECK_FALSE(fgt::are_isomorphic(syl, fgt::dihedral(8)));
}

TEST_CASE("p-cores") {
  PermGroup s4 = fgt::symmetric(4);
  PermGroup core2 = fgt::p_core(s4, 2);
  CHECK(core2.order() == 4);
  CHECK(fgt::is_normal_in(core2, s4));
  CHECK(fgt::p_core(fgt::symmetric(5), 2).order() == 1);
  CHECK(fgt::p_core(fgt::q8(), 2).order() == 8);
  CHECK(fgt::p_core(fgt::frobenius_w(), 3).order() == 9);
  CHECK(fgt::p_core(fgt::frobenius_w(), 2).order() == 1);
}

TEST_CASE("p-core contains every normal p-subgroup") {
  for (const auto& g : {fgt::symmetric(4), fgt::sd16(), fgt::frobenius_w()}) {
    for (std::uint64_t p : {2, 3}) {
      if (g.order() % p != 0) continue;
      PermGroup core = fgt::p_core(g, p);
      CHECK(fgt::is_normal_in(core, g));
      for (const auto& n : fgt::normal_subgroups(g)) {
        bool is_p_group = true;
        std::uint64_t o = n.order();
        while (o % p == 0) o /= p;
        is_p_group = (o == 1);
        if (is_p_group) CHECK(fgt::is_subgroup_of(n, core));
      }
    }
  }
}

TEST_CASE("normal subgroup lattices") {
  auto orders = [](const std::vector<PermGroup>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& g : v) out.push_back(g.order());
    return out;
  };
  CHECK(orders(fgt::normal_subgroups(fgt::symmetric(4))) ==
        std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(orders(fgt::normal_subgroups(fgt::symmetric(5))) ==
        std::vector<std::uint64_t>{1, 60, 120});
  CHECK(orders(fgt::normal_subgroups(fgt::cyclic(5))) ==
        std::vector<std::uint64_t>{1, 5});
  CHECK(orders(fgt::normal_subgroups(fgt::cyclic(7))) ==
        std::vector<std::uint64_t>{1, 7});
}

TEST_CASE("PSL(3,4) is simple and has the advertised order spectrum") {
  PermGroup l = fgt::psl34();
  CHECK(fgt::normal_subgroups(l).size() == 2);
  CHECK(fgt::order_spectrum(l) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 7});
}

TEST_CASE("quotients") {
  PermGroup w = fgt::frobenius_w();
  PermGroup k = fgt::p_core(w, 3);
  PermGroup q = fgt::quotient(w, k);
  CHECK(q.order() == 8);
  CHECK(fgt::are_isomorphic(q, fgt::q8()));

  PermGroup s4 = fgt::symmetric(4);
  PermGroup v4 = fgt::p_core(s4, 2);
  CHECK(fgt::are_isomorphic(fgt::quotient(s4, v4), fgt::symmetric(3)));

  CHECK(fgt::quotient(s4, s4).order() == 1);
  CHECK(fgt::quotient(s4, PermGroup::trivial(4)).order() == 24);

  // a non-normal subgroup is rejected
  PermGroup c2 = fgt::subgroup_from_elements(4, {Permutation::parse("(1,2)", 4)});
  CHECK_THROWS(fgt::quotient(s4, c2));
}

TEST_CASE("quotient of S_5 by A_5 is C_2") {
  PermGroup s5 = fgt::symmetric(5);
  auto normals = fgt::normal_subgroups(s5);
  REQUIRE(normals.size() == 3);
  PermGroup q = fgt::quotient(s5, normals[1]);
  CHECK(q.order() == 2);
  CHECK(fgt::is_rational_group(q));
}

TEST_CASE("isomorphism testing") {
  CHECK(fgt::are_isomorphic(fgt::dihedral(3), fgt::symmetric(3)));
  CHECK_FALSE(fgt::are_isomorphic(fgt::cyclic(4), fgt::elementary_abelian(2, 2)));
  CHECK_FALSE(fgt::are_isomorphic(fgt::q8(), fgt::dihedral(4)));
  CHECK(fgt::are_isomorphic(fgt::q8(), fgt::generalized_quaternion(8)));
  CHECK(fgt::are_isomorphic(fgt::cyclic(6),
                            fgt::direct_product(fgt::cyclic(2), fgt::cyclic(3))));
  CHECK_FALSE(fgt::are_isomorphic(fgt::symmetric(4), fgt::dihedral(12)));
  CHECK(fgt::are_isomorphic(fgt::symmetric(4),
                            fgt::quotient(fgt::symmetric(4), PermGroup::trivial(4))));
  // different degrees, same group
  CHECK(fgt::are_isomorphic(fgt::cyclic(2), fgt::subgroup_from_elements(
                                                5, {Permutation::parse("(1,2)", 5)})));
}

TEST_CASE("isomorphism cap raises an error") {
  CHECK_THROWS(fgt::are_isomorphic(fgt::symmetric(8), fgt::symmetric(8)));
}

TEST_CASE("solvability") {
  CHECK(fgt::is_solvable(fgt::symmetric(4)));
  CHECK(fgt::is_solvable(fgt::frobenius_w()));
  CHECK(fgt::is_solvable(fgt::gl23()));
  CHECK_FALSE(fgt::is_solvable(fgt::alternating(5)));
  CHECK_FALSE(fgt::is_solvable(fgt::symmetric(5)));
}

TEST_CASE("derived subgroups") {
  CHECK(fgt::derived_subgroup(fgt::symmetric(3)).order() == 3);
  CHECK(fgt::derived_subgroup(fgt::symmetric(4)).order() == 12);
  CHECK(fgt::derived_subgroup(fgt::q8()).order() == 2);
  CHECK(fgt::derived_subgroup(fgt::cyclic(6)).order() == 1);
}

TEST_CASE("group reports") {
  fgt::GroupReport r = fgt::analyze_group(fgt::q8(), "q8");
  CHECK(r.order == 8);
  CHECK(r.center_order == 2);
  CHECK_FALSE(r.abelian);
  CHECK(r.nilpotent);
  CHECK(r.rational);
  CHECK_FALSE(r.oc);
  CHECK(r.odd_order_conjugate);
  CHECK_FALSE(r.all_order_conjugate);
  CHECK(r.order_spectrum == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(r.class_profile.size() == 5);
}

TEST_CASE("enumeration cap surfaces as an error in analysis") {
  PermGroup s8 = fgt::symmetric(8);
  CHECK_THROWS(fgt::conjugacy_classes(s8, 1000));
}

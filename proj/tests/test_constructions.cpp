#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "fgt/analysis.hpp"
#include "fgt/constructions.hpp"
#include "fgt/gf.hpp"
#include "fgt/matrix.hpp"
#include "fgt/perm_group.hpp"
#include "fgt/projective.hpp"

using fgt::Mat;
using fgt::Permutation;
using fgt::PermGroup;

namespace {

std::set<Permutation> element_set(const PermGroup& g) {
  const auto& v = g.elements();
  return std::set<Permutation>(v.begin(), v.end());
}

int count_of_order(const PermGroup& g, std::uint64_t d) {
  int n = 0;
  for (const auto& e : g.elements())
    if (e.order() == d) ++n;
  return n;
}

std::uint64_t group_exponent(const PermGroup& g) {
  std::uint64_t e = 1;
  for (const auto& x : g.elements()) e = fgt::lcm_u64(e, x.order());
  return e;
}

}  // namespace

TEST_CASE("field tables satisfy the axioms for q = 2,3,4,5") {
  for (int q : {2, 3, 4, 5}) CHECK_NOTHROW(fgt::field(q));
  CHECK_THROWS(fgt::SmallField(6));
}

TEST_CASE("GF(4) arithmetic: w^2 = w + 1 and Frobenius has order 2") {
  const auto& f = fgt::field(4);
  int w = 2;  // index of w
  CHECK(f.mul(w, w) == (w ^ 1));  // w^2 = w + 1
  for (int a = 0; a < 4; ++a) {
    CHECK(f.frobenius(f.frobenius(a)) == a);
    for (int b = 0; b < 4; ++b) {
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }
  // Frobenius is not the identity on GF(4)
  CHECK(f.frobenius(w) != w);
}

TEST_CASE("matrix inverse and determinant over small fields") {
  Mat a = Mat::from_rows(3, {{1, 1}, {0, 1}});
  CHECK(a.det() == 1);
  CHECK(a * a.inverse() == Mat::identity(2, 3));
  Mat b = Mat::from_rows(4, {{2, 1, 0}, {0, 1, 0}, {1, 0, 1}});
  CHECK(b * b.inverse() == Mat::identity(3, 4));
  CHECK_THROWS(Mat::from_rows(3, {{1, 1}, {1, 1}}).inverse());
}

TEST_CASE("PG(2,4) incidence counts") {
  const auto& plane = fgt::pg24();
  REQUIRE(plane.point_count() == 21);
  REQUIRE(plane.line_count() == 21);
  for (int l = 0; l < 21; ++l) CHECK(plane.points_on_line(l).size() == 5);
  for (int p = 0; p < 21; ++p) CHECK(plane.lines_through_point(p).size() == 5);
  // any two distinct points lie on exactly one common line
  for (int p = 0; p < 21; ++p)
    for (int q = p + 1; q < 21; ++q) {
      int common = 0;
      for (int l = 0; l < 21; ++l)
        if (plane.incident(plane.point(p), plane.line(l)) &&
            plane.incident(plane.point(q), plane.line(l)))
          ++common;
      CHECK(common == 1);
    }
}

TEST_CASE("advertised orders of the family constructors") {
  CHECK(fgt::symmetric(1).order() == 1);
  CHECK(fgt::symmetric(3).order() == 6);
  CHECK(fgt::symmetric(3).degree() == 3);
  CHECK(fgt::symmetric(5).order() == 120);
  CHECK(fgt::alternating(5).order() == 60);
  CHECK(fgt::alternating(6).order() == 360);
  CHECK(fgt::alternating(2).order() == 1);
  CHECK(fgt::cyclic(7).order() == 7);
  CHECK(fgt::dihedral(1).order() == 2);
  CHECK(fgt::dihedral(2).order() == 4);
  CHECK(fgt::dihedral(4).order() == 8);
  CHECK(fgt::dihedral(6).order() == 12);
  CHECK(fgt::elementary_abelian(3, 2).order() == 9);
  CHECK(fgt::elementary_abelian(2, 3).order() == 8);
  CHECK_THROWS(fgt::symmetric(0));
  CHECK_THROWS(fgt::elementary_abelian(4, 2));
}

TEST_CASE("elementary abelian exponent") {
  CHECK(group_exponent(fgt::elementary_abelian(3, 2)) == 3);
  CHECK(group_exponent(fgt::elementary_abelian(2, 3)) == 2);
}

TEST_CASE("generalized quaternion groups have a unique involution") {
  PermGroup q8 = fgt::generalized_quaternion(8);
  CHECK(q8.order() == 8);
  CHECK(count_of_order(q8, 2) == 1);

  PermGroup q16 = fgt::generalized_quaternion(16);
  CHECK(q16.order() == 16);
  CHECK(count_of_order(q16, 2) == 1);
  CHECK(group_exponent(q16) == 8);

  CHECK_THROWS(fgt::generalized_quaternion(4));
  CHECK_THROWS(fgt::generalized_quaternion(12));
}

TEST_CASE("semidihedral group of order 16") {
  PermGroup sd = fgt::sd16();
  CHECK(sd.order() == 16);
  CHECK(group_exponent(sd) == 8);
  // r^8 = s^2 = 1, s r s = r^3 hold by construction; double-check here.
  Permutation r = sd.generators()[0];
  Permutation s = sd.generators()[1];
  Permutation r3 = r * r * r;
  CHECK(s * r * s == r3);
  CHECK((s * s).is_identity());
  CHECK(r.order() == 8);
  CHECK_THROWS(fgt::semidihedral(8));
}

TEST_CASE("direct products") {
  PermGroup c2xc3 = fgt::direct_product(fgt::cyclic(2), fgt::cyclic(3));
  CHECK(c2xc3.order() == 6);
  CHECK(fgt::is_abelian(c2xc3));

  PermGroup s3xc2 = fgt::direct_product(fgt::symmetric(3), fgt::cyclic(2));
  CHECK(s3xc2.order() == 12);
  CHECK(s3xc2.degree() == 5);

  PermGroup q8xc3 = fgt::direct_product(fgt::q8(), fgt::cyclic(3));
  CHECK(q8xc3.order() == 24);
}

TEST_CASE("GL(2,3) and SL(2,5)") {
  PermGroup gl = fgt::gl23();
  CHECK(gl.order() == 48);
  CHECK(gl.degree() == 8);

  PermGroup sl = fgt::sl25();
  CHECK(sl.order() == 120);
  CHECK(sl.degree() == 24);
  CHECK(count_of_order(sl, 2) == 1);  // -I is the only involution
}

TEST_CASE("matrix-to-permutation conversion is a homomorphism") {
  // perm(A) * perm(B) must equal perm(A*B) for the row action v -> v*M.
  auto domain = fgt::detail::nonzero_vectors2(3);
  std::vector<Mat> mats = {Mat::from_rows(3, {{1, 1}, {0, 1}}),
                           Mat::from_rows(3, {{1, 0}, {1, 1}}),
                           Mat::from_rows(3, {{2, 0}, {0, 1}})};
  for (const auto& a : mats)
    for (const auto& b : mats) {
      Permutation pa = fgt::detail::matrix_perm_on_vectors(a, domain);
      Permutation pb = fgt::detail::matrix_perm_on_vectors(b, domain);
      Permutation pab = fgt::detail::matrix_perm_on_vectors(a * b, domain);
      CHECK(pa * pb == pab);
    }
}

TEST_CASE("the Frobenius group of order 72") {
  PermGroup w = fgt::frobenius_w();
  CHECK(w.order() == 72);
  CHECK(w.degree() == 9);
  // the stabilizer of the zero vector is the Q8 complement; every
  // non-identity linear part fixes only the zero vector
  const auto& f = fgt::field(3);
  Mat qa = Mat::from_rows(3, {{0, -1}, {1, 0}});
  Mat qb = Mat::from_rows(3, {{1, 1}, {1, -1}});
  std::vector<Mat> complement{Mat::identity(2, 3)};
  // generate all 8 elements of the Q8 matrix group
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mat> next = complement;
    for (const auto& m : complement)
      for (const auto& gen : {qa, qb}) {
        Mat prod = m * gen;
        if (std::find(next.begin(), next.end(), prod) == next.end()) {
          next.push_back(prod);
          grew = true;
        }
      }
    complement = next;
  }
  REQUIRE(complement.size() == 8);
  for (const auto& m : complement) {
    if (m == Mat::identity(2, 3)) continue;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        auto img = m.apply_row({a, b});
        bool fixed = (img[0] == a && img[1] == b);
        CHECK_FALSE(fixed);
      }
  }
  (void)f;
}

TEST_CASE("PSL(3,4) on the 21 points") {
  PermGroup l = fgt::psl34();
  CHECK(l.degree() == 21);
  CHECK(l.order() == 20160);
}

TEST_CASE("the degree-42 extension by the unitary polarity") {
  PermGroup ext = fgt::l34_beta();
  CHECK(ext.degree() == 42);
  CHECK(ext.order() == 40320);

  PermGroup psl = fgt::psl34_on_points_and_lines();
  CHECK(psl.order() == 20160);
  CHECK(fgt::is_subgroup_of(psl, ext));
  CHECK(fgt::is_normal_in(psl, ext));

  // the polarity generator swaps points and lines
  const Permutation& beta = ext.generators().back();
  CHECK((beta * beta).is_identity());
  for (int p = 1; p <= 21; ++p) CHECK(beta(p) > 21);
  // conjugation by the polarity is an automorphism of the point-line copy
  for (const auto& s : psl.generators()) CHECK(psl.contains(fgt::conjugate(s, beta)));
}

TEST_CASE("group file parsing") {
  PermGroup s3 = fgt::parse_group_file_text("degree 3\n2 3 1\n2 1 3\n");
  CHECK(s3.order() == 6);

  PermGroup triv = fgt::parse_group_file_text("degree 1\n1\n");
  CHECK(triv.order() == 1);

  PermGroup with_comments =
      fgt::parse_group_file_text("# a comment\ndegree 3\n\n2 3 1  # trailing\n");
  CHECK(with_comments.order() == 3);

  // header-only file: the trivial group of that degree
  CHECK(fgt::parse_group_file_text("degree 4\n").order() == 1);
}

TEST_CASE("group file errors carry line numbers") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(fgt::parse_group_file_text("degree x\n"),
                    ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(fgt::parse_group_file_text("degree 3\n1 2\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(fgt::parse_group_file_text("degree 3\n1 2 4\n"),
                    ContainsSubstring("out of range"));
  CHECK_THROWS_WITH(fgt::parse_group_file_text("degree 3\n1 2 2\n"),
                    ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(fgt::parse_group_file_text("2 3 1\n"),
                    ContainsSubstring("degree"));
}

TEST_CASE("group file round trip preserves the element set") {
  for (const auto& g :
       {fgt::frobenius_w(), fgt::symmetric(4), fgt::generalized_quaternion(16)}) {
    PermGroup back = fgt::parse_group_file_text(fgt::write_group_file(g));
    CHECK(element_set(back) == element_set(g));
  }
}

TEST_CASE("builtin registry resolves every advertised name") {
  for (const char* name : {"s3", "s5", "a5", "a6", "q8", "sd16", "gl23", "sl25", "w"}) {
    CHECK_NOTHROW(fgt::builtin_group(name));
  }
  CHECK(fgt::builtin_group("sym:4").order() == 24);
  CHECK(fgt::builtin_group("alt:4").order() == 12);
  CHECK(fgt::builtin_group("cyc:12").order() == 12);
  CHECK(fgt::builtin_group("dih:4").order() == 8);
  CHECK(fgt::builtin_group("ea:3:2").order() == 9);
  CHECK(fgt::builtin_group("genq:16").order() == 16);
  CHECK_THROWS(fgt::builtin_group("nope"));
  CHECK_THROWS(fgt::builtin_group("sym:abc"));
}

TEST_CASE("every constructor's advertised order matches its BSGS order and element count") {
  auto check_counts = [](const PermGroup& g, std::uint64_t order) {
    CHECK(g.order() == order);
    CHECK(g.elements().size() == order);
  };
  check_counts(fgt::symmetric(3), 6);
  check_counts(fgt::q8(), 8);
  check_counts(fgt::sd16(), 16);
  check_counts(fgt::gl23(), 48);
  check_counts(fgt::sl25(), 120);
  check_counts(fgt::frobenius_w(), 72);
}

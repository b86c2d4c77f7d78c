#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/gf.hpp"
#include "fgt/matrix.hpp"
#include "fgt/numeric.hpp"
#include "fgt/perm.hpp"
#include "fgt/perm_group.hpp"
#include "fgt/projective.hpp"

namespace fgt {

namespace detail {

inline void construction_check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction self-check failed: " + what);
}

// All nonzero row vectors of GF(q)^2 in lexicographic order; 1-based points.
inline std::vector<std::vector<int>> nonzero_vectors2(int q) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a || b) out.push_back({a, b});
  return out;
}

inline Permutation matrix_perm_on_vectors(const Mat& m,
                                          const std::vector<std::vector<int>>& domain) {
  std::vector<int> images(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    std::vector<int> w = m.apply_row(domain[i]);
    auto it = std::lower_bound(domain.begin(), domain.end(), w);
    construction_check(it != domain.end() && *it == w, "matrix image not in domain");
    images[i] = static_cast<int>(it - domain.begin()) + 1;
  }
  return Permutation(images);
}

}  // namespace detail

inline PermGroup symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup({Permutation({2, 1})});
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
  std::vector<int> swp(n);
  std::iota(swp.begin(), swp.end(), 1);
  std::swap(swp[0], swp[1]);
  return PermGroup({Permutation(cyc), Permutation(swp)});
}

inline PermGroup alternating(int n) {
  if (n < 1) throw std::invalid_argument("alternating: n must be >= 1");
  if (n <= 2) return PermGroup::trivial(std::max(n, 1));
  if (n == 3) return PermGroup({Permutation({2, 3, 1})});
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 1);
  three[0] = 2, three[1] = 3, three[2] = 1;
  std::vector<int> big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n + 1;  // (1,...,n)
  } else {
    big[0] = 1;  // (2,...,n)
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 2;
  }
  return PermGroup({Permutation(three), Permutation(big)});
}

inline PermGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
  return PermGroup({Permutation(cyc)});
}

inline PermGroup dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
  if (n == 1) return PermGroup({Permutation({2, 1})});
  if (n == 2) return PermGroup({Permutation({2, 1, 3, 4}), Permutation({1, 2, 4, 3})});
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n + 1;
    ref[i] = n - i;
  }
  return PermGroup({Permutation(rot), Permutation(ref)});
}

// Direct product of k cyclic groups of prime order p on k*p points.
inline PermGroup elementary_abelian(int p, int k) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("elementary_abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("elementary_abelian: k must be >= 1");
  int degree = p * k;
  std::vector<Permutation> gens;
  for (int block = 0; block < k; ++block) {
    std::vector<int> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 1);
    for (int i = 0; i < p; ++i) imgs[block * p + i] = block * p + (i + 1) % p + 1;
    gens.push_back(Permutation(imgs));
  }
  return PermGroup(gens);
}

// Generalized quaternion group of order 2^k (k >= 3) in its regular
// representation. Elements are a^i b^j with a of order 2^(k-1),
// b^2 = a^(2^(k-2)) and b^-1 a b = a^-1.
inline PermGroup generalized_quaternion(int order) {
  int k = 0;
  while ((1 << k) < order) ++k;
  if ((1 << k) != order || k < 3)
    throw std::invalid_argument("generalized_quaternion: order must be 2^k, k >= 3");
  int h = order / 2;  // order of a
  auto idx = [h](int i, int j) { return j * h + i + 1; };
  auto multiply = [&](int i, int j, int s, int t) {
    // (a^i b^j) * (a^s b^t)
    int ii, jj;
    if (j == 0) {
      ii = (i + s) % h;
      jj = t;
    } else {
      ii = ((i - s) % h + h) % h;
      jj = 1 + t;
    }
    if (jj == 2) {
      ii = (ii + h / 2) % h;
      jj = 0;
    }
    return idx(ii, jj);
  };
  std::vector<int> pa(order), pb(order);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < h; ++i) {
      pa[idx(i, j) - 1] = multiply(i, j, 1, 0);
      pb[idx(i, j) - 1] = multiply(i, j, 0, 1);
    }
  PermGroup g({Permutation(pa), Permutation(pb)});
  detail::construction_check(g.order() == static_cast<std::uint64_t>(order),
                             "generalized quaternion order");
  return g;
}

// Semidihedral group of order 2^k (k >= 4) in its regular representation:
// r^(2^(k-1)) = s^2 = 1 and s r s = r^(2^(k-2) - 1).
inline PermGroup semidihedral(int order) {
  int k = 0;
  while ((1 << k) < order) ++k;
  if ((1 << k) != order || k < 4)
    throw std::invalid_argument("semidihedral: order must be 2^k, k >= 4");
  int h = order / 2;     // order of r
  int twist = h / 2 - 1; // s r s = r^twist
  auto idx = [h](int i, int j) { return j * h + i + 1; };
  auto multiply = [&](int i, int j, int s, int t) {
    // (r^i s^j) * (r^s s^t); s r^u = r^(twist*u) s
    int ii, jj;
    if (j == 0) {
      ii = (i + s) % h;
      jj = t;
    } else {
      ii = (i + twist * s) % h;
      jj = (1 + t) % 2;
    }
    return idx(ii, jj);
  };
  std::vector<int> pr(order), ps(order);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < h; ++i) {
      pr[idx(i, j) - 1] = multiply(i, j, 1, 0);
      ps[idx(i, j) - 1] = multiply(i, j, 0, 1);
    }
  Permutation r(pr), s(ps);
  PermGroup g({r, s});
  detail::construction_check(g.order() == static_cast<std::uint64_t>(order),
                             "semidihedral order");
  // presentation relations on the generators
  Permutation e = Permutation::identity(order);
  Permutation rk = e;
  for (int i = 0; i < h; ++i) rk = rk * r;
  detail::construction_check(rk == e, "semidihedral r^(2^(k-1)) = 1");
  detail::construction_check(s * s == e, "semidihedral s^2 = 1");
  Permutation rt = e;
  for (int i = 0; i < twist; ++i) rt = rt * r;
  detail::construction_check(s * r * s == rt, "semidihedral s r s = r^twist");
  return g;
}

inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> imgs(da + db);
    for (int i = 0; i < da; ++i) imgs[i] = g(i + 1);
    for (int i = 0; i < db; ++i) imgs[da + i] = da + i + 1;
    gens.push_back(Permutation(imgs));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> imgs(da + db);
    std::iota(imgs.begin(), imgs.begin() + da, 1);
    for (int i = 0; i < db; ++i) imgs[da + i] = da + g(i + 1);
    gens.push_back(Permutation(imgs));
  }
  return PermGroup(gens);
}

// GL(2,3) acting on the 8 nonzero vectors of GF(3)^2.
inline PermGroup gl23() {
  auto domain = detail::nonzero_vectors2(3);
  std::vector<Mat> mats = {
      Mat::from_rows(3, {{1, 1}, {0, 1}}),
      Mat::from_rows(3, {{1, 0}, {1, 1}}),
      Mat::from_rows(3, {{2, 0}, {0, 1}}),
  };
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(detail::matrix_perm_on_vectors(m, domain));
  PermGroup g(gens);
  detail::construction_check(g.order() == 48, "|GL(2,3)| = 48");
  return g;
}

// SL(2,5) acting on the 24 nonzero vectors of GF(5)^2.
inline PermGroup sl25() {
  auto domain = detail::nonzero_vectors2(5);
  std::vector<Mat> mats = {
      Mat::from_rows(5, {{1, 1}, {0, 1}}),
      Mat::from_rows(5, {{1, 0}, {1, 1}}),
  };
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(detail::matrix_perm_on_vectors(m, domain));
  PermGroup g(gens);
  detail::construction_check(g.order() == 120, "|SL(2,5)| = 120");
  return g;
}

// The Frobenius group of order 72: translations of GF(3)^2 (the kernel,
// elementary abelian of order 9) extended by the Q8 subgroup of GL(2,3)
// generated by [[0,-1],[1,0]] and [[1,1],[1,-1]], acting on the 9 vectors.
inline PermGroup frobenius_w() {
  const SmallField& f = field(3);
  std::vector<std::vector<int>> domain;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) domain.push_back({a, b});

  Mat qa = Mat::from_rows(3, {{0, -1}, {1, 0}});
  Mat qb = Mat::from_rows(3, {{1, 1}, {1, -1}});
  // Q8 relations: a^2 = b^2 = -1, b^-1 a b = a^-1
  Mat minus_i = Mat::from_rows(3, {{-1, 0}, {0, -1}});
  detail::construction_check(qa * qa == minus_i, "W complement: a^2 = -1");
  detail::construction_check(qb * qb == minus_i, "W complement: b^2 = -1");
  detail::construction_check(qb.inverse() * qa * qb == qa.inverse(),
                             "W complement: b^-1 a b = a^-1");

  auto linear_perm = [&](const Mat& m) {
    std::vector<int> imgs(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      std::vector<int> w = m.apply_row(domain[i]);
      auto it = std::lower_bound(domain.begin(), domain.end(), w);
      imgs[i] = static_cast<int>(it - domain.begin()) + 1;
    }
    return Permutation(imgs);
  };
  auto translation_perm = [&](int t0, int t1) {
    std::vector<int> imgs(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      std::vector<int> w = {f.add(domain[i][0], t0), f.add(domain[i][1], t1)};
      auto it = std::lower_bound(domain.begin(), domain.end(), w);
      imgs[i] = static_cast<int>(it - domain.begin()) + 1;
    }
    return Permutation(imgs);
  };

  PermGroup g({translation_perm(1, 0), translation_perm(0, 1), linear_perm(qa),
               linear_perm(qb)});
  detail::construction_check(g.order() == 72, "|W| = 72");
  return g;
}

// PSL(3,4) acting on the 21 points of PG(2,4): the images of the SL(3,4)
// transvections (the three scalar matrices act trivially on points).
inline PermGroup psl34() {
  const ProjectivePlane& plane = pg24();
  std::vector<Permutation> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int c = 1; c < 4; ++c) {
        Mat t = Mat::identity(3, 4);
        t.at(i, j) = static_cast<std::uint8_t>(c);
        std::vector<int> imgs(ProjectivePlane::kPointCount);
        for (int p = 0; p < plane.point_count(); ++p)
          imgs[p] = plane.apply_to_point(p, t) + 1;
        gens.push_back(Permutation(imgs));
      }
    }
  std::vector<Permutation> reduced = reduce_generators(gens);
  PermGroup g(reduced);
  detail::construction_check(g.order() == 20160, "|PSL(3,4)| = 20160");
  return g;
}

namespace detail {

// Degree-42 permutation of points (1..21) and lines (22..42) induced by the
// collineation with matrix m.
inline Permutation collineation_perm42(const Mat& m) {
  const ProjectivePlane& plane = pg24();
  Mat minv = m.inverse();
  std::vector<int> imgs(42);
  for (int p = 0; p < 21; ++p) imgs[p] = plane.apply_to_point(p, m) + 1;
  for (int l = 0; l < 21; ++l) imgs[21 + l] = 22 + plane.apply_to_line(l, minv);
  return Permutation(imgs);
}

}  // namespace detail

// The point-line copy of PSL(3,4) inside the degree-42 action.
inline PermGroup psl34_on_points_and_lines() {
  std::vector<Permutation> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int c = 1; c < 4; ++c) {
        Mat t = Mat::identity(3, 4);
        t.at(i, j) = static_cast<std::uint8_t>(c);
        gens.push_back(detail::collineation_perm42(t));
      }
    }
  std::vector<Permutation> reduced = reduce_generators(gens);
  PermGroup g(reduced);
  detail::construction_check(g.order() == 20160, "point-line PSL(3,4) order");
  return g;
}

// The extension of PSL(3,4) by the unitary polarity of PG(2,4): a degree-42
// group on points union lines in which the polarity swaps the two sorts.
// Order 40320, with the point-line PSL(3,4) normal of index 2.
inline PermGroup l34_beta() {
  const ProjectivePlane& plane = pg24();
  PermGroup psl = psl34_on_points_and_lines();

  std::vector<int> beta_imgs(42);
  for (int p = 0; p < 21; ++p) {
    auto img = plane.polarity_image(plane.point(p));
    beta_imgs[p] = 22 + plane.line_index(img);
  }
  for (int l = 0; l < 21; ++l) {
    auto img = plane.polarity_image(plane.line(l));
    beta_imgs[21 + l] = plane.point_index(img) + 1;
  }
  Permutation beta(beta_imgs);
  detail::construction_check((beta * beta).is_identity(), "polarity is an involution");

  std::vector<Permutation> gens = psl.generators();
  gens.push_back(beta);
  PermGroup g(gens);
  detail::construction_check(g.order() == 40320, "|L3(4).beta| = 40320");
  // The polarity normalizes the point-line copy.
  for (const auto& s : psl.generators())
    detail::construction_check(psl.contains(conjugate(s, beta)),
                               "polarity normalizes the point-line copy");
  return g;
}

inline PermGroup q8() { return generalized_quaternion(8); }
inline PermGroup sd16() { return semidihedral(16); }

// ---------------------------------------------------------------------------
// Group file format: first line "degree <n>", then one generator per line in
// one-line notation (n whitespace-separated 1-based images). '#' starts a
// comment line; blank lines are skipped.

inline PermGroup parse_group_file_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  int degree = -1;
  std::vector<Permutation> gens;
  auto error = [&](const std::string& msg) {
    throw std::runtime_error("group file, line " + std::to_string(lineno) +
                             ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::string stripped = line;
    auto hash = stripped.find('#');
    if (hash != std::string::npos) stripped = stripped.substr(0, hash);
    if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(stripped);
    if (degree < 0) {
      std::string kw;
      ls >> kw >> degree;
      if (kw != "degree" || ls.fail() || degree < 1)
        error("expected 'degree <n>'");
      std::string rest;
      if (ls >> rest) error("trailing text after degree");
      continue;
    }
    std::vector<int> imgs;
    int v;
    while (ls >> v) imgs.push_back(v);
    if (!ls.eof()) error("malformed image list");
    if (static_cast<int>(imgs.size()) != degree)
      error("expected " + std::to_string(degree) + " images, got " +
            std::to_string(imgs.size()));
    try {
      gens.push_back(Permutation(imgs));
    } catch (const std::exception& e) {
      error(e.what());
    }
  }
  if (degree < 0) {
    lineno = 1;
    error("missing 'degree <n>' header");
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return PermGroup(gens);
}

inline PermGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file_text(ss.str());
}

inline std::string write_group_file(const PermGroup& g) {
  std::ostringstream os;
  os << "degree " << g.degree() << "\n";
  for (const auto& gen : g.generators()) {
    const auto& imgs = gen.images();
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      if (i) os << ' ';
      os << imgs[i];
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Builtin registry. Fixed names plus parameterized forms sym:<n>, alt:<n>,
// cyc:<n>, dih:<n>, ea:<p>:<k>, genq:<2^k>.

inline PermGroup builtin_group(const std::string& name) {
  if (name == "s3") return symmetric(3);
  if (name == "s5") return symmetric(5);
  if (name == "a5") return alternating(5);
  if (name == "a6") return alternating(6);
  if (name == "q8") return q8();
  if (name == "sd16") return sd16();
  if (name == "gl23") return gl23();
  if (name == "sl25") return sl25();
  if (name == "w") return frobenius_w();
  if (name == "l34") return psl34();
  if (name == "l34b") return l34_beta();

  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
  };
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string tail = name.substr(colon + 1);
    try {
      if (head == "sym") return symmetric(parse_int(tail));
      if (head == "alt") return alternating(parse_int(tail));
      if (head == "cyc") return cyclic(parse_int(tail));
      if (head == "dih") return dihedral(parse_int(tail));
      if (head == "genq") return generalized_quaternion(parse_int(tail));
      if (head == "ea") {
        auto colon2 = tail.find(':');
        if (colon2 == std::string::npos)
          throw std::invalid_argument("ea wants ea:<p>:<k>");
        return elementary_abelian(parse_int(tail.substr(0, colon2)),
                                  parse_int(tail.substr(colon2 + 1)));
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("builtin '" + name + "': " + e.what());
    }
  }
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

}  // namespace fgt

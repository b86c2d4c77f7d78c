#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "fgt/gf.hpp"
#include "fgt/matrix.hpp"

namespace fgt {

// The projective plane PG(2,4): 21 points and 21 lines over GF(4).
//
// A point is a nonzero coordinate triple normalized so its first nonzero
// entry is 1; points are indexed 1..21 in lexicographic order of the
// normalized triples (using the canonical GF(4) element indices). A line is
// the dual triple u, also normalized and sorted, holding the incidence
// relation  point v on line u  <=>  v1*u1 + v2*u2 + v3*u3 = 0.
class ProjectivePlane {
 public:
  using Triple = std::array<int, 3>;

  ProjectivePlane() : f_(field(4)) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          Triple t{a, b, c};
          if (a == 0 && b == 0 && c == 0) continue;
          if (normalize(t) == t) points_.push_back(t);
        }
    std::sort(points_.begin(), points_.end());
    lines_ = points_;  // dual coordinates range over the same normalized triples
  }

  static constexpr int kPointCount = 21;

  int point_count() const { return static_cast<int>(points_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const Triple& point(int index) const { return points_.at(index); }
  const Triple& line(int index) const { return lines_.at(index); }

  Triple normalize(Triple t) const {
    for (int i = 0; i < 3; ++i) {
      if (t[i] != 0) {
        int s = f_.inv(t[i]);
        for (int j = 0; j < 3; ++j) t[j] = f_.mul(t[j], s);
        return t;
      }
    }
    throw std::invalid_argument("cannot normalize the zero triple");
  }

  int point_index(Triple t) const {
    t = normalize(t);
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    return static_cast<int>(it - points_.begin());
  }

  int line_index(Triple t) const { return point_index(t); }

  bool incident(const Triple& point, const Triple& line) const {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = f_.add(s, f_.mul(point[i], line[i]));
    return s == 0;
  }

  std::vector<int> points_on_line(int line_idx) const {
    std::vector<int> out;
    for (int p = 0; p < point_count(); ++p)
      if (incident(points_[p], lines_[line_idx])) out.push_back(p);
    return out;
  }

  std::vector<int> lines_through_point(int point_idx) const {
    std::vector<int> out;
    for (int l = 0; l < line_count(); ++l)
      if (incident(points_[point_idx], lines_[l])) out.push_back(l);
    return out;
  }

  // Image of a point under v -> v*M.
  int apply_to_point(int point_idx, const Mat& m) const {
    const Triple& t = points_[point_idx];
    std::vector<int> v = m.apply_row({t[0], t[1], t[2]});
    return point_index({v[0], v[1], v[2]});
  }

  // Image of a line under the same collineation: dual coordinates transform
  // by u -> M^-1 * u (column action), so incidence is preserved.
  int apply_to_line(int line_idx, const Mat& m_inverse) const {
    const Triple& t = lines_[line_idx];
    std::vector<int> u = m_inverse.apply_col({t[0], t[1], t[2]});
    return line_index({u[0], u[1], u[2]});
  }

  // The unitary polarity: point v maps to the line with dual coordinates
  // (v1^2, v2^2, v3^2), and dually for lines. An involution on
  // points union lines.
  Triple polarity_image(const Triple& t) const {
    return normalize({f_.frobenius(t[0]), f_.frobenius(t[1]), f_.frobenius(t[2])});
  }

 private:
  const SmallField& f_;
  std::vector<Triple> points_;
  std::vector<Triple> lines_;
};

inline const ProjectivePlane& pg24() {
  static const ProjectivePlane plane;
  return plane;
}

}  // namespace fgt

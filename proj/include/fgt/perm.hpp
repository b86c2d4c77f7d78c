#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/numeric.hpp"

namespace fgt {

// A permutation of {1..n} in one-line notation: images[i-1] is the image
// of point i. Points are 1-based everywhere, including storage.
//
// Composition is left-to-right: (p * q)(x) = q(p(x)). Conjugation follows
// the same convention, conjugate(x, g) = g^-1 * x * g.
class Permutation {
 public:
  explicit Permutation(int degree) : images_(degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::iota(images_.begin(), images_.end(), 1);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    validate();
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of a 1-based point.
  int operator()(int point) const { return images_[point - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation operator*(const Permutation& q) const {
    if (degree() != q.degree())
      throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> r(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r[i] = q.images_[images_[i] - 1];
    return Permutation(r, unchecked_tag{});
  }

  Permutation inverse() const {
    std::vector<int> r(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(r, unchecked_tag{});
  }

  // Order = lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = images_[j] - 1;
        ++len;
      }
      ord = lcm_u64(ord, len);
    }
    return ord;
  }

  // Non-trivial cycles, each rotated to start at its least point, sorted by
  // that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
      if (seen[i - 1] || images_[i - 1] == i) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j - 1]) {
        seen[j - 1] = true;
        cyc.push_back(j);
        j = images_[j - 1];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string to_oneline_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < degree(); ++i) {
      if (i) os << ',';
      os << images_[i];
    }
    os << ']';
    return os.str();
  }

  // Cycle notation; the identity prints as "()".
  std::string to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
      }
      os << ')';
    }
    return os.str();
  }

  // Accepts one-line ("[2,3,1]") or cycle ("(1,2,3)(4,5)", "()") text.
  // For cycle text the degree is the largest point mentioned unless a larger
  // degree is given explicitly.
  static Permutation parse(const std::string& text, int degree = -1) {
    std::size_t pos = text.find_first_not_of(" \t");
    if (pos == std::string::npos)
      throw std::invalid_argument("parse: empty permutation text");
    if (text[pos] == '[') return parse_oneline(text, degree);
    if (text[pos] == '(') return parse_cycles(text, degree);
    throw std::invalid_argument("parse: expected '[' or '(' in \"" + text + "\"");
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  // Degree first, then lexicographic on images; a fixed total order used for
  // canonical class representatives.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.images_ < b.images_;
  }

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> images, unchecked_tag)
      : images_(std::move(images)) {}

  void validate() const {
    if (images_.empty())
      throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > degree())
        throw std::invalid_argument("image " + std::to_string(v) +
                                    " out of range 1.." +
                                    std::to_string(degree()));
      if (seen[v - 1])
        throw std::invalid_argument("not a bijection: image " +
                                    std::to_string(v) + " repeated");
      seen[v - 1] = true;
    }
  }

  static Permutation parse_oneline(const std::string& text, int degree) {
    std::vector<int> imgs;
    std::string body = text.substr(text.find('[') + 1);
    auto close = body.find(']');
    if (close == std::string::npos)
      throw std::invalid_argument("parse: missing ']' in \"" + text + "\"");
    body = body.substr(0, close);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      imgs.push_back(std::stoi(tok));
    }
    if (degree > static_cast<int>(imgs.size()))
      for (int i = static_cast<int>(imgs.size()); i < degree; ++i)
        imgs.push_back(i + 1);
    return Permutation(imgs);
  }

  static Permutation parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    int maxpt = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c != '(')
        throw std::invalid_argument("parse: expected '(' in \"" + text + "\"");
      auto close = text.find(')', i);
      if (close == std::string::npos)
        throw std::invalid_argument("parse: missing ')' in \"" + text + "\"");
      std::string body = text.substr(i + 1, close - i - 1);
      std::vector<int> cyc;
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        int pt = std::stoi(tok);
        if (pt < 1) throw std::invalid_argument("parse: point must be >= 1");
        cyc.push_back(pt);
        maxpt = std::max(maxpt, pt);
      }
      if (cyc.size() == 1)
        throw std::invalid_argument("parse: singleton cycle in \"" + text + "\"");
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      i = close + 1;
    }
    int n = std::max(degree, std::max(maxpt, 1));
    std::vector<int> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 1);
    for (const auto& cyc : cycles) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k];
        int to = cyc[(k + 1) % cyc.size()];
        if (imgs[from - 1] != from)
          throw std::invalid_argument("parse: point " + std::to_string(from) +
                                      " appears twice");
        imgs[from - 1] = to;
      }
    }
    return Permutation(imgs);
  }

  std::vector<int> images_;
};

// x^g = g^-1 * x * g, computed in one pass: result(g(i)) = g(x(i)).
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<int> r(x.degree());
  const auto& xi = x.images();
  const auto& gi = g.images();
  for (int i = 0; i < x.degree(); ++i) r[gi[i] - 1] = gi[xi[i] - 1];
  return Permutation(std::move(r));
}

// [x, y] = x^-1 * y^-1 * x * y.
inline Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fgt

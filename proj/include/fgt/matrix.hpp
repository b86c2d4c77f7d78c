#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgt/gf.hpp"

namespace fgt {

// Small square matrix over one of the supported finite fields.
// Vectors act as rows: v -> v*M, so matrix-to-permutation conversion is a
// homomorphism under the library's left-to-right composition.
class Mat {
 public:
  Mat(int n, int q) : n_(n), q_(q), e_(n * n, 0) {
    if (n < 2 || n > 3) throw std::invalid_argument("matrix dimension must be 2 or 3");
  }

  static Mat identity(int n, int q) {
    Mat m(n, q);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Entries of prime fields may be given as negative literals (reduced mod q);
  // GF(4) entries must be canonical indices 0..3.
  static Mat from_rows(int q, const std::vector<std::vector<int>>& rows) {
    Mat m(static_cast<int>(rows.size()), q);
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n_)
        throw std::invalid_argument("matrix rows must be square");
      for (int j = 0; j < m.n_; ++j) {
        int v = rows[i][j];
        if (q == 4) {
          if (v < 0 || v > 3) throw std::invalid_argument("GF(4) entry out of range");
        } else {
          v %= q;
          if (v < 0) v += q;
        }
        m.at(i, j) = static_cast<std::uint8_t>(v);
      }
    }
    return m;
  }

  int dim() const { return n_; }
  int field_order() const { return q_; }
  std::uint8_t& at(int i, int j) { return e_[i * n_ + j]; }
  std::uint8_t at(int i, int j) const { return e_[i * n_ + j]; }

  Mat operator*(const Mat& o) const {
    const SmallField& f = field(q_);
    Mat r(n_, q_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int s = 0;
        for (int k = 0; k < n_; ++k) s = f.add(s, f.mul(at(i, k), o.at(k, j)));
        r.at(i, j) = static_cast<std::uint8_t>(s);
      }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.e_ == b.e_;
  }

  int det() const {
    const SmallField& f = field(q_);
    if (n_ == 2)
      return f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0)));
    int s = 0;
    s = f.add(s, f.mul(at(0, 0), f.sub(f.mul(at(1, 1), at(2, 2)), f.mul(at(1, 2), at(2, 1)))));
    s = f.sub(s, f.mul(at(0, 1), f.sub(f.mul(at(1, 0), at(2, 2)), f.mul(at(1, 2), at(2, 0)))));
    s = f.add(s, f.mul(at(0, 2), f.sub(f.mul(at(1, 0), at(2, 1)), f.mul(at(1, 1), at(2, 0)))));
    return s;
  }

  Mat inverse() const {
    const SmallField& f = field(q_);
    int d = det();
    if (d == 0) throw std::invalid_argument("matrix is singular");
    int dinv = f.inv(d);
    Mat r(n_, q_);
    if (n_ == 2) {
      r.at(0, 0) = static_cast<std::uint8_t>(f.mul(dinv, at(1, 1)));
      r.at(0, 1) = static_cast<std::uint8_t>(f.mul(dinv, f.neg(at(0, 1))));
      r.at(1, 0) = static_cast<std::uint8_t>(f.mul(dinv, f.neg(at(1, 0))));
      r.at(1, 1) = static_cast<std::uint8_t>(f.mul(dinv, at(0, 0)));
      return r;
    }
    // adjugate for 3x3
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      return f.sub(f.mul(at(r0, c0), at(r1, c1)), f.mul(at(r0, c1), at(r1, c0)));
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.at(j, i) = static_cast<std::uint8_t>(f.mul(dinv, cof(i, j)));
    return r;
  }

  // Row vector times matrix.
  std::vector<int> apply_row(const std::vector<int>& v) const {
    const SmallField& f = field(q_);
    std::vector<int> r(n_, 0);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) r[j] = f.add(r[j], f.mul(v[i], at(i, j)));
    return r;
  }

  // Matrix times column vector.
  std::vector<int> apply_col(const std::vector<int>& v) const {
    const SmallField& f = field(q_);
    std::vector<int> r(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] = f.add(r[i], f.mul(at(i, j), v[j]));
    return r;
  }

 private:
  int n_, q_;
  std::vector<std::uint8_t> e_;
};

}  // namespace fgt

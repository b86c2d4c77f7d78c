#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgt {

// Finite fields of order 2, 3, 4, 5 with table-driven arithmetic.
// Elements are canonical indices 0..q-1. For GF(4) the indices mean
// {0, 1, w, w+1} with w^2 = w + 1; for prime q they are residues mod q.
// The tables are verified against the field axioms exhaustively when built.
class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
      throw std::invalid_argument("unsupported field order " + std::to_string(q));
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>(q == 4 ? (a ^ b) : (a + b) % q);
        mul_[a * q + b] = static_cast<std::uint8_t>(q == 4 ? mul_gf4(a, b) : (a * b) % q);
      }
    }
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (add(a, b) == 0) neg_[a] = static_cast<std::uint8_t>(b);
        if (a != 0 && mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
      }
    }
    check_axioms();
  }

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return inv_[a];
  }

  // x -> x^2; on GF(4) this is the field automorphism of order 2.
  int frobenius(int a) const { return mul(a, a); }

 private:
  static int mul_gf4(int a, int b) {
    // bit 1 = coefficient of w, bit 0 = constant term; w^2 = w + 1
    int a1 = a >> 1, a0 = a & 1, b1 = b >> 1, b0 = b & 1;
    int c1 = (a1 & b0) ^ (a0 & b1) ^ (a1 & b1);
    int c0 = (a0 & b0) ^ (a1 & b1);
    return (c1 << 1) | c0;
  }

  void check_axioms() const {
    auto fail = [this](const char* what) {
      throw std::logic_error("field axiom violated for GF(" +
                             std::to_string(q_) + "): " + what);
    };
    for (int a = 0; a < q_; ++a) {
      if (add(a, 0) != a) fail("additive identity");
      if (a != 0 && mul(a, 1) != a) fail("multiplicative identity");
      if (add(a, neg(a)) != 0) fail("additive inverse");
      if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverse");
      for (int b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a)) fail("+ commutativity");
        if (mul(a, b) != mul(b, a)) fail("* commutativity");
        for (int c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) fail("+ associativity");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("* associativity");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
        }
      }
    }
  }

  int q_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

inline const SmallField& field(int q) {
  static const SmallField f2(2), f3(3), f4(4), f5(5);
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    default:
      throw std::invalid_argument("unsupported field order " + std::to_string(q));
  }
}

}  // namespace fgt

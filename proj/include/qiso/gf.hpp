#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qiso::gf {

// An element of F_q is its index in [0, q): the base-p digits of the index
// are the coefficients of the polynomial representative, so 0 and 1 are the
// additive and multiplicative identities for every supported q.
using Elem = std::uint8_t;

constexpr int kMaxQ = 9;

// Table-driven arithmetic for F_q, q in {2,3,4,5,7,8,9}. The modulus per
// extension order is fixed (x^2+x+1 for 4, x^3+x+1 for 8, x^2+2x+2 for 9) so
// element indices, canonical subspace forms and every enumeration order are
// reproducible bit for bit.
struct FieldSpec {
  int q = 0;
  int p = 0;
  int e = 0;
  std::vector<int> modulus;  // little-endian coefficients, degree e, monic

  Elem add(Elem a, Elem b) const { return add_[a][b]; }
  Elem sub(Elem a, Elem b) const { return add_[a][neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;  // throws on a == 0

  // Shared immutable spec; throws on unsupported order.
  static const FieldSpec& get(int q);

  std::array<std::array<Elem, kMaxQ>, kMaxQ> add_{};
  std::array<std::array<Elem, kMaxQ>, kMaxQ> mul_{};
  std::array<Elem, kMaxQ> neg_{};
  std::array<Elem, kMaxQ> inv_{};
};

FieldSpec field_make(int q);

// Smallest generator of the multiplicative group, found by exhaustive order
// computation; the group is cyclic of order q-1.
Elem multiplicative_generator(const FieldSpec& F);

}  // namespace qiso::gf

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qiso/counting.hpp"
#include "qiso/gf.hpp"

namespace qiso::sub {

using gf::Elem;
using gf::FieldSpec;

struct Vector {
  int n = 0;
  std::vector<Elem> coords;

  static Vector zero(int n) { return {n, std::vector<Elem>(static_cast<std::size_t>(n), 0)}; }
  static Vector unit(int n, int i);
  bool is_zero() const;
};

// A subspace of F_q^n, identified by its reduced row echelon basis: exactly
// k nonzero rows, unit pivot entries, pivot columns cleared elsewhere, rows
// sorted by pivot column. Equality is equality of these canonical bytes.
struct Subspace {
  int n = 0;
  int k = 0;
  std::vector<Elem> rows;      // k*n, row-major
  std::vector<int> pivots;     // strictly increasing

  Elem at(int r, int c) const { return rows[static_cast<std::size_t>(r) * n + c]; }
  bool operator==(const Subspace& o) const { return n == o.n && k == o.k && rows == o.rows; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
};

// Canonical order: dimension, then pivot columns lexicographically, then the
// basis entries row-major. Within one pivot set this equals the free-entry
// odometer order used by the enumerator, so enumeration emits subspaces in
// strictly increasing canonical order.
bool canonical_less(const Subspace& a, const Subspace& b);

struct CanonicalLess {
  bool operator()(const Subspace& a, const Subspace& b) const { return canonical_less(a, b); }
};

Subspace zero_subspace(int n);
Subspace full_space(int n);

// Canonical span of arbitrary rows; idempotent on a Subspace's basis.
Subspace rref(int n, const std::vector<std::vector<Elem>>& in_rows, const FieldSpec& F);

Subspace sum(const Subspace& a, const Subspace& b, const FieldSpec& F);
// Null-space construction on the stacked bases (Zassenhaus); asserts the
// dimension formula against sum().
Subspace intersect(const Subspace& a, const Subspace& b, const FieldSpec& F);
// {v : <v,w> = 0 for all w in A} under the standard bilinear form.
Subspace perp(const Subspace& a, const FieldSpec& F);

bool contains(const Subspace& a, const Vector& v, const FieldSpec& F);

// dim(A + B) without building the canonical sum.
int stack_rank(const Subspace& a, const Subspace& b, const FieldSpec& F);

inline int intersection_dim(const Subspace& a, const Subspace& b, const FieldSpec& F) {
  return a.k + b.k - stack_rank(a, b, F);
}

// Streams every k-dimensional subspace of F_q^n exactly once, pivot-column
// sets in lexicographic order and free entries in odometer order. Throws
// when qbinom(n,k,q) exceeds cap, reporting the predicted count.
void for_each_subspace(int n, int k, const FieldSpec& F, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(int n, int k, const FieldSpec& F, std::uint64_t cap);

// Total number of subspaces of all dimensions, as a cap guard.
counting::BigCount lattice_size(int n, int q);

// One-line form: basis rows as base-q digit strings joined by ';'; the zero
// subspace is "-".
std::string to_line(const Subspace& s);
Subspace subspace_from_line(int n, const std::string& line, const FieldSpec& F);

namespace detail {
// Reference byte-wise elimination and the packed GF(2) variant; both return
// the canonical RREF rows. Exposed for equivalence tests.
std::vector<std::vector<Elem>> rref_bytes(std::vector<std::vector<Elem>> rows, int n,
                                          const FieldSpec& F, std::vector<int>* pivots);
std::vector<std::vector<Elem>> rref_packed_q2(const std::vector<std::vector<Elem>>& rows, int n,
                                              std::vector<int>* pivots);
}  // namespace detail

}  // namespace qiso::sub

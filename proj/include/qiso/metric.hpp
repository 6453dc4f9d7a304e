#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qiso/family.hpp"
#include "qiso/subspace.hpp"

namespace qiso::metric {

using sub::Family;
using sub::FieldSpec;
using sub::Subspace;

// dim A + dim B - 2 dim(A cap B); a metric on the subspace lattice.
int delta(const Subspace& a, const Subspace& b, const FieldSpec& F);

struct FamilyStats {
  int diameter = 0;
  int dim_spread = 0;  // max |dim A - dim B|
  std::vector<int> supp;
  int m_f = 0;  // least x with supp(F) or supp(F-perp) inside [x, x + diameter]
  bool perp_attained = false;
};

FamilyStats family_stats(const Family& f, const FieldSpec& F, int workers = 1);

Family family_perp(const Family& f, const FieldSpec& F);

// True iff every A in F(i), B in F(j) has dim(A cap B) >= ceil((i+j-d)/2).
// Throws when a named slice is empty.
bool cross_intersecting_check(const Family& f, int i, int j, int d, const FieldSpec& F);

// Materialized subspace lattice with covering-relation adjacency; the BFS
// distance is the test oracle for delta. Hard-capped because it exists to
// validate the equality, not to answer production queries.
class HammingLattice {
 public:
  static constexpr std::uint64_t kDefaultCap = 100000;

  HammingLattice(int n, const FieldSpec& F, std::uint64_t cap = kDefaultCap);

  std::size_t size() const { return verts_.size(); }
  const std::vector<Subspace>& vertices() const { return verts_; }
  int index_of(const Subspace& s) const;
  int graph_distance(const Subspace& a, const Subspace& b) const;
  // All distances from source index (BFS layer by layer).
  std::vector<int> distances_from(int src) const;

 private:
  std::vector<Subspace> verts_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace qiso::metric

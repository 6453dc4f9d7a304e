#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qiso/subspace.hpp"

namespace qiso::sub {

// An immutable set of subspaces of F_q^n, kept in canonical order, so the
// dimension slices are contiguous index ranges and serialization is
// deterministic.
struct Family {
  int q = 0;
  int n = 0;
  std::vector<Subspace> members;  // sorted by canonical_less, unique

  static Family from_members(int q, int n, std::vector<Subspace> members);

  std::size_t size() const { return members.size(); }
  bool contains(const Subspace& s) const;
  std::map<int, std::size_t> slice_sizes() const;
  // Members of dimension k as [lo, hi) into members.
  std::pair<std::size_t, std::size_t> slice_range(int k) const;
  std::vector<int> support() const;
};

// Family file format: header line "q n" followed by one serialized subspace
// per line.
void write_family(std::ostream& os, const Family& f);
Family read_family(std::istream& is);
Family read_family_file(const std::string& path);
void write_family_file(const std::string& path, const Family& f);

}  // namespace qiso::sub

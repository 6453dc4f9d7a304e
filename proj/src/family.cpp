#include "qiso/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qiso::sub {

Family Family::from_members(int q, int n, std::vector<Subspace> members) {
  for (const auto& m : members)
    if (m.n != n)
      throw std::invalid_argument("family member has ambient " + std::to_string(m.n) +
                                  ", expected " + std::to_string(n));
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Family f;
  f.q = q;
  f.n = n;
  f.members = std::move(members);
  return f;
}

bool Family::contains(const Subspace& s) const {
  return std::binary_search(members.begin(), members.end(), s, CanonicalLess{});
}

std::map<int, std::size_t> Family::slice_sizes() const {
  std::map<int, std::size_t> out;
  for (const auto& m : members) ++out[m.k];
  return out;
}

std::pair<std::size_t, std::size_t> Family::slice_range(int k) const {
  auto lo = std::lower_bound(members.begin(), members.end(), k,
                             [](const Subspace& s, int dim) { return s.k < dim; });
  auto hi = std::upper_bound(members.begin(), members.end(), k,
                             [](int dim, const Subspace& s) { return dim < s.k; });
  return {static_cast<std::size_t>(lo - members.begin()),
          static_cast<std::size_t>(hi - members.begin())};
}

std::vector<int> Family::support() const {
  std::vector<int> out;
  for (const auto& m : members)
    if (out.empty() || out.back() != m.k) out.push_back(m.k);
  return out;
}

void write_family(std::ostream& os, const Family& f) {
  os << f.q << ' ' << f.n << '\n';
  for (const auto& m : f.members) os << to_line(m) << '\n';
}

Family read_family(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("family file is empty");
  std::istringstream hs(header);
  int q = 0, n = 0;
  if (!(hs >> q >> n)) throw std::invalid_argument("family header must be 'q n'");
  const gf::FieldSpec& F = gf::FieldSpec::get(q);
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  std::vector<Subspace> members;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    members.push_back(subspace_from_line(n, line, F));
  }
  return Family::from_members(q, n, std::move(members));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return read_family(in);
}

void write_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write family file: " + path);
  write_family(out, f);
}

}  // namespace qiso::sub

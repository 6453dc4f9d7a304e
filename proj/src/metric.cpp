#include "qiso/metric.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

#include "qiso/util.hpp"

namespace qiso::metric {

int delta(const Subspace& a, const Subspace& b, const FieldSpec& F) {
  // dim A + dim B - 2 dim(A cap B) = 2 dim(A + B) - dim A - dim B.
  return 2 * sub::stack_rank(a, b, F) - a.k - b.k;
}

FamilyStats family_stats(const Family& f, const FieldSpec& F, int workers) {
  if (f.members.empty()) throw std::invalid_argument("family_stats requires a nonempty family");
  FamilyStats st;
  st.supp = f.support();
  st.dim_spread = st.supp.back() - st.supp.front();

  // Largest value delta can attain on this family, used for early exit:
  // delta(A,B) <= min(a + b, 2n - a - b) for dims a, b.
  const int n = f.n;
  int cap = 0;
  auto sizes = f.slice_sizes();
  for (auto [a, ca] : sizes)
    for (auto [b, cb] : sizes) {
      if (a == b && ca < 2) continue;
      cap = std::max(cap, std::min(a + b, 2 * n - a - b));
    }

  const std::size_t m = f.members.size();
  std::atomic<int> global_max{0};
  std::atomic<bool> done{false};
  const std::size_t pairs = m * (m - 1) / 2;
  parallel_for(pairs, workers, [&](std::size_t lo, std::size_t hi) {
    int local = 0;
    // Unrank the linear pair index: pair p -> (i, j), i < j.
    for (std::size_t p = lo; p < hi; ++p) {
      if (done.load(std::memory_order_relaxed)) break;
      // i is the largest index with i*(i-1)/2 <= p when counting pairs (j,i)
      // with j < i; iterate rows instead to stay simple and branch-light.
      std::size_t i = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
      while (i * (i - 1) / 2 > p) --i;
      while ((i + 1) * i / 2 <= p) ++i;
      std::size_t j = p - i * (i - 1) / 2;
      int dist = delta(f.members[i], f.members[j], F);
      if (dist > local) {
        local = dist;
        if (local >= cap) {
          int cur = global_max.load();
          while (cur < local && !global_max.compare_exchange_weak(cur, local)) {
          }
          done.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
    int cur = global_max.load();
    while (cur < local && !global_max.compare_exchange_weak(cur, local)) {
    }
  });
  st.diameter = global_max.load();

  // m_F by direct scan; supp(F-perp) = {n - s : s in supp(F)}.
  const int d = st.diameter;
  std::vector<int> supp_perp;
  for (auto it = st.supp.rbegin(); it != st.supp.rend(); ++it) supp_perp.push_back(n - *it);
  auto fits = [d](const std::vector<int>& s, int x) {
    return s.front() >= x && s.back() <= x + d;
  };
  for (int x = 0; x <= n; ++x) {
    if (fits(st.supp, x)) {
      st.m_f = x;
      st.perp_attained = false;
      return st;
    }
    if (fits(supp_perp, x)) {
      st.m_f = x;
      st.perp_attained = true;
      return st;
    }
  }
  throw std::logic_error("no dimension window found");
}

Family family_perp(const Family& f, const FieldSpec& F) {
  std::vector<Subspace> out;
  out.reserve(f.members.size());
  for (const auto& m : f.members) out.push_back(sub::perp(m, F));
  Family g = Family::from_members(f.q, f.n, std::move(out));
  if (g.size() != f.size()) throw std::logic_error("perp is not injective on the family");
  return g;
}

bool cross_intersecting_check(const Family& f, int i, int j, int d, const FieldSpec& F) {
  auto [ilo, ihi] = f.slice_range(i);
  auto [jlo, jhi] = f.slice_range(j);
  if (ilo == ihi)
    throw std::invalid_argument("family has no members of dimension " + std::to_string(i));
  if (jlo == jhi)
    throw std::invalid_argument("family has no members of dimension " + std::to_string(j));
  const int need = (i + j - d + 1) / 2 + ((i + j - d) % 2 == 0 && (i + j - d) > 0 ? 0 : 0);
  // ceil((i+j-d)/2) for possibly negative numerator:
  const int num = i + j - d;
  const int s = num <= 0 ? 0 : (num + 1) / 2;
  (void)need;
  if (s <= 0) return true;
  for (std::size_t a = ilo; a < ihi; ++a)
    for (std::size_t b = jlo; b < jhi; ++b) {
      if (i == j && a == b) continue;
      if (sub::intersection_dim(f.members[a], f.members[b], F) < s) return false;
    }
  return true;
}

HammingLattice::HammingLattice(int n, const FieldSpec& F, std::uint64_t cap) {
  counting::BigCount total = sub::lattice_size(n, F.q);
  if (total > counting::BigCount(cap))
    throw std::runtime_error("lattice cap exceeded: " + total.str() + " subspaces > cap " +
                             std::to_string(cap));
  for (int k = 0; k <= n; ++k)
    for (auto& s : sub::enumerate_subspaces(n, k, F, cap)) verts_.push_back(std::move(s));
  adj_.assign(verts_.size(), {});

  // Covers: X < Y with dim Y = dim X + 1. Generate Y = X + <v> over all
  // vectors v and dedupe via the sorted vertex order.
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= static_cast<std::uint64_t>(F.q);
  for (std::size_t xi = 0; xi < verts_.size(); ++xi) {
    const Subspace& x = verts_[xi];
    if (x.k == n) continue;
    std::vector<int> ups;
    for (std::uint64_t code = 1; code < vectors; ++code) {
      sub::Vector v = sub::Vector::zero(n);
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        v.coords[static_cast<std::size_t>(i)] = static_cast<gf::Elem>(c % F.q);
        c /= F.q;
      }
      if (sub::contains(x, v, F)) continue;
      std::vector<std::vector<gf::Elem>> rows;
      for (int r = 0; r < x.k; ++r) {
        std::vector<gf::Elem> row(v.coords.size());
        for (int cc = 0; cc < n; ++cc) row[static_cast<std::size_t>(cc)] = x.at(r, cc);
        rows.push_back(std::move(row));
      }
      rows.push_back(v.coords);
      Subspace y = sub::rref(n, rows, F);
      ups.push_back(index_of(y));
    }
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (int yi : ups) {
      adj_[xi].push_back(yi);
      adj_[static_cast<std::size_t>(yi)].push_back(static_cast<int>(xi));
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int HammingLattice::index_of(const Subspace& s) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), s, sub::CanonicalLess{});
  if (it == verts_.end() || !(*it == s)) throw std::invalid_argument("subspace not in lattice");
  return static_cast<int>(it - verts_.begin());
}

std::vector<int> HammingLattice::distances_from(int src) const {
  std::vector<int> dist(verts_.size(), -1);
  std::deque<int> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

int HammingLattice::graph_distance(const Subspace& a, const Subspace& b) const {
  auto dist = distances_from(index_of(a));
  return dist[static_cast<std::size_t>(index_of(b))];
}

}  // namespace qiso::metric

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qiso::counting {

using BigCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// Number of k-dimensional subspaces of F_q^n (Gaussian binomial); 0 outside
// 0 <= k <= n. Computed by the q-Pascal recurrence with memoization.
BigCount qbinom(int n, int k, int q);

// Quotient-of-products form, kept as an independent cross-check route.
BigCount qbinom_quotient(int n, int k, int q);

BigCount pow_big(int q, long long e);

// |{B of dimension l : dim(A cap B) = j}| for a fixed k-dimensional A.
BigCount intersection_count(int n, int k, int l, int j, int q);

enum class Regime { CoveredSucc, CoveredLarge, Gap, Trivial };
std::string regime_name(Regime r);
Regime classify_regime(int n, int d);

struct TheoremBound {
  BigCount value;
  Regime regime;
  int t;
};

// Maximum size of a diameter-<= d family: the two-case formula with
// t = floor(d/2); for n <= d the full lattice count. In the gap regime the
// formula value is returned but flagged, since nothing is proved there.
TheoremBound theorem_bound(int n, int d, int q);

// Bound for an s-intersecting family of k-spaces in an ambient space of
// dimension n_ambient; requires n_ambient >= 2k - s.
BigCount ekr_bound(int n_ambient, int k, int s, int q);

// Per-layer cap for F(k) under diameter d with t = floor(d/2); callers must
// ensure the hypothesis n >= k + t themselves (the auditor reports it).
BigCount slice_bound(int n, int k, int t, int q);

// k < t leaves the layer unconstrained.
bool slice_bound_applies(int k, int t);

// Count of t-spaces meeting a fixed M-dimensional subspace nontrivially.
BigCount layer_t_bound(int n, int t, int M, int q);

// sum_{k=m}^{floor(n/2)} [n-k+t, t] / [n, t]; requires m >= t + 1.
ExactRational tail_sum_first(int n, int t, int m, int q);

// sum_{k=floor(n/2)+1}^{floor((n+d)/2)} [k+t, t] / [n, t]; requires n > 2d
// and the side condition floor((n+d)/2) + t < n.
ExactRational tail_sum_second(int n, int d, int q);

struct PartitionCheck {
  int k;
  BigCount pk;
  bool holds;  // p(k) * 2^k <= 3^k
};

// Partition numbers by the pentagonal-number recurrence, with the
// (3/2)^k comparison done in exact integers.
std::vector<PartitionCheck> partition_audit(int kmax);
std::vector<BigCount> partition_numbers(int kmax);

// prod_{i=1}^{t} (1 - 2^-(1+i)), exact; 21/32 at t = 2.
ExactRational product_audit(int t);

// Rigorous lower bound on prod_{i>=1} (1 - 2^-i): the truncated product at
// depth N times the Weierstrass tail correction (1 - 2^-N).
ExactRational binary_euler_product_lower(int N);

// qbinom(n,1) > sum_{i=1}^{n-1} qbinom(i,1), the chain inequality behind the
// d = 2 and d = 3 cases.
bool line_sum_inequality(int n, int q);

struct BoundReport {
  int q = 0, n = 0, d = 0, t = 0;
  BigCount bound;
  std::string regime;
  std::map<int, BigCount> layer_caps;
  // Named intermediates in pipeline order; every value is exact.
  std::vector<std::pair<std::string, ExactRational>> audit;
  bool pass = false;
  std::vector<std::string> violations;
};

// Recomputes the d >= 4, n > 2d inequality pipeline in exact rationals:
// both tail sums against 1/(q^t - 1), the layer-t product certificate, the
// (c1, c2) constants and the assembled strict comparison against the bound.
BoundReport layer_bound_audit(int n, int d, int q);

}  // namespace qiso::counting

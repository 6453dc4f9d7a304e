#include "qiso/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qiso::counting {

namespace {

// Per-q triangle of q-Pascal rows, grown on demand.
struct QbinomCache {
  std::mutex mu;
  std::map<int, std::vector<std::vector<BigCount>>> rows;
};

QbinomCache& qbinom_cache() {
  static QbinomCache c;
  return c;
}

ExactRational ratio(const BigCount& num, const BigCount& den) {
  return ExactRational(num, den);
}

}  // namespace

BigCount qbinom(int n, int k, int q) {
  if (q < 2) throw std::invalid_argument("qbinom requires q >= 2");
  if (k < 0 || n < 0 || k > n) return 0;
  QbinomCache& c = qbinom_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& tri = c.rows[q];
  if (static_cast<int>(tri.size()) <= n) {
    if (tri.empty()) tri.push_back({BigCount(1)});
    BigCount qk_table_unused;
    while (static_cast<int>(tri.size()) <= n) {
      int m = static_cast<int>(tri.size());
      const auto& prev = tri.back();
      std::vector<BigCount> row(m + 1);
      row[0] = 1;
      row[m] = 1;
      BigCount qk = 1;
      for (int j = 1; j < m; ++j) {
        qk *= q;  // q^j
        row[j] = prev[j - 1] + qk * prev[j];
      }
      tri.push_back(std::move(row));
    }
  }
  return tri[n][k];
}

BigCount qbinom_quotient(int n, int k, int q) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigCount num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow_big(q, n - i) - 1;
    den *= pow_big(q, k - i) - 1;
  }
  BigCount quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("qbinom quotient is not an integer");
  return quot;
}

BigCount pow_big(int q, long long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BigCount r = 1, b = q;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigCount intersection_count(int n, int k, int l, int j, int q) {
  if (j < 0 || j > std::min(k, l)) return 0;
  return pow_big(q, static_cast<long long>(k - j) * (l - j)) * qbinom(n - k, l - j, q) *
         qbinom(k, j, q);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::CoveredSucc: return "n=d+1";
    case Regime::CoveredLarge: return "n>2d";
    case Regime::Gap: return "gap";
    case Regime::Trivial: return "trivial";
  }
  return "?";
}

Regime classify_regime(int n, int d) {
  if (n <= d) return Regime::Trivial;
  if (n == d + 1) return Regime::CoveredSucc;
  if (n > 2 * d) return Regime::CoveredLarge;
  return Regime::Gap;
}

TheoremBound theorem_bound(int n, int d, int q) {
  if (n < 1 || d < 0) throw std::invalid_argument("theorem_bound requires n >= 1, d >= 0");
  TheoremBound out;
  out.regime = classify_regime(n, d);
  out.t = d / 2;
  if (out.regime == Regime::Trivial) {
    BigCount total = 0;
    for (int i = 0; i <= n; ++i) total += qbinom(n, i, q);
    out.value = total;
    return out;
  }
  BigCount v = 0;
  for (int i = 0; i <= out.t; ++i) v += qbinom(n, i, q);
  if (d % 2 == 1) v += qbinom(n - 1, out.t, q);
  out.value = v;
  return out;
}

BigCount ekr_bound(int n_ambient, int k, int s, int q) {
  if (n_ambient < 2 * k - s)
    throw std::invalid_argument("intersecting-family bound requires n >= 2k - s (got n=" +
                                std::to_string(n_ambient) + ", k=" + std::to_string(k) +
                                ", s=" + std::to_string(s) + ")");
  return std::max(qbinom(n_ambient - s, k - s, q), qbinom(2 * k - s, k - s, q));
}

bool slice_bound_applies(int k, int t) { return k >= t; }

BigCount slice_bound(int n, int k, int t, int q) {
  if (!slice_bound_applies(k, t)) return qbinom(n, k, q);
  return std::max(qbinom(n - k + t, t, q), qbinom(k + t, t, q));
}

BigCount layer_t_bound(int n, int t, int M, int q) {
  if (M < 0 || M > n) throw std::invalid_argument("layer_t_bound requires 0 <= M <= n");
  BigCount v = qbinom(n, t, q) - pow_big(q, static_cast<long long>(M) * t) * qbinom(n - M, t, q);
  if (v < 0) throw std::logic_error("layer_t_bound is negative");
  return v;
}

ExactRational tail_sum_first(int n, int t, int m, int q) {
  if (m < t + 1) throw std::invalid_argument("tail_sum_first requires m >= t + 1");
  BigCount den = qbinom(n, t, q);
  BigCount num = 0;
  for (int k = m; k <= n / 2; ++k) num += qbinom(n - k + t, t, q);
  return ratio(num, den);
}

ExactRational tail_sum_second(int n, int d, int q) {
  if (n <= 2 * d) throw std::invalid_argument("tail_sum_second requires n > 2d");
  int t = d / 2;
  if ((n + d) / 2 + t >= n)
    throw std::invalid_argument("side condition floor((n+d)/2) + t < n fails at n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  BigCount den = qbinom(n, t, q);
  BigCount num = 0;
  for (int k = n / 2 + 1; k <= (n + d) / 2; ++k) num += qbinom(k + t, t, q);
  return ratio(num, den);
}

std::vector<BigCount> partition_numbers(int kmax) {
  std::vector<BigCount> p(kmax + 1);
  p[0] = 1;
  for (int m = 1; m <= kmax; ++m) {
    BigCount acc = 0;
    for (int j = 1;; ++j) {
      long long g1 = static_cast<long long>(j) * (3 * j - 1) / 2;
      long long g2 = static_cast<long long>(j) * (3 * j + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigCount term = 0;
      if (g1 <= m) term += p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[m] = acc;
  }
  return p;
}

std::vector<PartitionCheck> partition_audit(int kmax) {
  if (kmax < 1) throw std::invalid_argument("partition_audit requires kmax >= 1");
  auto p = partition_numbers(kmax);
  std::vector<PartitionCheck> out;
  out.reserve(kmax);
  for (int k = 1; k <= kmax; ++k)
    out.push_back({k, p[k], p[k] * pow_big(2, k) <= pow_big(3, k)});
  return out;
}

ExactRational product_audit(int t) {
  if (t < 2) throw std::invalid_argument("product_audit requires t >= 2");
  ExactRational prod = 1;
  for (int i = 1; i <= t; ++i) {
    BigCount den = pow_big(2, i + 1);
    prod *= ratio(den - 1, den);
  }
  return prod;
}

ExactRational binary_euler_product_lower(int N) {
  if (N < 1) throw std::invalid_argument("depth must be positive");
  ExactRational prod = 1;
  for (int i = 1; i <= N; ++i) {
    BigCount den = pow_big(2, i);
    prod *= ratio(den - 1, den);
  }
  BigCount den = pow_big(2, N);
  prod *= ratio(den - 1, den);
  return prod;
}

bool line_sum_inequality(int n, int q) {
  BigCount sum = 0;
  for (int i = 1; i < n; ++i) sum += qbinom(i, 1, q);
  return qbinom(n, 1, q) > sum;
}

BoundReport layer_bound_audit(int n, int d, int q) {
  if (d < 4 || n <= 2 * d)
    throw std::invalid_argument("layer_bound_audit is outside its regime (needs d >= 4, n > 2d)");
  BoundReport rep;
  rep.q = q;
  rep.n = n;
  rep.d = d;
  rep.t = d / 2;
  const int t = rep.t;
  TheoremBound tb = theorem_bound(n, d, q);
  rep.bound = tb.value;
  rep.regime = regime_name(tb.regime);

  auto fail = [&rep](const std::string& what) { rep.violations.push_back(what); };

  const BigCount qnt = qbinom(n, t, q);
  const ExactRational small_target = ratio(1, pow_big(q, t) - 1);

  // m >= t+1 branch: both tail sums strictly under 1/(q^t - 1).
  ExactRational tail1 = tail_sum_first(n, t, t + 1, q);
  ExactRational tail2 = tail_sum_second(n, d, q);
  rep.audit.emplace_back("tail_first", tail1);
  rep.audit.emplace_back("tail_second", tail2);
  rep.audit.emplace_back("tail_target", small_target);
  if (!(tail1 < small_target)) fail("tail_first");
  if (!(tail2 < small_target)) fail("tail_second");
  ExactRational branch1 = (tail1 + tail2) * ExactRational(qnt);
  ExactRational branch1_cap = 2 * small_target * ExactRational(qnt);
  rep.audit.emplace_back("branch1_total", branch1);
  rep.audit.emplace_back("branch1_cap", branch1_cap);
  rep.audit.emplace_back("branch1_margin", branch1_cap - branch1);
  if (!(branch1 < branch1_cap)) fail("branch1");
  // The branch must also land under the theorem bound itself.
  ExactRational bound_r(rep.bound);
  rep.audit.emplace_back("branch1_vs_bound_margin", bound_r - branch1_cap);
  if (!(branch1_cap <= bound_r)) fail("branch1_vs_bound");

  // m <= t branch. Layer-t product certificate: the removed fraction of
  // [n, t] is at least prod_{i=1}^{t} (1 - q^-(1+i)).
  ExactRational removed = 1;
  for (int i = 1; i <= t; ++i) {
    BigCount den = pow_big(q, 1 + i);
    removed *= ratio(den - 1, den);
  }
  ExactRational c1_actual = 1 - removed;
  const bool small_case = (q == 2 && t == 2);
  ExactRational c1 = small_case ? ExactRational(11, 32) : ExactRational(1, 2);
  rep.audit.emplace_back("c1_actual", c1_actual);
  rep.audit.emplace_back("c1", c1);
  if (!(c1_actual <= c1)) fail("c1");

  // Upper-layer mass: the exact tails, and additionally the q = t = 2
  // geometric multiset bound (two copies of q^-(t r), top d terms).
  ExactRational c2_actual = tail1 + tail2;
  ExactRational c2 = small_case ? ExactRational(41, 64) : ExactRational(2, 7);
  rep.audit.emplace_back("c2_actual", c2_actual);
  if (small_case) {
    ExactRational multiset = 0;
    int terms = d;  // number of summands: M - t <= m + d - t <= d
    int r = 1;
    int taken = 0;
    while (taken < terms) {
      ExactRational term = ratio(1, pow_big(q, static_cast<long long>(t) * r));
      multiset += term;
      ++taken;
      if (taken < terms) {
        multiset += term;
        ++taken;
      }
      ++r;
    }
    rep.audit.emplace_back("c2_multiset", multiset);
    if (!(multiset <= c2)) fail("c2_multiset");
  } else {
    ExactRational two_over = 2 * small_target;
    rep.audit.emplace_back("c2_tail_cap", two_over);
    if (!(two_over <= c2)) fail("c2_tail_cap");
  }
  rep.audit.emplace_back("c2", c2);
  if (!(c2_actual <= c2)) fail("c2");

  // EKR hypothesis n >= k + t at every slice use (k <= t + d in this branch).
  for (int k = t; k <= std::min(n, t + d); ++k)
    if (n < k + t) fail("ekr_hypothesis_k" + std::to_string(k));

  BigCount low = 0;
  for (int i = 0; i < t; ++i) low += qbinom(n, i, q);
  ExactRational branch2 = ExactRational(low) + (c1 + c2) * ExactRational(qnt);
  BigCount even_bound = 0;
  for (int i = 0; i <= t; ++i) even_bound += qbinom(n, i, q);
  rep.audit.emplace_back("branch2_total", branch2);
  rep.audit.emplace_back("branch2_cap", ExactRational(even_bound));
  rep.audit.emplace_back("branch2_margin", ExactRational(even_bound) - branch2);
  if (!(branch2 < ExactRational(even_bound))) fail("branch2");
  rep.audit.emplace_back("c1_plus_c2", c1 + c2);
  if (!(c1 + c2 < 1)) fail("c1_plus_c2");

  for (int k = 0; k <= std::min(n, t + d); ++k) {
    BigCount cap = qbinom(n, k, q);
    if (slice_bound_applies(k, t) && n >= k + t) cap = std::min(cap, slice_bound(n, k, t, q));
    rep.layer_caps[k] = cap;
  }

  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace qiso::counting

#include "qiso/gf.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qiso::gf {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as little-endian coefficient vectors.
std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// Remainder of a by monic m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  a = poly_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int lead = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

// Trial factorization: m (monic, degree e) is irreducible iff no monic
// divisor of degree 1..e/2 leaves remainder zero.
bool poly_irreducible(const std::vector<int>& m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  if (e <= 1) return e == 1;
  for (int dd = 1; dd <= e / 2; ++dd) {
    // All monic polynomials of degree dd: p^dd choices of lower coefficients.
    int total = 1;
    for (int i = 0; i < dd; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
      std::vector<int> div(dd + 1, 0);
      int c = code;
      for (int i = 0; i < dd; ++i) {
        div[i] = c % p;
        c /= p;
      }
      div[dd] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> index_to_poly(int idx, int p, int e) {
  std::vector<int> c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return poly_trim(std::move(c));
}

int poly_to_index(const std::vector<int>& a, int p) {
  int idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

struct FieldParams {
  int p, e;
  std::vector<int> modulus;
};

const std::map<int, FieldParams>& supported() {
  static const std::map<int, FieldParams> table = {
      {2, {2, 1, {0, 1}}},     {3, {3, 1, {0, 1}}},     {4, {2, 2, {1, 1, 1}}},
      {5, {5, 1, {0, 1}}},     {7, {7, 1, {0, 1}}},     {8, {2, 3, {1, 1, 0, 1}}},
      {9, {3, 2, {2, 2, 1}}},
  };
  return table;
}

}  // namespace

FieldSpec field_make(int q) {
  auto it = supported().find(q);
  if (it == supported().end())
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                "; supported orders are 2, 3, 4, 5, 7, 8, 9");
  const FieldParams& fp = it->second;
  if (!is_prime(fp.p)) throw std::logic_error("field characteristic is not prime");
  int pe = 1;
  for (int i = 0; i < fp.e; ++i) pe *= fp.p;
  if (pe != q) throw std::logic_error("field order is not p^e");
  if (!poly_irreducible(fp.modulus, fp.p))
    throw std::logic_error("field modulus is reducible over F_p");

  FieldSpec F;
  F.q = q;
  F.p = fp.p;
  F.e = fp.e;
  F.modulus = fp.modulus;

  for (int a = 0; a < q; ++a) {
    auto pa = index_to_poly(a, fp.p, fp.e);
    std::vector<int> na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (fp.p - pa[i]) % fp.p;
    F.neg_[a] = static_cast<Elem>(poly_to_index(poly_trim(std::move(na)), fp.p));
    for (int b = 0; b < q; ++b) {
      auto pb = index_to_poly(b, fp.p, fp.e);
      std::vector<int> s(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = x % fp.p;
      }
      F.add_[a][b] = static_cast<Elem>(poly_to_index(poly_trim(std::move(s)), fp.p));
      F.mul_[a][b] = static_cast<Elem>(
          poly_to_index(poly_mod(poly_mul(pa, pb, fp.p), fp.modulus, fp.p), fp.p));
    }
  }

  F.inv_[0] = 0;  // sentinel; inv(0) is rejected at the accessor
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (F.mul_[a][b] == 1) {
        F.inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
    if (F.inv_[a] == 0) throw std::logic_error("missing multiplicative inverse");
  }
  return F;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q));
  return inv_[a];
}

const FieldSpec& FieldSpec::get(int q) {
  static const std::map<int, FieldSpec> cache = [] {
    std::map<int, FieldSpec> m;
    for (const auto& [order, params] : supported()) {
      (void)params;
      m.emplace(order, field_make(order));
    }
    return m;
  }();
  auto it = cache.find(q);
  if (it == cache.end())
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                "; supported orders are 2, 3, 4, 5, 7, 8, 9");
  return it->second;
}

Elem multiplicative_generator(const FieldSpec& F) {
  for (int g = 1; g < F.q; ++g) {
    int order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = F.mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == F.q - 1) return static_cast<Elem>(g);
  }
  throw std::logic_error("multiplicative group has no generator");
}

}  // namespace qiso::gf

#include "qiso/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qiso/kernels.hpp"

namespace qiso::sub {

namespace {

void check_same_ambient(int na, int nb, const char* op) {
  if (na != nb)
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ (" +
                                std::to_string(na) + " vs " + std::to_string(nb) + ")");
}

Subspace from_canonical_rows(int n, std::vector<std::vector<Elem>> rows, std::vector<int> pivots) {
  Subspace s;
  s.n = n;
  s.k = static_cast<int>(rows.size());
  s.pivots = std::move(pivots);
  s.rows.reserve(static_cast<std::size_t>(s.k) * n);
  for (auto& r : rows) s.rows.insert(s.rows.end(), r.begin(), r.end());
  return s;
}

std::vector<std::vector<Elem>> split_rows(const Subspace& s) {
  std::vector<std::vector<Elem>> rows(s.k);
  for (int i = 0; i < s.k; ++i)
    rows[i].assign(s.rows.begin() + static_cast<std::size_t>(i) * s.n,
                   s.rows.begin() + static_cast<std::size_t>(i + 1) * s.n);
  return rows;
}

}  // namespace

Vector Vector::unit(int n, int i) {
  Vector v = zero(n);
  v.coords[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (Elem c : coords)
    if (c) return false;
  return true;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.pivots != b.pivots) return a.pivots < b.pivots;
  return a.rows < b.rows;
}

Subspace zero_subspace(int n) {
  Subspace s;
  s.n = n;
  s.k = 0;
  return s;
}

Subspace full_space(int n) {
  Subspace s;
  s.n = n;
  s.k = n;
  s.rows.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    s.rows[static_cast<std::size_t>(i) * n + i] = 1;
    s.pivots.push_back(i);
  }
  return s;
}

namespace detail {

std::vector<std::vector<Elem>> rref_bytes(std::vector<std::vector<Elem>> rows, int n,
                                          const FieldSpec& F, std::vector<int>* pivots) {
  const int m = static_cast<int>(rows.size());
  int r = 0;
  std::vector<int> piv;
  for (int col = 0; col < n && r < m; ++col) {
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][col]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Elem scale = F.inv(rows[r][col]);
    if (scale != 1)
      for (int c = col; c < n; ++c) rows[r][c] = F.mul(rows[r][c], scale);
    for (int i = 0; i < m; ++i) {
      if (i == r || !rows[i][col]) continue;
      Elem f = rows[i][col];
      for (int c = col; c < n; ++c) rows[i][c] = F.sub(rows[i][c], F.mul(f, rows[r][c]));
    }
    piv.push_back(col);
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  if (pivots) *pivots = std::move(piv);
  return rows;
}

std::vector<std::vector<Elem>> rref_packed_q2(const std::vector<std::vector<Elem>>& in, int n,
                                              std::vector<int>* pivots) {
  const int m = static_cast<int>(in.size());
  const std::size_t w = static_cast<std::size_t>((n + 63) / 64);
  std::vector<kern::Word> mat(static_cast<std::size_t>(m) * w, 0);
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c)
      if (in[i][c]) mat[i * w + (c >> 6)] |= kern::Word{1} << (c & 63);

  int r = 0;
  std::vector<int> piv;
  const auto& ops = kern::active();
  for (int col = 0; col < n && r < m; ++col) {
    const std::size_t wi = static_cast<std::size_t>(col) >> 6;
    const kern::Word bit = kern::Word{1} << (col & 63);
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (mat[i * w + wi] & bit) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (std::size_t j = 0; j < w; ++j) std::swap(mat[r * w + j], mat[sel * w + j]);
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      if (mat[i * w + wi] & bit) ops.xor_assign(&mat[i * w], &mat[r * w], w);
    }
    piv.push_back(col);
    ++r;
  }

  std::vector<std::vector<Elem>> out(static_cast<std::size_t>(r), std::vector<Elem>(n, 0));
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < n; ++c)
      if (mat[i * w + (c >> 6)] & (kern::Word{1} << (c & 63))) out[i][c] = 1;
  if (pivots) *pivots = std::move(piv);
  return out;
}

}  // namespace detail

Subspace rref(int n, const std::vector<std::vector<Elem>>& in_rows, const FieldSpec& F) {
  for (const auto& r : in_rows)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("rref: row length differs from ambient dimension");
  std::vector<int> piv;
  std::vector<std::vector<Elem>> rows =
      F.q == 2 ? detail::rref_packed_q2(in_rows, n, &piv)
               : detail::rref_bytes(in_rows, n, F, &piv);
  return from_canonical_rows(n, std::move(rows), std::move(piv));
}

Subspace sum(const Subspace& a, const Subspace& b, const FieldSpec& F) {
  check_same_ambient(a.n, b.n, "sum");
  auto rows = split_rows(a);
  auto rb = split_rows(b);
  rows.insert(rows.end(), rb.begin(), rb.end());
  return rref(a.n, rows, F);
}

Subspace intersect(const Subspace& a, const Subspace& b, const FieldSpec& F) {
  check_same_ambient(a.n, b.n, "intersect");
  const int n = a.n;
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half span A cap B on
  // the right.
  std::vector<std::vector<Elem>> stacked;
  stacked.reserve(static_cast<std::size_t>(a.k + b.k));
  for (int i = 0; i < a.k; ++i) {
    std::vector<Elem> row(static_cast<std::size_t>(2) * n, 0);
    for (int c = 0; c < n; ++c) {
      row[c] = a.at(i, c);
      row[n + c] = a.at(i, c);
    }
    stacked.push_back(std::move(row));
  }
  for (int i = 0; i < b.k; ++i) {
    std::vector<Elem> row(static_cast<std::size_t>(2) * n, 0);
    for (int c = 0; c < n; ++c) row[c] = b.at(i, c);
    stacked.push_back(std::move(row));
  }
  auto reduced = F.q == 2 ? detail::rref_packed_q2(stacked, 2 * n, nullptr)
                          : detail::rref_bytes(std::move(stacked), 2 * n, F, nullptr);
  std::vector<std::vector<Elem>> inter_rows;
  for (const auto& row : reduced) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c)
      if (row[c]) {
        left_zero = false;
        break;
      }
    if (left_zero) inter_rows.emplace_back(row.begin() + n, row.end());
  }
  Subspace inter = rref(n, inter_rows, F);
  Subspace s = sum(a, b, F);
  if (s.k + inter.k != a.k + b.k)
    throw std::logic_error("dimension formula violated in intersect");
  return inter;
}

Subspace perp(const Subspace& a, const FieldSpec& F) {
  const int n = a.n;
  // Kernel of the basis matrix, read off the RREF: one generator per free
  // column f, with v[f] = 1 and v[p_i] = -a[i][f].
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : a.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Elem>> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Elem> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < a.k; ++i) v[static_cast<std::size_t>(a.pivots[i])] = F.neg(a.at(i, f));
    gens.push_back(std::move(v));
  }
  Subspace out = rref(n, gens, F);
  if (out.k != n - a.k) throw std::logic_error("perp dimension mismatch");
  return out;
}

bool contains(const Subspace& a, const Vector& v, const FieldSpec& F) {
  check_same_ambient(a.n, v.n, "contains");
  std::vector<Elem> w = v.coords;
  for (int i = 0; i < a.k; ++i) {
    Elem c = w[static_cast<std::size_t>(a.pivots[i])];
    if (!c) continue;
    for (int j = a.pivots[i]; j < a.n; ++j)
      w[static_cast<std::size_t>(j)] = F.sub(w[static_cast<std::size_t>(j)], F.mul(c, a.at(i, j)));
  }
  for (Elem x : w)
    if (x) return false;
  return true;
}

int stack_rank(const Subspace& a, const Subspace& b, const FieldSpec& F) {
  check_same_ambient(a.n, b.n, "stack_rank");
  const int n = a.n;
  if (F.q == 2) {
    const std::size_t w = static_cast<std::size_t>((n + 63) / 64);
    thread_local std::vector<kern::Word> mat;
    const int m = a.k + b.k;
    mat.assign(static_cast<std::size_t>(m) * w, 0);
    auto pack = [&](const Subspace& s, int base) {
      for (int i = 0; i < s.k; ++i)
        for (int c = 0; c < n; ++c)
          if (s.at(i, c)) mat[(base + i) * w + (c >> 6)] |= kern::Word{1} << (c & 63);
    };
    pack(a, 0);
    pack(b, a.k);
    const auto& ops = kern::active();
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
      const std::size_t wi = static_cast<std::size_t>(col) >> 6;
      const kern::Word bit = kern::Word{1} << (col & 63);
      int sel = -1;
      for (int i = r; i < m; ++i)
        if (mat[i * w + wi] & bit) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != r)
        for (std::size_t j = 0; j < w; ++j) std::swap(mat[r * w + j], mat[sel * w + j]);
      for (int i = r + 1; i < m; ++i)
        if (mat[i * w + wi] & bit) ops.xor_assign(&mat[i * w], &mat[r * w], w);
      ++r;
    }
    return r;
  }
  auto rows = split_rows(a);
  auto rb = split_rows(b);
  rows.insert(rows.end(), rb.begin(), rb.end());
  auto red = detail::rref_bytes(std::move(rows), n, F, nullptr);
  return static_cast<int>(red.size());
}

counting::BigCount lattice_size(int n, int q) {
  counting::BigCount total = 0;
  for (int k = 0; k <= n; ++k) total += counting::qbinom(n, k, q);
  return total;
}

void for_each_subspace(int n, int k, const FieldSpec& F, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& fn) {
  if (k < 0 || k > n) throw std::invalid_argument("for_each_subspace requires 0 <= k <= n");
  counting::BigCount predicted = counting::qbinom(n, k, F.q);
  if (predicted > counting::BigCount(cap))
    throw std::runtime_error("enumeration cap exceeded: qbinom(" + std::to_string(n) + "," +
                             std::to_string(k) + "," + std::to_string(F.q) + ") = " +
                             predicted.str() + " > cap " + std::to_string(cap));

  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;

  Subspace s;
  s.n = n;
  s.k = k;
  s.rows.assign(static_cast<std::size_t>(k) * n, 0);

  while (true) {
    // Free positions in row-major order for this pivot set.
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(i, c);

    std::fill(s.rows.begin(), s.rows.end(), 0);
    s.pivots = piv;
    for (int i = 0; i < k; ++i)
      s.rows[static_cast<std::size_t>(i) * n + piv[static_cast<std::size_t>(i)]] = 1;

    std::vector<Elem> vals(free_pos.size(), 0);
    while (true) {
      fn(s);
      // Odometer: last position fastest, so emission follows row-major
      // lexicographic order of the basis entries.
      std::size_t pos = vals.size();
      while (pos > 0) {
        --pos;
        if (vals[pos] + 1 < F.q) {
          ++vals[pos];
          s.rows[static_cast<std::size_t>(free_pos[pos].first) * n + free_pos[pos].second] =
              vals[pos];
          break;
        }
        vals[pos] = 0;
        s.rows[static_cast<std::size_t>(free_pos[pos].first) * n + free_pos[pos].second] = 0;
        if (pos == 0) {
          pos = SIZE_MAX;
          break;
        }
      }
      if (vals.empty() || pos == SIZE_MAX) break;
    }

    // Next pivot-column combination in lexicographic order.
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(int n, int k, const FieldSpec& F, std::uint64_t cap) {
  std::vector<Subspace> out;
  counting::BigCount predicted = counting::qbinom(n, k, F.q);
  if (predicted <= counting::BigCount(cap))
    out.reserve(static_cast<std::size_t>(static_cast<std::uint64_t>(predicted)));
  for_each_subspace(n, k, F, cap, [&out](const Subspace& s) { out.push_back(s); });
  return out;
}

std::string to_line(const Subspace& s) {
  if (s.k == 0) return "-";
  std::string out;
  out.reserve(static_cast<std::size_t>(s.k) * (s.n + 1));
  for (int i = 0; i < s.k; ++i) {
    if (i) out.push_back(';');
    for (int c = 0; c < s.n; ++c) out.push_back(static_cast<char>('0' + s.at(i, c)));
  }
  return out;
}

Subspace subspace_from_line(int n, const std::string& line, const FieldSpec& F) {
  if (line == "-" || line.empty()) return zero_subspace(n);
  std::vector<std::vector<Elem>> rows;
  std::stringstream ss(line);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    if (static_cast<int>(chunk.size()) != n)
      throw std::invalid_argument("subspace row '" + chunk + "' does not have " +
                                  std::to_string(n) + " digits");
    std::vector<Elem> row(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      char ch = chunk[static_cast<std::size_t>(c)];
      if (ch < '0' || ch >= '0' + F.q)
        throw std::invalid_argument(std::string("digit '") + ch + "' out of range for q=" +
                                    std::to_string(F.q));
      row[static_cast<std::size_t>(c)] = static_cast<Elem>(ch - '0');
    }
    rows.push_back(std::move(row));
  }
  return rref(n, rows, F);
}

}  // namespace qiso::sub

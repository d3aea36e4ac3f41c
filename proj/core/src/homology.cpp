#include "reeskit/homology.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace reeskit {

std::size_t OrderComplex::count(int k) const {
  if (k < -1 || k > dimension()) return 0;
  return flat_[static_cast<std::size_t>(k + 1)].size() / static_cast<std::size_t>(k + 1 == 0 ? 1 : k + 1);
}

std::size_t OrderComplex::total_faces() const {
  std::size_t s = 0;
  for (int k = -1; k <= dimension(); ++k) s += count(k);
  return s;
}

std::vector<std::size_t> OrderComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = -1; k <= dimension(); ++k) f.push_back(count(k));
  return f;
}

std::span<const Element> OrderComplex::face(int k, std::size_t i) const {
  if (i >= count(k)) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
  if (k == -1) return {};
  const std::size_t stride = static_cast<std::size_t>(k + 1);
  return std::span<const Element>(flat_[stride]).subspan(i * stride, stride);
}

std::vector<std::vector<Element>> OrderComplex::faces(int k) const {
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < count(k); ++i) {
    auto f = face(k, i);
    out.emplace_back(f.begin(), f.end());
  }
  return out;
}

std::optional<std::size_t> OrderComplex::find(std::span<const Element> f) const {
  const int k = static_cast<int>(f.size()) - 1;
  if (k > dimension()) return std::nullopt;
  if (k == -1) return 0;
  const std::size_t stride = f.size();
  const std::vector<Element>& data = flat_[stride];
  std::size_t lo = 0;
  std::size_t hi = data.size() / stride;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto* row = data.data() + mid * stride;
    if (std::lexicographical_compare(row, row + stride, f.begin(), f.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < data.size() / stride && std::equal(f.begin(), f.end(), data.data() + lo * stride)) return lo;
  return std::nullopt;
}

std::uint64_t count_faces(const FinitePoset& p) {
  constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > cap - b ? cap : a + b; };
  std::vector<std::uint64_t> ending(p.size(), 0);
  std::uint64_t total = 1;
  const auto& topo = p.topological_order();
  for (std::size_t i = 0; i < topo.size(); ++i) {
    const Element x = topo[i];
    std::uint64_t c = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (p.less(topo[j], x)) c = add(c, ending[topo[j]]);
    ending[x] = c;
    total = add(total, c);
  }
  return total;
}

OrderComplex order_complex(const FinitePoset& p, const HomologyBounds& bounds) {
  const std::uint64_t total = count_faces(p);
  if (total > bounds.max_faces)
    throw Error(ErrorCode::SizeBound, "order complex has " + std::to_string(total) +
                                          " faces, above the bound " + std::to_string(bounds.max_faces));
  const std::size_t n = p.size();
  const std::size_t words = (n + 63) / 64;
  // above[x]: elements with larger index comparable to x.
  std::vector<std::uint64_t> above(n * words, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (p.comparable(x, y)) above[x * words + y / 64] |= std::uint64_t{1} << (y % 64);

  OrderComplex c;
  c.flat_.push_back({0});  // one placeholder entry stands for the empty face
  std::vector<Element> chain;
  auto emit = [&]() {
    const std::size_t stride = chain.size();
    if (c.flat_.size() <= stride) c.flat_.resize(stride + 1);
    c.flat_[stride].insert(c.flat_[stride].end(), chain.begin(), chain.end());
  };
  auto descend = [&](auto&& self, const std::vector<std::uint64_t>& cand) -> void {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        const Element y = w * 64 + static_cast<std::size_t>(b);
        chain.push_back(y);
        emit();
        std::vector<std::uint64_t> next(words);
        bool any = false;
        for (std::size_t v = 0; v < words; ++v) {
          next[v] = cand[v] & above[y * words + v];
          any = any || next[v] != 0;
        }
        if (any) self(self, next);
        chain.pop_back();
      }
    }
  };
  std::vector<std::uint64_t> all(words, 0);
  for (Element x = 0; x < n; ++x) all[x / 64] |= std::uint64_t{1} << (x % 64);
  descend(descend, all);
  return c;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }

long long gcd_of(long long a, long long b) {
  if (a == std::numeric_limits<long long>::min() || b == std::numeric_limits<long long>::min()) throw Overflow{};
  return std::gcd(a, b);
}
Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

/// Boundary column of the i-th k-face; rows index the (k-1)-faces.
template <class T>
Column<T> boundary_column(const OrderComplex& c, int k, std::size_t i) {
  Column<T> col;
  auto f = c.face(k, i);
  if (k == 0) {
    col.emplace_back(0, T(1));
    return col;
  }
  std::vector<Element> sub(f.size() - 1);
  for (std::size_t drop = 0; drop < f.size(); ++drop) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (j != drop) sub[w++] = f[j];
    const auto row = c.find(sub);
    col.emplace_back(static_cast<std::uint32_t>(*row), T(drop % 2 == 0 ? 1 : -1));
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return col;
}

/// Coefficient arithmetic for column reduction.
struct PrimeField {
  long long p;
  long long norm(long long a) const { return ((a % p) + p) % p; }
  long long inv(long long a) const {
    long long r = 1;
    long long b = norm(a);
    for (long long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
    }
    return r;
  }
  /// target <- target - (a / b) * pivot, with a, b the low coefficients.
  void reduce(Column<long long>& target, const Column<long long>& pivot) const {
    const long long factor = norm(target.back().second * inv(pivot.back().second));
    Column<long long> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, norm(-factor * pivot[j].second));
        ++j;
      } else {
        const long long v = norm(target[i].second - factor * pivot[j].second);
        if (v != 0) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    target = std::move(out);
  }
  void prepare(Column<long long>& col) const {
    Column<long long> out;
    for (auto& [r, v] : col)
      if (norm(v) != 0) out.emplace_back(r, norm(v));
    col = std::move(out);
  }
};

/// Fraction-free column reduction over Z, which has the same rank as over Q.
template <class T>
struct RationalField {
  void reduce(Column<T>& target, const Column<T>& pivot) const {
    T a = target.back().second;
    T b = pivot.back().second;
    T s = 1;
    T u = a;
    if (b == T(1)) {
    } else if (b == T(-1)) {
      u = checked_mul(a, T(-1));
    } else {
      const T g = gcd_of(a, b);
      s = b / g;
      u = a / g;
    }
    Column<T> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    bool scaled = s != T(1);
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, scaled ? checked_mul(s, target[i].second) : target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, checked_sub(T(0), checked_mul(u, pivot[j].second)));
        ++j;
      } else {
        const T lhs = scaled ? checked_mul(s, target[i].second) : target[i].second;
        const T v = checked_sub(lhs, checked_mul(u, pivot[j].second));
        if (v != T(0)) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    if (scaled && !out.empty()) {
      T g = 0;
      for (const auto& e : out) g = gcd_of(g, e.second);
      if (g != T(1) && g != T(0))
        for (auto& e : out) e.second /= g;
    }
    target = std::move(out);
  }
  void prepare(Column<T>&) const {}
};

/// Ranks of all boundary maps, from the top dimension down, skipping the
/// columns known to reduce to zero because they are pivots one level up.
template <class T, class Field>
std::vector<std::size_t> boundary_ranks(const OrderComplex& c, const Field& field, int only = -2) {
  const int d = c.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(d + 1, 0)), 0);
  std::vector<char> cleared;
  for (int k = d; k >= 0; --k) {
    if (only != -2 && k != only) continue;
    const std::size_t rows = c.count(k - 1);
    std::vector<std::int64_t> pivot_of_row(rows, -1);
    std::vector<char> next_cleared(rows, 0);
    std::vector<Column<T>> reduced;
    const bool use_clearing = only == -2 && !cleared.empty();
    for (std::size_t j = 0; j < c.count(k); ++j) {
      if (use_clearing && cleared[j]) continue;
      Column<T> col = boundary_column<T>(c, k, j);
      field.prepare(col);
      while (!col.empty()) {
        const std::int64_t piv = pivot_of_row[col.back().first];
        if (piv < 0) break;
        field.reduce(col, reduced[static_cast<std::size_t>(piv)]);
      }
      if (col.empty()) continue;
      pivot_of_row[col.back().first] = static_cast<std::int64_t>(reduced.size());
      next_cleared[col.back().first] = 1;
      reduced.push_back(std::move(col));
    }
    rank[static_cast<std::size_t>(k)] = reduced.size();
    cleared = std::move(next_cleared);
  }
  return rank;
}

std::vector<std::size_t> all_ranks(const OrderComplex& c, unsigned prime) {
  if (prime != 0) return boundary_ranks<long long>(c, PrimeField{static_cast<long long>(prime)});
  try {
    return boundary_ranks<long long>(c, RationalField<long long>{});
  } catch (const Overflow&) {
    return boundary_ranks<Integer>(c, RationalField<Integer>{});
  }
}

std::vector<std::uint64_t> betti_from_ranks(const OrderComplex& c, const std::vector<std::size_t>& rank) {
  const int d = c.dimension();
  std::vector<std::uint64_t> b;
  for (int k = -1; k <= d; ++k) {
    const std::size_t r_k = k >= 0 ? rank[static_cast<std::size_t>(k)] : 0;
    const std::size_t r_up = k + 1 <= d ? rank[static_cast<std::size_t>(k + 1)] : 0;
    b.push_back(c.count(k) - r_k - r_up);
  }
  return b;
}

/// Torsion of the cokernel of the boundary map from (k+1)-faces to k-faces.
std::vector<Integer> boundary_torsion(const OrderComplex& c, int k) {
  const std::size_t ncols = c.count(k + 1);
  const std::size_t nrows = c.count(k);
  std::vector<std::map<std::uint32_t, Integer>> cols(ncols);
  std::vector<std::set<std::uint32_t>> rows(nrows);
  for (std::size_t j = 0; j < ncols; ++j)
    for (auto& [r, v] : boundary_column<long long>(c, k + 1, j)) {
      cols[j][r] = v;
      rows[r].insert(static_cast<std::uint32_t>(j));
    }
  std::vector<char> col_alive(ncols, 1);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!col_alive[j]) continue;
      std::optional<std::uint32_t> unit_row;
      for (const auto& [r, v] : cols[j])
        if (v == 1 || v == -1) {
          if (!unit_row || rows[r].size() < rows[*unit_row].size()) unit_row = r;
        }
      if (!unit_row) continue;
      const std::uint32_t r = *unit_row;
      const Integer u = cols[j][r];
      const std::vector<std::uint32_t> others(rows[r].begin(), rows[r].end());
      for (std::uint32_t o : others) {
        if (o == j) continue;
        const Integer factor = cols[o][r] * u;
        for (const auto& [rr, v] : cols[j]) {
          Integer& target = cols[o][rr];
          target -= factor * v;
          if (target == 0) {
            cols[o].erase(rr);
            rows[rr].erase(o);
          } else {
            rows[rr].insert(o);
          }
        }
      }
      for (const auto& [rr, v] : cols[j]) rows[rr].erase(static_cast<std::uint32_t>(j));
      cols[j].clear();
      col_alive[j] = 0;
      progress = true;
    }
  }
  std::vector<std::size_t> live_cols;
  std::map<std::uint32_t, std::size_t> live_rows;
  for (std::size_t j = 0; j < ncols; ++j)
    if (col_alive[j] && !cols[j].empty()) {
      live_cols.push_back(j);
      for (const auto& e : cols[j]) live_rows.emplace(e.first, 0);
    }
  if (live_cols.empty()) return {};
  std::size_t idx = 0;
  for (auto& [r, i] : live_rows) i = idx++;
  std::vector<std::vector<Integer>> dense(live_rows.size(), std::vector<Integer>(live_cols.size(), 0));
  for (std::size_t cj = 0; cj < live_cols.size(); ++cj)
    for (const auto& [r, v] : cols[live_cols[cj]]) dense[live_rows[r]][cj] = v;
  std::vector<Integer> torsion;
  for (const Integer& e : smith_diagonal(std::move(dense)))
    if (e > 1) torsion.push_back(e);
  return torsion;
}

}  // namespace

std::size_t boundary_rank(const OrderComplex& c, int k, unsigned prime) {
  if (k < 0 || k > c.dimension()) return 0;
  if (prime != 0) return boundary_ranks<long long>(c, PrimeField{static_cast<long long>(prime)}, k)[static_cast<std::size_t>(k)];
  try {
    return boundary_ranks<long long>(c, RationalField<long long>{}, k)[static_cast<std::size_t>(k)];
  } catch (const Overflow&) {
    return boundary_ranks<Integer>(c, RationalField<Integer>{}, k)[static_cast<std::size_t>(k)];
  }
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const std::size_t R = m.size();
  const std::size_t C = R == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second]))) best = {i, j};
      if (!best) return diag;
      std::swap(m[t], m[best->first]);
      for (auto& row : m) std::swap(row[t], row[best->second]);
      const Integer p = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        const Integer q = m[i][t] / p;
        if (q != 0)
          for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        const Integer q = m[t][j] / p;
        if (q != 0)
          for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < R && !bad_row; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m[i][j] % p != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      for (std::size_t j = t; j < C; ++j) m[t][j] += m[*bad_row][j];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

std::uint64_t BettiVector::at(int k) const {
  const long long i = k + 1;
  if (i < 0 || i >= static_cast<long long>(rational.size())) return 0;
  return rational[static_cast<std::size_t>(i)];
}

std::optional<int> BettiVector::top_nonzero() const {
  for (std::size_t i = rational.size(); i > 0; --i)
    if (rational[i - 1] != 0) return static_cast<int>(i) - 2;
  return std::nullopt;
}

long long BettiVector::alternating_sum() const {
  long long s = 0;
  for (std::size_t i = 0; i < rational.size(); ++i) {
    const long long v = static_cast<long long>(rational[i]);
    s += (i % 2 == 0) ? -v : v;
  }
  return s;
}

BettiVector betti(const FinitePoset& p, const BettiOptions& options) {
  const OrderComplex c = order_complex(p, options.bounds);
  BettiVector b;
  if (options.field_ranks) {
    auto f2 = std::async(std::launch::async, [&c] { return all_ranks(c, 2); });
    auto f3 = std::async(std::launch::async, [&c] { return all_ranks(c, 3); });
    b.rational = betti_from_ranks(c, all_ranks(c, 0));
    b.mod2 = betti_from_ranks(c, f2.get());
    b.mod3 = betti_from_ranks(c, f3.get());
  } else {
    b.rational = betti_from_ranks(c, all_ranks(c, 0));
  }
  if (options.smith) {
    std::vector<std::vector<Integer>> torsion;
    for (int k = -1; k <= c.dimension(); ++k)
      torsion.push_back(k + 1 <= c.dimension() ? boundary_torsion(c, k) : std::vector<Integer>{});
    b.torsion = std::move(torsion);
  }
  return b;
}

long long reduced_euler(const FinitePoset& p, const HomologyBounds& bounds) {
  const std::uint64_t total = count_faces(p);
  if (total > bounds.max_faces)
    throw Error(ErrorCode::SizeBound, "order complex has " + std::to_string(total) +
                                          " faces, above the bound " + std::to_string(bounds.max_faces));
  // Signed chain count: each chain of k + 1 elements contributes (-1)^k.
  std::vector<long long> ending(p.size(), 0);
  long long total_signed = -1;
  const auto& topo = p.topological_order();
  for (std::size_t i = 0; i < topo.size(); ++i) {
    const Element x = topo[i];
    long long s = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (p.less(topo[j], x)) s -= ending[topo[j]];
    ending[x] = s;
    total_signed += s;
  }
  return total_signed;
}

SphericityVerdict is_spherical(const FinitePoset& p, int expected_dim, const HomologyBounds& bounds) {
  SphericityVerdict v;
  v.betti = betti(p, BettiOptions{bounds, true, false});
  for (int k = -1; k <= static_cast<int>(v.betti.rational.size()) - 2; ++k)
    if (k != expected_dim && v.betti.at(k) != 0) {
      v.reason = "nonzero reduced homology in dimension " + std::to_string(k);
      return v;
    }
  if (*v.betti.mod2 != v.betti.rational) {
    v.reason = "mod-2 Betti numbers differ from the rational ones";
    return v;
  }
  if (*v.betti.mod3 != v.betti.rational) {
    v.reason = "mod-3 Betti numbers differ from the rational ones";
    return v;
  }
  v.ok = true;
  return v;
}

}  // namespace reeskit

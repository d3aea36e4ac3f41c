#include "reeskit/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <unordered_map>

namespace reeskit {

namespace {

std::string join_letters(const std::vector<unsigned>& letters, unsigned alphabet, char sep) {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i != 0 && alphabet > 9) s += sep;
    s += std::to_string(letters[i]);
  }
  return s;
}

void require_within(const Integer& count, std::size_t bound, const char* what) {
  if (count > bound)
    throw Error(ErrorCode::BoundExceeded, std::string(what) + " has " + count.str() +
                                              " elements, bound is " + std::to_string(bound));
}

}  // namespace

PrimePower PrimePower::of(unsigned q) {
  if (q < 2) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  unsigned p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned e = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return PrimePower{q, p, e};
}

FiniteField::FiniteField(PrimePower q) : q_(q) {
  const unsigned n = q.q;
  const unsigned p = q.p;
  const unsigned e = q.e;
  auto digits = [&](unsigned a) {
    std::vector<unsigned> d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned a = 0;
    for (unsigned i = e; i-- > 0;) a = a * p + d[i];
    return a;
  };
  add_.assign(n * n, 0);
  neg_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    auto da = digits(a);
    std::vector<unsigned> dn(e);
    for (unsigned i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = encode(dn);
    for (unsigned b = 0; b < n; ++b) {
      auto db = digits(b);
      std::vector<unsigned> ds(e);
      for (unsigned i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * n + b] = encode(ds);
    }
  }

  // Low-order coefficients of the monic modulus, i.e. x^e = -sum c_i x^i.
  auto build_mul = [&](const std::vector<unsigned>& modulus) {
    std::vector<unsigned> table(n * n, 0);
    for (unsigned a = 0; a < n; ++a) {
      auto da = digits(a);
      for (unsigned b = 0; b < n; ++b) {
        auto db = digits(b);
        std::vector<unsigned> prod(2 * e, 0);
        for (unsigned i = 0; i < e; ++i)
          for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned k = 2 * e; k-- > e;) {
          unsigned c = prod[k];
          if (c == 0) continue;
          prod[k] = 0;
          for (unsigned i = 0; i < e; ++i)
            prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
        }
        prod.resize(e);
        table[a * n + b] = encode(prod);
      }
    }
    return table;
  };
  auto is_field = [&](const std::vector<unsigned>& table) {
    for (unsigned a = 1; a < n; ++a)
      for (unsigned b = 1; b < n; ++b)
        if (table[a * n + b] == 0) return false;
    return true;
  };

  if (e == 1) {
    mul_.assign(n * n, 0);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) mul_[a * n + b] = (a * b) % p;
  } else {
    static const std::map<unsigned, std::vector<unsigned>> table = {
        {4, {1, 1}},     // x^2 + x + 1
        {8, {1, 1, 0}},  // x^3 + x + 1
        {9, {1, 0}},     // x^2 + 1
    };
    if (auto it = table.find(n); it != table.end()) {
      mul_ = build_mul(it->second);
    } else {
      for (unsigned code = 0; code < n; ++code) {
        auto candidate = build_mul(digits(code));
        if (is_field(candidate)) {
          mul_ = std::move(candidate);
          break;
        }
      }
    }
  }
  inv_.assign(n, 0);
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b)
      if (mul_[a * n + b] == 1) inv_[a] = b;
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0 || a >= q_.q) throw Error(ErrorCode::PreconditionFailed, "zero has no inverse");
  return inv_[a];
}

FinitePoset chain(std::size_t n) {
  std::vector<std::string> d;
  std::vector<Cover> c;
  for (std::size_t i = 0; i <= n; ++i) {
    d.push_back(std::to_string(i));
    if (i != 0) c.emplace_back(i - 1, i);
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset boolean(unsigned n, const EnumerationBounds& bounds) {
  if (n > bounds.boolean_rank)
    throw Error(ErrorCode::BoundExceeded,
                "B_" + std::to_string(n) + " exceeds rank bound " + std::to_string(bounds.boolean_rank));
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> d;
  d.reserve(count);
  std::vector<Cover> c;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string s = "{";
    bool first = true;
    for (unsigned i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
      } else {
        c.emplace_back(mask, mask | (std::size_t{1} << i));
      }
    }
    s += '}';
    d.push_back(std::move(s));
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset chain_product(const WeakComposition& mu, const EnumerationBounds& bounds) {
  Integer total = 1;
  for (unsigned m : mu) total *= (m + 1);
  require_within(total, bounds.elements, "B_mu");
  const std::size_t count = static_cast<std::size_t>(total);
  const std::size_t k = mu.size();
  // Mixed radix with the first coordinate most significant.
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * (mu[i] + 1);
  std::vector<std::string> d;
  d.reserve(count);
  std::vector<Cover> c;
  std::vector<unsigned> x(k, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t r = idx;
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = static_cast<unsigned>(r / stride[i]);
      r %= stride[i];
    }
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      if (i != 0) s += ',';
      s += std::to_string(x[i]);
      if (x[i] < mu[i]) c.emplace_back(idx, idx + stride[i]);
    }
    s += ']';
    d.push_back(std::move(s));
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

Integer gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  Integer num = 1;
  Integer den = 1;
  Integer qq = q;
  for (unsigned i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(qq, n - i) - 1;
    den *= boost::multiprecision::pow(qq, i + 1) - 1;
  }
  return num / den;
}

Integer catalan(unsigned n) {
  Integer c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

FinitePoset subspace_lattice(unsigned n, unsigned q, const EnumerationBounds& bounds) {
  const PrimePower pp = PrimePower::of(q);
  Integer total = 0;
  for (unsigned k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  require_within(total, bounds.elements, "B_n(q)");
  const FiniteField field(pp);

  using Matrix = std::vector<std::vector<unsigned>>;
  std::vector<Matrix> bases;
  std::vector<std::vector<unsigned>> pivots_of;
  std::vector<std::size_t> rank_start;
  for (unsigned k = 0; k <= n; ++k) {
    rank_start.push_back(bases.size());
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<unsigned, unsigned>> free;
      for (unsigned r = 0; r < k; ++r)
        for (unsigned col = piv[r] + 1; col < n; ++col)
          if (!std::binary_search(piv.begin(), piv.end(), col)) free.emplace_back(r, col);
      std::vector<unsigned> vals(free.size(), 0);
      while (true) {
        Matrix m(k, std::vector<unsigned>(n, 0));
        for (unsigned r = 0; r < k; ++r) m[r][piv[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = vals[f];
        bases.push_back(std::move(m));
        pivots_of.push_back(piv);
        std::size_t f = 0;
        while (f < vals.size() && ++vals[f] == q) vals[f++] = 0;
        if (f == vals.size()) break;
      }
      // Next k-subset of [0, n) in lexicographic order.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && piv[i] == n - k + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++piv[i];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  rank_start.push_back(bases.size());

  auto in_span = [&](const std::vector<unsigned>& v, std::size_t w) {
    const Matrix& b = bases[w];
    std::vector<unsigned> acc(n, 0);
    for (std::size_t r = 0; r < b.size(); ++r) {
      unsigned c = v[pivots_of[w][r]];
      if (c == 0) continue;
      for (unsigned col = 0; col < n; ++col) acc[col] = field.add(acc[col], field.mul(c, b[r][col]));
    }
    return acc == v;
  };

  std::vector<std::string> d;
  d.reserve(bases.size());
  for (const auto& m : bases) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != 0) s += '|';
      std::vector<unsigned> row(m[r].begin(), m[r].end());
      s += join_letters(row, q, ',');
    }
    s += ']';
    d.push_back(std::move(s));
  }
  std::vector<Cover> c;
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t u = rank_start[k]; u < rank_start[k + 1]; ++u) {
      for (std::size_t w = rank_start[k + 1]; w < rank_start[k + 2]; ++w) {
        bool contained = true;
        for (const auto& row : bases[u])
          if (!in_span(row, w)) {
            contained = false;
            break;
          }
        if (contained) c.emplace_back(u, w);
      }
    }
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset tary_tree(unsigned t, unsigned n, const EnumerationBounds& bounds) {
  Integer total = 0;
  Integer level = 1;
  for (unsigned k = 0; k <= n; ++k) {
    total += level;
    level *= t;
  }
  require_within(total, bounds.elements, "T_{t,n}");
  std::vector<std::string> d{"^"};
  std::vector<Cover> c;
  std::vector<std::vector<unsigned>> frontier{{}};
  std::vector<std::size_t> frontier_idx{0};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<std::vector<unsigned>> next;
    std::vector<std::size_t> next_idx;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (unsigned a = 1; a <= t; ++a) {
        auto w = frontier[f];
        w.push_back(a);
        c.emplace_back(frontier_idx[f], d.size());
        next_idx.push_back(d.size());
        d.push_back(join_letters(w, t, '.'));
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
    frontier_idx = std::move(next_idx);
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

namespace {

using Partition = std::vector<std::vector<unsigned>>;

bool is_noncrossing(const std::vector<unsigned>& block_of) {
  const std::size_t n = block_of.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (block_of[a] == block_of[b]) continue;
      for (std::size_t cc = b + 1; cc < n; ++cc) {
        if (block_of[cc] != block_of[a]) continue;
        for (std::size_t dd = cc + 1; dd < n; ++dd)
          if (block_of[dd] == block_of[b]) return false;
      }
    }
  return true;
}

Partition blocks_from(const std::vector<unsigned>& block_of) {
  Partition p;
  std::map<unsigned, std::size_t> where;
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = where.try_emplace(block_of[i], p.size());
    if (fresh) p.emplace_back();
    p[it->second].push_back(static_cast<unsigned>(i + 1));
  }
  return p;  // blocks already sorted by minimum
}

std::string partition_descriptor(const Partition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b != 0) s += '|';
    for (std::size_t i = 0; i < p[b].size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(p[b][i]);
    }
  }
  return s;
}

}  // namespace

FinitePoset noncrossing(unsigned n, const EnumerationBounds& bounds) {
  require_within(catalan(n), bounds.elements, "NC_n");
  std::vector<Partition> parts;
  if (n == 0) {
    parts.emplace_back();
  } else {
    // Restricted growth strings enumerate every set partition once.
    std::vector<unsigned> rgs(n, 0);
    std::vector<unsigned> maxv(n, 0);
    while (true) {
      if (is_noncrossing(rgs)) parts.push_back(blocks_from(rgs));
      std::size_t i = n;
      while (i-- > 1) {
        if (rgs[i] <= maxv[i - 1]) break;
      }
      if (i == 0) break;
      ++rgs[i];
      maxv[i] = std::max(maxv[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j] = 0;
        maxv[j] = maxv[i];
      }
    }
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Partition& a, const Partition& b) { return a.size() > b.size(); });
  std::vector<std::string> d;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& p : parts) {
    index.emplace(partition_descriptor(p), d.size());
    d.push_back(partition_descriptor(p));
  }
  std::vector<Cover> c;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Partition& p = parts[i];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        std::vector<unsigned> block_of(n, 0);
        for (std::size_t k = 0; k < p.size(); ++k)
          for (unsigned x : p[k]) block_of[x - 1] = static_cast<unsigned>(k == b ? a : k);
        if (!is_noncrossing(block_of)) continue;
        c.emplace_back(i, index.at(partition_descriptor(blocks_from(block_of))));
      }
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

namespace {

std::vector<unsigned> parse_numbers(std::string_view text, std::string_view spec) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw Error(ErrorCode::ParseError, "bad number in family spec '" + std::string(spec) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

FinitePoset family_from_spec(std::string_view spec, const EnumerationBounds& bounds) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "family spec '" + std::string(spec) + "' lacks ':'");
  const std::string_view kind = spec.substr(0, colon);
  const auto args = parse_numbers(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(ErrorCode::ParseError, "family spec '" + std::string(spec) + "' expects " +
                                             std::to_string(k) + " parameter(s)");
  };
  if (kind == "C") {
    want(1);
    if (args[0] + 1 > bounds.elements) throw Error(ErrorCode::BoundExceeded, "chain too long");
    return chain(args[0]);
  }
  if (kind == "B") {
    want(1);
    return boolean(args[0], bounds);
  }
  if (kind == "Bmu") return chain_product(args, bounds);
  if (kind == "Bq") {
    want(2);
    return subspace_lattice(args[0], args[1], bounds);
  }
  if (kind == "T") {
    want(2);
    return tary_tree(args[0], args[1], bounds);
  }
  if (kind == "NC") {
    want(1);
    return noncrossing(args[0], bounds);
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(kind) + "'");
}

}  // namespace reeskit

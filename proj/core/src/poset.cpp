#include "reeskit/poset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

namespace reeskit {

namespace {

using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, std::size_t i) { b[i >> 6U] |= (std::uint64_t{1} << (i & 63U)); }
inline bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6U] >> (i & 63U)) & 1U; }

std::string fresh_descriptor(const std::vector<std::string>& existing, std::string base) {
  std::set<std::string_view> taken(existing.begin(), existing.end());
  while (taken.count(base) != 0) base += "'";
  return base;
}

}  // namespace

struct FinitePoset::Reachability {
  std::size_t words = 0;
  std::vector<Bits> up;  // up[x] has bit y set iff x <= y
};

FinitePoset::FinitePoset() : reach_(std::make_shared<Reachability>()) {}

FinitePoset FinitePoset::from_covers(std::vector<std::string> descriptors, std::vector<Cover> covers,
                                     FromCoversOptions options) {
  const std::size_t n = descriptors.size();
  FinitePoset p;
  p.index_.reserve(n);
  for (Element i = 0; i < n; ++i) {
    if (!p.index_.emplace(descriptors[i], i).second)
      throw Error(ErrorCode::DuplicateDescriptor, "descriptor '" + descriptors[i] + "' repeated");
  }
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b) throw Error(ErrorCode::CycleDetected, "self-loop at " + std::to_string(a));
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  std::vector<std::vector<Element>> up(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& [a, b] : covers) {
    up[a].push_back(b);
    ++indeg[b];
  }
  // Kahn's algorithm, smallest index first for a deterministic order.
  std::vector<Element> topo;
  topo.reserve(n);
  std::set<Element> ready;
  for (Element i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    Element x = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(x);
    for (Element y : up[x])
      if (--indeg[y] == 0) ready.insert(y);
  }
  if (topo.size() != n) throw Error(ErrorCode::CycleDetected, "cover relation has a cycle");

  auto reach = std::make_shared<Reachability>();
  reach->words = (n + 63) / 64;
  reach->up.assign(n, Bits(reach->words, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element x = *it;
    Bits& bx = reach->up[x];
    set_bit(bx, x);
    for (Element y : up[x]) {
      const Bits& by = reach->up[y];
      for (std::size_t w = 0; w < reach->words; ++w) bx[w] |= by[w];
    }
  }

  // A cover (a, b) is implied when b is reachable through another upper cover of a.
  std::vector<Cover> reduced;
  reduced.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    bool implied = false;
    for (Element k : up[a]) {
      if (k != b && test_bit(reach->up[k], b)) {
        implied = true;
        break;
      }
    }
    if (!implied) {
      reduced.emplace_back(a, b);
    } else if (!options.auto_reduce) {
      throw Error(ErrorCode::NotReduced, "cover (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") is implied by transitivity");
    }
  }

  p.descriptors_ = std::move(descriptors);
  p.covers_ = std::move(reduced);
  p.topo_ = std::move(topo);
  p.reach_ = std::move(reach);
  p.finish_construction();
  return p;
}

void FinitePoset::finish_construction() {
  const std::size_t n = size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (const auto& [a, b] : covers_) {
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  min_below_.assign(n, 0);
  max_below_.assign(n, 0);
  for (Element x : topo_) {
    if (down_[x].empty()) continue;
    std::size_t lo = std::numeric_limits<std::size_t>::max();
    std::size_t hi = 0;
    for (Element y : down_[x]) {
      lo = std::min(lo, min_below_[y] + 1);
      hi = std::max(hi, max_below_[y] + 1);
    }
    min_below_[x] = lo;
    max_below_[x] = hi;
  }
  semipure_ = true;
  for (Element x = 0; x < n; ++x)
    if (min_below_[x] != max_below_[x]) semipure_ = false;

  length_ = 0;
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (Element x = 0; x < n; ++x) {
    if (!up_[x].empty()) continue;
    length_ = std::max(length_, max_below_[x]);
    shortest = std::min(shortest, min_below_[x]);
  }
  pure_ = n == 0 || (semipure_ && shortest == length_);
}

const FinitePoset::Reachability& FinitePoset::reachability() const { return *reach_; }

std::optional<Element> FinitePoset::index_of(std::string_view descriptor) const {
  auto it = index_.find(std::string(descriptor));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FinitePoset::is_cover(Element x, Element y) const {
  const auto& u = up_.at(x);
  return std::binary_search(u.begin(), u.end(), y);
}

bool FinitePoset::leq(Element x, Element y) const {
  if (x >= size() || y >= size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  return test_bit(reachability().up[x], y);
}

std::vector<Element> FinitePoset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> FinitePoset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

std::optional<Element> FinitePoset::unique_minimum() const {
  auto m = minimal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<Element> FinitePoset::unique_maximum() const {
  auto m = maximal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::size_t FinitePoset::rank(Element x) const {
  if (x >= size()) throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  if (!semipure_) throw Error(ErrorCode::NotSemipure, "rank requires a semipure poset");
  return max_below_[x];
}

void FinitePoset::for_each_maximal_chain(
    const std::function<bool(const ChainInPoset&)>& visit) const {
  ChainInPoset chain;
  chain.saturated = true;
  bool stop = false;
  std::function<void(Element)> dfs = [&](Element x) {
    chain.elements.push_back(x);
    if (up_[x].empty()) {
      if (!visit(chain)) stop = true;
    } else {
      for (Element y : up_[x]) {
        dfs(y);
        if (stop) break;
      }
    }
    chain.elements.pop_back();
  };
  for (Element m : minimal_elements()) {
    dfs(m);
    if (stop) return;
  }
}

std::vector<ChainInPoset> FinitePoset::maximal_chains() const {
  std::vector<ChainInPoset> out;
  for_each_maximal_chain([&](const ChainInPoset& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t FinitePoset::count_maximal_chains() const {
  std::vector<std::uint64_t> above(size(), 0);
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    Element x = *it;
    if (up_[x].empty()) {
      above[x] = 1;
    } else {
      for (Element y : up_[x]) above[x] += above[y];
    }
  }
  std::uint64_t total = 0;
  for (Element m : minimal_elements()) total += above[m];
  return total;
}

void FinitePoset::for_each_saturated_chain(
    Element x, Element y, const std::function<void(const std::vector<Element>&)>& visit) const {
  if (!leq(x, y)) return;
  std::vector<Element> chain{x};
  std::function<void(Element)> dfs = [&](Element z) {
    if (z == y) {
      visit(chain);
      return;
    }
    for (Element w : up_[z]) {
      if (!leq(w, y)) continue;
      chain.push_back(w);
      dfs(w);
      chain.pop_back();
    }
  };
  dfs(x);
}

long long FinitePoset::mobius(Element x, Element y) const {
  if (!leq(x, y)) throw Error(ErrorCode::NotComparable, "mobius requires x <= y");
  std::vector<long long> mu(size(), 0);
  std::vector<Element> interval;
  for (Element z : topo_)
    if (leq(x, z) && leq(z, y)) interval.push_back(z);
  for (Element z : interval) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (Element w : interval) {
      if (w == z) break;  // topological order: everything below z came earlier
      if (leq(w, z)) s += mu[w];
    }
    mu[z] = -s;
  }
  return mu[y];
}

FinitePoset adjoin_bounds(const FinitePoset& p) {
  std::vector<std::string> d;
  d.reserve(p.size() + 2);
  d.push_back(fresh_descriptor(p.descriptors(), "<0>"));
  for (const auto& s : p.descriptors()) d.push_back(s);
  d.push_back(fresh_descriptor(p.descriptors(), "<1>"));
  const Element top = p.size() + 1;
  std::vector<Cover> c;
  for (const auto& [a, b] : p.covers()) c.emplace_back(a + 1, b + 1);
  for (Element m : p.minimal_elements()) c.emplace_back(0, m + 1);
  for (Element m : p.maximal_elements()) c.emplace_back(m + 1, top);
  if (p.empty()) c.emplace_back(0, top);
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset adjoin_max(const FinitePoset& p) {
  std::vector<std::string> d = p.descriptors();
  d.push_back(fresh_descriptor(p.descriptors(), "<1>"));
  const Element top = p.size();
  std::vector<Cover> c = p.covers();
  for (Element m : p.maximal_elements()) c.emplace_back(m, top);
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset adjoin_min(const FinitePoset& p) {
  std::vector<std::string> d;
  d.push_back(fresh_descriptor(p.descriptors(), "<0>"));
  for (const auto& s : p.descriptors()) d.push_back(s);
  std::vector<Cover> c;
  for (const auto& [a, b] : p.covers()) c.emplace_back(a + 1, b + 1);
  for (Element m : p.minimal_elements()) c.emplace_back(0, m + 1);
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

namespace {
FinitePoset remove_element(const FinitePoset& p, Element gone) {
  std::vector<std::string> d;
  std::vector<Element> remap(p.size(), 0);
  for (Element i = 0; i < p.size(); ++i) {
    if (i == gone) continue;
    remap[i] = d.size();
    d.push_back(p.descriptor(i));
  }
  std::vector<Cover> c;
  for (const auto& [a, b] : p.covers())
    if (a != gone && b != gone) c.emplace_back(remap[a], remap[b]);
  return FinitePoset::from_covers(std::move(d), std::move(c));
}
}  // namespace

FinitePoset remove_min(const FinitePoset& p) {
  auto m = p.unique_minimum();
  if (!m) throw Error(ErrorCode::NoUniqueMinimum, "remove_min needs a unique minimum");
  return remove_element(p, *m);
}

FinitePoset remove_max(const FinitePoset& p) {
  auto m = p.unique_maximum();
  if (!m) throw Error(ErrorCode::NoUniqueMaximum, "remove_max needs a unique maximum");
  return remove_element(p, *m);
}

std::string pair_descriptor(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

FinitePoset rees_product(const FinitePoset& p, const FinitePoset& q) {
  if (!p.is_semipure() || !q.is_semipure())
    throw Error(ErrorCode::NotSemipure, "Rees product needs semipure factors");
  std::vector<std::string> d;
  std::vector<std::vector<std::ptrdiff_t>> id(p.size(), std::vector<std::ptrdiff_t>(q.size(), -1));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < q.size(); ++y)
      if (p.rank(x) >= q.rank(y)) {
        id[x][y] = static_cast<std::ptrdiff_t>(d.size());
        d.push_back(pair_descriptor(p.descriptor(x), q.descriptor(y)));
      }
  std::vector<Cover> c;
  for (const auto& [x1, x2] : p.covers()) {
    for (Element y1 = 0; y1 < q.size(); ++y1) {
      if (id[x1][y1] < 0) continue;
      auto from = static_cast<Element>(id[x1][y1]);
      if (id[x2][y1] >= 0) c.emplace_back(from, static_cast<Element>(id[x2][y1]));
      for (Element y2 : q.upper_covers(y1))
        if (id[x2][y2] >= 0) c.emplace_back(from, static_cast<Element>(id[x2][y2]));
    }
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset induced_subposet(const FinitePoset& p, std::span<const Element> elements) {
  const std::size_t k = elements.size();
  std::vector<std::string> d;
  d.reserve(k);
  for (Element e : elements) d.push_back(p.descriptor(e));
  // Strict up-sets restricted to the subset, as bitsets over new indices.
  const std::size_t words = (k + 63) / 64;
  std::vector<Bits> strict_up(k, Bits(words, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.leq(elements[i], elements[j])) set_bit(strict_up[i], j);
  std::vector<Cover> c;
  for (std::size_t i = 0; i < k; ++i) {
    Bits covered = strict_up[i];
    for (std::size_t j = 0; j < k; ++j)
      if (test_bit(strict_up[i], j))
        for (std::size_t w = 0; w < words; ++w) covered[w] &= ~strict_up[j][w];
    for (std::size_t j = 0; j < k; ++j)
      if (test_bit(covered, j)) c.emplace_back(i, j);
  }
  return FinitePoset::from_covers(std::move(d), std::move(c));
}

FinitePoset rank_selected(const FinitePoset& p, std::span<const std::size_t> ranks) {
  if (!p.is_pure()) throw Error(ErrorCode::NotPure, "rank selection needs a pure poset");
  std::set<std::size_t> keep(ranks.begin(), ranks.end());
  std::vector<Element> chosen;
  for (Element x = 0; x < p.size(); ++x)
    if (keep.count(p.rank(x)) != 0) chosen.push_back(x);
  return induced_subposet(p, chosen);
}

FinitePoset closed_interval(const FinitePoset& p, Element x, Element y) {
  if (!p.leq(x, y)) throw Error(ErrorCode::NotComparable, "interval needs x <= y");
  std::vector<Element> chosen;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) chosen.push_back(z);
  return induced_subposet(p, chosen);
}

bool are_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.covers().size() != b.covers().size()) return false;
  auto signature = [](const FinitePoset& p, Element x) {
    return std::tuple(p.height(x), p.upper_covers(x).size(), p.lower_covers(x).size());
  };
  std::vector<Element> map(n, 0);
  std::vector<bool> used(n, false);
  // Assign in topological order of a so lower covers are mapped first.
  const auto& order = a.topological_order();
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == n) return true;
    Element x = order[k];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (Element lx : a.lower_covers(x))
        if (!b.is_cover(map[lx], y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (assign(k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace reeskit

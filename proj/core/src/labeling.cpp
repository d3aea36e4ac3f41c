#include "reeskit/labeling.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace reeskit {

struct LabelPoset::Node {
  Kind kind = Kind::TotalOrder;
  std::size_t size = 0;
  std::size_t width = 1;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

LabelPoset LabelPoset::total_order(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::PreconditionFailed, "total order needs at least one label");
  auto n = std::make_shared<Node>();
  n->kind = Kind::TotalOrder;
  n->size = size;
  n->width = 1;
  return LabelPoset(std::move(n));
}

LabelPoset LabelPoset::product(const LabelPoset& a, const LabelPoset& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->a = a.node_;
  n->b = b.node_;
  n->width = a.width() + b.width();
  return LabelPoset(std::move(n));
}

LabelPoset LabelPoset::adjoin_bottom(const LabelPoset& a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AdjoinBottom;
  n->a = a.node_;
  n->width = a.width() + 1;
  return LabelPoset(std::move(n));
}

LabelPoset::Kind LabelPoset::kind() const noexcept { return node_->kind; }
std::size_t LabelPoset::width() const noexcept { return node_->width; }

std::size_t LabelPoset::size() const {
  if (node_->kind != Kind::TotalOrder)
    throw Error(ErrorCode::PreconditionFailed, "size() is defined for total orders only");
  return node_->size;
}

LabelPoset LabelPoset::first() const {
  if (node_->kind == Kind::TotalOrder)
    throw Error(ErrorCode::PreconditionFailed, "a total order has no components");
  return LabelPoset(node_->a);
}

LabelPoset LabelPoset::second() const {
  if (node_->kind != Kind::Product)
    throw Error(ErrorCode::PreconditionFailed, "second() is defined for products only");
  return LabelPoset(node_->b);
}

namespace {

bool node_contains(const LabelPoset& L, std::span<const int> x) {
  if (x.size() != L.width()) return false;
  switch (L.kind()) {
    case LabelPoset::Kind::TotalOrder:
      return x[0] >= 1 && static_cast<std::size_t>(x[0]) <= L.size();
    case LabelPoset::Kind::Product: {
      auto a = L.first();
      return node_contains(a, x.first(a.width())) && node_contains(L.second(), x.subspan(a.width()));
    }
    case LabelPoset::Kind::AdjoinBottom:
      if (x[0] == 0) return std::all_of(x.begin() + 1, x.end(), [](int v) { return v == 0; });
      return x[0] == 1 && node_contains(L.first(), x.subspan(1));
  }
  return false;
}

bool node_leq(const LabelPoset& L, std::span<const int> x, std::span<const int> y) {
  switch (L.kind()) {
    case LabelPoset::Kind::TotalOrder:
      return x[0] <= y[0];
    case LabelPoset::Kind::Product: {
      auto a = L.first();
      const std::size_t w = a.width();
      return node_leq(a, x.first(w), y.first(w)) &&
             node_leq(L.second(), x.subspan(w), y.subspan(w));
    }
    case LabelPoset::Kind::AdjoinBottom:
      if (x[0] == 0) return true;
      if (y[0] == 0) return false;
      return node_leq(L.first(), x.subspan(1), y.subspan(1));
  }
  return false;
}

void node_format(const LabelPoset& L, std::span<const int> x, std::ostream& os) {
  switch (L.kind()) {
    case LabelPoset::Kind::TotalOrder:
      os << x[0];
      return;
    case LabelPoset::Kind::Product: {
      auto a = L.first();
      os << '(';
      node_format(a, x.first(a.width()), os);
      os << ',';
      node_format(L.second(), x.subspan(a.width()), os);
      os << ')';
      return;
    }
    case LabelPoset::Kind::AdjoinBottom:
      if (x[0] == 0) {
        os << "0^";
      } else {
        node_format(L.first(), x.subspan(1), os);
      }
      return;
  }
}

}  // namespace

bool LabelPoset::contains(std::span<const int> label) const { return node_contains(*this, label); }

bool LabelPoset::leq(std::span<const int> a, std::span<const int> b) const {
  if (a.size() != width() || b.size() != width())
    throw Error(ErrorCode::PreconditionFailed, "label width does not match its label poset");
  return node_leq(*this, a, b);
}

bool LabelPoset::less(std::span<const int> a, std::span<const int> b) const {
  return leq(a, b) && !std::equal(a.begin(), a.end(), b.begin(), b.end());
}

Label LabelPoset::bottom() const {
  if (kind() != Kind::AdjoinBottom)
    throw Error(ErrorCode::PreconditionFailed, "bottom() needs an adjoined bottom");
  return Label(width(), 0);
}

Label LabelPoset::lift(const Label& inner) const {
  if (kind() != Kind::AdjoinBottom)
    throw Error(ErrorCode::PreconditionFailed, "lift() needs an adjoined bottom");
  Label out{1};
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

Label LabelPoset::pair(const Label& a, const Label& b) {
  Label out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string LabelPoset::format(std::span<const int> label) const {
  std::ostringstream os;
  node_format(*this, label, os);
  return os.str();
}

std::string LabelPoset::describe() const {
  switch (kind()) {
    case Kind::TotalOrder:
      return "Total(" + std::to_string(size()) + ")";
    case Kind::Product:
      return "Product(" + first().describe() + "," + second().describe() + ")";
    case Kind::AdjoinBottom:
      return "Bottom(" + first().describe() + ")";
  }
  return "";
}

bool operator==(const LabelPoset& a, const LabelPoset& b) { return a.describe() == b.describe(); }

EdgeLabeling EdgeLabeling::build(const FinitePoset& p, LabelPoset target,
                                 const std::function<Label(Element, Element)>& f) {
  EdgeLabeling lam;
  lam.target_ = std::move(target);
  lam.covers_ = p.covers();
  lam.ids_.reserve(lam.covers_.size());
  std::map<Label, LabelId> intern;
  for (const auto& [x, y] : lam.covers_) {
    Label l = f(x, y);
    if (!lam.target_.contains(l))
      throw Error(ErrorCode::PreconditionFailed, "label for cover (" + p.descriptor(x) + "," +
                                                     p.descriptor(y) + ") is not in " +
                                                     lam.target_.describe());
    auto [it, fresh] = intern.try_emplace(l, static_cast<LabelId>(lam.distinct_.size()));
    if (fresh) lam.distinct_.push_back(l);
    lam.ids_.push_back(it->second);
  }
  const std::size_t k = lam.distinct_.size();
  lam.leq_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      lam.leq_[a * k + b] = lam.target_.leq(lam.distinct_[a], lam.distinct_[b]) ? 1 : 0;
  return lam;
}

EdgeLabeling EdgeLabeling::from_map(const FinitePoset& p, LabelPoset target,
                                    const std::map<Cover, Label>& labels) {
  return build(p, std::move(target), [&](Element x, Element y) {
    auto it = labels.find({x, y});
    if (it == labels.end())
      throw Error(ErrorCode::PreconditionFailed,
                  "no label for cover (" + p.descriptor(x) + "," + p.descriptor(y) + ")");
    return it->second;
  });
}

LabelId EdgeLabeling::id(Element x, Element y) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), Cover{x, y});
  if (it == covers_.end() || *it != Cover{x, y})
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(x) + "," + std::to_string(y) +
                                                ") is not a labeled cover");
  return ids_[static_cast<std::size_t>(it - covers_.begin())];
}

LexOrder seq_lex_less(std::span<const Label> a, std::span<const Label> b, const LabelPoset& L) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == b[i]) continue;
    if (L.leq(a[i], b[i])) return LexOrder::Before;
    if (L.leq(b[i], a[i])) return LexOrder::NotBefore;
    return LexOrder::Incomparable;
  }
  return a.size() < b.size() ? LexOrder::Before : LexOrder::NotBefore;
}

LexOrder seq_lex_less_ids(std::span<const LabelId> a, std::span<const LabelId> b,
                          const EdgeLabeling& lam) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == b[i]) continue;
    if (lam.id_leq(a[i], b[i])) return LexOrder::Before;
    if (lam.id_leq(b[i], a[i])) return LexOrder::NotBefore;
    return LexOrder::Incomparable;
  }
  return a.size() < b.size() ? LexOrder::Before : LexOrder::NotBefore;
}

namespace {

struct Reached {
  std::vector<LabelId> labels;
  bool increasing = true;
};

ElVerdict failure(const FinitePoset& p, Element x, Element y, std::string reason) {
  ElVerdict v;
  v.ok = false;
  v.x = x;
  v.y = y;
  v.reason = std::move(reason);
  p.for_each_saturated_chain(x, y, [&](const std::vector<Element>& c) { v.chains.push_back(c); });
  return v;
}

// Checks all intervals [x, y] of p.
ElVerdict check_all_intervals(const FinitePoset& p, const EdgeLabeling& lam) {
  std::vector<std::vector<Reached>> by_end(p.size());
  std::vector<LabelId> seq;
  for (Element x = 0; x < p.size(); ++x) {
    for (auto& b : by_end) b.clear();
    std::function<void(Element, bool)> dfs = [&](Element z, bool inc) {
      for (Element w : p.upper_covers(z)) {
        LabelId l = lam.id(z, w);
        bool inc_w = inc && (seq.empty() || lam.id_leq(seq.back(), l));
        seq.push_back(l);
        by_end[w].push_back(Reached{seq, inc_w});
        dfs(w, inc_w);
        seq.pop_back();
      }
    };
    dfs(x, true);
    for (Element y = 0; y < p.size(); ++y) {
      const auto& chains = by_end[y];
      if (chains.empty()) continue;
      const Reached* inc = nullptr;
      std::size_t inc_count = 0;
      for (const auto& c : chains)
        if (c.increasing) {
          ++inc_count;
          inc = &c;
        }
      if (inc_count != 1)
        return failure(p, x, y,
                       std::to_string(inc_count) + " weakly increasing maximal chains in [" +
                           p.descriptor(x) + "," + p.descriptor(y) + "]");
      for (const auto& c : chains) {
        if (&c == inc) continue;
        auto order = seq_lex_less_ids(inc->labels, c.labels, lam);
        if (order != LexOrder::Before)
          return failure(p, x, y,
                         std::string("increasing chain is ") +
                             (order == LexOrder::Incomparable ? "incomparable to" : "not before") +
                             " another chain in [" + p.descriptor(x) + "," + p.descriptor(y) + "]");
      }
    }
  }
  return ElVerdict{};
}

}  // namespace

ElVerdict is_el_labeling(const FinitePoset& phat, const EdgeLabeling& lam) {
  if (!phat.unique_minimum()) throw Error(ErrorCode::NoUniqueMinimum, "EL check needs a bounded poset");
  if (!phat.unique_maximum()) throw Error(ErrorCode::NoUniqueMaximum, "EL check needs a bounded poset");
  return check_all_intervals(phat, lam);
}

ElVerdict is_semi_el_labeling(const FinitePoset& p, const EdgeLabeling& lam) {
  if (!p.unique_minimum())
    throw Error(ErrorCode::NoUniqueMinimum, "semi-EL check needs a unique minimum");
  // Every interval lies below some maximal element, so the union of the
  // intervals of the [0, m] is the set of all intervals.
  return check_all_intervals(p, lam);
}

std::uint64_t DescentProfile::count(const std::vector<std::size_t>& descent_set) const {
  auto it = counts.find(descent_set);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t DescentProfile::ascent_free_count(std::size_t chain_length) const {
  std::uint64_t n = 0;
  for (const auto& c : chains)
    if (c.labels.size() == chain_length && c.descents.size() + 1 == chain_length) ++n;
  return n;
}

DescentProfile descent_profile(const FinitePoset& phat, const EdgeLabeling& lam) {
  if (!phat.is_bounded())
    throw Error(ErrorCode::PreconditionFailed, "descent profile needs a bounded poset");
  DescentProfile prof;
  phat.for_each_maximal_chain([&](const ChainInPoset& c) {
    ChainDescents d;
    d.elements = c.elements;
    for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
      d.labels.push_back(lam.id(c.elements[i], c.elements[i + 1]));
    for (std::size_t i = 0; i + 1 < d.labels.size(); ++i)
      if (!lam.id_leq(d.labels[i], d.labels[i + 1])) d.descents.push_back(i + 1);
    ++prof.counts[d.descents];
    prof.chains.push_back(std::move(d));
    return true;
  });
  return prof;
}

std::uint64_t rank_selected_betti(const FinitePoset& phat, const EdgeLabeling& lam,
                                  const std::vector<std::size_t>& S, bool trusted) {
  if (!phat.is_pure()) throw Error(ErrorCode::PreconditionFailed, "rank selection needs a pure poset");
  if (!trusted && !is_el_labeling(phat, lam).ok)
    throw Error(ErrorCode::PreconditionFailed, "labeling is not an EL-labeling");
  std::vector<std::size_t> s(S.begin(), S.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (std::size_t r : s)
    if (r == 0 || r >= phat.length())
      throw Error(ErrorCode::PreconditionFailed, "rank " + std::to_string(r) + " outside [1, n-1]");
  return descent_profile(phat, lam).count(s);
}

ReesLabeled rees_el_labeling(const FinitePoset& p1, const EdgeLabeling& lam1,
                             const FinitePoset& p2, const EdgeLabeling& lam2, bool verify) {
  if (p1.length() != p2.length())
    throw Error(ErrorCode::LengthMismatch, "factors have lengths " + std::to_string(p1.length()) +
                                               " and " + std::to_string(p2.length()));
  const auto root = p2.unique_minimum();
  if (!root) throw Error(ErrorCode::NoUniqueMinimum, "second factor needs a minimum");
  const FinitePoset h1 = adjoin_bounds(p1);
  if (verify) {
    if (!is_el_labeling(h1, lam1).ok)
      throw Error(ErrorCode::PreconditionFailed, "first labeling is not EL on the completed factor");
    if (!is_semi_el_labeling(p2, lam2).ok)
      throw Error(ErrorCode::PreconditionFailed, "second labeling is not semi-EL");
  }
  const FinitePoset r = rees_product(p1, p2);
  FinitePoset hat = adjoin_bounds(r);

  // Recover the coordinates of each element of r from its construction order.
  std::vector<std::pair<Element, Element>> coords;
  coords.reserve(r.size());
  for (Element x = 0; x < p1.size(); ++x)
    for (Element y = 0; y < p2.size(); ++y)
      if (p1.rank(x) >= p2.rank(y)) coords.emplace_back(x, y);

  const LabelPoset L2b = LabelPoset::adjoin_bottom(lam2.target());
  const LabelPoset L = LabelPoset::product(lam1.target(), L2b);
  const Element bottom = 0;
  const Element top = hat.size() - 1;
  const Element top1 = h1.size() - 1;
  auto h1_of = [](Element x) { return x + 1; };

  EdgeLabeling lam = EdgeLabeling::build(hat, L, [&](Element a, Element b) -> Label {
    if (a == bottom) {
      const auto [x, k] = coords[b - 1];
      return LabelPoset::pair(lam1.label(0, h1_of(x)), L2b.bottom());
    }
    const auto [x, k] = coords[a - 1];
    if (b == top) return LabelPoset::pair(lam1.label(h1_of(x), top1), L2b.bottom());
    const auto [y, l] = coords[b - 1];
    const Label& first = lam1.label(h1_of(x), h1_of(y));
    if (k == l) return LabelPoset::pair(first, L2b.bottom());
    return LabelPoset::pair(first, L2b.lift(lam2.label(k, l)));
  });
  return ReesLabeled{std::move(hat), std::move(lam)};
}

EdgeLabeling chain_product_labeling(const FinitePoset& bmu, const WeakComposition& mu) {
  // chain_product uses mixed radix with the first coordinate most significant.
  const std::size_t k = mu.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * (mu[i] + 1);
  return EdgeLabeling::build(bmu, LabelPoset::total_order(std::max<std::size_t>(k, 1)),
                             [&](Element x, Element y) -> Label {
                               const std::size_t diff = y - x;
                               for (std::size_t i = 0; i < k; ++i)
                                 if (stride[i] == diff && mu[i] != 0) return {static_cast<int>(i + 1)};
                               throw Error(ErrorCode::PreconditionFailed,
                                           "poset is not the chain product for this composition");
                             });
}

EdgeLabeling boolean_labeling(const FinitePoset& bn, unsigned n) {
  return EdgeLabeling::build(bn, LabelPoset::total_order(std::max(n, 1U)),
                             [&](Element x, Element y) -> Label {
                               const std::size_t diff = y ^ x;
                               return {std::countr_zero(diff) + 1};
                             });
}

EdgeLabeling constant_labeling(const FinitePoset& p) {
  return EdgeLabeling::build(p, LabelPoset::total_order(1), [](Element, Element) -> Label { return {1}; });
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& d) {
  std::vector<std::vector<int>> blocks(1);
  int cur = 0;
  bool in_num = false;
  for (char ch : d) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      in_num = true;
      continue;
    }
    if (in_num) blocks.back().push_back(cur);
    cur = 0;
    in_num = false;
    if (ch == '|') blocks.emplace_back();
  }
  if (in_num) blocks.back().push_back(cur);
  return blocks;
}

}  // namespace

EdgeLabeling noncrossing_labeling(const FinitePoset& nc, unsigned n) {
  return EdgeLabeling::build(nc, LabelPoset::total_order(std::max(n, 1U)),
                             [&](Element x, Element y) -> Label {
                               auto before = parse_blocks(nc.descriptor(x));
                               auto after = parse_blocks(nc.descriptor(y));
                               std::vector<int> mins_before;
                               std::vector<int> mins_after;
                               for (const auto& b : before) mins_before.push_back(b.front());
                               for (const auto& b : after) mins_after.push_back(b.front());
                               // The merge removes exactly one block minimum.
                               for (int m : mins_before)
                                 if (std::find(mins_after.begin(), mins_after.end(), m) == mins_after.end())
                                   return {m};
                               throw Error(ErrorCode::PreconditionFailed, "not a merge cover");
                             });
}

EdgeLabeling hat_extension(const FinitePoset& p, const EdgeLabeling& lam) {
  if (lam.target().kind() != LabelPoset::Kind::TotalOrder)
    throw Error(ErrorCode::PreconditionFailed, "hat extension needs a total-order labeling");
  if (!p.is_bounded()) throw Error(ErrorCode::PreconditionFailed, "hat extension needs a bounded poset");
  const std::size_t k = lam.target().size();
  const FinitePoset h = adjoin_bounds(p);
  const Element top = h.size() - 1;
  return EdgeLabeling::build(h, LabelPoset::total_order(k + 2), [&](Element a, Element b) -> Label {
    if (a == 0) return {1};
    if (b == top) return {static_cast<int>(k + 2)};
    return {lam.label(a - 1, b - 1)[0] + 1};
  });
}

EdgeLabeling hat_of_minus(const FinitePoset& p, const EdgeLabeling& lam) {
  if (lam.target().kind() != LabelPoset::Kind::TotalOrder)
    throw Error(ErrorCode::PreconditionFailed, "hat extension needs a total-order labeling");
  const auto lo = p.unique_minimum();
  if (!lo || !p.unique_maximum())
    throw Error(ErrorCode::PreconditionFailed, "hat of minus needs a bounded poset");
  const std::size_t k = lam.target().size();
  const FinitePoset h = adjoin_bounds(remove_min(p));
  const Element top = h.size() - 1;
  // h index i + 1 is remove_min(p) index i, which is p index i or i + 1.
  auto orig = [&](Element a) -> Element {
    if (a == 0) return *lo;
    Element i = a - 1;
    return i < *lo ? i : i + 1;
  };
  return EdgeLabeling::build(h, LabelPoset::total_order(k + 1), [&](Element a, Element b) -> Label {
    if (b == top) return {static_cast<int>(k + 1)};
    return lam.label(orig(a), orig(b));
  });
}

}  // namespace reeskit

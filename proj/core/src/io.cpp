#include "reeskit/io.hpp"

#include <algorithm>
#include <numeric>

namespace reeskit {

Json poset_to_json(const FinitePoset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    if (p.height(a) != p.height(b)) return p.height(a) < p.height(b);
    return p.descriptor(a) < p.descriptor(b);
  });
  std::vector<std::size_t> position(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  Json elements = Json::array();
  for (Element x : order) elements.push_back(p.descriptor(x));
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& [a, b] : p.covers()) covers.emplace_back(position[a], position[b]);
  std::sort(covers.begin(), covers.end());
  Json cj = Json::array();
  for (const auto& [a, b] : covers) cj.push_back({a, b});
  return Json{{"elements", std::move(elements)}, {"covers", std::move(cj)}};
}

FinitePoset poset_from_json(const Json& j, FromCoversOptions options) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers") || !j["elements"].is_array() ||
      !j["covers"].is_array())
    throw Error(ErrorCode::ParseError, "a poset needs \"elements\" and \"covers\" arrays");
  std::vector<std::string> descriptors;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, "element descriptors must be strings");
    descriptors.push_back(e.get<std::string>());
  }
  std::vector<Cover> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
      throw Error(ErrorCode::ParseError, "each cover must be a pair of element indices");
    covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  }
  return FinitePoset::from_covers(std::move(descriptors), std::move(covers), options);
}

FinitePoset poset_from_json_text(std::string_view text, FromCoversOptions options) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return poset_from_json(j, options);
}

Json label_poset_to_json(const LabelPoset& L) {
  switch (L.kind()) {
    case LabelPoset::Kind::TotalOrder: return Json{{"kind", "total"}, {"size", L.size()}};
    case LabelPoset::Kind::Product:
      return Json{{"kind", "product"}, {"first", label_poset_to_json(L.first())},
                  {"second", label_poset_to_json(L.second())}};
    case LabelPoset::Kind::AdjoinBottom:
      return Json{{"kind", "bottom"}, {"inner", label_poset_to_json(L.first())}};
  }
  return {};
}

LabelPoset label_poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "a label poset needs a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "total") return LabelPoset::total_order(j.at("size").get<std::size_t>());
    if (kind == "product")
      return LabelPoset::product(label_poset_from_json(j.at("first")), label_poset_from_json(j.at("second")));
    if (kind == "bottom") return LabelPoset::adjoin_bottom(label_poset_from_json(j.at("inner")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "unknown label poset kind '" + kind + "'");
}

namespace {
std::string cover_key(const FinitePoset& p, Element a, Element b) {
  return Json::array({p.descriptor(a), p.descriptor(b)}).dump();
}
}  // namespace

Json labeling_to_json(const FinitePoset& p, const EdgeLabeling& lam) {
  Json labels = Json::object();
  std::vector<std::pair<std::string, Label>> entries;
  for (const auto& [a, b] : p.covers()) entries.emplace_back(cover_key(p, a, b), lam.label(a, b));
  std::sort(entries.begin(), entries.end());
  for (auto& [k, v] : entries) labels[k] = v;
  return Json{{"target", label_poset_to_json(lam.target())}, {"labels", std::move(labels)}};
}

EdgeLabeling labeling_from_json(const FinitePoset& p, const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("labels") || !j["labels"].is_object())
    throw Error(ErrorCode::ParseError, "a labeling needs \"target\" and \"labels\"");
  const LabelPoset target = label_poset_from_json(j["target"]);
  std::map<Cover, Label> map;
  for (const auto& [key, value] : j["labels"].items()) {
    Json pair;
    try {
      pair = Json::parse(key);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, "bad cover key '" + key + "'");
    }
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw Error(ErrorCode::ParseError, "bad cover key '" + key + "'");
    const auto a = p.index_of(pair[0].get<std::string>());
    const auto b = p.index_of(pair[1].get<std::string>());
    if (!a || !b) throw Error(ErrorCode::ParseError, "cover key names an unknown element: " + key);
    if (!value.is_array()) throw Error(ErrorCode::ParseError, "labels must be integer arrays");
    Label l;
    for (const auto& v : value) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "labels must be integer arrays");
      l.push_back(v.get<int>());
    }
    map[{*a, *b}] = std::move(l);
  }
  return EdgeLabeling::from_map(p, target, map);
}

Json betti_to_json(const BettiVector& b) {
  Json j{{"rational", b.rational}};
  if (b.mod2) j["mod2"] = *b.mod2;
  if (b.mod3) j["mod3"] = *b.mod3;
  if (b.torsion) {
    Json t = Json::array();
    for (const auto& dim : *b.torsion) {
      Json row = Json::array();
      for (const auto& v : dim) row.push_back(v.str());
      t.push_back(std::move(row));
    }
    j["torsion"] = std::move(t);
  }
  return j;
}

Json identity_verdict_to_json(const IdentityVerdict& v) {
  Json j{{"identity", v.name}, {"m", v.m}, {"N", v.N}, {"ok", v.ok}};
  if (v.mismatch)
    j["mismatch"] = Json{{"degree", v.mismatch->degree},
                         {"monomial", v.mismatch->monomial},
                         {"lhs", v.mismatch->lhs},
                         {"rhs", v.mismatch->rhs}};
  return j;
}

}  // namespace reeskit

#include "reeskit/cli/report.hpp"

#include <sstream>

namespace reeskit::cli {

std::string_view to_string(RouteKind k) {
  switch (k) {
    case RouteKind::Formula: return "formula";
    case RouteKind::Shelling: return "shelling";
    case RouteKind::Homology: return "homology";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string sample_point(const Sample& s) { return "t=" + s.t.str() + ",q=" + s.q.str(); }

}  // namespace

void decide(VerificationReport& r) {
  std::vector<const RouteResult*> done;
  for (const auto& route : r.routes)
    if (route.computed) done.push_back(&route);

  r.reason.clear();
  auto fail = [&](std::string why) {
    if (r.reason.empty()) r.reason = std::move(why);
  };

  for (std::size_t i = 0; i < done.size(); ++i) {
    for (std::size_t j = i + 1; j < done.size(); ++j) {
      const RouteResult& a = *done[i];
      const RouteResult& b = *done[j];
      if (a.symbolic && b.symbolic && *a.symbolic != *b.symbolic)
        fail(a.name + " gives " + stat::to_string(*a.symbolic) + " but " + b.name + " gives " +
             stat::to_string(*b.symbolic));
      auto against = [&](const RouteResult& x, const RouteResult& y) {
        for (const auto& s : x.samples) {
          if (y.symbolic) {
            const Integer v = stat::evaluate(*y.symbolic, s.t, s.q);
            if (v != s.value)
              fail(x.name + " gives " + s.value.str() + " at " + sample_point(s) + " but " + y.name + " gives " +
                   v.str());
          }
          for (const auto& u : y.samples)
            if (u.t == s.t && u.q == s.q && u.value != s.value)
              fail(x.name + " gives " + s.value.str() + " at " + sample_point(s) + " but " + y.name + " gives " +
                   u.value.str());
        }
      };
      against(a, b);
      against(b, a);
    }
  }
  for (const auto& c : r.checks)
    if (!c.ok) fail("check " + c.name + " failed" + (c.detail.empty() ? "" : ": " + c.detail));

  if (!r.reason.empty())
    r.verdict = Verdict::Fail;
  else if (done.size() < 2 && r.checks.empty())
    r.verdict = Verdict::Inconclusive;
  else
    r.verdict = Verdict::Pass;
}

Json report_to_json(const VerificationReport& r) {
  Json routes = Json::array();
  for (const auto& route : r.routes) {
    Json j{{"name", route.name}, {"kind", to_string(route.kind)},
           {"status", route.computed ? "computed" : "skipped"}};
    if (!route.computed) j["reason"] = route.skipped;
    if (route.symbolic) j["polynomial"] = stat::to_string(*route.symbolic);
    if (!route.samples.empty()) {
      Json values = Json::array();
      for (const auto& s : route.samples)
        values.push_back(Json{{"t", s.t.str()}, {"q", s.q.str()}, {"value", s.value.str()}});
      j["values"] = std::move(values);
    }
    routes.push_back(std::move(j));
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  Json out{{"target", r.target}, {"params", r.params}, {"routes", std::move(routes)},
           {"checks", std::move(checks)}, {"verdict", to_string(r.verdict)}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.wall_ms) out["wall_ms"] = *r.wall_ms;
  return out;
}

bool all_ok(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail) return false;
  return true;
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  return Json{{"schema_version", kSchemaVersion}, {"ok", all_ok(reports)}, {"reports", std::move(list)}};
}

namespace {

std::string params_text(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.target;
    if (!r.params.empty()) os << " [" << params_text(r.params) << "]";
    os << ": " << to_string(r.verdict);
    if (r.wall_ms) os << " (" << *r.wall_ms << " ms)";
    os << "\n";
    for (const auto& route : r.routes) {
      os << "  " << to_string(route.kind) << "  " << route.name << ": ";
      if (!route.computed) {
        os << "skipped (" << route.skipped << ")\n";
        continue;
      }
      bool first = true;
      if (route.symbolic) {
        os << stat::to_string(*route.symbolic);
        first = false;
      }
      for (const auto& s : route.samples) {
        os << (first ? "" : "; ") << sample_point(s) << " -> " << s.value.str();
        first = false;
      }
      os << "\n";
    }
    for (const auto& c : r.checks)
      os << "  check  " << c.name << ": " << (c.ok ? "ok" : "FAILED") << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << "\n";
    if (!r.reason.empty()) os << "  reason: " << r.reason << "\n";
  }
  return os.str();
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "target,params,route,kind,status,polynomial,t,q,value,verdict\n";
  for (const auto& r : reports) {
    const std::string head = csv_field(r.target) + "," + csv_field(params_text(r.params)) + ",";
    const std::string tail = std::string(to_string(r.verdict));
    for (const auto& route : r.routes) {
      const std::string mid = csv_field(route.name) + "," + std::string(to_string(route.kind)) + "," +
                              (route.computed ? "computed" : "skipped") + "," +
                              csv_field(route.symbolic ? stat::to_string(*route.symbolic) : "") + ",";
      if (route.samples.empty()) {
        os << head << mid << ",,," << tail << "\n";
        continue;
      }
      for (const auto& s : route.samples)
        os << head << mid << s.t.str() << "," << s.q.str() << "," << s.value.str() << "," << tail << "\n";
    }
    for (const auto& c : r.checks)
      os << head << csv_field("check:" + c.name) << ",check," << (c.ok ? "ok" : "failed") << ",,,,,"
         << tail << "\n";
  }
  return os.str();
}

}  // namespace reeskit::cli

#include "hrl/cli/report.hpp"

#include <cmath>

#include "hrl/format.hpp"

namespace hrl::cli {

Json number(double v) {
  if (std::isfinite(v)) return v == 0.0 ? Json(0.0) : Json(v);
  return format_double(v);
}

Json to_json(const std::complex<double>& z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const AlgebraicNumber& a) {
  Json j;
  j["approx"] = number(a.to_double());
  j["text"] = a.describe();
  if (a.is_rational()) {
    j["exact"] = to_string(a.lo());
  } else {
    j["exact"] = nullptr;
    j["defining"] = to_string(a.defining());
    j["interval"] = Json::array({to_string(a.lo()), to_string(a.hi())});
  }
  return j;
}

namespace {

std::string kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::kRepeatedFactor: return "repeated-factor";
    case Witness::Kind::kSturmDeficit: return "sturm-deficit";
    case Witness::Kind::kAlgebraicPoint: return "algebraic-point";
    case Witness::Kind::kRationalSample: return "rational-sample";
    case Witness::Kind::kRealFiber: return "real-fiber";
    case Witness::Kind::kCurvePoint: return "curve-point";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = kind_name(w.kind);
  j["text"] = w.text;
  if (w.point) j["point"] = to_json(*w.point);
  if (w.sample) j["sample"] = to_string(*w.sample);
  if (w.sample_is_infinity) j["sample"] = "inf";
  if (w.polynomial) j["polynomial"] = to_string(*w.polynomial);
  if (w.kind == Witness::Kind::kSturmDeficit || w.kind == Witness::Kind::kRationalSample ||
      w.kind == Witness::Kind::kRealFiber) {
    j["real_roots"] = w.real_roots;
    j["expected_roots"] = w.expected_roots;
  }
  if (w.sign) j["sign"] = *w.sign;
  if (w.exact_value) j["exact_value"] = to_string(*w.exact_value);
  if (w.point_estimate) j["point_estimate"] = number(*w.point_estimate);
  if (w.value_estimate) j["value_estimate"] = number(*w.value_estimate);
  if (w.curve_point) j["curve_point"] = to_json(*w.curve_point);
  return j;
}

Json to_json(const CriticalPoint& cp) {
  Json j;
  j["point"] = cp.point ? to_json(*cp.point) : Json("inf");
  j["order"] = cp.order;
  j["q1_sign"] = cp.q1_sign;
  j["q2_sign"] = cp.q2_sign;
  j["d_sign"] = cp.d_sign;
  j["value"] = cp.exact_value ? Json(to_string(*cp.exact_value)) : Json(nullptr);
  j["value_estimate"] = number(cp.value_estimate);
  j["value_in_open_0_4"] = cp.value_in_open_0_4;
  return j;
}

Json to_json(const FiberSample& s) {
  return Json{{"s", to_string(s.s)},
              {"degree", s.degree},
              {"squarefree_degree", s.squarefree_degree},
              {"real_roots", s.real_roots},
              {"all_real", s.all_real()}};
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["id"] = std::string(1, condition_letter(r.id));
  j["status"] = status_name(r.status);
  j["method"] = r.method;
  j["summary"] = r.summary;
  j["notes"] = r.notes;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  Json roots = Json::array();
  for (const auto& a : r.roots) roots.push_back(to_json(a));
  j["roots"] = roots;
  Json crit = Json::array();
  for (const auto& cp : r.critical_points) crit.push_back(to_json(cp));
  j["critical_points"] = crit;
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  j["samples"] = samples;
  Json links = Json::array();
  for (ConditionId id : r.cross_links) links.push_back(std::string(1, condition_letter(id)));
  j["cross_links"] = links;
  return j;
}

Json to_json(const SupportInterval& iv) {
  return Json{{"lo", iv.lo ? to_json(*iv.lo) : Json("-inf")}, {"hi", iv.hi ? to_json(*iv.hi) : Json("inf")}};
}

Json input_echo(const RecurrencePair& pair) {
  return Json{{"q1", to_string(pair.q1())},
              {"q2", to_string(pair.q2())},
              {"discriminant", to_string(pair.discriminant())},
              {"wronskian", to_string(wronskian(pair.q1_squared(), pair.q2()))}};
}

Json check_report(const RecurrencePair& pair, const Verdict& verdict) {
  Json conditions = Json::array();
  for (const auto& r : verdict.reports) conditions.push_back(to_json(r));
  Json support = Json::array();
  for (const auto& iv : verdict.support) support.push_back(to_json(iv));
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "check";
  doc["input"] = input_echo(pair);
  doc["verdict"] = Json{{"overall", status_name(verdict.overall)}, {"conditions", conditions}};
  doc["support"] = support;
  doc["support_text"] = is_passing(verdict.overall) ? support_text(verdict.support) : "";
  return doc;
}

std::string support_text(const std::vector<SupportInterval>& support) {
  if (support.empty()) return "empty";
  std::string out;
  for (const auto& iv : support) {
    if (!out.empty()) out += " ∪ ";
    out += iv.lo ? "[" + format_double(iv.lo->to_double()) : std::string("(-inf");
    out += ", ";
    out += iv.hi ? format_double(iv.hi->to_double()) + "]" : std::string("inf)");
  }
  return out;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hrl::cli

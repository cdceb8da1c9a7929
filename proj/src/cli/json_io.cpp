#include "eopkit/json_io.hpp"

namespace eop {

namespace {

Json rat_pair(const Rat& c) { return Json::array({c.numerator_string(), c.denominator_string()}); }

Json rat_list(const QPoly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

[[noreturn]] void malformed(const std::string& what) { throw SpecError(Rule::Parse, "malformed json: " + what); }

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) malformed(what + " must be a string");
  return j.get<std::string>();
}

QPoly poly_from_list(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be an array");
  std::vector<Rat> c;
  for (const Json& e : j) c.push_back(Rat::parse(as_string(e, what + " entry")));
  return QPoly(c);
}

bool is_constant_coeffs(const Poly<RatFunc>& p) {
  for (const RatFunc& c : p.coefficients())
    if (!c.is_constant()) return false;
  return true;
}

}  // namespace

Json coeffs_to_json(const QPoly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coefficients()) out.push_back(rat_pair(c));
  return out;
}

Json coeffs_to_json(const Poly<RatFunc>& p) {
  Json out = Json::array();
  for (const RatFunc& c : p.coefficients()) {
    if (c.is_constant())
      out.push_back(rat_pair(c.constant_value()));
    else
      out.push_back(Json{{"num", rat_list(c.numerator())}, {"den", rat_list(c.denominator())}});
  }
  return out;
}

Poly<RatFunc> coeffs_from_json(const Json& coeffs) {
  if (!coeffs.is_array()) malformed("coeffs must be an array");
  std::vector<RatFunc> out;
  for (const Json& c : coeffs) {
    if (c.is_array()) {
      if (c.size() != 2) malformed("rational coefficient needs [num, den]");
      const std::string num = as_string(c[0], "numerator");
      const std::string den = as_string(c[1], "denominator");
      if (num.empty() || den.empty()) malformed("empty numerator or denominator");
      if (num.find('/') != std::string::npos || den.find('/') != std::string::npos || den.front() == '-' ||
          den.front() == '+')
        malformed("numerator and denominator must be integers, denominator positive");
      out.emplace_back(Rat::parse(num + "/" + den));
    } else if (c.is_object()) {
      if (!c.contains("num") || !c.contains("den")) malformed("symbolic coefficient needs num and den");
      const QPoly den = poly_from_list(c["den"], "den");
      if (den.is_zero()) malformed("zero denominator");
      out.emplace_back(poly_from_list(c["num"], "num"), den);
    } else {
      malformed("coefficient must be an array or an object");
    }
  }
  return Poly<RatFunc>(out);
}

bool PolyDocument::symbolic() const { return !is_constant_coeffs(coeffs); }

QPoly PolyDocument::rational_coeffs() const {
  return coeffs.map([](const RatFunc& c) { return c.constant_value(); });
}

Json PolyDocument::to_json() const {
  Json j;
  j["family"] = family;
  j["type"] = type ? Json(*type) : Json(nullptr);
  j["m"] = m ? Json(*m) : Json(nullptr);
  j["n"] = n;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["coeffs"] = coeffs_to_json(coeffs);
  return j;
}

PolyDocument PolyDocument::from_json(const Json& j) {
  if (!j.is_object()) malformed("document must be an object");
  for (const char* key : {"family", "n", "coeffs"})
    if (!j.contains(key)) malformed(std::string("missing ") + key);
  PolyDocument d;
  d.family = as_string(j["family"], "family");
  if (j.contains("type") && !j["type"].is_null()) d.type = as_string(j["type"], "type");
  if (j.contains("m") && !j["m"].is_null()) {
    if (!j["m"].is_number_integer()) malformed("m must be an integer");
    d.m = j["m"].get<int>();
  }
  if (!j["n"].is_number_integer()) malformed("n must be an integer");
  d.n = j["n"].get<int>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) malformed("params must be an object");
    for (const auto& [k, v] : j["params"].items()) d.params.emplace_back(k, as_string(v, "param " + k));
  }
  d.coeffs = coeffs_from_json(j["coeffs"]);
  return d;
}

Json report_to_json(const VerdictReport& r) {
  Json j;
  j["claim"] = r.claim_id;
  j["status"] = std::string(status_name(r.status));
  j["passed"] = r.passed();
  Json ctx = Json::object();
  for (const auto& [k, v] : r.context) ctx[k] = v;
  j["context"] = ctx;
  j["left"] = coeffs_to_json(r.left);
  j["right"] = coeffs_to_json(r.right);
  Json subs = Json::array();
  for (const auto& s : r.sub_claims) subs.push_back(report_to_json(s));
  j["sub_claims"] = subs;
  return j;
}

}  // namespace eop

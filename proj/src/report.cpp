#include "yf/report.hpp"

namespace yf {

CheckItem& Report::add(const std::string& name, bool pass, Json detail) {
  items.push_back({name, pass, std::move(detail)});
  return items.back();
}

bool Report::pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return !items.empty();
}

const CheckItem* Report::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return &it;
  return nullptr;
}

Json Report::to_json() const {
  Json j;
  j["check"] = check;
  j["family"] = family;
  j["N"] = N;
  if (K >= 0) j["K"] = K;
  if (!bounds.is_null()) j["bounds"] = bounds;
  j["status"] = pass() ? "pass" : "fail";
  Json arr = Json::array();
  for (const auto& it : items) {
    Json e;
    e["name"] = it.name;
    e["status"] = it.pass ? "pass" : "fail";
    if (!it.detail.is_null()) e["detail"] = it.detail;
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  if (const CheckItem* f = first_failure()) {
    Json w;
    w["item"] = f->name;
    if (!f->detail.is_null()) w["detail"] = f->detail;
    j["witness"] = std::move(w);
  }
  if (!extra.is_null()) j["data"] = extra;
  return j;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace yf

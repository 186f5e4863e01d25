#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "yf/rational.hpp"

namespace yf {

using Json = nlohmann::ordered_json;

struct CheckItem {
  std::string name;
  bool pass = false;
  Json detail;
};

// One verification report; serialized as
// {check, family, N, K, bounds, status, items, witness?}.
struct Report {
  std::string check;
  std::string family;
  int N = 0;
  int K = -1;
  Json bounds;
  std::vector<CheckItem> items;
  Json extra;

  Report() = default;
  Report(std::string check_name, std::string fam, int n) : check(std::move(check_name)), family(std::move(fam)), N(n) {}

  CheckItem& add(const std::string& name, bool pass, Json detail = Json());
  bool pass() const;
  const CheckItem* first_failure() const;
  Json to_json() const;
};

Json rational_json(const Rational& r);
Json rationals_json(const std::vector<Rational>& v);

}  // namespace yf

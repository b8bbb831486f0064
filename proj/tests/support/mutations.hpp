#pragma once

// Single-integer mutations of a lift certificate, and an oracle, written
// against the raw JSON, telling whether all recorded identities still hold.

#include "crylift/integer.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace crylift::testing {

using nlohmann::json;

struct Mutation {
  std::string what;
  json certificate;
};

inline Integer num(const json& j) { return parse_integer(j.get<std::string>()); }
inline std::string str(const Integer& v) { return to_decimal(v); }

inline std::vector<Integer> nums(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(num(x));
  return out;
}

inline std::vector<Mutation> single_integer_mutations(const json& cert) {
  std::vector<Mutation> out;
  auto add = [&](std::string what, const std::function<void(json&)>& edit) {
    json copy = cert;
    edit(copy);
    out.push_back({std::move(what), std::move(copy)});
  };
  for (std::size_t i = 0; i < cert["weights"].size(); ++i) {
    for (int delta : {-1, 1}) {
      add("weights[" + std::to_string(i) + "]" + (delta > 0 ? "+1" : "-1"),
          [&](json& c) { c["weights"][i] = str(num(c["weights"][i]) + delta); });
    }
  }
  for (std::size_t i = 0; i < cert["psi"]["a"].size(); ++i) {
    for (int delta : {-1, 1}) {
      add("psi.a[" + std::to_string(i) + "]" + (delta > 0 ? "+1" : "-1"),
          [&](json& c) { c["psi"]["a"][i] = str(num(c["psi"]["a"][i]) + delta); });
    }
  }
  const Integer p = num(cert["theta_bar"]["p"]);
  const Integer top = ipow(p, std::stoul(cert["theta_bar"]["f"].get<std::string>())) - 2;
  for (int delta : {-1, 1}) {
    const Integer b = num(cert["theta_bar"]["b"]) + delta;
    if (b < 0 || b > top) continue;
    add(std::string("theta_bar.b") + (delta > 0 ? "+1" : "-1"), [&](json& c) { c["theta_bar"]["b"] = str(b); });
  }
  for (const char* key : {"theta_uniformizer"}) {
    add(std::string(key) + ".sign", [&](json& c) {
      c[key]["sign"] = c[key]["sign"] == "1" ? "-1" : "1";
    });
    for (std::size_t i = 0; i < cert[key]["factors"].size(); ++i) {
      add(std::string(key) + ".factors[" + std::to_string(i) + "].num+1", [&](json& c) {
        auto& n = c[key]["factors"][i]["num"];
        const Integer v = num(n) + 1;
        if (v == 0) c[key]["factors"].erase(i);
        else n = str(v);
      });
    }
  }
  add("psi.uniformizer.sign", [&](json& c) {
    auto& s = c["psi"]["uniformizer"]["sign"];
    s = s == "1" ? "-1" : "1";
  });
  for (std::size_t s = 0; s < cert["induced_weights"].size(); ++s) {
    add("induced_weights[" + std::to_string(s) + "][0]+1", [&](json& c) {
      c["induced_weights"][s][0] = str(num(c["induced_weights"][s][0]) + 1);
    });
  }
  return out;
}

// True iff every identity the certificate records still holds.
inline bool identities_hold(const json& cert) {
  const Integer p = num(cert["shape"]["p"]);
  const std::size_t f = std::stoul(cert["shape"]["f"].get<std::string>());
  const std::size_t e = std::stoul(cert["shape"]["e"].get<std::string>());
  const std::size_t d = std::stoul(cert["shape"]["d"].get<std::string>());
  const auto k = nums(cert["weights"]);
  const auto a = nums(cert["psi"]["a"]);
  const Integer b = num(cert["theta_bar"]["b"]);
  const Integer q = ipow(p, f);

  auto base_p = [&](Integer x, std::size_t n) {
    std::vector<Integer> out(n);
    for (auto& digit : out) {
      digit = x % p;
      x /= p;
    }
    return out;
  };
  const auto bd = base_p(b, f * d);
  const auto cd = base_p(b % (q - 1), f);
  auto congruent = [&](const Integer& x, const Integer& y) { return floor_mod(x - y, p - 1) == 0; };

  std::vector<Integer> row(e * f, 0), col(f * d, 0);
  for (std::size_t s = 0; s < f; ++s)
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t j = 0; j < d; ++j) {
        row[s * e + r] += k[(s * e + r) * d + j];
        col[s + f * j] += k[(s * e + r) * d + j];
      }
  if (row != a) return false;

  for (std::size_t s = 0; s < f; ++s) {
    Integer sa = 0, sb = 0;
    for (std::size_t r = 0; r < e; ++r) sa += a[s * e + r];
    for (std::size_t j = 0; j < d; ++j) sb += bd[s + f * j];
    if (!congruent(sa, cd[s]) || !congruent(sb, cd[s])) return false;
  }

  if (d > 1) {
    if (std::set<Integer>(k.begin(), k.end()).size() != k.size()) return false;
    for (std::size_t u = 0; u < f * d; ++u)
      if (!congruent(col[u], bd[u])) return false;
    const std::size_t block = e * d;
    for (std::size_t s = 0; s + 1 < f; ++s) {
      Integer hi = 0, lo = -1;
      for (std::size_t i = s * block; i < (s + 1) * block; ++i) hi = std::max(hi, crylift::abs(k[i]));
      for (std::size_t i = (s + 1) * block; i < (s + 2) * block; ++i)
        if (lo < 0 || crylift::abs(k[i]) < lo) lo = crylift::abs(k[i]);
      if (!(hi < lo)) return false;
    }
  }

  std::vector<std::vector<Integer>> induced(e * f);
  for (std::size_t sigma = 0; sigma < e * f; ++sigma) {
    induced[sigma].assign(k.begin() + sigma * d, k.begin() + (sigma + 1) * d);
    std::sort(induced[sigma].begin(), induced[sigma].end(), std::greater<>());
    if (std::adjacent_find(induced[sigma].begin(), induced[sigma].end()) != induced[sigma].end()) return false;
    if (nums(cert["induced_weights"][sigma]) != induced[sigma]) return false;
  }

  json expected = cert["psi"]["uniformizer"];
  if (d % 2 == 0) expected["sign"] = expected["sign"] == "1" ? "-1" : "1";
  return expected == cert["theta_uniformizer"];
}

}  // namespace crylift::testing

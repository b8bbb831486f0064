#pragma once

// Conditions on lifted weights read straight off the canonical pairing:
// exact sums a_sigma per sigma, sums = b_tau0 mod p-1 per tau0, and (d > 1)
// all weights distinct with magnitude-separated sigma0-blocks.

#include "crylift/integer.hpp"
#include "crylift/lift_builder.hpp"

#include <set>
#include <string>
#include <vector>

namespace crylift::testing {

inline std::vector<Integer> base_p_digits(Integer b, const Integer& p, std::size_t n) {
  std::vector<Integer> out(n);
  for (auto& x : out) {
    x = b % p;
    b /= p;
  }
  return out;
}

inline std::vector<std::string> lift_violations(const lift::LocalFieldShape& s, const Integer& b,
                                                const std::vector<Integer>& a, const std::vector<Integer>& k) {
  std::vector<std::string> bad;
  const std::size_t ef = std::size_t{s.e} * s.f, fd = std::size_t{s.f} * s.d;
  if (k.size() != ef * s.d) return {"size"};
  const auto bd = base_p_digits(b, s.p, fd);
  std::vector<Integer> row(ef), col(fd);
  for (std::size_t sf = 0; sf < s.f; ++sf)
    for (std::size_t r = 0; r < s.e; ++r)
      for (std::size_t j = 0; j < s.d; ++j) {
        const auto& w = k[(sf * s.e + r) * s.d + j];
        row[sf * s.e + r] += w;
        col[sf + s.f * j] += w;
      }
  if (row != a) bad.push_back("rows");
  for (std::size_t u = 0; u < fd; ++u)
    if (floor_mod(col[u] - bd[u], s.p - 1) != 0) bad.push_back("col " + std::to_string(u));
  if (s.d > 1) {
    if (std::set<Integer>(k.begin(), k.end()).size() != k.size()) bad.push_back("distinct");
    const std::size_t block = std::size_t{s.e} * s.d;
    for (std::size_t sf = 0; sf + 1 < s.f; ++sf) {
      Integer hi = 0, lo = -1;
      for (std::size_t i = sf * block; i < (sf + 1) * block; ++i) hi = std::max(hi, crylift::abs(k[i]));
      for (std::size_t i = (sf + 1) * block; i < (sf + 2) * block; ++i)
        if (lo < 0 || crylift::abs(k[i]) < lo) lo = crylift::abs(k[i]);
      if (!(hi < lo)) bad.push_back("separation " + std::to_string(sf));
    }
  }
  return bad;
}

}  // namespace crylift::testing

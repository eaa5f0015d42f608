#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tangleh {

// Integer Laurent polynomial in q.
struct Laurent {
  std::map<int, long long> c;  // exponent -> coefficient, zeros erased

  void add(int exp, long long coeff) {
    if (!coeff) return;
    auto it = c.try_emplace(exp, 0).first;
    it->second += coeff;
    if (!it->second) c.erase(it);
  }

  bool operator==(const Laurent& o) const { return c == o.c; }

  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c)
      for (auto& [e2, c2] : o.c) r.add(e1 + e2, c1 * c2);
    return r;
  }

  // Ascending exponents: "q^-1 - 1", "q + q^5 - q^7", "2*q^2".
  std::string str() const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, k] : c) {
      long long a = k < 0 ? -k : k;
      if (first) {
        if (k < 0) out += "-";
        first = false;
      } else {
        out += k < 0 ? " - " : " + ";
      }
      std::string mag;
      if (e == 0) {
        mag = std::to_string(a);
      } else {
        if (a != 1) mag = std::to_string(a) + "*";
        mag += e == 1 ? "q" : "q^" + std::to_string(e);
      }
      out += mag;
    }
    return out;
  }
};

}  // namespace tangleh

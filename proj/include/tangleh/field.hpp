#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tangleh {

// Field concept used by the linear algebra: Elem type plus arithmetic through
// a field object (GF(p) needs its modulus at runtime).
struct QField {
  using Elem = mpq_class;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

struct PField {
  uint32_t p;

  explicit PField(uint32_t prime) : p(prime) {}

  using Elem = uint32_t;

  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    uint64_t s = uint64_t(a) + b;
    return s >= p ? Elem(s - p) : Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return Elem((uint64_t(a) * b) % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {  // p prime: a^(p-2)
    uint64_t base = a, r = 1;
    uint32_t e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return Elem(r);
  }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "GF" + std::to_string(p); }
};

}  // namespace tangleh

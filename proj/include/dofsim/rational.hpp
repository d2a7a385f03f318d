#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace dofsim {

// Exact rational on __int128. Oracles and beam verification work with channel
// coefficients below 2^31, so products stay far from overflow.
struct Rat {
  __int128 num = 0;
  __int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    assert(den != 0);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const {
    assert(o.num != 0);
    return Rat(num * o.den, den * o.num);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }

  std::string str() const {
    auto i128_str = [](__int128 v) {
      if (v == 0) return std::string("0");
      bool neg = v < 0;
      unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
      std::string s;
      while (u != 0) {
        s.insert(s.begin(), char('0' + int(u % 10)));
        u /= 10;
      }
      return neg ? "-" + s : s;
    };
    std::string s = i128_str(num);
    if (den != 1) s += "/" + i128_str(den);
    return s;
  }
};

// Small nonnegative rational used for assignment-family parameters.
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace dofsim

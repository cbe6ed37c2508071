#ifndef CLQ_RATIONAL_HPP
#define CLQ_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>

namespace clq {

// Exact fraction on __int128; magnitudes here stay far below the overflow
// range after reduction (matrix entries are bounded by q(q+1)^2).
struct Rat {
  __int128 num = 0;
  __int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(__int128 n, __int128 d) : num(n), den(d) { reduce(); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void reduce() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_int() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
};

}  // namespace clq

#endif

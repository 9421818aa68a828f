#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mnp {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline long long narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error("rational: value does not fit in 64 bits");
  return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational number, always kept normalized with positive denominator.
// Intermediates use 128-bit integers; results that do not fit back into
// 64 bits throw std::overflow_error.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) { *this = make(n, d); }

  static Rat make(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  // Accepts "p", "p/q" and decimal literals such as "-1.25".
  static Rat parse(std::string_view s);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  friend Rat operator-(const Rat& a) { return make(-detail::i128(a.num_), a.den_); }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
    return make(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

inline Rat Rat::parse(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  s = s.substr(b, e - b);
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse '" + std::string(s) + "' as a rational");
  };
  if (s.empty()) throw bad();

  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  auto digits = [&](detail::i128& out) -> size_t {
    size_t n = 0;
    out = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      out = out * 10 + (s[i] - '0');
      if (out > (detail::i128(INT64_MAX) + 1) * 1000000)
        throw std::overflow_error("rational literal too large");
      ++i;
      ++n;
    }
    return n;
  };

  detail::i128 num = 0, den = 1;
  size_t nint = digits(num);
  if (i < s.size() && s[i] == '/') {
    if (nint == 0) throw bad();
    ++i;
    if (digits(den) == 0 || den == 0) throw bad();
  } else if (i < s.size() && s[i] == '.') {
    ++i;
    detail::i128 frac = 0;
    size_t nfrac = digits(frac);
    if (nint + nfrac == 0) throw bad();
    for (size_t k = 0; k < nfrac; ++k) {
      den *= 10;
      if (den > (detail::i128(INT64_MAX) + 1) * 10)
        throw std::overflow_error("rational literal too large");
    }
    num = num * den + frac;
  } else if (nint == 0) {
    throw bad();
  }
  if (i != s.size()) throw bad();
  if (neg) num = -num;
  return make(num, den);
}

}  // namespace mnp

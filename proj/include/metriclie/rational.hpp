#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metriclie/errors.hpp"

namespace metriclie {

/// Arbitrary-precision signed integer. Sign-magnitude representation with
/// little-endian 32-bit limbs; an empty limb vector is zero.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design
    if (v < 0) {
      negative_ = true;
      // avoid UB on LLONG_MIN
      unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ULL;
      assign_u64(m);
    } else {
      assign_u64(static_cast<unsigned long long>(v));
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw MalformedInputError("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = (s[0] == '-');
      i = 1;
    }
    if (i == s.size()) throw MalformedInputError("integer literal has no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw MalformedInputError("invalid digit in integer literal: " + std::string(s));
      r.mul_small(10);
      r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
    }
    r.negative_ = neg && !r.is_zero();
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.negative_ == b.negative_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        r.negative_ = a.negative_;
      } else {
        r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        r.negative_ = b.negative_;
      }
    }
    r.normalize();
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.negative_ = (a.negative_ != b.negative_);
    r.normalize();
    return r;
  }

  /// Truncated division: quotient rounds toward zero, remainder keeps the
  /// dividend's sign, |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw MalformedInputError("division by zero");
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.negative_ = (a.negative_ != b.negative_);
    r.negative_ = a.negative_;
    q.normalize();
    r.normalize();
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.negative_ ? c > 0 : c < 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
      // divide magnitude by 10^9, emit remainder
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000U);
        rem = cur % 1000000000U;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  double to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
    return negative_ ? -v : v;
  }

  std::size_t bit_length() const {
    if (is_zero()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
  }

  /// Floor of the square root of a nonnegative integer (Newton iteration).
  static BigInt isqrt(const BigInt& n) {
    if (n.sign() < 0) throw MalformedInputError("isqrt of negative integer");
    if (n.is_zero()) return BigInt();
    BigInt x = BigInt(1);
    // initial guess 2^ceil(bits/2) >= sqrt(n)
    std::size_t shift = (n.bit_length() + 1) / 2;
    for (std::size_t i = 0; i < shift; ++i) x = x + x;
    while (true) {
      BigInt y = (x + n / x) / BigInt(2);
      if (y >= x) break;
      x = std::move(y);
    }
    return x;
  }

  bool is_perfect_square(BigInt* root = nullptr) const {
    if (sign() < 0) return false;
    BigInt r = isqrt(*this);
    if (r * r == *this) {
      if (root) *root = r;
      return true;
    }
    return false;
  }

 private:
  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;

  void assign_u64(unsigned long long m) {
    limbs_.clear();
    while (m != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  void normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
  }

  void mul_small(std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void add_small(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; i < limbs_.size() && carry; ++i) {
      std::uint64_t cur = limbs_[i] + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth Algorithm D on magnitudes.
  static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(u, v) < 0) {
      r = u;
      return;
    }
    if (v.size() == 1) {
      std::uint64_t d = v[0], rem = 0;
      q.assign(u.size(), 0);
      for (std::size_t i = u.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    const unsigned s = std::countl_zero(v.back());
    // normalized copies: vn = v << s, un = u << s with an extra high limb
    std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 1;)
      vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i - 1]) >> (32 - s)) : 0);
    vn[0] = v[0] << s;
    un[u.size()] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u.back()) >> (32 - s)) : 0;
    for (std::size_t i = u.size(); i-- > 1;)
      un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i - 1]) >> (32 - s)) : 0);
    un[0] = u[0] << s;

    q.assign(m + 1, 0);
    const std::uint64_t base = 1ULL << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = num / vn[n - 1];
      std::uint64_t rhat = num % vn[n - 1];
      while (qhat >= base || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      // multiply and subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * vn[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(p & 0xffffffffULL);
        if (t < 0) {
          t += static_cast<std::int64_t>(base);
          borrow = 1;
        } else {
          borrow = 0;
        }
        un[i + j] = static_cast<std::uint32_t>(t);
      }
      std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
      if (t < 0) {
        // qhat was one too large: add v back
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
          un[i + j] = static_cast<std::uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<std::int64_t>(c2);
      }
      un[j + n] = static_cast<std::uint32_t>(t);
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    r.assign(n, 0);
    for (std::size_t i = 0; i < n - 1; ++i)
      r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
    r[n - 1] = un[n - 1] >> s;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
};

/// Exact rational number. Canonical form: reduced, positive denominator,
/// zero stored as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(int v) : num_(v), den_(1) {}        // NOLINT
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  /// Parses "p" or "p/q" with q > 0, matching -?[0-9]+(/[1-9][0-9]*)?.
  static Rational from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ds.empty() || ds[0] == '-' || ds[0] == '+' || ds[0] == '0')
      throw MalformedInputError("invalid rational literal: " + std::string(s));
    return Rational(BigInt::from_string(ns), BigInt::from_string(ds));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_.is_one(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw MalformedInputError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// True iff this is the square of a rational; on success *root is the
  /// nonnegative square root.
  bool is_square(Rational* root = nullptr) const {
    if (sign() < 0) return false;
    BigInt rn, rd;
    if (!num_.is_perfect_square(&rn) || !den_.is_perfect_square(&rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

 private:
  BigInt num_, den_;

  void reduce() {
    if (den_.is_zero()) throw MalformedInputError("rational with zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

inline Rational half() { return Rational(1, 2); }

}  // namespace metriclie

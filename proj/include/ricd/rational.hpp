#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ricd/error.hpp"

namespace ricd {

/// Exact scalar. GMP keeps it in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
  return Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// A point of Q^n. Length is fixed by the problem instance.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : coords_(n) {}
  QVector(std::initializer_list<Rational> values) : coords_(values) {}
  explicit QVector(std::vector<Rational> values) : coords_(std::move(values)) {}

  static QVector unit(std::size_t n, std::size_t i) {
    QVector e(n);
    e[i] = 1;
    return e;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
  }

  QVector& operator+=(const QVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o[i];
    return *this;
  }
  QVector& operator-=(const QVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o[i];
    return *this;
  }
  QVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  QVector& operator/=(const Rational& s) {
    for (auto& c : coords_) c /= s;
    return *this;
  }

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator-(QVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
  friend QVector operator/(QVector a, const Rational& s) { return a /= s; }

  friend bool operator==(const QVector& a, const QVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }

  /// Lexicographic order.
  friend bool operator<(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  /// Appends one coordinate (used by the epigraph lift).
  QVector appended(const Rational& t) const {
    QVector out = *this;
    out.coords_.push_back(t);
    return out;
  }

 private:
  void check_same(const QVector& o) const {
    if (o.size() != size()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  }

  std::vector<Rational> coords_;
};

inline Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

inline std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QVector& v) { return os << to_string(v); }

/// Uniform average of a nonempty list of points.
inline QVector average(const std::vector<QVector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "average of no points");
  QVector sum(points.front().size());
  for (const auto& p : points) sum += p;
  return sum / Rational(static_cast<long>(points.size()));
}

using Matrix = std::vector<QVector>;

}  // namespace ricd

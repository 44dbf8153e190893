#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace signstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Sign of a quantity, with exact zero kept as its own value.
enum class Sign : int { minus = -1, zero = 0, plus = 1 };

using SignVec = std::vector<Sign>;

inline Sign sign_of(const Int& x) {
  if (x > 0) return Sign::plus;
  if (x < 0) return Sign::minus;
  return Sign::zero;
}

inline Sign sign_of(const Rat& x) {
  if (x > 0) return Sign::plus;
  if (x < 0) return Sign::minus;
  return Sign::zero;
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    default: return '0';
  }
}

inline Sign sign_from_char(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  if (c == '0') return Sign::zero;
  throw std::invalid_argument(std::string("not a sign character: ") + c);
}

inline std::string sign_string(const SignVec& s) {
  std::string out;
  out.reserve(s.size());
  for (Sign v : s) out.push_back(sign_char(v));
  return out;
}

inline SignVec parse_sign_string(const std::string& s) {
  SignVec out;
  out.reserve(s.size());
  for (char c : s) out.push_back(sign_from_char(c));
  return out;
}

inline bool is_strict(const SignVec& s) {
  for (Sign v : s)
    if (v == Sign::zero) return false;
  return !s.empty();
}

inline SignVec negate_signs(const SignVec& s) {
  SignVec out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = opposite(s[i]);
  return out;
}

/// [a]_+ = max(a, 0)
inline Int pos_part(const Int& a) { return a > 0 ? a : Int(0); }
inline Rat pos_part(const Rat& a) { return a > 0 ? a : Rat(0); }

/// Natural log of a positive big integer; splits off high bits so that
/// values far beyond double range still work.
double log_big(const Int& x);

double to_double(const Rat& x);

/// Canonical decimal rendering with 15 significant digits.
std::string format_double15(double x);

/// gcd of absolute values over a vector; 0 for the zero vector.
Int content(const IntVec& v);

/// Divide by the content so entries are coprime; leaves zero vector alone.
void make_primitive(IntVec& v);

}  // namespace signstab

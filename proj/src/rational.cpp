#include "sympchern/rational.hpp"

#include <cctype>
#include <sstream>

namespace sympchern {

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

namespace {

// Number of decimal digits of a positive integer.
int digits10(const Int& x) {
  std::ostringstream os;
  os << x;
  return static_cast<int>(os.str().size());
}

Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::string Rational::decimal(int significant_digits) const {
  if (num_ == 0) return "0";
  const int sig = significant_digits < 1 ? 1 : significant_digits;
  Int p = num_ < 0 ? Int(-num_) : num_;
  const Int& q = den_;

  // Exponent e with 10^e <= p/q < 10^(e+1).
  int e = digits10(p) - digits10(q);
  if (p * pow10(e >= 0 ? 0 : -e) < q * pow10(e >= 0 ? e : 0)) --e;

  // Mantissa with `sig` digits, rounded half away from zero.
  int shift = sig - 1 - e;
  Int scaled_num = p * (shift >= 0 ? pow10(shift) : Int(1));
  Int scaled_den = q * (shift >= 0 ? Int(1) : pow10(-shift));
  Int mantissa = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  if (mantissa >= pow10(sig)) {
    mantissa /= 10;
    ++e;
  }

  std::ostringstream ms;
  ms << mantissa;
  std::string digits = ms.str();
  std::string out = num_ < 0 ? "-" : "";
  if (e >= 0 && e < sig) {
    out += digits.substr(0, e + 1);
    std::string frac = digits.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e < 0 && e >= -4) {
    out += "0.";
    out += std::string(-e - 1, '0');
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    out += digits;
  } else {
    out += digits.substr(0, 1);
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e);
  }
  return out;
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational literal");

  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty() || (t.size() == 1 && (t[0] == '+' || t[0] == '-')))
      throw ParseError("bad integer literal: '" + t + "'");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw ParseError("bad integer literal: '" + t + "'");
    return Int(t);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos ||
        tail.empty())
      throw ParseError("bad decimal literal: '" + text + "'");
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-'))
      head = head.substr(1);
    if (head.empty()) head = "0";
    Int whole = parse_int(head);
    Int frac = parse_int(tail);
    Int den = pow10(static_cast<int>(tail.size()));
    Int num = whole * den + frac;
    return Rational(neg ? -num : num, den);
  }
  return Rational(parse_int(s));
}

}  // namespace sympchern

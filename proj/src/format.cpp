#include "oplus/format.hpp"

#include <sstream>
#include <stdexcept>

namespace oplus {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

std::string radical_string(const Rational& coeff, const Int& d) {
  std::string root = "sqrt(" + d.get_str() + ")";
  if (coeff == 1) return root;
  if (coeff == -1) return "-" + root;
  return to_string(coeff) + "*" + root;
}

// one "c*name" term appended with sign folding; empty name renders the
// constant term
void append_term(std::string& out, const Rational& coeff, const std::string& name) {
  if (coeff == 0) return;
  Rational mag = abs(coeff);
  if (out.empty()) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (name.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += name;
  } else {
    out += to_string(mag) + "*" + name;
  }
}

void append_quad_term(std::string& out, const QuadExt& coeff, const std::string& name) {
  if (coeff.is_zero()) return;
  if (!out.empty()) out += " + ";
  if (coeff.is_rational() && name.empty()) {
    out += to_string(coeff);
    return;
  }
  std::string c = coeff.is_rational() ? to_string(coeff) : "(" + to_string(coeff) + ")";
  out += name.empty() ? c : c + "*" + name;
}

}  // namespace

std::string to_string(const QuadExt& z) {
  if (z.is_rational()) return to_string(z.p());
  if (z.p() == 0) return radical_string(z.q(), z.d());
  std::string tail = radical_string(abs(z.q()), z.d());
  return to_string(z.p()) + (z.q() < 0 ? " - " : " + ") + tail;
}

std::string polynomial_string(const RationalLaw& law) {
  std::string out;
  if (law.is_affine()) {
    out = "x + y";
    append_term(out, law.shift(), "");
    return out;
  }
  append_term(out, law.scale(), "x*y");
  append_term(out, law.offset(), "x");
  append_term(out, law.offset(), "y");
  append_term(out, law.constant_term(), "");
  return out;
}

std::string polynomial_string(const QuadLaw& law) {
  std::string out;
  if (law.is_affine()) {
    out = "x + y";
    append_quad_term(out, law.shift(), "");
    return out;
  }
  append_quad_term(out, law.scale(), "x*y");
  append_quad_term(out, law.offset(), "x");
  append_quad_term(out, law.offset(), "y");
  append_quad_term(out, law.constant_term(), "");
  return out;
}

namespace {

std::string strip(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) return "";
  return std::string(text.substr(b, e - b + 1));
}

// "sqrt(d)" or "r*sqrt(d)" -> r
Rational parse_radical_term(std::string_view term, const Int& d) {
  std::string expected = "sqrt(" + d.get_str() + ")";
  std::string s = strip(term);
  if (s == expected) return Rational(1);
  auto star = s.rfind("*" + expected);
  if (star == std::string::npos || star + expected.size() + 1 != s.size())
    throw std::invalid_argument("malformed radical term: '" + s + "'");
  return parse_rational(strip(std::string_view(s).substr(0, star)));
}

}  // namespace

QuadExt parse_quadext(std::string_view text, const Int& d) {
  std::string s = strip(text);
  if (s.find("sqrt") == std::string::npos)
    return QuadExt(parse_rational(s), d);

  // split "P + R*sqrt(d)" / "P - R*sqrt(d)" on the sign between the terms;
  // scan from the right so signs inside P survive
  size_t split = std::string::npos;
  char sign = '+';
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') {
      split = i;
      sign = s[i];
      break;
    }
  }
  if (split == std::string::npos) {  // pure radical term, possibly negative
    bool negative = !s.empty() && s[0] == '-';
    Rational q = parse_radical_term(negative ? s.substr(1) : s, d);
    return QuadExt(Rational(0), negative ? -q : q, d);
  }
  Rational p = parse_rational(strip(std::string_view(s).substr(0, split)));
  Rational q = parse_radical_term(std::string_view(s).substr(split + 1), d);
  return QuadExt(p, sign == '-' ? -q : q, d);
}

}  // namespace oplus

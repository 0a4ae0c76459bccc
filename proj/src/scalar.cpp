// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace matorth {

Rational rational_from_string(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '/')) {
      throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    }
  }
  Rational value;
  if (value.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: \"" + s + "\"");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: \"" +
                                s + "\"");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

GaussianRational field_inverse(const GaussianRational& z) {
  if (z.is_zero()) {
    throw std::domain_error("division by zero in Q(i)");
  }
  Rational n = norm_sq(z);
  return {z.re() / n, -z.im() / n};
}

GaussianRational complex_from_string(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return GaussianRational(rational_from_string(text));
  }
  return {rational_from_string(text.substr(0, comma)),
          rational_from_string(text.substr(comma + 1))};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  return to_string(z.re()) + "," + to_string(z.im());
}

std::string display_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::ostringstream os;
  if (z.re() != 0) {
    os << to_string(z.re());
    if (z.im() > 0) os << "+";
  }
  if (z.im() == 1) {
    os << "i";
  } else if (z.im() == -1) {
    os << "-i";
  } else {
    os << to_string(z.im()) << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << display_string(z);
}

}  // namespace matorth

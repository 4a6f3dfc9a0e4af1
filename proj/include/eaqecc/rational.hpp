/*
   Copyright 2026 The eaqecc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EAQECC_RATIONAL_HPP
#define EAQECC_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include "eaqecc/laurent.hpp"

namespace eaqecc {

/*
 * Rational function over GF(2)(D), stored canonically: the denominator is a
 * delay-free polynomial with constant term 1 (all monomial factors absorbed
 * into the numerator) and gcd(num * D^(-del num), den) = 1.  Equality of
 * rationals is equality of canonical forms.
 */
class RationalFn {
 public:
  RationalFn() : num_(), den_(LaurentPoly::one()) {}
  RationalFn(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}  // NOLINT: implicit by design
  RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    reduce();
  }

  static RationalFn zero() { return RationalFn(); }
  static RationalFn one() { return RationalFn(LaurentPoly::one()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  // Conversion back to a Laurent polynomial; throws on a true fraction.
  LaurentPoly to_poly() const {
    if (!is_poly()) throw std::domain_error("RationalFn: not a polynomial: " + str());
    return num_;
  }

  RationalFn operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }

  RationalFn operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
  }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  RationalFn operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(num_ * o.den_, den_ * o.num_);
  }

  RationalFn inverse() const {
    if (is_zero()) throw std::domain_error("RationalFn: inverse of zero");
    return RationalFn(den_, num_);
  }

  // Substitute D -> D^-1.
  RationalFn reciprocal() const {
    return RationalFn(num_.reciprocal(), den_.reciprocal());
  }

  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  std::string str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  // Parse "poly" or "(poly)/(poly)".
  static RationalFn parse(const std::string& text) {
    std::string t;
    for (char c : text)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    std::size_t slash = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (t[i] == '/' && depth == 0) {
        slash = i;
        break;
      }
    }
    auto strip = [](std::string s) {
      if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
      return s;
    };
    if (slash == std::string::npos) return RationalFn(LaurentPoly::parse(strip(t)));
    return RationalFn(LaurentPoly::parse(strip(t.substr(0, slash))),
                      LaurentPoly::parse(strip(t.substr(slash + 1))));
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly::one();
      return;
    }
    // Reduce the delay-free representatives, then reattach the net delay to
    // the numerator so the denominator keeps constant term 1.
    const long dn = num_.del(), dd = den_.del();
    LaurentPoly a = num_.delay_free(), b = den_.delay_free();
    const LaurentPoly g = poly_gcd(a, b);
    if (!g.is_one()) {
      a = a / g;
      b = b / g;
    }
    num_ = a.shifted(dn - dd);
    den_ = b;
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace eaqecc

#endif  // EAQECC_RATIONAL_HPP

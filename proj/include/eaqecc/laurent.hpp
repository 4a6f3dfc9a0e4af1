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

#ifndef EAQECC_LAURENT_HPP
#define EAQECC_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eaqecc {

/*
 * Laurent polynomial over GF(2): a finite set of signed exponents, each
 * present exponent carrying coefficient 1.  The zero polynomial is the
 * empty set.  Values are immutable in spirit: every operation returns a
 * fresh polynomial.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::initializer_list<long> exps) {
    for (long e : exps) toggle(e);
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0); }
  static LaurentPoly monomial(long e) {
    LaurentPoly p;
    p.exps_.insert(e);
    return p;
  }
  static LaurentPoly from_exponents(std::set<long> exps) {
    LaurentPoly p;
    p.exps_ = std::move(exps);
    return p;
  }

  bool is_zero() const { return exps_.empty(); }
  bool is_one() const { return exps_.size() == 1 && *exps_.begin() == 0; }
  bool is_monomial() const { return exps_.size() == 1; }

  // Delay (minimum exponent).  Defined only for nonzero polynomials.
  long del() const {
    require_nonzero("del");
    return *exps_.begin();
  }
  // Degree (maximum exponent).  Defined only for nonzero polynomials.
  long deg() const {
    require_nonzero("deg");
    return *exps_.rbegin();
  }

  std::size_t term_count() const { return exps_.size(); }
  const std::set<long>& exponents() const { return exps_; }
  bool has_term(long e) const { return exps_.count(e) != 0; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (long e : o.exps_) r.toggle(e);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (long a : exps_)
      for (long b : o.exps_) r.toggle(a + b);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiply by D^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (long e : exps_) r.exps_.insert(e + k);
    return r;
  }

  // Substitute D -> D^-1 (time reversal).
  LaurentPoly reciprocal() const {
    LaurentPoly r;
    for (long e : exps_) r.exps_.insert(-e);
    return r;
  }

  // Substitute D -> D^l (used by generator expansion).
  LaurentPoly inflated(long l) const {
    LaurentPoly r;
    for (long e : exps_) r.exps_.insert(e * l);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return exps_ == o.exps_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return exps_ < o.exps_; }

  // Delay-free representative: p * D^(-del p); zero stays zero.
  LaurentPoly delay_free() const {
    if (is_zero()) return *this;
    return shifted(-del());
  }

  bool is_delay_free_poly() const {
    return is_zero() || (del() == 0);
  }

  /*
   * Long division on delay-free representatives.  Requires d nonzero.
   * Returns (q, r) with this = q*d + r as Laurent polynomials and either
   * r = 0 or the delay-free representative of r has degree < that of d.
   */
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return {zero(), zero()};
    const long da = del(), db = d.del();
    LaurentPoly a = delay_free();          // ordinary polynomial, deg >= 0
    const LaurentPoly b = d.delay_free();  // ordinary polynomial, deg >= 0
    LaurentPoly q;
    while (!a.is_zero() && a.deg() >= b.deg()) {
      long shift = a.deg() - b.deg();
      q.toggle(shift);
      a += b.shifted(shift);
    }
    // this = (q * D^(da-db)) * d + a * D^da
    return {q.shifted(da - db), a.shifted(da)};
  }

  // Exact division; throws if the remainder is nonzero.
  LaurentPoly operator/(const LaurentPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
    return q;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (long e : exps_) {
      if (!s.empty()) s += "+";
      if (e == 0)
        s += "1";
      else if (e == 1)
        s += "D";
      else
        s += "D^" + std::to_string(e);
    }
    return s;
  }

  /*
   * Parse the textual syntax: terms joined by '+', each term "1", "D",
   * "D^k" or "D^-k"; "0" denotes the zero polynomial.
   */
  static LaurentPoly parse(const std::string& text) {
    std::string t;
    for (char c : text)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("LaurentPoly: empty text");
    if (t == "0") return zero();
    LaurentPoly p;
    std::size_t pos = 0;
    while (pos < t.size()) {
      std::size_t next = t.find('+', pos);
      std::string term = t.substr(pos, next == std::string::npos ? next : next - pos);
      if (term.empty()) throw std::invalid_argument("LaurentPoly: empty term in '" + text + "'");
      if (term == "1") {
        p.toggle(0);
      } else if (term == "D") {
        p.toggle(1);
      } else if (term.rfind("D^", 0) == 0) {
        p.toggle(std::stol(term.substr(2)));
      } else {
        throw std::invalid_argument("LaurentPoly: bad term '" + term + "'");
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return p;
  }

 private:
  void toggle(long e) {
    auto it = exps_.find(e);
    if (it == exps_.end())
      exps_.insert(e);
    else
      exps_.erase(it);
  }
  void require_nonzero(const char* what) const {
    if (is_zero()) throw std::domain_error(std::string("LaurentPoly::") + what + " of zero polynomial");
  }

  std::set<long> exps_;
};

/*
 * Greatest common divisor of the delay-free representatives, by the
 * Euclidean algorithm over GF(2)[D].  The result is delay-free; it is
 * unique up to the monomial units of GF(2)[D,D^-1], and this normalization
 * picks the representative with nonzero constant term.
 */
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("poly_gcd: gcd(0,0) undefined");
  LaurentPoly x = a.delay_free(), y = b.delay_free();
  while (!y.is_zero()) {
    LaurentPoly r = x.divmod(y).second;
    x = y;
    y = r.delay_free();
  }
  return x.delay_free();
}

}  // namespace eaqecc

#endif  // EAQECC_LAURENT_HPP

/*
   Copyright 2026 The intpoly authors

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

#include "intpoly/rat_func.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace intpoly {

RatFunc::RatFunc(FpPoly num, FpPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

RatFunc::RatFunc(FpPoly num)
    : num_(std::move(num)), den_(FpPoly::constant(num_.p(), 1)) {}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = FpPoly::constant(num_.p(), 1);
    return;
  }
  FpPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  if (!den_.is_monic()) {
    BigInt inv = xgcd(den_.leading(), den_.p()).x;
    FpPoly scale = FpPoly::constant(den_.p(), inv);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  auto paren = [](const FpPoly& f) {
    return f.degree() > 0 ? "(" + f.str() + ")" : f.str();
  };
  return paren(num_) + "/" + paren(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& v) {
  return os << v.str();
}

}  // namespace intpoly

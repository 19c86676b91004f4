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

#include "intpoly/quad_elem.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace intpoly {

QuadElem::QuadElem(Rational x, Rational y, BigInt d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
  if (d_.sign() >= 0 || !is_squarefree(d_))
    throw std::invalid_argument("QuadElem: d must be squarefree and negative");
}

void QuadElem::check_same_field(const QuadElem& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("QuadElem: mixed quadratic fields");
}

Rational QuadElem::norm() const { return x_ * x_ - Rational(d_) * y_ * y_; }

QuadElem QuadElem::conjugate() const { return QuadElem(x_, -y_, d_); }

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("QuadElem: inverse of zero");
  Rational n = norm();
  return QuadElem(x_ / n, -y_ / n, d_);
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_same_field(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_same_field(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_same_field(o);
  Rational nx = x_ * o.x_ + Rational(d_) * y_ * o.y_;
  Rational ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const QuadElem& a, const QuadElem& b) {
  a.check_same_field(b);
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::string QuadElem::str() const {
  if (y_.is_zero()) return x_.str();
  std::string root = "sqrt(" + d_.str() + ")";
  std::string ypart =
      y_.is_one() ? root
                  : (y_ == Rational(-1) ? "-" + root : y_.str() + "*" + root);
  if (x_.is_zero()) return ypart;
  return x_.str() + (y_.sign() > 0 ? "+" : "") + ypart;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& v) {
  return os << v.str();
}

}  // namespace intpoly

// SPDX-License-Identifier: Apache-2.0
#include "crisper/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace crisper {

Interval Interval::make(Real lo, bool lo_closed, Real hi, bool hi_closed) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw std::invalid_argument("interval endpoint is NaN");
  }
  if (std::isinf(lo)) lo_closed = false;
  if (std::isinf(hi)) hi_closed = false;
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed))) {
    return Interval();
  }
  Interval r;
  r.lo_ = lo;
  r.hi_ = hi;
  r.lo_closed_ = lo_closed;
  r.hi_closed_ = hi_closed;
  return r;
}

bool Interval::contains(const Interval& o) const {
  if (o.is_empty()) return true;
  if (is_empty()) return false;
  const bool lo_ok = lo_ < o.lo_ || (lo_ == o.lo_ && (lo_closed_ || !o.lo_closed_));
  const bool hi_ok = o.hi_ < hi_ || (o.hi_ == hi_ && (hi_closed_ || !o.hi_closed_));
  return lo_ok && hi_ok;
}

Interval intersect(const Interval& p, const Interval& q) {
  if (p.is_empty() || q.is_empty()) return Interval::empty();
  Real lo;
  bool lc;
  if (p.lo() > q.lo()) {
    lo = p.lo();
    lc = p.lo_closed();
  } else if (q.lo() > p.lo()) {
    lo = q.lo();
    lc = q.lo_closed();
  } else {
    lo = p.lo();
    lc = p.lo_closed() && q.lo_closed();
  }
  Real hi;
  bool hc;
  if (p.hi() < q.hi()) {
    hi = p.hi();
    hc = p.hi_closed();
  } else if (q.hi() < p.hi()) {
    hi = q.hi();
    hc = q.hi_closed();
  } else {
    hi = p.hi();
    hc = p.hi_closed() && q.hi_closed();
  }
  return Interval::make(lo, lc, hi, hc);
}

bool interval_less(const Interval& p, const Interval& q) {
  if (p.lo() != q.lo()) return p.lo() < q.lo();
  if (p.lo_closed() != q.lo_closed()) return p.lo_closed();  // closed start first
  if (p.hi() != q.hi()) return p.hi() < q.hi();
  return !p.hi_closed() && q.hi_closed();  // open end first
}

}  // namespace crisper

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>

namespace crisper {

using Real = double;
inline constexpr Real kInf = std::numeric_limits<Real>::infinity();

/// Interval on the extended real line with open/closed endpoints.
/// Infinite endpoints are always open. The empty interval has a single
/// canonical representation so equality is plain field comparison; all
/// operations compare endpoints exactly, by value and flag, never with a
/// floating tolerance.
class Interval {
 public:
  Interval() = default;  // canonical empty

  static Interval make(Real lo, bool lo_closed, Real hi, bool hi_closed);
  static Interval open(Real lo, Real hi) { return make(lo, false, hi, false); }
  static Interval closed(Real lo, Real hi) { return make(lo, true, hi, true); }
  static Interval singleton(Real v) { return make(v, true, v, true); }
  static Interval all() { return make(-kInf, false, kInf, false); }
  static Interval empty() { return Interval(); }

  Real lo() const { return lo_; }
  Real hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_empty() const { return lo_ > hi_; }
  bool is_singleton() const { return lo_ == hi_ && lo_closed_; }

  bool contains(Real x) const {
    return (lo_ < x || (lo_closed_ && lo_ == x)) &&
           (x < hi_ || (hi_closed_ && hi_ == x));
  }

  /// Superset test; the empty interval is a subset of everything.
  bool contains(const Interval& o) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Real lo_ = kInf;
  Real hi_ = -kInf;
  bool lo_closed_ = false;
  bool hi_closed_ = false;
};

/// Exact set intersection; at equal endpoints closed wins only against closed.
Interval intersect(const Interval& p, const Interval& q);

/// Strict weak order used for canonical sorting of boxes and regions.
bool interval_less(const Interval& p, const Interval& q);

}  // namespace crisper

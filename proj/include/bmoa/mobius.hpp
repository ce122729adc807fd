#pragma once

#include "bmoa/analytic.hpp"

namespace bmoa {

/// The disc automorphism sigma_a(z) = (a - z)/(1 - conj(a) z).
/// Swaps 0 and a, is an involution, and maps the circle onto itself.
class MobiusMap {
  public:
    explicit MobiusMap(DiscPoint base) : base_(base) {}
    cplx operator()(cplx z) const;
    DiscPoint base() const { return base_; }

  private:
    DiscPoint base_;
};

cplx sigma(const DiscPoint& a, cplx z);

/// L(a) = log(2/(1-|a|^2)).
double log_weight(const DiscPoint& a);

/// P(a, e^{i theta}) = (1-|a|^2)/|e^{i theta} - a|^2. Positive with mean 1.
double poisson_kernel(const DiscPoint& a, double theta);
double poisson_kernel(const DiscPoint& a, cplx boundary_point);

/// s(r) = 2(1+r)/(1-r) for r in (0,1).
double s_factor(double r);

/// Membership in Q(r,t) = r*closed-disc  union  {sigma_b(w): |b|<=r, |w|<=t}.
/// Uses the closed-form radius (r+t)/(1+rt) as a fast path and a 64-point
/// sample of |b| = r as a fallback.
bool in_Q(cplx z, double r, double t);

}  // namespace bmoa

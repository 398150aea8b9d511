#pragma once

#include "qheis/schwartz.hpp"

namespace qheis {

/// Twisted convolution on the (x, y) slots per r-slice,
///   (f x g)(X, Y, r) = int f(x,y,r) g(X-x, Y-y, r) ebar[eta(r) x.(Y-y)] dx dy,
/// the unique product making every pi_r and pi_pq multiplicative.  With
/// `classical` set the cocycle is dropped (sigma == 1) and this is plain
/// convolution slice by slice.
SchwartzAPtr twisted_multiply(SchwartzAPtr f, SchwartzAPtr g, bool classical = false);

/// Involution f*(x,y,r) = conj(f(-x,-y,r)) ebar[eta(r) x.y]; the adjoint of
/// pi_r(f) is pi_r(f*).
SchwartzAPtr involution(SchwartzAPtr f);

/// Regular representation L(f) xi = f x xi.
SchwartzAPtr regular_rep(SchwartzAPtr f, SchwartzAPtr xi);

/// Term cap for lazily evaluated product slices.
inline constexpr std::size_t kTwistedTermCap = 4096;

} // namespace qheis

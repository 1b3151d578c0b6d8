// bounds.hpp -- exact arithmetic for the maximal quotient complexity of
// atoms: the bound f(n,r), its closed forms for small r, and the summary
// table with max and growth-ratio rows.

#ifndef ATOMKIT_BOUNDS_HPP
#define ATOMKIT_BOUNDS_HPP

#include <string>

#include <gmpxx.h>

namespace atomkit {

// Exact nonnegative counts; bound values overflow 64 bits well before n = 40.
using BigCount = mpz_class;

// "i choose j". Zero when j < 0 or j > i; i must be nonnegative. Arguments
// are positional (upper, lower) regardless of any superscript convention.
BigCount binom(long i, long j);

// Upper bound on the quotient complexity of an atom with r complemented
// quotients of an n-quotient language: 2^n - 1 when r = 0 or r = n, else
// 1 + sum_{k=1..r} sum_{h=k+1..k+n-r} C(n,h) * C(h,k).
BigCount atom_bound(int n, int r);

// Closed forms for r in {1, 2, 3}, valid for r <= n-1:
//   f(n,1) = n*2^(n-1) - n + 1
//   f(n,2) = n*2^(n-1) - 2n + (n(n-1)/2)(2^(n-2) - 1) + 1
//   f(n,3) = n*2^(n-1) - (n^2+n) + (n(n-1)(n+4)/6)(2^(n-3) - 1) + 1
BigCount atom_bound_closed(int n, int r);

struct MaxBound {
    int r = 0;
    BigCount value;
};

// The maximal bound over all r, attained at r = floor(n/2) for n >= 2.
MaxBound max_bound(int n);

// f(n,r) = f(n,n-r) for all 1 <= r <= n-1.
bool symmetry_check(int n);

// max_bound(n).value / max_bound(n-1).value as a decimal string, computed by
// exact long division and rounded to `decimals` places (at least 6).
std::string growth_ratio(int n, int decimals = 6);

// Rounded-half-up decimal rendering of num/den with `decimals` places.
std::string decimal_ratio(const BigCount& num, const BigCount& den, int decimals);

// The bound table for n = 1..max_n with one row per r = 0..floor(max_n/2),
// plus max and ratio rows. Text mode uses thousands separators and marks the
// per-column maxima with a trailing '*'; CSV mode emits bare values.
std::string render_bound_table(int max_n, bool csv);

} // namespace atomkit

#endif

#pragma once

#include <vector>

#include <gmpxx.h>

namespace trx {

// Dense power series with exact rational coefficients, truncated at a fixed
// order; all arithmetic stays exact and drops terms beyond the truncation.
struct Series {
  std::vector<mpq_class> c; // c[k] = coefficient of z^k

  explicit Series(int order = 0) : c(order + 1, 0) {}
  int order() const { return (int)c.size() - 1; }
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series mul_z(const Series& a);                 // multiply by z
Series inverse(const Series& a);               // needs a.c[0] != 0
Series operator/(const Series& a, const Series& b);

// A(z) = z (1+A)^3, the series of ternary trees by number of nodes.
Series series_A(int N);

// C(z) = z (A - A^2 + 1) / (1 + z (A - A^2 + 1)); its coefficient of z^n is
// the number of rooted 4-connected triangulations with n+1 vertices.  Also
// checks the identity T + 1 = (U+1)/(1 - z(U+1)) for T = A - A^2 and
// U = C/z - 1 up to order N.
Series series_C(int N);

// Number of rooted irreducible triangulations with n >= 1 inner vertices:
// 4 (3n)! / (n! (2n+2)!).
mpz_class rooted_irreducible_count(long n);

// Number of unrooted irreducible triangulations with n >= 1 inner vertices
// (quotient by the rotational symmetries; three congruence cases).
mpz_class unrooted_irreducible_count(long n);

// Tutte's alternating-sum formula for the number of rooted 4-connected
// planar triangulations, indexed so that tutte_4connected(n) equals
// [z^{n-1}] series_C for every n >= 2.
mpz_class tutte_4connected(long n);

// Distribution of a tree parameter: zu[n][k] = number of rooted bicolored
// ternary trees with n nodes (both root stem colors counted) having k red
// edges, resp. k internal red edges.  Dense in u, intended for small N.
struct BivariateSeries {
  std::vector<std::vector<mpz_class>> zu;
};

BivariateSeries bivariate_red_edges(int N);
BivariateSeries bivariate_internal_red(int N);

// Mean of the same parameters at each size, exact; computed with first-order
// jets at u = 1 so it stays cheap at N in the hundreds.  Entry 0 is 0.
std::vector<mpq_class> mean_red_edges(int N);
std::vector<mpq_class> mean_internal_red(int N);

} // namespace trx

#pragma once

// The c2-invariant at a prime by four independent routes.

#include <array>
#include <string>
#include <vector>

#include "c2kit/reduction.hpp"

namespace c2kit {

struct C2Value {
  long long p = 0;
  long long value = 0;  // canonical residue in 0..p-1
  std::string method;

  // Representative in (-p/2, p/2], e.g. p-1 shows as -1.
  long long signed_value() const { return 2 * value > p ? value - p : value; }
  bool operator==(const C2Value& o) const { return p == o.p && value == o.value; }
};

// [Psi_G]_p / p^2 mod p.  Throws ConsistencyError if p^2 does not divide the
// point count.
C2Value c2_definition(const Multigraph& g, long long p);

// (-1)^n [D^n]_p over the remaining E - n variables at the deepest stage of
// the standard reduction (n <= E - 1).  Returns 0 directly when 2l < E and
// E >= 4.  Requires 2l <= E; E = 3 is rejected because no stage n < E
// exists.
C2Value c2_denom(const Multigraph& g, long long p, const std::vector<int>& order = {});

// -coefficient of prod_{e != e1,e2,e3} a_e^{p-1} in
// (Psi^{13,23} Psi^{1,2}_3)^{p-1}.  Requires E = 2l.  The default triple is
// the first three edges.
C2Value c2_coeff(const Multigraph& g, long long p, std::array<int, 3> triple = {1, 2, 3});

// (-1)^{n-1} (^nPsi^2)_p (sum of Legendre symbols) at the deepest stage of
// the quadratic reduction.  p must be odd.
C2Value c2_legendre(const Multigraph& g, long long p, const std::vector<int>& order = {});

// All applicable routes for one prime (Legendre only for odd p, coefficient
// only when E = 2l).
std::vector<C2Value> c2_all(const Multigraph& g, long long p, const std::vector<int>& order = {});

// c2(G - v) = c2(G' - v) at each prime, where G' is the double triangle
// reduction of the 4-regular graph g on edge e and v survives the move.
bool dtr_invariance_check(const Multigraph& g, int e, int v, const std::vector<long long>& primes = {2});

}  // namespace c2kit

#pragma once

// Denominator reduction and quadratic denominator reduction along an edge
// sequence.

#include <string>
#include <vector>

#include "c2kit/graphpoly.hpp"

namespace c2kit {

enum class ReductionStatus { Continuing, WeightDrop, NotFactorable, Exhausted };

std::string to_string(ReductionStatus s);

struct ReductionStage {
  int n = 0;              // number of edges reduced so far
  SparsePoly poly;        // D^n (standard) or ^nPsi^2 (quadratic)
  bool perfect_square = false;
  // Edges not yet reduced; the ambient variables of the stage.
  std::vector<int> remaining;
};

struct ReductionTrace {
  std::vector<int> edge_order;
  std::vector<ReductionStage> stages;
  ReductionStatus status = ReductionStatus::Continuing;

  const ReductionStage& deepest() const { return stages.back(); }
  bool has_zero_stage() const;
};

// Completes a partial order with the missing edges in increasing id order;
// rejects repeated or invalid edges.
std::vector<int> complete_edge_order(const Multigraph& g, const std::vector<int>& order);

// Seeds D^3 = Psi^{13,23} Psi^{1,2}_3, D^4 = Psi^{13,24} Psi^{14,23} and
// D^5 = the 5-invariant (edge names taken from the order), then iterates:
// with D^n = A x^2 + B x + C in the next edge variable, D^{n+1} is the
// square root of B^2 - 4AC.  Stages run up to n = E - 1.  All stage
// polynomials have positive leading coefficient.
ReductionTrace denominator_reduce(const Multigraph& g, const std::vector<int>& order = {});

// Seeds ^3Psi^2 = (Psi^{13,23} Psi^{1,2}_3)^2 and iterates the two admissible
// shapes: a perfect square (A x^2 + B x + C)^2 gives B^2 - 4AC; a product
// (D x^2 + E x + F)(H x + J)^2 gives D J^2 - E H J + F H^2.  Anything else
// stops the trace as not factorable.
ReductionTrace quadratic_reduce(const Multigraph& g, const std::vector<int>& order = {});

// True iff the standard trace reaches the zero polynomial or a perfect
// square.
bool has_weight_drop(const Multigraph& g, const std::vector<int>& order = {});

// Discriminant step shared by both reductions: for f of degree <= 2 in x
// returns B^2 - 4AC; throws DomainError when the degree exceeds 2.
SparsePoly discriminant_in(const SparsePoly& f, int x);

// Attempts the squared-linear-factor step for P of degree <= 4 in x.
// Returns the resultant D J^2 - E H J + F H^2 when P = Q (H x + J)^2 is
// detected through gcd(P, dP/dx) of degree one, otherwise nullopt.
std::optional<SparsePoly> squared_linear_factor_step(const SparsePoly& p, int x);

}  // namespace c2kit

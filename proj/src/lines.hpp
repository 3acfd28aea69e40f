#pragma once

#include <vector>

#include "bipoly.hpp"
#include "family.hpp"
#include "ratfunc.hpp"

namespace cmline {

/// Degrees of the expansion line bundles lambda_0 .. lambda_{n+1}. When the
/// family carries no pushforward only the top two are known; `degrees` then
/// holds {lambda_n, lambda_{n+1}}.
struct LambdaVector {
  int n = 1;
  bool full = false;
  std::vector<Rational> degrees;

  Rational lambda_top() const { return degrees.back(); }
  Rational lambda_n() const { return degrees[degrees.size() - 2]; }
};

/// Top two coefficients of an equivariant weight polynomial
/// w(k) = b0 k^{n+1} + b1 k^n + ...
struct WeightData {
  Rational b0;
  Rational b1;
};

/// The slope 2 a1 / a0 of the fibre Hilbert polynomial.
Rational mu(const FamilyData& f);

/// Degree of the CM line: mu * deg_L_top + (n+1) * deg_KL. When the family
/// carries a full pushforward the same number is recomputed from the
/// extracted lambda vector as (mu + n(n+1)) lambda_{n+1} - 2(n+1) lambda_n;
/// disagreement of the two routes is an Inconsistency error.
Rational cm_degree(const FamilyData& f);

/// CM degree normalised by 2 a0 (n+1)!, the normalisation that is additive
/// on fibred products and invariant under rescaling the polarisation.
Rational cm_prime_degree(const FamilyData& f);

LambdaVector lambda_vector(const FamilyData& f);

/// deg det of the pushdown of L^k at a concrete k; needs the pushforward.
Rational lambda_of_k(const FamilyData& f, long long k);

/// Degree of the Hilbert line of (X, L^r) at level k:
/// p(r) deg lambda(kr) - k p(kr) deg lambda(r), exact in (k, r).
BiPoly hilb_degree_bipoly(const FamilyData& f);

/// Degree of the Cornalba-Harris line of (X, L^r) as a polynomial in r:
/// p(r) r^{n+1} lambda_{n+1} - a0 r^n (n+1)! deg lambda(r).
UniPoly ch_degree(const FamilyData& f);

/// First-order CM perturbation of a blowup along a multisection:
/// -(d/a0) deg_L_top + 6 deg_L|_C. Requires relative dimension 2.
Rational sigma_blowup(const FamilyData& ambient, const MultisectionSpec& ms);

/// The CM degree of the blowup as an exact rational function of eps; its
/// value at 0 is cm_degree(ambient) and its derivative at 0 is sigma_blowup.
RationalFunctionEps cm_eps_function(const FamilyData& ambient, const MultisectionSpec& ms);

/// Futaki invariant 2 (n+1)!/a0 * (b1 a0 - b0 a1) of a one-parameter action
/// with the given weight data.
Rational futaki(const FamilyData& f, const WeightData& w);

}  // namespace cmline

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace cmline {

/// Intersection profile of a polarised family over a curve: everything the
/// line-degree formulas consume.
struct FamilyData {
  int n = 1;                           // relative fibre dimension
  int genus_base = 0;                  // genus of the base curve
  UniPoly hilb;                        // fibre Hilbert polynomial p(k), degree n
  Rational deg_L_top;                  // pushforward of c1(L)^{n+1}
  Rational deg_KL;                     // pushforward of c1(K_{X/B}) c1(L)^n
  std::optional<UniPoly> pushforward;  // deg det of the derived pushdown of L^k, degree n+1
  std::string label;

  Rational a0() const { return hilb.coeff(n); }
  Rational a1() const { return hilb.coeff(n - 1); }
};

/// Numerical data of a multisection C in the total space: degree over the
/// base, canonical degree of C, and the restricted L / relative-K degrees.
/// A disjoint union of curves is entered with all fields summed.
struct MultisectionSpec {
  long long d = 1;
  long long canonical_degree = -2;
  Rational deg_L;
  Rational deg_K_rel;
};

/// Shape checks every profile must satisfy: n >= 1, deg(hilb) = n, a0 > 0.
void validate_basic(const FamilyData& f);

/// Shape checks plus, when a pushforward is present, the two
/// Grothendieck-Riemann-Roch consistency identities on its top binomial
/// coefficients. Construction operations certify their output with this.
void validate_full(const FamilyData& f);

void validate(const MultisectionSpec& ms);

/// Split bundle P(O(d_0) + ... + O(d_n)) over a curve of the given genus,
/// polarised by the tautological line of the space of lines.
FamilyData proj_bundle(int genus_base, const std::vector<long long>& degrees);

/// The section of the split bundle given by the index-th summand.
MultisectionSpec section_of_summand(int genus_base, const std::vector<long long>& degrees,
                                    std::size_t index);

/// Blowup of a relative-dimension-2 family along a multisection, with the
/// exceptional weight eps left symbolic: every eps-dependent quantity is an
/// exact polynomial in eps.
struct BlowupFamily {
  FamilyData ambient;
  MultisectionSpec ms;
  Rational e_cubed;      // triple self-intersection of the exceptional divisor
  UniPoly deg_L_top_eps;
  UniPoly deg_KL_eps;
  UniPoly a0_eps;
  UniPoly a1_eps;

  /// Concrete profile at a numeric eps. Requires eps >= 0 and a0(eps) > 0;
  /// the pushforward is dropped. Relative ampleness of the perturbed
  /// polarisation is not determined by the profile and is not checked.
  FamilyData at(const Rational& eps) const;
};

BlowupFamily blowup_family(const FamilyData& ambient, const MultisectionSpec& ms);

FamilyData blowup(const FamilyData& ambient, const MultisectionSpec& ms, const Rational& eps);

/// Fibred product over the common base, polarised by the box tensor of the
/// factor polarisations.
FamilyData fibred_product(const FamilyData& f1, const FamilyData& f2);

/// Twist of the polarisation by a pullback of base degree t.
FamilyData twist(const FamilyData& f, const Rational& t);

/// Replace L by L^r, r >= 1.
FamilyData scale(const FamilyData& f, long long r);

}  // namespace cmline

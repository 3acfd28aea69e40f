#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "family.hpp"
#include "lines.hpp"

namespace cmline {

/// Outcome of one identity check. A failing report always carries the two
/// unequal values (or the error that interrupted the computation) in its
/// witness, together with the construction path of the family involved.
struct VerificationReport {
  std::string check_name;
  bool pass = false;
  nlohmann::json witness;
  std::string family_label;
};

nlohmann::json to_json(const VerificationReport& r);

struct CheckOptions {
  int r_max = 5;
  std::vector<Rational> t_values = {Rational(-3), Rational(-2), Rational(-1), Rational(0),
                                    Rational(1),  Rational(2),  Rational(3)};
};

/// cm_degree(scale(F, r)) = r^n cm_degree(F) for r = 1..r_max.
VerificationReport check_homogeneity(const FamilyData& f, int r_max);

/// cm_degree is unchanged by twisting; with a pushforward present the whole
/// Hilbert-line bipolynomial must be unchanged as well.
VerificationReport check_rigidity(const FamilyData& f, const std::vector<Rational>& t_values);

/// cm_prime_degree of the fibred product equals the sum over the factors,
/// the left side computed through the product intersection profile.
VerificationReport check_product_additivity(const FamilyData& f1, const FamilyData& f2);

/// Leading-order structure of the Hilbert-line bipolynomial: the CM term
/// sits alone in the (n+1, 2n) slot, the remaining support is lower order,
/// and the Cornalba-Harris line shows the matching r^{2n} leading term.
VerificationReport check_prop31(const FamilyData& f);

/// The pushforward has degree at most n+1, its binomial-basis expansion
/// reconstructs it exactly at k = 0..2n+4, and the extracted top two
/// coefficients satisfy both Grothendieck-Riemann-Roch identities.
VerificationReport check_mk_consistency(const FamilyData& f);

/// The exact eps-function of the blowup has value cm_degree(ambient) and
/// derivative sigma_blowup at eps = 0.
VerificationReport check_sigma_first_order(const FamilyData& ambient, const MultisectionSpec& ms);

}  // namespace cmline

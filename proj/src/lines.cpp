#include "lines.hpp"

#include "errors.hpp"

namespace cmline {

Rational mu(const FamilyData& f) {
  validate_basic(f);
  return Rational(2) * f.a1() / f.a0();
}

LambdaVector lambda_vector(const FamilyData& f) {
  validate_basic(f);
  LambdaVector lv;
  lv.n = f.n;
  if (f.pushforward) {
    lv.full = true;
    lv.degrees = to_binomial_basis(*f.pushforward);
    if (lv.degrees.size() < static_cast<std::size_t>(f.n) + 2)
      lv.degrees.resize(static_cast<std::size_t>(f.n) + 2, Rational(0));
  } else {
    lv.full = false;
    lv.degrees = {(Rational(f.n) * f.deg_L_top - f.deg_KL) / Rational(2), f.deg_L_top};
  }
  return lv;
}

Rational cm_degree(const FamilyData& f) {
  validate_basic(f);
  const Rational m = mu(f);
  Rational via_chern = m * f.deg_L_top + Rational(f.n + 1) * f.deg_KL;
  if (f.pushforward) {
    LambdaVector lv = lambda_vector(f);
    Rational via_lambda = (m + Rational(static_cast<long long>(f.n) * (f.n + 1))) * lv.lambda_top() -
                          Rational(2LL * (f.n + 1)) * lv.lambda_n();
    if (via_chern != via_lambda)
      fail(ErrorKind::Inconsistency, "CM degree routes disagree",
           {{"via_chern_classes", via_chern.str()},
            {"via_lambda_vector", via_lambda.str()},
            {"family", f.label}});
  }
  return via_chern;
}

Rational cm_prime_degree(const FamilyData& f) {
  return cm_degree(f) / (Rational(2) * f.a0() * Rational(factorial(f.n + 1)));
}

Rational lambda_of_k(const FamilyData& f, long long k) {
  validate_basic(f);
  if (!f.pushforward)
    fail(ErrorKind::Capability, "family carries no closed-form pushforward [" + f.label + "]");
  return f.pushforward->eval(Rational(k));
}

BiPoly hilb_degree_bipoly(const FamilyData& f) {
  validate_basic(f);
  if (!f.pushforward)
    fail(ErrorKind::Capability, "family carries no closed-form pushforward [" + f.label + "]");
  const UniPoly& p = f.hilb;
  const UniPoly& lam = *f.pushforward;
  BiPoly p_r = BiPoly::from_r(p);
  BiPoly lam_kr = compose_scale(lam);
  BiPoly k = BiPoly::monomial(1, 0, Rational(1));
  BiPoly p_kr = compose_scale(p);
  BiPoly lam_r = BiPoly::from_r(lam);
  return p_r * lam_kr - k * p_kr * lam_r;
}

UniPoly ch_degree(const FamilyData& f) {
  validate_basic(f);
  if (!f.pushforward)
    fail(ErrorKind::Capability, "family carries no closed-form pushforward [" + f.label + "]");
  LambdaVector lv = lambda_vector(f);
  UniPoly term1 = f.hilb * UniPoly::monomial(f.n + 1, lv.degrees[static_cast<std::size_t>(f.n) + 1]);
  UniPoly term2 =
      UniPoly::monomial(f.n, f.a0() * Rational(factorial(f.n + 1))) * *f.pushforward;
  return term1 - term2;
}

Rational sigma_blowup(const FamilyData& ambient, const MultisectionSpec& ms) {
  if (ambient.n != 2)
    fail(ErrorKind::Precondition, "sigma is defined for relative dimension 2");
  validate_basic(ambient);
  validate(ms);
  return -(Rational(ms.d) / ambient.a0()) * ambient.deg_L_top + Rational(6) * ms.deg_L;
}

RationalFunctionEps cm_eps_function(const FamilyData& ambient, const MultisectionSpec& ms) {
  BlowupFamily b = blowup_family(ambient, ms);
  RationalFunctionEps mu_eps(b.a1_eps * Rational(2), b.a0_eps);
  RationalFunctionEps l_top = RationalFunctionEps::from_poly(b.deg_L_top_eps);
  RationalFunctionEps kl = RationalFunctionEps::from_poly(b.deg_KL_eps * Rational(3));
  return mu_eps * l_top + kl;
}

Rational futaki(const FamilyData& f, const WeightData& w) {
  validate_basic(f);
  return Rational(2) * Rational(factorial(f.n + 1)) / f.a0() * (w.b1 * f.a0() - w.b0 * f.a1());
}

}  // namespace cmline

#include "verify.hpp"

#include "errors.hpp"
#include "jsonio.hpp"

namespace cmline {

nlohmann::json to_json(const VerificationReport& r) {
  return {{"check", r.check_name},
          {"status", r.pass ? "pass" : "fail"},
          {"family", r.family_label},
          {"witness", r.witness}};
}

namespace {

nlohmann::json error_witness(const Error& e) {
  nlohmann::json w = {{"error", e.what()}};
  if (!e.detail().is_null()) w["detail"] = e.detail();
  return w;
}

template <typename Body>
VerificationReport guarded(std::string check_name, std::string label, Body&& body) {
  VerificationReport r;
  r.check_name = std::move(check_name);
  r.family_label = std::move(label);
  try {
    body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.witness = error_witness(e);
  }
  return r;
}

}  // namespace

VerificationReport check_homogeneity(const FamilyData& f, int r_max) {
  if (r_max < 1) fail(ErrorKind::Precondition, "homogeneity check needs r_max >= 1");
  return guarded("homogeneity", f.label, [&](VerificationReport& rep) {
    const Rational base = cm_degree(f);
    nlohmann::json rows = nlohmann::json::array();
    rep.pass = true;
    for (long long r = 1; r <= r_max; ++r) {
      Rational lhs = cm_degree(scale(f, r));
      Rational rhs = Rational(r).pow(static_cast<unsigned>(f.n)) * base;
      rows.push_back({{"r", r}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
      if (lhs != rhs) rep.pass = false;
    }
    rep.witness = {{"cm_degree", base.str()}, {"rows", rows}};
  });
}

VerificationReport check_rigidity(const FamilyData& f, const std::vector<Rational>& t_values) {
  return guarded("rigidity", f.label, [&](VerificationReport& rep) {
    const Rational base = cm_degree(f);
    const bool with_bipoly = f.pushforward.has_value();
    BiPoly base_bipoly;
    if (with_bipoly) base_bipoly = hilb_degree_bipoly(f);
    nlohmann::json rows = nlohmann::json::array();
    rep.pass = true;
    for (const Rational& t : t_values) {
      FamilyData ft = twist(f, t);
      Rational lhs = cm_degree(ft);
      nlohmann::json row = {{"t", t.str()}, {"cm_twisted", lhs.str()}, {"cm", base.str()}};
      if (lhs != base) rep.pass = false;
      if (with_bipoly) {
        bool same = hilb_degree_bipoly(ft) == base_bipoly;
        row["hilb_bipoly_unchanged"] = same;
        if (!same) rep.pass = false;
      }
      rows.push_back(std::move(row));
    }
    rep.witness = {{"cm_degree", base.str()}, {"rows", rows}};
  });
}

VerificationReport check_product_additivity(const FamilyData& f1, const FamilyData& f2) {
  return guarded("product_additivity", "product(" + f1.label + "," + f2.label + ")",
                 [&](VerificationReport& rep) {
                   Rational lhs = cm_prime_degree(fibred_product(f1, f2));
                   Rational rhs = cm_prime_degree(f1) + cm_prime_degree(f2);
                   rep.pass = lhs == rhs;
                   rep.witness = {{"cm_prime_product", lhs.str()},
                                  {"cm_prime_sum", rhs.str()},
                                  {"cm_prime_left", cm_prime_degree(f1).str()},
                                  {"cm_prime_right", cm_prime_degree(f2).str()}};
                 });
}

VerificationReport check_prop31(const FamilyData& f) {
  if (!f.pushforward)
    fail(ErrorKind::Capability, "leading-order check needs a pushforward [" + f.label + "]");
  return guarded("prop31_leading_order", f.label, [&](VerificationReport& rep) {
    const int n = f.n;
    BiPoly b = hilb_degree_bipoly(f);
    const Rational cm = cm_degree(f);
    const Rational cm_slot = f.a0() / (Rational(2) * Rational(factorial(n + 1))) * cm;

    bool slot_ok = b.coefficient(n + 1, 2 * n) == cm_slot;

    bool support_ok = true;
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& [key, c] : b.terms()) {
      const auto [i, j] = key;
      bool ok = i <= n + 1 && j <= 2 * n + 1 && (i < n + 1 || j <= 2 * n);
      // Inside the i = n+1 row only j <= 2n-1 may appear once the CM slot
      // is taken out.
      if (ok && i == n + 1 && j == 2 * n && !slot_ok) ok = false;
      if (!ok) {
        support_ok = false;
        bad.push_back(nlohmann::json::array({i, j, c.str()}));
      }
    }

    UniPoly ch = ch_degree(f);
    Rational ch_lead = ch.coeff(2 * n);
    Rational ch_expected = f.a0() / Rational(2) * cm;
    bool ch_ok = ch_lead == ch_expected && ch.degree() <= 2 * n;

    rep.pass = slot_ok && support_ok && ch_ok;
    rep.witness = {{"cm_degree", cm.str()},
                   {"bipoly_cm_slot", b.coefficient(n + 1, 2 * n).str()},
                   {"bipoly_cm_slot_expected", cm_slot.str()},
                   {"bipoly_top_corner", b.coefficient(n + 1, 2 * n + 1).str()},
                   {"support_violations", bad},
                   {"ch_r2n_coefficient", ch_lead.str()},
                   {"ch_r2n_expected", ch_expected.str()},
                   {"ch_degree", ch.degree()}};
  });
}

VerificationReport check_mk_consistency(const FamilyData& f) {
  if (!f.pushforward)
    fail(ErrorKind::Capability, "expansion check needs a pushforward [" + f.label + "]");
  return guarded("mk_consistency", f.label, [&](VerificationReport& rep) {
    const UniPoly& push = *f.pushforward;
    const int n = f.n;
    bool degree_ok = push.degree() <= n + 1;

    std::vector<Rational> c = to_binomial_basis(push);
    UniPoly reconstructed;
    for (std::size_t i = 0; i < c.size(); ++i)
      reconstructed += binomial_poly(static_cast<int>(i)) * c[i];
    bool recon_ok = true;
    for (long long k = 0; k <= 2 * n + 4; ++k)
      if (reconstructed.eval(Rational(k)) != push.eval(Rational(k))) recon_ok = false;

    c.resize(static_cast<std::size_t>(n) + 2 > c.size() ? static_cast<std::size_t>(n) + 2 : c.size(),
             Rational(0));
    Rational lam_top = c[static_cast<std::size_t>(n) + 1];
    Rational lam_n = c[static_cast<std::size_t>(n)];
    bool grr1 = lam_top == f.deg_L_top;
    Rational grr2_lhs = Rational(n) * lam_top - Rational(2) * lam_n;
    bool grr2 = grr2_lhs == f.deg_KL;

    rep.pass = degree_ok && recon_ok && grr1 && grr2;
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& ci : c) lambda.push_back(ci.str());
    rep.witness = {{"pushforward_degree", push.degree()},
                   {"degree_bound_ok", degree_ok},
                   {"reconstruction_ok", recon_ok},
                   {"lambda", lambda},
                   {"lambda_top", lam_top.str()},
                   {"deg_L_top", f.deg_L_top.str()},
                   {"n*lambda_top-2*lambda_n", grr2_lhs.str()},
                   {"deg_KL", f.deg_KL.str()}};
  });
}

VerificationReport check_sigma_first_order(const FamilyData& ambient, const MultisectionSpec& ms) {
  if (ambient.n != 2)
    fail(ErrorKind::Precondition, "sigma check needs relative dimension 2");
  return guarded("sigma_first_order", ambient.label, [&](VerificationReport& rep) {
    RationalFunctionEps f = cm_eps_function(ambient, ms);
    Rational slope = f.derivative_at_zero();
    Rational sigma = sigma_blowup(ambient, ms);
    Rational at_zero = f.value_at_zero();
    Rational cm_ambient = cm_degree(ambient);
    rep.pass = slope == sigma && at_zero == cm_ambient;
    rep.witness = {{"sigma", sigma.str()},
                   {"cm_eps_derivative_at_zero", slope.str()},
                   {"cm_eps_at_zero", at_zero.str()},
                   {"cm_ambient", cm_ambient.str()},
                   {"cm_eps", to_json(f)}};
  });
}

}  // namespace cmline

#include "family.hpp"

#include <numeric>

#include "errors.hpp"

namespace cmline {

void validate_basic(const FamilyData& f) {
  if (f.n < 1) fail(ErrorKind::Precondition, "relative dimension must be at least 1");
  if (f.genus_base < 0) fail(ErrorKind::Precondition, "negative base genus");
  if (f.hilb.degree() != f.n)
    fail(ErrorKind::Precondition,
         "Hilbert polynomial degree " + std::to_string(f.hilb.degree()) +
             " does not match relative dimension " + std::to_string(f.n) + " [" + f.label + "]");
  if (!(f.a0() > Rational(0)))
    fail(ErrorKind::Precondition, "leading Hilbert coefficient must be positive [" + f.label + "]");
}

void validate_full(const FamilyData& f) {
  validate_basic(f);
  if (!f.pushforward) return;
  const UniPoly& push = *f.pushforward;
  if (push.degree() > f.n + 1)
    fail(ErrorKind::Inconsistency,
         "pushforward degree exceeds n+1 [" + f.label + "]");
  std::vector<Rational> c = to_binomial_basis(push);
  c.resize(static_cast<std::size_t>(f.n) + 2, Rational(0));
  const Rational& top = c[static_cast<std::size_t>(f.n) + 1];
  if (top != f.deg_L_top)
    fail(ErrorKind::Inconsistency, "pushforward top coefficient disagrees with deg_L_top",
         {{"lambda_top", top.str()}, {"deg_L_top", f.deg_L_top.str()}, {"family", f.label}});
  Rational kl = Rational(f.n) * f.deg_L_top - Rational(2) * c[static_cast<std::size_t>(f.n)];
  if (kl != f.deg_KL)
    fail(ErrorKind::Inconsistency, "pushforward lambda_n disagrees with deg_KL",
         {{"n*deg_L_top - 2*lambda_n", kl.str()}, {"deg_KL", f.deg_KL.str()}, {"family", f.label}});
}

void validate(const MultisectionSpec& ms) {
  if (ms.d < 1) fail(ErrorKind::Precondition, "multisection degree must be at least 1");
  if (ms.canonical_degree < -2 * ms.d)
    fail(ErrorKind::Precondition,
         "canonical degree below -2d is impossible for a disjoint union of smooth curves");
}

namespace {

std::string degree_list_str(const std::vector<long long>& degrees) {
  std::string s = "[";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s + "]";
}

}  // namespace

FamilyData proj_bundle(int genus_base, const std::vector<long long>& degrees) {
  if (degrees.size() < 2)
    fail(ErrorKind::Precondition, "proj_bundle needs at least two summands");
  if (genus_base < 0) fail(ErrorKind::Precondition, "negative base genus");
  const int n = static_cast<int>(degrees.size()) - 1;
  const long long s = std::accumulate(degrees.begin(), degrees.end(), 0LL);

  FamilyData f;
  f.n = n;
  f.genus_base = genus_base;
  {
    // p(k) = C(k+n, n) = prod_{j=1}^{n} (k+j)/j
    UniPoly p(Rational(1));
    for (int j = 1; j <= n; ++j)
      p *= (UniPoly::variable() + UniPoly(Rational(j))) * Rational(BigInt(1), BigInt(j));
    f.hilb = std::move(p);
  }
  f.deg_L_top = Rational(-s);
  f.deg_KL = Rational(static_cast<long long>(n) * s);
  {
    // deg lambda(k) = -s * C(k+n, n+1) = -s * prod_{j=0}^{n} (k+j) / (n+1)!
    UniPoly q(Rational(1));
    for (int j = 0; j <= n; ++j) q *= UniPoly::variable() + UniPoly(Rational(j));
    f.pushforward = q * Rational(BigInt(-s), factorial(n + 1));
  }
  f.label = "proj_bundle(g=" + std::to_string(genus_base) + "," + degree_list_str(degrees) + ")";
  validate_full(f);
  return f;
}

MultisectionSpec section_of_summand(int genus_base, const std::vector<long long>& degrees,
                                    std::size_t index) {
  if (index >= degrees.size())
    fail(ErrorKind::Precondition, "summand index " + std::to_string(index) + " out of range");
  const int n = static_cast<int>(degrees.size()) - 1;
  const long long s = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  MultisectionSpec ms;
  ms.d = 1;
  ms.canonical_degree = 2LL * genus_base - 2;
  ms.deg_L = Rational(-degrees[index]);
  ms.deg_K_rel = Rational(static_cast<long long>(n + 1) * degrees[index] - s);
  return ms;
}

BlowupFamily blowup_family(const FamilyData& ambient, const MultisectionSpec& ms) {
  if (ambient.n != 2)
    fail(ErrorKind::Precondition, "blowup along a multisection needs relative dimension 2");
  validate_basic(ambient);
  validate(ms);

  BlowupFamily b;
  b.ambient = ambient;
  b.ms = ms;

  const Rational l = ms.deg_L;
  const Rational kappa = ms.deg_K_rel;
  const Rational d(ms.d);
  // deg N_{C/X} by adjunction; the exceptional divisor cubes to its negative.
  Rational deg_normal = Rational(ms.canonical_degree) - kappa -
                        d * Rational(2LL * ambient.genus_base - 2);
  b.e_cubed = -deg_normal;

  b.deg_L_top_eps = UniPoly({ambient.deg_L_top, Rational(0), Rational(-3) * l, -b.e_cubed});
  b.deg_KL_eps = UniPoly({ambient.deg_KL, Rational(2) * l, b.e_cubed - kappa});
  b.a0_eps = UniPoly({ambient.a0(), Rational(0), -d / Rational(2)});
  b.a1_eps = UniPoly({ambient.a1(), -d / Rational(2)});
  return b;
}

FamilyData BlowupFamily::at(const Rational& eps) const {
  if (eps < Rational(0))
    fail(ErrorKind::Precondition, "blowup weight eps must be non-negative");
  Rational a0_new = a0_eps.eval(eps);
  if (!(a0_new > Rational(0)))
    fail(ErrorKind::Precondition,
         "blowup weight eps = " + eps.str() + " drives the leading Hilbert coefficient to " +
             a0_new.str());

  FamilyData f;
  f.n = 2;
  f.genus_base = ambient.genus_base;
  // p(k) - d (eps^2 k^2 + eps k) / 2
  Rational d(ms.d);
  UniPoly correction({Rational(0), d * eps / Rational(2), d * eps.pow(2) / Rational(2)});
  f.hilb = ambient.hilb - correction;
  f.deg_L_top = deg_L_top_eps.eval(eps);
  f.deg_KL = deg_KL_eps.eval(eps);
  f.pushforward = std::nullopt;
  f.label = "blowup(" + ambient.label + "; C[d=" + std::to_string(ms.d) +
            ",kC=" + std::to_string(ms.canonical_degree) + ",L=" + ms.deg_L.str() +
            ",K=" + ms.deg_K_rel.str() + "]; eps=" + eps.str() + ")";
  validate_full(f);
  return f;
}

FamilyData blowup(const FamilyData& ambient, const MultisectionSpec& ms, const Rational& eps) {
  return blowup_family(ambient, ms).at(eps);
}

FamilyData fibred_product(const FamilyData& f1, const FamilyData& f2) {
  if (f1.genus_base != f2.genus_base)
    fail(ErrorKind::Precondition, "fibred product of families over bases of different genus");
  validate_basic(f1);
  validate_basic(f2);

  const int n1 = f1.n, n2 = f2.n;
  const int n = n1 + n2;

  // Fibre intersection numbers of the factors.
  const Rational fib_L1 = Rational(factorial(n1)) * f1.a0();
  const Rational fib_L2 = Rational(factorial(n2)) * f2.a0();
  const Rational fib_KL1 = Rational(-2) * Rational(factorial(n1 - 1)) * f1.a1();
  const Rational fib_KL2 = Rational(-2) * Rational(factorial(n2 - 1)) * f2.a1();

  FamilyData f;
  f.n = n;
  f.genus_base = f1.genus_base;
  f.hilb = f1.hilb * f2.hilb;
  f.deg_L_top = Rational(binomial(n + 1, n1 + 1)) * f1.deg_L_top * fib_L2 +
                Rational(binomial(n + 1, n1)) * fib_L1 * f2.deg_L_top;
  f.deg_KL = Rational(binomial(n, n1)) * f1.deg_KL * fib_L2 +
             Rational(binomial(n, n1 - 1)) * fib_KL1 * f2.deg_L_top +
             Rational(binomial(n, n2)) * f2.deg_KL * fib_L1 +
             Rational(binomial(n, n2 - 1)) * fib_KL2 * f1.deg_L_top;
  if (f1.pushforward && f2.pushforward)
    f.pushforward = f2.hilb * *f1.pushforward + f1.hilb * *f2.pushforward;
  f.label = "product(" + f1.label + "," + f2.label + ")";
  validate_full(f);
  return f;
}

FamilyData twist(const FamilyData& f, const Rational& t) {
  validate_basic(f);
  FamilyData out = f;
  const Rational nf = Rational(factorial(f.n));
  out.deg_L_top += Rational(f.n + 1) * t * nf * f.a0();
  out.deg_KL += Rational(-2) * nf * t * f.a1();
  if (f.pushforward)
    out.pushforward = *f.pushforward + UniPoly::variable() * f.hilb * t;
  out.label = "twist(" + f.label + ",t=" + t.str() + ")";
  validate_full(out);
  return out;
}

FamilyData scale(const FamilyData& f, long long r) {
  if (r < 1) fail(ErrorKind::Precondition, "scale needs r >= 1");
  validate_basic(f);
  FamilyData out = f;
  out.hilb = f.hilb.scale_variable(Rational(r));
  out.deg_L_top = Rational(r).pow(static_cast<unsigned>(f.n) + 1) * f.deg_L_top;
  out.deg_KL = Rational(r).pow(static_cast<unsigned>(f.n)) * f.deg_KL;
  if (f.pushforward) out.pushforward = f.pushforward->scale_variable(Rational(r));
  out.label = "scale(" + f.label + ",r=" + std::to_string(r) + ")";
  validate_full(out);
  return out;
}

}  // namespace cmline

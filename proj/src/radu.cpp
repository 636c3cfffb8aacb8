#include "regover/radu.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "regover/arith.hpp"
#include "regover/errors.hpp"

namespace regover {

namespace {

Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

long floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p())
    throw std::overflow_error("floor(nu) does not fit in a long");
  return f.get_si();
}

}  // namespace

long RaduTuple::k() const { return std::gcd(m * m - 1, 24L); }

void RaduTuple::validate() const {
  if (m < 1 || M < 1 || N < 1)
    throw std::invalid_argument("radu tuple: m, M, N must be >= 1");
  if (t < 0 || t >= m)
    throw std::invalid_argument("radu tuple: need 0 <= t <= m-1");
  if (r.level() != M)
    throw std::invalid_argument("radu tuple: r must be indexed by div(M)");
  if (rprime.level() != N)
    throw std::invalid_argument("radu tuple: r' must be indexed by div(N)");
}

//----------------------------------------------------------------------------
// the six admissibility conditions
//----------------------------------------------------------------------------

DeltaStarReport check_delta_star(const RaduTuple& tu) {
  tu.validate();
  const long k = tu.k();
  DeltaStarReport rep;

  {  // 1: prime divisors of m divide N
    bool ok = true;
    std::string bad;
    for (const auto& [p, e] : factorize(tu.m)) {
      if (tu.N % p != 0) {
        ok = false;
        bad = std::to_string(p);
        break;
      }
    }
    rep.conditions[0] = {1, ok,
                         ok ? "prime divisors of m divide N"
                            : "prime " + bad + " divides m but not N"};
  }

  {  // 2: delta | mN whenever r_delta != 0
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < tu.r.divisor_list().size(); ++i) {
      const long d = tu.r.divisor_list()[i];
      if (tu.r.exponents()[i] != 0 && (tu.m * tu.N) % d != 0) {
        ok = false;
        bad = std::to_string(d);
        break;
      }
    }
    rep.conditions[1] = {2, ok,
                         ok ? "every active divisor of M divides mN"
                            : "divisor " + bad + " does not divide mN"};
  }

  {  // 3: 24 | k N sum r_delta m N / delta
    Rat sum(0);
    for (std::size_t i = 0; i < tu.r.divisor_list().size(); ++i) {
      Rat term(tu.r.exponents()[i] * tu.m * tu.N, tu.r.divisor_list()[i]);
      term.canonicalize();
      sum += term;
    }
    sum *= k * tu.N;
    const bool ok = sum.get_den() == 1 && sum.get_num() % 24 == 0;
    rep.conditions[2] = {3, ok, "k N sum(r_d m N / d) = " + rat_str(sum)};
  }

  {  // 4: 8 | k N sum r_delta
    const long v = k * tu.N * tu.r.exponent_sum();
    rep.conditions[3] = {4, v % 8 == 0,
                         "k N sum(r_d) = " + std::to_string(v)};
  }

  {  // 5: 24m / gcd(-24 k t - k sum(delta r_delta), 24m) divides N
    const long inner = -24 * k * tu.t - k * tu.r.weighted_exponent_sum();
    const long g = std::gcd(std::abs(inner), 24 * tu.m);
    const long quot = 24 * tu.m / g;
    rep.conditions[4] = {5, tu.N % quot == 0,
                         "24m/gcd(" + std::to_string(inner) + ", 24m) = " +
                             std::to_string(quot)};
  }

  {  // 6: for even m, either 4 | kN and 8 | sN, or 2 | s and 8 | (1-j)N,
     //    where prod delta^{|r_delta|} = 2^s j with j odd
    if (tu.m % 2 == 1) {
      rep.conditions[5] = {6, true, "m odd"};
    } else {
      long s = 0;
      Int j(1);
      for (std::size_t i = 0; i < tu.r.divisor_list().size(); ++i) {
        long d = tu.r.divisor_list()[i];
        const long e = std::abs(tu.r.exponents()[i]);
        long twos = 0;
        while (d % 2 == 0) {
          d /= 2;
          ++twos;
        }
        s += twos * e;
        for (long q = 0; q < e; ++q) j *= d;
      }
      const bool disj_a = (k * tu.N) % 4 == 0 && (s * tu.N) % 8 == 0;
      const Int one_minus_j_N = (Int(1) - j) * tu.N;
      const bool disj_b = s % 2 == 0 && one_minus_j_N % 8 == 0;
      rep.conditions[5] = {6, disj_a || disj_b,
                           "s = " + std::to_string(s) +
                               ", j odd; [4|kN and 8|sN] = " +
                               (disj_a ? "true" : "false") +
                               ", [2|s and 8|(1-j)N] = " +
                               (disj_b ? "true" : "false")};
    }
  }

  rep.all_pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                             [](const ConditionReport& c) { return c.pass; });
  return rep;
}

//----------------------------------------------------------------------------
// orbit, cusp orders, check bound
//----------------------------------------------------------------------------

std::vector<long> residue_orbit(const RaduTuple& tu) {
  tu.validate();
  const long mod = 24 * tu.m;
  const long wsum = tu.r.weighted_exponent_sum();
  std::set<long> orbit;
  for (long x = 1; x < mod; ++x) {
    if (std::gcd(x, mod) != 1) continue;
    const long s = (x * x) % mod;
    if ((s - 1) % 24 != 0)
      throw std::logic_error("residue_orbit: unit square not 1 mod 24");
    const long shift = (s - 1) / 24;
    long tp = (tu.t * s + shift * wsum) % tu.m;
    if (tp < 0) tp += tu.m;
    orbit.insert(tp);
  }
  return {orbit.begin(), orbit.end()};
}

Rat cusp_order_main(const RaduTuple& tu, long delta) {
  tu.validate();
  if (delta < 1 || tu.N % delta != 0)
    throw std::invalid_argument("cusp_order_main: delta must divide N");
  const long k = tu.k();
  std::optional<Rat> best;
  for (long lambda = 0; lambda < tu.m; ++lambda) {
    Rat sum(0);
    for (std::size_t i = 0; i < tu.r.divisor_list().size(); ++i) {
      const long d = tu.r.divisor_list()[i];
      const long rd = tu.r.exponents()[i];
      if (rd == 0) continue;
      const long g = std::gcd(d * (1 + k * lambda * delta), tu.m * delta);
      Rat term(rd * g * g, d * tu.m);
      term.canonicalize();
      sum += term;
    }
    sum /= 24;
    if (!best || sum < *best) best = sum;
  }
  return *best;
}

Rat cusp_order_aux(const RaduTuple& tu, long delta) {
  tu.validate();
  if (delta < 1 || tu.N % delta != 0)
    throw std::invalid_argument("cusp_order_aux: delta must divide N");
  Rat sum(0);
  for (std::size_t i = 0; i < tu.rprime.divisor_list().size(); ++i) {
    const long d = tu.rprime.divisor_list()[i];
    const long rd = tu.rprime.exponents()[i];
    if (rd == 0) continue;
    const long g = std::gcd(d, delta);
    Rat term(rd * g * g, d);
    term.canonicalize();
    sum += term;
  }
  return sum / 24;
}

NuBound verification_bound(const RaduTuple& tu, long t_min) {
  tu.validate();
  const Int index = index_gamma0(tu.N);
  Rat nu = Rat(tu.r.exponent_sum() + tu.rprime.exponent_sum()) * Rat(index);
  nu -= tu.rprime.weighted_exponent_sum();
  nu -= rat(tu.r.weighted_exponent_sum(), tu.m);
  nu /= 24;
  nu -= rat(t_min, tu.m);
  return {nu, floor_rat(nu)};
}

//----------------------------------------------------------------------------
// full certificate
//----------------------------------------------------------------------------

std::string to_string(CertFailure f) {
  switch (f) {
    case CertFailure::none: return "none";
    case CertFailure::delta_star_failed: return "delta_star_failed";
    case CertFailure::positivity_failed: return "positivity_failed";
    case CertFailure::finite_check_failed: return "finite_check_failed";
  }
  return "?";
}

RaduCertificate certify(const RaduTuple& tu, long modulus,
                        const FamilyParams& family,
                        std::optional<long> stated_floor_nu) {
  tu.validate();
  family.validate();
  if (modulus < 2)
    throw std::invalid_argument("certify: modulus must be >= 2");

  RaduCertificate cert;
  cert.tuple = tu;
  cert.modulus = modulus;
  cert.family = family;
  cert.stated_floor_nu = stated_floor_nu;

  // the coefficient stream the certificate talks about must be the family's
  {
    constexpr long kProbe = 50;
    const Series from_tuple = eta_expand(IntCoeffs{}, tu.r, kProbe);
    const Series from_family = gf_family(family, kProbe);
    if (first_mismatch(from_tuple, from_family))
      throw CertificateError(
          "certify: eta exponents do not expand to the family's "
          "generating function");
  }

  // the coset representatives [[1,0],[delta,1]] cover the modular group
  // only for N or N/2 square-free
  if (!(is_squarefree(tu.N) ||
        (tu.N % 2 == 0 && is_squarefree(tu.N / 2))))
    throw CosetLemmaInapplicable(
        "certify: neither N nor N/2 is square-free");

  cert.conditions = check_delta_star(tu);
  if (!cert.conditions.all_pass) {
    cert.failure = CertFailure::delta_star_failed;
    return cert;
  }

  cert.orbit = residue_orbit(tu);

  cert.positivity = true;
  for (long delta : divisors(tu.N)) {
    CosetEntry e;
    e.delta = delta;
    e.order_main = cusp_order_main(tu, delta);
    e.order_aux = cusp_order_aux(tu, delta);
    e.sum = e.order_main + e.order_aux;
    e.nonneg = e.sum >= 0;
    if (!e.nonneg) cert.positivity = false;
    cert.cosets.push_back(e);
  }
  if (!cert.positivity) {
    cert.failure = CertFailure::positivity_failed;
    return cert;
  }

  const NuBound nu = verification_bound(tu, cert.orbit.front());
  cert.nu = nu.exact;
  cert.floor_nu = nu.floor_value;

  // check further than strictly necessary when the stated bound is larger:
  // extra coefficients never weaken the conclusion
  long bound = nu.floor_value;
  if (stated_floor_nu) bound = std::max(bound, *stated_floor_nu);

  cert.finite.attempted = true;
  cert.finite.bound = bound;
  cert.finite.pass = true;
  if (bound >= 0) {
    const long top = tu.m * bound + cert.orbit.back();
    const ModCoeffs ring(static_cast<std::uint64_t>(modulus));
    const ModSeries series = gf_family(ring, family, top);
    for (long tp : cert.orbit) {
      for (long n = 0; n <= bound; ++n) {
        const long idx = tu.m * n + tp;
        if (series[idx] != 0) {
          cert.finite.pass = false;
          cert.finite.fail_tprime = tp;
          cert.finite.fail_n = n;
          cert.finite.fail_index = idx;
          cert.finite.residue = series[idx];
          cert.failure = CertFailure::finite_check_failed;
          return cert;
        }
      }
    }
  }

  cert.overall = true;
  return cert;
}

//----------------------------------------------------------------------------
// JSON
//----------------------------------------------------------------------------

CertificateInput certificate_input_from_json(const nlohmann::json& doc) {
  CertificateInput in;
  const long m = doc.at("m").get<long>();
  const long M = doc.at("M").get<long>();
  const long N = doc.at("N").get<long>();
  const long t = doc.at("t").get<long>();
  const auto r = doc.at("r").get<std::vector<long>>();
  const auto rp = doc.at("rprime").get<std::vector<long>>();
  in.tuple.m = m;
  in.tuple.M = M;
  in.tuple.N = N;
  in.tuple.t = t;
  in.tuple.r = EtaQuotientSpec(M, r);
  in.tuple.rprime = EtaQuotientSpec(N, rp);
  in.modulus = doc.at("u").get<long>();
  const auto& fam = doc.at("family");
  const std::string kind = fam.at("kind").get<std::string>();
  if (kind == "Rbar")
    in.family.kind = FamilyKind::Rbar;
  else if (kind == "RbarStar")
    in.family.kind = FamilyKind::RbarStar;
  else
    throw std::invalid_argument("certificate: unknown family kind " + kind);
  in.family.ell = fam.at("l").get<long>();
  in.family.mu = fam.value("mu", 0L);
  in.family.validate();
  if (doc.contains("paper_floor_nu"))
    in.stated_floor_nu = doc.at("paper_floor_nu").get<long>();
  in.tuple.validate();
  return in;
}

nlohmann::json certificate_to_json(const RaduCertificate& cert) {
  nlohmann::json j;
  j["tuple"] = {{"m", cert.tuple.m},
                {"M", cert.tuple.M},
                {"N", cert.tuple.N},
                {"t", cert.tuple.t},
                {"k", cert.tuple.k()},
                {"r", cert.tuple.r.exponents()},
                {"rprime", cert.tuple.rprime.exponents()}};
  j["family"] = {{"kind", cert.family.kind == FamilyKind::Rbar ? "Rbar"
                                                               : "RbarStar"},
                 {"l", cert.family.ell}};
  if (cert.family.kind == FamilyKind::Rbar) j["family"]["mu"] = cert.family.mu;
  j["u"] = cert.modulus;
  j["conditions"] = nlohmann::json::array();
  for (const auto& c : cert.conditions.conditions)
    j["conditions"].push_back(
        {{"index", c.index}, {"pass", c.pass}, {"detail", c.detail}});
  j["delta_star"] = cert.conditions.all_pass;
  j["orbit"] = cert.orbit;
  j["cosets"] = nlohmann::json::array();
  for (const auto& e : cert.cosets)
    j["cosets"].push_back({{"delta", e.delta},
                           {"p", rat_str(e.order_main)},
                           {"pprime", rat_str(e.order_aux)},
                           {"sum", rat_str(e.sum)},
                           {"nonneg", e.nonneg}});
  j["positivity"] = cert.positivity;
  if (cert.conditions.all_pass && cert.positivity) {
    j["nu"] = {{"exact", rat_str(cert.nu)}, {"floor", cert.floor_nu}};
  }
  if (cert.stated_floor_nu) j["paper_floor_nu"] = *cert.stated_floor_nu;
  j["finite_check"] = {{"attempted", cert.finite.attempted},
                       {"bound", cert.finite.bound},
                       {"pass", cert.finite.pass}};
  if (cert.finite.attempted && !cert.finite.pass)
    j["finite_check"]["counterexample"] = {{"t_prime", cert.finite.fail_tprime},
                                           {"n", cert.finite.fail_n},
                                           {"index", cert.finite.fail_index},
                                           {"residue", cert.finite.residue}};
  j["overall"] = cert.overall;
  j["failure"] = to_string(cert.failure);
  return j;
}

//----------------------------------------------------------------------------
// witness identities
//----------------------------------------------------------------------------

std::vector<std::string> builtin_witness_ids() { return {"cong-1"}; }

WitnessSpec builtin_witness(const std::string& id) {
  if (id != "cong-1")
    throw std::invalid_argument("unknown witness id: " + id);
  WitnessSpec w;
  w.id = "cong-1";
  w.family = {FamilyKind::Rbar, 2, 3};
  w.m = 9;
  w.t = 6;
  w.prefactor = {EtaQuotientSpec(12, {5, -1, -3, 2, 9, -12}), -3};
  w.hauptmodul = {EtaQuotientSpec(12, {0, -2, 0, 4, 2, -4}), -1};
  w.poly = {Int(-6), Int(-6), Int(6), Int(6)};  // -6 - 6t + 6t^2 + 6t^3
  w.basis = {"1"};
  w.common_factor = 6;
  return w;
}

WitnessResult verify_witness(const WitnessSpec& w, long trunc) {
  w.family.validate();
  if (w.basis != std::vector<std::string>{"1"})
    throw CertificateError("verify_witness: only the trivial basis {1} is "
                           "supported");
  const long pad = std::max({0L, -w.prefactor.shift, -w.hauptmodul.shift});
  if (trunc < pad)
    throw TruncationTooSmall(
        "verify_witness: truncation too small to absorb the monomial "
        "prefactors");
  const long inner = trunc + pad;

  // left side: prefactor times the progression stream a(mn + t)
  const Series stream = gf_family(w.family, w.m * inner + w.t);
  const Series prog = extract_ap(stream, w.m, w.t);
  const Series pre = eta_expand(IntCoeffs{}, w.prefactor.eta, inner);
  const Laurent lhs =
      mul(Laurent(w.prefactor.shift, pre), Laurent(0, prog));

  // right side: the polynomial in the hauptmodul
  const Series hap = eta_expand(IntCoeffs{}, w.hauptmodul.eta, inner);
  const Laurent rhs = eval_poly(w.poly, Laurent(w.hauptmodul.shift, hap));

  WitnessResult res;
  res.compare_from = std::min(lhs.offset(), rhs.offset());
  res.compare_to = std::min({trunc, lhs.valid_to(), rhs.valid_to()});
  const auto mm = laurent_mismatch(lhs, rhs, res.compare_from, res.compare_to);
  res.pass = !mm.has_value();
  res.first_mismatch = mm.value_or(-1);

  res.rhs_divisible = true;
  for (long e = res.compare_from; e <= res.compare_to; ++e) {
    if (!mpz_divisible_ui_p(rhs.coefficient(e).get_mpz_t(),
                            static_cast<unsigned long>(w.common_factor))) {
      res.rhs_divisible = false;
      break;
    }
  }
  return res;
}

}  // namespace regover

#include "invkit/invariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invkit/linalg.hpp"
#include "invkit/polynomial_gcd.hpp"
#include "invkit/util.hpp"

namespace invkit {

FactorBase::FactorBase(PRingPtr ring, std::vector<Polynomial> factors,
                       std::vector<bool> irreducible_asserted)
    : ring_(std::move(ring)) {
  ring_->require_ufd("a factor base");
  if (!irreducible_asserted.empty() &&
      irreducible_asserted.size() != factors.size())
    fail(ErrorKind::InvalidInput, "assertion flag count mismatch");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Polynomial f = factors[i].with_order(ring_->order()).monic();
    if (f.is_zero() || f.is_constant())
      fail(ErrorKind::InvalidInput, "factor base element must be nonconstant");
    if (radical_part(f) != f)
      fail(ErrorKind::InvalidInput,
           "factor base element is not squarefree: " + f.to_string());
    factors_.push_back(f);
    asserted_.push_back(irreducible_asserted.empty()
                            ? true
                            : bool(irreducible_asserted[i]));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (!poly_gcd(factors_[i], factors_[j]).is_constant())
        fail(ErrorKind::InvalidInput,
             "factor base elements are not pairwise coprime");
}

FactorBase inverted_factor_base(const PRingPtr& ring,
                                std::span<const Polynomial> hints) {
  std::vector<Polynomial> factors;
  for (const auto& f : ring->inverted())
    for (const auto& sf : factor_split(f, hints)) {
      bool known = false;
      for (const auto& g : factors)
        if (g == sf.poly) known = true;
      if (!known) factors.push_back(sf.poly);
    }
  // splitting different generators can leave overlaps; refine by gcd
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < factors.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < factors.size() && !changed; ++j) {
        Polynomial g = poly_gcd(factors[i], factors[j]);
        if (g.is_constant()) continue;
        std::vector<Polynomial> parts{
            g.monic(), exact_quotient(factors[i], g)->monic(),
            exact_quotient(factors[j], g)->monic()};
        factors.erase(factors.begin() + j);
        factors.erase(factors.begin() + i);
        for (const auto& part : parts) {
          if (part.is_constant()) continue;
          bool known = false;
          for (const auto& h : factors)
            if (h == part) known = true;
          if (!known) factors.push_back(part);
        }
        changed = true;
      }
  }
  return FactorBase(ring, factors, std::vector<bool>(factors.size(), false));
}

bool verify_witness(const RationalMap& f1, const RationalMap& f2,
                    const Hypersurface& a) {
  if (!f1.source()->same_chart(*f2.source()) ||
      !f1.target()->same_chart(*f2.target()))
    fail(ErrorKind::RingMismatch, "maps do not share charts");
  return ideal_equal(scheme_inverse_image(f1, a), scheme_inverse_image(f2, a));
}

RationalFunction compute_unit(const RationalMap& f1, const RationalMap& f2,
                              const Polynomial& a) {
  RationalFunction p1 = pullback_function(f1, RationalFunction(a));
  RationalFunction p2 = pullback_function(f2, RationalFunction(a));
  if (p2.is_zero())
    fail(ErrorKind::InvalidInput, "witness pulls back to zero under f2");
  return p1 / p2;
}

namespace {

std::optional<UnitDecomposition> decompose_over_base(
    const RationalFunction& u, const FactorBase& base, Polynomial* residual) {
  auto peel = [&](Polynomial p, std::vector<mpz_class>& exps, int sign) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      while (true) {
        auto q = exact_quotient(p, base.factors()[i]);
        if (!q) break;
        p = *q;
        exps[i] += sign;
      }
    }
    return p;
  };
  std::vector<mpz_class> exps(base.size(), mpz_class(0));
  Polynomial rn = peel(u.num(), exps, +1);
  if (!rn.is_constant()) {
    if (residual) *residual = rn;
    return std::nullopt;
  }
  Polynomial rd = peel(u.den(), exps, -1);
  if (!rd.is_constant()) {
    if (residual) *residual = rd;
    return std::nullopt;
  }
  Coeff c = rn.constant_value() / rd.constant_value();
  return UnitDecomposition{c, exps};
}

}  // namespace

UnitDecomposition decompose_unit(const RationalFunction& u,
                                 const FactorBase& base) {
  if (u.is_zero()) fail(ErrorKind::InvalidInput, "zero is not a unit");
  if (*u.ring() != *base.ring()->poly_ring())
    fail(ErrorKind::RingMismatch, "unit outside the base's ring");
  Polynomial residual = Polynomial::zero(u.ring());
  auto d = decompose_over_base(u, base, &residual);
  if (!d)
    fail(ErrorKind::ChartError,
         "not a unit of this localization: residual factor " +
             residual.to_string() + " (enlarge the inverted set)");
  return *d;
}

IndependenceReport multiplicative_independence(
    const std::vector<RationalFunction>& items, const FactorBase& base) {
  QMatrix rows(base.size(), QRow(items.size(), mpq_class(0)));
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (items[j].is_zero())
      fail(ErrorKind::InvalidInput, "zero item in independence check");
    auto d = decompose_over_base(items[j], base, nullptr);
    if (!d)
      fail(ErrorKind::InvalidInput,
           "item not covered by the factor base: " + items[j].to_string());
    for (std::size_t i = 0; i < base.size(); ++i)
      rows[i][j] = mpq_class(d->exponents[i]);
  }
  auto kernel = primitive_integer_kernel(rows, items.size());
  if (kernel.empty()) return {true, {}};
  return {false, kernel.front()};
}

namespace {

// exponent map of |n| over the primes found by trial division
std::optional<std::map<mpz_class, long>> trial_factor(mpz_class n,
                                                      unsigned long bound) {
  std::map<mpz_class, long> out;
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  for (mpz_class d = 2; d * d <= n && d <= bound; ++d) {
    while (n % d == 0) {
      out[d] += 1;
      n /= d;
    }
  }
  if (n > 1) {
    if (n > bound) return std::nullopt;
    out[n] += 1;
  }
  return out;
}

std::vector<std::vector<mpz_class>> lambda_kernel_rationals(
    const std::vector<Coeff>& lambdas) {
  std::vector<std::map<mpz_class, long>> expos;
  std::vector<int> signs;
  std::set<mpz_class> primes;
  for (const auto& l : lambdas) {
    const mpq_class& q = l.rat();
    auto num = trial_factor(q.get_num(), 1000000);
    auto den = trial_factor(q.get_den(), 1000000);
    if (!num || !den)
      fail(ErrorKind::ResourceLimit,
           "lambda factorization exceeds the trial-division bound: " +
               q.get_str());
    std::map<mpz_class, long> e = *num;
    for (auto& [p, k] : *den) e[p] -= k;
    for (auto& [p, k] : e)
      if (k != 0) primes.insert(p);
    expos.push_back(std::move(e));
    signs.push_back(q < 0 ? 1 : 0);
  }
  std::vector<mpz_class> plist(primes.begin(), primes.end());
  QMatrix rows(plist.size(), QRow(lambdas.size(), mpq_class(0)));
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    for (std::size_t r = 0; r < plist.size(); ++r) {
      auto it = expos[j].find(plist[r]);
      if (it != expos[j].end()) rows[r][j] = it->second;
    }
  auto kernel = primitive_integer_kernel(rows, lambdas.size());

  // the sign coordinate: Π λ^e = 1 additionally needs Σ e_j s_j even
  auto odd_parity = [&](const std::vector<mpz_class>& v) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (signs[j]) acc += v[j];
    return mpz_odd_p(acc.get_mpz_t()) != 0;
  };
  std::size_t odd = kernel.size();
  for (std::size_t i = 0; i < kernel.size(); ++i)
    if (odd_parity(kernel[i])) {
      odd = i;
      break;
    }
  if (odd == kernel.size()) return kernel;
  std::vector<std::vector<mpz_class>> fixed;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (i == odd) continue;
    std::vector<mpz_class> v = kernel[i];
    if (odd_parity(v))
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += kernel[odd][j];
    fixed.push_back(std::move(v));
  }
  std::vector<mpz_class> doubled = kernel[odd];
  for (auto& x : doubled) x *= 2;
  fixed.push_back(std::move(doubled));
  return fixed;
}

std::vector<std::vector<mpz_class>> lambda_kernel_prime_field(
    const std::vector<Coeff>& lambdas, std::uint32_t p) {
  if (p > (1u << 20))
    fail(ErrorKind::ResourceLimit,
         "discrete logarithms only supported for small prime fields");
  std::uint32_t order = p - 1;
  auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) acc = acc * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  };
  std::uint32_t gen = 1;
  if (order > 1) {
    auto fac = trial_factor(mpz_class(static_cast<unsigned long>(order)),
                            1u << 20);
    for (std::uint32_t g = 2; g < p; ++g) {
      bool ok = true;
      for (auto& [q, e] : *fac)
        if (pow_mod(g, order / q.get_ui()) == 1) ok = false;
      if (ok) {
        gen = g;
        break;
      }
    }
  }
  std::vector<std::uint32_t> dlog(p, 0);
  std::uint64_t acc = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    dlog[acc] = k;
    acc = acc * gen % p;
  }
  // kernel of e · d ≡ 0 (mod order): kernel of [d | order] projected away
  // from the auxiliary coordinate
  QMatrix row(1, QRow(lambdas.size() + 1, mpq_class(0)));
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    row[0][j] = static_cast<long>(dlog[lambdas[j].res()]);
  row[0][lambdas.size()] = static_cast<long>(order);
  std::vector<std::vector<mpz_class>> out;
  for (auto& v : primitive_integer_kernel(row, lambdas.size() + 1)) {
    v.pop_back();
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const mpz_class& x) { return x == 0; });
    if (!zero) out.push_back(std::move(v));
  }
  return out;
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p())
    fail(ErrorKind::ResourceLimit, "exponent out of machine range");
  return z.get_si();
}

}  // namespace

std::vector<std::vector<mpz_class>> rational_multiplicative_kernel(
    const std::vector<Coeff>& lambdas) {
  if (lambdas.empty()) return {};
  const CoeffField& f = lambdas.front().field();
  for (const auto& l : lambdas) {
    if (l.field() != f)
      fail(ErrorKind::RingMismatch, "lambdas over different fields");
    if (l.is_zero()) fail(ErrorKind::InvalidInput, "zero lambda");
  }
  if (f.is_rationals()) return lambda_kernel_rationals(lambdas);
  return lambda_kernel_prime_field(lambdas, f.modulus());
}

InvariantSearchResult find_invariant_function(
    const RationalMap& f1, const RationalMap& f2,
    const std::vector<Hypersurface>& witnesses) {
  if (!f1.source()->same_chart(*f2.source()) ||
      !f1.target()->same_chart(*f2.target()))
    fail(ErrorKind::RingMismatch, "maps do not share charts");
  const PRingPtr& src = f1.source();
  const PRingPtr& tgt = f1.target();
  src->require_ufd("the invariant search (source chart)");
  tgt->require_ufd("the invariant search (target chart)");

  InvariantSearchResult result;
  if (witnesses.empty()) {
    result.diagnostics.push_back("no witnesses supplied");
    return result;
  }

  // witness hypothesis: equal scheme-theoretic pullbacks
  std::vector<std::uint8_t> ok(witnesses.size(), 0);
  parallel_index(witnesses.size(), [&](std::size_t i) {
    ok[i] = verify_witness(f1, f2, witnesses[i]) ? 1 : 0;
  });
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    if (!ok[i])
      fail(ErrorKind::HypothesisViolation,
           "witness " + std::to_string(i) +
               " fails scheme-theoretic pullback equality: " +
               witnesses[i].to_string());

  // multiplicative-independence pruning over the witness factor base
  std::vector<Polynomial> xbase;
  std::vector<QRow> accepted_vecs;
  std::vector<std::size_t> pruned;
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < witnesses.size(); ++j) {
    if (witnesses[j].is_empty())
      fail(ErrorKind::InvalidInput, "empty hypersurface as witness");
    QRow vec(xbase.size(), mpq_class(0));
    for (const auto& f : witnesses[j].factors()) {
      std::size_t slot = xbase.size();
      for (std::size_t i = 0; i < xbase.size(); ++i) {
        if (xbase[i] == f.poly) {
          slot = i;
          break;
        }
        if (!poly_gcd(xbase[i], f.poly).is_constant())
          fail(ErrorKind::InvalidInput,
               "witness factors overlap without being associates "
               "(irreducibility assertion violated)");
      }
      if (slot == xbase.size()) {
        xbase.push_back(f.poly);
        vec.push_back(0);
      }
      vec[slot] += 1;
    }
    for (auto& v : accepted_vecs) v.resize(xbase.size(), mpq_class(0));
    bool dependent = false;
    if (!accepted_vecs.empty()) {
      QMatrix a(xbase.size(), QRow(accepted_vecs.size(), mpq_class(0)));
      for (std::size_t c = 0; c < accepted_vecs.size(); ++c)
        for (std::size_t r = 0; r < xbase.size(); ++r)
          a[r][c] = accepted_vecs[c][r];
      dependent = q_solve(a, vec).has_value();
    }
    if (dependent) {
      pruned.push_back(j);
      result.diagnostics.push_back(
          "witness " + std::to_string(j) +
          " multiplicatively dependent on earlier witnesses; pruned");
      continue;
    }
    accepted_vecs.push_back(vec);
    gens.push_back(witnesses[j].product_poly());
  }
  if (gens.empty()) {
    result.diagnostics.push_back("all witnesses pruned as dependent");
    return result;
  }

  // units per witness, independent computations merged in input order
  std::vector<std::optional<RationalFunction>> units(gens.size());
  parallel_index(gens.size(), [&](std::size_t j) {
    units[j] = compute_unit(f1, f2, gens[j]);
  });

  std::vector<Polynomial> hints;
  for (const auto& u : units) {
    if (!u->num().is_constant()) hints.push_back(u->num());
    if (!u->den().is_constant()) hints.push_back(u->den());
  }
  FactorBase sbase = inverted_factor_base(src, hints);

  std::vector<UnitDecomposition> decomps;
  for (const auto& u : units) decomps.push_back(decompose_unit(*u, sbase));

  // stage 3: integer kernel of the unit exponent matrix
  QMatrix unitmat(sbase.size(), QRow(gens.size(), mpq_class(0)));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < sbase.size(); ++i)
      unitmat[i][j] = mpq_class(decomps[j].exponents[i]);
  auto unit_kernel = primitive_integer_kernel(unitmat, gens.size());
  if (unit_kernel.empty()) {
    result.diagnostics.push_back(
        "unit exponent kernel is trivial; add witnesses");
    return result;
  }

  // each kernel vector collapses its unit product to a constant lambda
  std::vector<Coeff> lambdas;
  for (const auto& k : unit_kernel) {
    Coeff l = Coeff::one(src->field());
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      l = l * decomps[j].constant.pow(to_long(k[j]));
    }
    lambdas.push_back(l);
  }

  // stage 4: multiplicative relations among the lambdas
  auto lambda_kernel = rational_multiplicative_kernel(lambdas);
  if (lambda_kernel.empty()) {
    result.diagnostics.push_back(
        "lambda relation kernel is trivial; add witnesses");
    return result;
  }

  for (const auto& e : lambda_kernel) {
    std::vector<mpz_class> net(gens.size(), mpz_class(0));
    for (std::size_t r = 0; r < unit_kernel.size(); ++r) {
      if (e[r] == 0) continue;
      for (std::size_t j = 0; j < gens.size(); ++j)
        net[j] += e[r] * unit_kernel[r][j];
    }
    bool trivial = std::all_of(net.begin(), net.end(),
                               [](const mpz_class& x) { return x == 0; });
    if (trivial) continue;

    RationalFunction g = RationalFunction::constant(
        tgt->poly_ring(), Coeff::one(tgt->field()), tgt->order());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (net[j] == 0) continue;
      g = g * RationalFunction(gens[j]).pow(to_long(net[j]));
    }
    if (g.is_constant()) continue;

    InvariantCertificate cert{g,   unit_kernel, lambdas,
                              e,   net,         false,
                              false};
    cert.verified_agreement =
        pullback_function(f1, g) == pullback_function(f2, g);
    cert.verified_nonconstant = !g.is_constant();
    if (!cert.verified_agreement)
      fail(ErrorKind::InvalidInput,
           "internal: assembled candidate failed exact re-verification");
    result.certificate = std::move(cert);
    return result;
  }
  result.diagnostics.push_back(
      "all kernel candidates collapse to constants; add witnesses");
  return result;
}

bool verify_certificate(const InvariantCertificate& cert,
                        const RationalMap& f1, const RationalMap& f2) {
  if (cert.g.is_constant()) return false;
  return pullback_function(f1, cert.g) == pullback_function(f2, cert.g);
}

}  // namespace invkit

#include <algorithm>
#include <set>

#include "invkit/ideal.hpp"
#include "invkit/polynomial_gcd.hpp"

namespace invkit {

namespace {

GroebnerBudget g_budget{};
std::mutex g_budget_mu;

void check_terms(const Polynomial& p, const GroebnerBudget& budget) {
  if (p.term_count() > budget.max_terms)
    fail(ErrorKind::ResourceLimit,
         "polynomial term count exceeds budget (" +
             std::to_string(budget.max_terms) + ")");
}

// Full reduction of p against basis: every term of the remainder is
// irreducible. Divisor selection scans the basis in order, which together
// with the sorted basis makes the result deterministic.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget) {
  const MonomialOrder order = p.order();
  Polynomial rem = Polynomial::zero(p.ring(), order);
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.mono)) {
        Term t{lt.mono / g.leading_monomial(), lt.coeff / g.leading_coeff()};
        p = p - g.times_term(t);
        check_terms(p, budget);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Polynomial::from_terms(p.ring(), order, {lt});
      p = p - Polynomial::from_terms(p.ring(), order, {lt});
    }
  }
  return rem;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Term tf{l / f.leading_monomial(), f.leading_coeff().inverse()};
  Term tg{l / g.leading_monomial(), g.leading_coeff().inverse()};
  return f.times_term(tf) - g.times_term(tg);
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;  // i < j
};

struct PairCmp {
  MonomialOrder order;
  // normal strategy: smallest lcm first; index tie-break for determinism
  bool operator()(const Pair& a, const Pair& b) const {
    int c = mono_cmp(a.lcm, b.lcm, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> buchberger(std::vector<Polynomial> basis,
                                   MonomialOrder order,
                                   const GroebnerBudget& budget) {
  // drop zeros, normalize monic
  std::vector<Polynomial> g;
  for (auto& p : basis) {
    if (p.is_zero()) continue;
    g.push_back(p.with_order(order).monic());
  }
  if (g.empty()) return g;

  std::set<Pair, PairCmp> queue{PairCmp{order}};
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Pair p{g[i].leading_monomial().lcm(g[j].leading_monomial()), i, j};
      queue.insert(p);
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    // coprime leading terms
    if (pr.lcm == li * lj) continue;
    // chain criterion: some g_k divides the lcm and both companion pairs
    // are no longer pending
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k)))
        chained = true;
    }
    if (chained) continue;

    Polynomial s = reduce_full(spoly(g[pr.i], g[pr.j]), g, budget);
    if (s.is_zero()) continue;
    g.push_back(s.monic());
    if (g.size() > budget.max_basis)
      fail(ErrorKind::ResourceLimit,
           "basis size exceeds budget (" + std::to_string(budget.max_basis) +
               ")");
    push_pairs(g.size() - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by
  // another survivor's
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (g[j].leading_monomial().divides(g[i].leading_monomial()) &&
          (g[j].leading_monomial() != g[i].leading_monomial() || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) minimal.push_back(g[i]);

  // tail-reduce each against the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others, budget).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return mono_cmp(a.leading_monomial(), b.leading_monomial(),
                              order) > 0;
            });
  return reduced;
}

}  // namespace

GroebnerBudget default_groebner_budget() {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  return g_budget;
}

void set_default_groebner_budget(const GroebnerBudget& b) {
  std::lock_guard<std::mutex> lock(g_budget_mu);
  g_budget = b;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& p : gens_)
    if (*p.ring() != *ring_)
      fail(ErrorKind::RingMismatch, "generator outside the ambient ring");
}

BasisPtr Ideal::basis(MonomialOrder order,
                      std::optional<GroebnerBudget> budget) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(order);
    if (it != cache_->by_order.end()) return it->second;
  }
  GroebnerBudget b = budget ? *budget : default_groebner_budget();
  auto computed = std::make_shared<const std::vector<Polynomial>>(
      buchberger(gens_, order, b));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, fresh] = cache_->by_order.try_emplace(order, computed);
  return it->second;
}

BasisPtr groebner_basis(const Ideal& I, MonomialOrder order,
                        std::optional<GroebnerBudget> budget) {
  return I.basis(order, budget);
}

Polynomial normal_form(const Polynomial& p, const Ideal& I) {
  if (*p.ring() != *I.ring())
    fail(ErrorKind::RingMismatch, "polynomial outside the ambient ring");
  BasisPtr basis = I.basis(p.order());
  return reduce_full(p, *basis, default_groebner_budget());
}

bool ideal_contains(const Ideal& I, const Polynomial& p) {
  return normal_form(p, I).is_zero();
}

bool is_unit_ideal(const Ideal& I) {
  BasisPtr b = I.basis(MonomialOrder::grevlex());
  return b->size() == 1 && (*b)[0].is_constant() && !(*b)[0].is_zero();
}

bool is_zero_ideal(const Ideal& I) {
  return I.basis(MonomialOrder::grevlex())->empty();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (*I.ring() != *J.ring())
    fail(ErrorKind::RingMismatch, "ideals in different ambient rings");
  BasisPtr a = I.basis(MonomialOrder::grevlex());
  BasisPtr c = J.basis(MonomialOrder::grevlex());
  return *a == *c;  // the reduced basis is unique
}

Ideal elimination_ideal(const Ideal& I, const std::vector<bool>& keep) {
  const RingPtr& ring = I.ring();
  if (keep.size() != ring->arity())
    fail(ErrorKind::InvalidInput, "keep mask arity mismatch");
  std::vector<std::size_t> elim_vars, keep_vars;
  for (std::size_t i = 0; i < keep.size(); ++i)
    (keep[i] ? keep_vars : elim_vars).push_back(i);
  if (elim_vars.empty()) return I;

  // permuted ring with the eliminated variables first, block order split
  // at the boundary
  std::vector<std::string> names;
  std::vector<std::size_t> var_map(ring->arity());
  for (std::size_t i = 0; i < elim_vars.size(); ++i) {
    var_map[elim_vars[i]] = i;
    names.push_back(ring->var_name(elim_vars[i]));
  }
  for (std::size_t i = 0; i < keep_vars.size(); ++i) {
    var_map[keep_vars[i]] = elim_vars.size() + i;
    names.push_back(ring->var_name(keep_vars[i]));
  }
  RingPtr permuted = make_poly_ring(ring->field(), names);
  MonomialOrder block =
      MonomialOrder::block(static_cast<std::uint32_t>(elim_vars.size()));

  std::vector<Polynomial> lifted;
  for (const auto& p : I.generators())
    lifted.push_back(map_vars(p, permuted, var_map, block));
  Ideal J(permuted, lifted);
  BasisPtr basis = J.basis(block);

  std::vector<std::size_t> back(ring->arity());
  for (std::size_t i = 0; i < var_map.size(); ++i) back[var_map[i]] = i;
  std::vector<Polynomial> out;
  for (const auto& g : *basis) {
    bool free_of_elim = true;
    for (std::size_t v = 0; v < elim_vars.size() && free_of_elim; ++v)
      if (g.uses_var(v)) free_of_elim = false;
    if (free_of_elim)
      out.push_back(map_vars(g, ring, back, MonomialOrder::grevlex()));
  }
  return Ideal(ring, out);
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "saturation at zero");
  const RingPtr& ring = I.ring();
  if (f.is_constant()) return I;
  std::vector<std::string> names = ring->var_names();
  std::string t = "t";
  while (ring->var_index(t)) t += "_";
  names.insert(names.begin(), t);
  RingPtr ext = make_poly_ring(ring->field(), names);
  std::vector<std::size_t> up(ring->arity());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;
  MonomialOrder block = MonomialOrder::block(1);

  std::vector<Polynomial> gens;
  for (const auto& p : I.generators())
    gens.push_back(map_vars(p, ext, up, block));
  Polynomial tf = map_vars(f, ext, up, block)
                      .times_term({Monomial::var(ext->arity(), 0),
                                   Coeff::one(ext->field())});
  gens.push_back(Polynomial::constant(ext, 1, block) - tf);

  Ideal J(ext, gens);
  BasisPtr basis = J.basis(block);
  std::vector<Polynomial> out;
  std::vector<std::size_t> taken(ring->arity());
  for (std::size_t i = 0; i < taken.size(); ++i) taken[i] = i + 1;
  for (const auto& g : *basis)
    if (!g.uses_var(0))
      out.push_back(project_vars(g, ring, taken, MonomialOrder::grevlex()));
  return Ideal(ring, out);
}

bool radical_membership(const Polynomial& p, const Ideal& I) {
  if (p.is_zero()) return true;
  const RingPtr& ring = I.ring();
  std::vector<std::string> names = ring->var_names();
  std::string t = "t";
  while (ring->var_index(t)) t += "_";
  names.insert(names.begin(), t);
  RingPtr ext = make_poly_ring(ring->field(), names);
  std::vector<std::size_t> up(ring->arity());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;

  std::vector<Polynomial> gens;
  for (const auto& q : I.generators()) gens.push_back(map_vars(q, ext, up, MonomialOrder::grevlex()));
  Polynomial tp = map_vars(p, ext, up, MonomialOrder::grevlex())
                      .times_term({Monomial::var(ext->arity(), 0),
                                   Coeff::one(ext->field())});
  gens.push_back(Polynomial::constant(ext, 1) - tp);
  return is_unit_ideal(Ideal(ext, gens));
}

bool is_radical_principal(const Polynomial& a) {
  if (a.is_zero()) fail(ErrorKind::InvalidInput, "zero polynomial");
  if (a.is_constant()) return true;
  return radical_part(a) == a.monic();
}

}  // namespace invkit

// Acceptance suite: one timed pass/fail line per criterion. Exit code is
// the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  std::string label;
  double limit_seconds;  // 0 = untimed
  std::function<bool(std::string&)> run;
};

PRingPtr qplane() { return make_ring(CoeffField::rationals(), {"x", "y"}); }

Hypersurface hsf(const PRingPtr& ring, Polynomial f) {
  return Hypersurface(ring, {{std::move(f), true}});
}

// ---- criterion 1: Groebner oracle equivalence ----
bool crit_groebner_oracle(std::string& note) {
  auto R = qring({"x", "y"});
  std::mt19937_64 rng(1001);
  int ideals = 0, checks = 0;
  while (ideals < 50) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial p = random_poly(rng, R, 3, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    ++ideals;
    Ideal I(R, gens);
    std::vector<Polynomial> probes;
    Polynomial member = Polynomial::zero(R);
    for (const auto& g : gens)
      member = member + random_poly(rng, R, 2, 2) * g;
    probes.push_back(member);
    probes.push_back(random_poly(rng, R, 3, 3));
    for (const auto& p : probes) {
      bool via_nf = normal_form(p, I).is_zero();
      bool via_oracle = oracle_membership(p, gens, 8);
      if (via_nf != via_oracle) {
        note = "disagreement on ideal " + std::to_string(ideals);
        return false;
      }
      ++checks;
    }
  }
  note = std::to_string(ideals) + " ideals, " + std::to_string(checks) +
         " membership checks, 100% agreement";
  return true;
}

// ---- criterion 2: extension-ideal criterion equivalence ----
bool crit_extension_equivalence(std::string& note) {
  auto P = qplane();
  CoeffField QQ = CoeffField::rationals();
  std::vector<AlgebraPtr> algebras{
      std::make_shared<const FiniteAlgebra>(FiniteAlgebra::dual_numbers(QQ)),
      std::make_shared<const FiniteAlgebra>(FiniteAlgebra::split_pair(QQ)),
      std::make_shared<const FiniteAlgebra>(FiniteAlgebra::jet_plane(QQ))};
  std::mt19937_64 rng(1002);
  int instances = 0;
  for (int trial = 0; instances < 30; ++trial) {
    if (trial > 500) {
      note = "generator starved";
      return false;
    }
    AlgebraPtr B = algebras[trial % algebras.size()];
    std::vector<TensorElement> images;
    for (std::size_t v = 0; v < 2; ++v) {
      std::vector<RationalFunction> comps{
          RationalFunction::variable(P->poly_ring(), v, P->order())};
      for (std::size_t m = 1; m < B->dim(); ++m)
        comps.push_back(
            RationalFunction(random_poly(rng, P->poly_ring(), 2, 2)));
      images.push_back(TensorElement{comps});
    }
    DRingStructure D(P, B, images);
    Polynomial f = random_nonzero_poly(rng, P->poly_ring(), 2, 2);
    if (f.is_constant()) continue;
    Ideal I(P->poly_ring(), {f});
    if (totally_invariant_by_operators(D, I) !=
        totally_invariant_by_extension(D, I)) {
      note = "criteria disagree on instance " + std::to_string(instances);
      return false;
    }
    ++instances;
  }
  note = "30 instances across three algebras, 100% agreement";
  return true;
}

// ---- criterion 3: first-integral pipeline exactness ----
bool crit_first_integral(std::string& note) {
  auto P = qplane();
  Derivation euler(P, {rf("x", "1", P), rf("y", "1", P)});
  SearchOutcome a = search_first_integral(
      euler, {hsf(P, P->parse("x")), hsf(P, P->parse("y"))});
  if (a.status != SearchStatus::Found) {
    note = "euler search failed";
    return false;
  }
  const RationalFunction& g = a.certificate->g;
  if (!euler.apply(g).is_zero() || g.is_constant()) {
    note = "euler certificate not exactly verified";
    return false;
  }
  // g must be c * (x/y)^{±n}: the witness exponents are (n, -n)
  const auto& e = a.certificate->witness_exponents;
  if (e.size() != 2 || e[0] == 0 || e[0] != -e[1]) {
    note = "euler exponents not proportional to (1, -1)";
    return false;
  }
  RationalFunction xy = rf("x", "y", P);
  RationalFunction ratio = g / xy.pow(e[0].get_si());
  if (!ratio.is_constant()) {
    note = "euler certificate is not a power of x/y up to a constant";
    return false;
  }

  Derivation weighted(P, {rf("x", "1", P), rf("2*y", "1", P)});
  SearchOutcome b = search_first_integral(
      weighted, {hsf(P, P->parse("x")), hsf(P, P->parse("y"))});
  if (b.status != SearchStatus::Found) {
    note = "weighted search failed";
    return false;
  }
  const auto& w = b.certificate->witness_exponents;
  if (w.size() != 2 || w[0] * mpz_class(-1) != w[1] * mpz_class(2) ||
      w[0] == 0) {
    note = "weighted exponents not proportional to (2, -1)";
    return false;
  }
  if (!weighted.apply(b.certificate->g).is_zero()) {
    note = "weighted certificate not exactly verified";
    return false;
  }
  note = "both certificates exact; exponents (1,-1) and (2,-1) shaped";
  return true;
}

// planted systems shared by criteria 4 and 5
struct Planted {
  DynamicalSystem sys;
  std::vector<Hypersurface> level;
};

std::vector<Planted> planted_systems() {
  auto P = qplane();
  std::mt19937_64 rng(1004);
  std::vector<Planted> out;
  while (out.size() < 20) {
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    Polynomial q = planted_fiber_poly(rng, P->poly_ring(), k);
    RationalMap phi(P, P, {rf("x", "1", P), RationalFunction(q)});
    std::vector<Coeff> levels{Coeff::integer(1), Coeff::integer(2),
                              Coeff::integer(3)};
    std::vector<Hypersurface> sets = level_sets(rf("x", "1", P), levels, P);
    out.push_back({DynamicalSystem(phi), sets});
  }
  return out;
}

bool crit_planted_recovery(std::string& note) {
  int recovered = 0;
  for (const auto& inst : planted_systems()) {
    SearchOutcome out = search_map_invariant(inst.sys, inst.level);
    if (out.status != SearchStatus::Found) {
      note = "search returned no certificate on instance " +
             std::to_string(recovered);
      return false;
    }
    const RationalFunction& g = out.certificate->g;
    if (pullback_function(inst.sys.map(), g) != g || g.is_constant()) {
      note = "certificate failed exact verification";
      return false;
    }
    ++recovered;
  }
  note = "20/20 planted systems recovered with exact verification";
  return true;
}

bool crit_round_trip(std::string& note) {
  int checked = 0;
  for (const auto& inst : planted_systems()) {
    if (inst.level.size() != 3) {
      note = "level-set generation degenerated";
      return false;
    }
    for (const auto& H : inst.level) {
      if (!totally_invariant_check(inst.sys, H)) {
        note = "level set failed proper-transform invariance";
        return false;
      }
      ++checked;
    }
  }
  note = std::to_string(checked) + "/60 level sets totally invariant";
  return true;
}

// ---- criterion 6: generic agreement of the two pullbacks ----
bool crit_generic_agreement(std::string& note) {
  auto P = qplane();
  RationalMap phi(P, P, {rf("x^2", "1", P), rf("y", "1", P)});
  int exceptional = 0;
  for (long c = 1; c <= 20; ++c) {
    Hypersurface H =
        hsf(P, P->parse("x") - Polynomial::constant(P->poly_ring(), c));
    if (!compare_pullbacks(phi, H).agree) ++exceptional;
  }
  if (exceptional != 0) {
    note = "unexpected exceptional count " + std::to_string(exceptional);
    return false;
  }
  PullbackComparison ramified = compare_pullbacks(phi, hsf(P, P->parse("x")));
  if (ramified.agree || ramified.scheme_is_radical) {
    note = "ramified fibre not detected at c = 0";
    return false;
  }
  BasisPtr b = ramified.scheme.basis(MonomialOrder::grevlex());
  if (b->size() != 1 || (*b)[0] != P->parse("x^2")) {
    note = "scheme ideal at c = 0 is not (x^2)";
    return false;
  }
  note = "agree for c in 1..20 (0 exceptions); c = 0 gives (x^2), agree=false";
  return true;
}

// ---- criterion 7: Frobenius regression ----
bool crit_frobenius(std::string& note) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FrobeniusReport rep = frobenius_demo(p);
    if (rep.separable) {
      note = "separability not refuted at p=" + std::to_string(p);
      return false;
    }
    if (rep.search_status != SearchStatus::Refused) {
      note = "search not refused at p=" + std::to_string(p);
      return false;
    }
    if (rep.points.size() != p) {
      note = "point count wrong at p=" + std::to_string(p);
      return false;
    }
    for (const auto& pt : rep.points) {
      if (pt.scheme_divisor.terms.size() != 1 ||
          pt.scheme_divisor.terms[0].multiplicity != p ||
          pt.scheme_radical ||
          !same_factor_sets(
              pt.transform,
              Hypersurface(pt.transform.ring(),
                           {{pt.scheme_divisor.terms[0].factor, true}}))) {
        note = "pullback shape wrong at p=" + std::to_string(p);
        return false;
      }
    }
  }
  note = "p in {2,3,5}: multiplicity p, transform H, refused";
  return true;
}

// ---- criterion 8: twisted Leibniz identity ----
bool crit_twisted_leibniz(std::string& note) {
  auto P = qplane();
  auto dual = std::make_shared<const FiniteAlgebra>(
      FiniteAlgebra::dual_numbers(CoeffField::rationals()));
  std::mt19937_64 rng(1008);
  auto random_map = [&] {
    std::vector<TensorElement> images;
    for (std::size_t v = 0; v < 2; ++v)
      images.push_back(TensorElement{
          {RationalFunction(random_poly(rng, P->poly_ring(), 2, 2)),
           RationalFunction(random_poly(rng, P->poly_ring(), 2, 2))}});
    return TensorMap{P, P, dual, images};
  };
  for (int i = 0; i < 1000; ++i) {
    TensorMap f1 = random_map();
    TensorMap f2 = random_map();
    Polynomial u = random_poly(rng, P->poly_ring(), 2, 2);
    Polynomial v = random_poly(rng, P->poly_ring(), 2, 2);
    TensorElement lhs =
        tensor_sub(apply_tensor_map(f1, u * v), apply_tensor_map(f2, u * v));
    TensorElement rhs = tensor_add(
        tensor_mul(*dual,
                   tensor_sub(apply_tensor_map(f1, u),
                              apply_tensor_map(f2, u)),
                   apply_tensor_map(f1, v)),
        tensor_mul(*dual, apply_tensor_map(f2, u),
                   tensor_sub(apply_tensor_map(f1, v),
                              apply_tensor_map(f2, v))));
    if (!(lhs == rhs)) {
      note = "identity failed at pair " + std::to_string(i);
      return false;
    }
  }
  note = "1000 random pairs, identity exact";
  return true;
}

// ---- criterion 9: derivation / e-map round trip ----
bool crit_round_trip_derivation(std::string& note) {
  auto P = qplane();
  std::mt19937_64 rng(1009);
  for (int i = 0; i < 100; ++i) {
    std::vector<RationalFunction> images{
        RationalFunction(random_poly(rng, P->poly_ring(), 2, 3)),
        RationalFunction(random_poly(rng, P->poly_ring(), 2, 3))};
    Derivation d(P, images);
    Derivation back = dual_numbers_derivation(
        derivation_to_tensor_map(d),
        derivation_to_tensor_map(Derivation::zero(P)));
    if (!(back.images() == d.images())) {
      note = "images not recovered at instance " + std::to_string(i);
      return false;
    }
  }
  note = "100 random derivations recovered exactly";
  return true;
}

// ---- criterion 10: determinism of the committed job corpus ----
bool crit_determinism(std::string& note) {
  auto locate = [](const char* env, std::initializer_list<const char*> guesses)
      -> std::string {
    if (const char* v = std::getenv(env)) return v;
    for (const char* g : guesses)
      if (fs::exists(g)) return fs::absolute(g).string();
    return {};
  };
  std::string bin = locate(
      "INVKIT_BIN", {"build/tools/invkit", "../tools/invkit", "tools/invkit"});
  std::string jobs = locate("INVKIT_JOBS", {"jobs", "../jobs", "../../jobs"});
  if (bin.empty() || jobs.empty()) {
    note = "invkit binary or jobs directory not found (set INVKIT_BIN / "
           "INVKIT_JOBS)";
    return false;
  }
  fs::path tmp = fs::temp_directory_path() / "invkit_acceptance";
  fs::create_directories(tmp);
  std::vector<fs::path> jobfiles;
  for (const auto& entry : fs::directory_iterator(jobs))
    if (entry.path().extension() == ".json") jobfiles.push_back(entry.path());
  std::sort(jobfiles.begin(), jobfiles.end());
  if (jobfiles.empty()) {
    note = "no job files found";
    return false;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  int runs = 0;
  for (const auto& job : jobfiles) {
    std::vector<std::string> outputs;
    int run_id = 0;
    for (const char* threads : {"1", "1", "8", "8"}) {
      fs::path out =
          tmp / (job.stem().string() + "_" + threads + "_" +
                 std::to_string(run_id++) + ".json");
      std::string cmd = std::string("INVKIT_THREADS=") + threads + " '" +
                        bin + "' run --input '" + job.string() +
                        "' --output '" + out.string() + "' > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      (void)rc;  // nonzero exit codes are expected for none/refused/error jobs
      outputs.push_back(slurp(out));
      ++runs;
    }
    for (std::size_t i = 1; i < outputs.size(); ++i) {
      if (outputs[i] != outputs[0] || outputs[i].empty()) {
        note = "report bytes differ for " + job.filename().string();
        return false;
      }
    }
  }
  note = std::to_string(jobfiles.size()) + " jobs x 4 runs (threads 1 and 8) byte-identical";
  return runs > 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Groebner oracle equivalence", 60, crit_groebner_oracle},
      {2, "extension-ideal criterion equivalence", 120,
       crit_extension_equivalence},
      {3, "first-integral pipeline exactness", 5, crit_first_integral},
      {4, "planted invariant recovery", 60, crit_planted_recovery},
      {5, "level-set round trip", 0, crit_round_trip},
      {6, "generic pullback agreement", 0, crit_generic_agreement},
      {7, "Frobenius regression", 5, crit_frobenius},
      {8, "twisted Leibniz identity", 0, crit_twisted_leibniz},
      {9, "derivation round trip", 0, crit_round_trip_derivation},
      {10, "job corpus determinism", 0, crit_determinism},
  };

  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      note += " (time limit " + std::to_string(c.limit_seconds) +
              "s exceeded)";
    }
    std::printf("%s criterion %2d: %s — %s [%.2fs]\n", ok ? "PASS" : "FAIL",
                c.number, c.label.c_str(), note.c_str(), secs);
    if (!ok) ++failed;
  }
  return failed;
}

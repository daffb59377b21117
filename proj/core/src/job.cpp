#include "invkit/job.hpp"

#include <json.hpp>
#include <map>

#include "invkit/pipelines.hpp"

namespace invkit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_job(const std::string& msg) {
  fail(ErrorKind::InvalidInput, msg);
}

CoeffField parse_field(const std::string& s) {
  if (s == "QQ") return CoeffField::rationals();
  if (s.rfind("FF ", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    return CoeffField::prime_field(static_cast<std::uint32_t>(p));
  }
  bad_job("unknown field '" + s + "' (expected \"QQ\" or \"FF p\")");
}

struct Workspace {
  std::map<std::string, PRingPtr> rings;
  std::map<std::string, RationalMap> maps;
  std::map<std::string, Derivation> derivations;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, DRingStructure> dstructures;
  std::map<std::string, Hypersurface> hypersurfaces;
};

template <typename T>
const T& resolve(const std::map<std::string, T>& table,
                 const std::string& name, const char* what) {
  auto it = table.find(name);
  if (it == table.end())
    bad_job(std::string("unresolved ") + what + " name '" + name + "'");
  return it->second;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad_job(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad_job(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

RationalFunction parse_fraction(const json& j, const PRingPtr& ring,
                                const char* what) {
  if (!j.is_object() || !j.contains("num"))
    bad_job(std::string(what) + " must be an object with num (and den)");
  std::string num = j.at("num").get<std::string>();
  std::string den = j.contains("den") ? j.at("den").get<std::string>() : "1";
  return ring->parse_rf(num, den);
}

Coeff parse_scalar(const json& j, const CoeffField& f, const char* what) {
  if (!j.is_string()) bad_job(std::string(what) + " must be a rational string");
  return Coeff::from_mpq(f, parse_rational_literal(j.get<std::string>()));
}

Workspace build_workspace(const json& job) {
  Workspace ws;
  if (job.contains("rings")) {
    for (const auto& [name, spec] : job.at("rings").items()) {
      CoeffField field = parse_field(spec.at("field").get<std::string>());
      std::vector<std::string> vars = string_list(spec.at("vars"), "vars");
      std::vector<std::string> rel =
          spec.contains("relations") ? string_list(spec.at("relations"),
                                                   "relations")
                                     : std::vector<std::string>{};
      std::vector<std::string> inv =
          spec.contains("invert") ? string_list(spec.at("invert"), "invert")
                                  : std::vector<std::string>{};
      ws.rings.emplace(name, make_ring_parsed(field, vars, rel, inv));
    }
  }
  if (job.contains("maps")) {
    for (const auto& [name, spec] : job.at("maps").items()) {
      const PRingPtr& src =
          resolve(ws.rings, spec.at("source").get<std::string>(), "ring");
      const PRingPtr& tgt =
          resolve(ws.rings, spec.at("target").get<std::string>(), "ring");
      std::vector<RationalFunction> images;
      for (const auto& im : spec.at("images"))
        images.push_back(parse_fraction(im, src, "map image"));
      ws.maps.emplace(name, RationalMap(src, tgt, images));
    }
  }
  if (job.contains("derivations")) {
    for (const auto& [name, spec] : job.at("derivations").items()) {
      const PRingPtr& ring =
          resolve(ws.rings, spec.at("ring").get<std::string>(), "ring");
      std::vector<RationalFunction> images;
      for (const auto& im : spec.at("images"))
        images.push_back(parse_fraction(im, ring, "derivation image"));
      ws.derivations.emplace(name, Derivation(ring, images));
    }
  }
  if (job.contains("algebras")) {
    for (const auto& [name, spec] : job.at("algebras").items()) {
      std::size_t dim = spec.at("dim").get<std::size_t>();
      CoeffField field = parse_field(spec.at("field").get<std::string>());
      std::vector<std::string> labels =
          spec.contains("labels") ? string_list(spec.at("labels"), "labels")
                                  : std::vector<std::string>{};
      const json& mul = spec.at("mul");
      if (!mul.is_array() || mul.size() != dim)
        bad_job("mul must be a dim x dim table of coefficient vectors");
      std::vector<std::vector<std::vector<Coeff>>> table(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!mul[i].is_array() || mul[i].size() != dim)
          bad_job("mul must be a dim x dim table of coefficient vectors");
        for (std::size_t j = 0; j < dim; ++j) {
          std::vector<Coeff> cell;
          for (const auto& c : mul[i][j])
            cell.push_back(parse_scalar(c, field, "structure constant"));
          if (cell.size() != dim)
            bad_job("structure constant vectors must have length dim");
          table[i].push_back(cell);
        }
      }
      std::vector<std::vector<Coeff>> projections;
      for (const auto& row : spec.at("projections")) {
        std::vector<Coeff> pi;
        for (const auto& c : row)
          pi.push_back(parse_scalar(c, field, "projection entry"));
        projections.push_back(pi);
      }
      ws.algebras.emplace(name, std::make_shared<const FiniteAlgebra>(
                                    field, labels, table, projections));
    }
  }
  if (job.contains("dstructures")) {
    for (const auto& [name, spec] : job.at("dstructures").items()) {
      const PRingPtr& ring =
          resolve(ws.rings, spec.at("ring").get<std::string>(), "ring");
      const AlgebraPtr& algebra =
          resolve(ws.algebras, spec.at("algebra").get<std::string>(),
                  "algebra");
      std::vector<TensorElement> e_images;
      for (const auto& comps : spec.at("e_images")) {
        TensorElement t{{}};
        for (const auto& c : comps)
          t.comps.push_back(parse_fraction(c, ring, "e-image component"));
        e_images.push_back(t);
      }
      ws.dstructures.emplace(name, DRingStructure(ring, algebra, e_images));
    }
  }
  if (job.contains("hypersurfaces")) {
    for (const auto& [name, spec] : job.at("hypersurfaces").items()) {
      const PRingPtr& ring =
          resolve(ws.rings, spec.at("ring").get<std::string>(), "ring");
      std::vector<std::string> factors =
          string_list(spec.at("factors"), "factors");
      std::vector<bool> irr;
      if (spec.contains("irreducible"))
        for (const auto& b : spec.at("irreducible"))
          irr.push_back(b.get<bool>());
      ws.hypersurfaces.emplace(
          name, Hypersurface::from_strings(ring, factors, irr));
    }
  }
  return ws;
}

json certificate_json(const InvariantCertificate& cert) {
  json stages = json::array();
  if (!cert.unit_kernel.empty()) {
    json vectors = json::array();
    for (const auto& k : cert.unit_kernel) {
      json v = json::array();
      for (const auto& x : k) v.push_back(x.get_str());
      vectors.push_back(v);
    }
    stages.push_back(json{{"stage", "unit_kernel"}, {"vectors", vectors}});
  }
  if (!cert.lambda_relation.empty()) {
    json v = json::array();
    for (const auto& x : cert.lambda_relation) v.push_back(x.get_str());
    stages.push_back(json{{"stage", "lambda_relation"}, {"vector", v}});
  }
  {
    json v = json::array();
    for (const auto& x : cert.witness_exponents) v.push_back(x.get_str());
    stages.push_back(json{{"stage", "witness_exponents"}, {"vector", v}});
  }
  json lambda = json::array();
  for (const auto& l : cert.lambdas) lambda.push_back(l.to_string());
  return json{{"g",
               {{"num", cert.g.num().to_string()},
                {"den", cert.g.den().to_string()}}},
              {"stages", stages},
              {"lambda", lambda},
              {"verified",
               cert.verified_agreement && cert.verified_nonconstant}};
}

json basis_json(const Ideal& I) {
  json out = json::array();
  for (const auto& p : *I.basis(MonomialOrder::grevlex()))
    out.push_back(p.to_string());
  return out;
}

json hypersurface_json(const Hypersurface& H) {
  json factors = json::array(), irr = json::array();
  for (const auto& f : H.factors()) {
    factors.push_back(f.poly.to_string());
    irr.push_back(f.irreducible);
  }
  return json{{"factors", factors}, {"irreducible", irr}};
}

struct TaskOutcome {
  std::string status;  // found | none | refused
  json result;
  std::optional<InvariantCertificate> certificate;
  std::vector<std::string> diagnostics;
  std::vector<std::string> assumptions;
};

TaskOutcome search_to_outcome(const SearchOutcome& s) {
  TaskOutcome out;
  switch (s.status) {
    case SearchStatus::Found: out.status = "found"; break;
    case SearchStatus::None: out.status = "none"; break;
    case SearchStatus::Refused: out.status = "refused"; break;
  }
  out.certificate = s.certificate;
  out.diagnostics = s.diagnostics;
  out.assumptions = s.assumptions;
  return out;
}

std::vector<Hypersurface> witness_list(const Workspace& ws, const json& task) {
  std::vector<Hypersurface> out;
  for (const auto& name : string_list(task.at("witnesses"), "witnesses"))
    out.push_back(resolve(ws.hypersurfaces, name, "hypersurface"));
  return out;
}

TaskOutcome run_task(const Workspace& ws, const json& task) {
  std::string type = task.at("type").get<std::string>();
  TaskOutcome out;
  out.status = "found";

  if (type == "check-invariant") {
    const RationalMap& map =
        resolve(ws.maps, task.at("map").get<std::string>(), "map");
    const Hypersurface& H = resolve(
        ws.hypersurfaces, task.at("hypersurface").get<std::string>(),
        "hypersurface");
    DynamicalSystem sys(map);
    bool inv = totally_invariant_check(sys, H);
    out.status = inv ? "found" : "none";
    out.result = json{{"totally_invariant", inv}};
    return out;
  }
  if (type == "pullback") {
    const RationalMap& map =
        resolve(ws.maps, task.at("map").get<std::string>(), "map");
    const Hypersurface& H = resolve(
        ws.hypersurfaces, task.at("hypersurface").get<std::string>(),
        "hypersurface");
    Ideal scheme = scheme_inverse_image(map, H);
    out.result = json{{"scheme_ideal", basis_json(scheme)}};
    return out;
  }
  if (type == "transform") {
    const RationalMap& map =
        resolve(ws.maps, task.at("map").get<std::string>(), "map");
    const Hypersurface& H = resolve(
        ws.hypersurfaces, task.at("hypersurface").get<std::string>(),
        "hypersurface");
    Hypersurface t = proper_transform(map, H);
    out.status = t.is_empty() ? "none" : "found";
    out.result = json{{"proper_transform", hypersurface_json(t)}};
    if (t.is_empty())
      out.diagnostics.push_back(
          "no component of the preimage dominates a component of the "
          "hypersurface on this chart");
    return out;
  }
  if (type == "compare") {
    const RationalMap& map =
        resolve(ws.maps, task.at("map").get<std::string>(), "map");
    const Hypersurface& H = resolve(
        ws.hypersurfaces, task.at("hypersurface").get<std::string>(),
        "hypersurface");
    PullbackComparison cmp = compare_pullbacks(map, H);
    out.status = cmp.agree ? "found" : "none";
    out.result = json{{"scheme_ideal", basis_json(cmp.scheme)},
                      {"proper_transform", hypersurface_json(cmp.proper)},
                      {"scheme_is_radical", cmp.scheme_is_radical},
                      {"agree", cmp.agree}};
    if (!cmp.agree)
      out.diagnostics.push_back(
          "scheme-theoretic pullback and proper transform differ (the "
          "hypersurface lies in the exceptional set of this map)");
    return out;
  }
  if (type == "search-invariant") {
    if (task.contains("dstructure")) {
      const DRingStructure& D = resolve(
          ws.dstructures, task.at("dstructure").get<std::string>(),
          "dstructure");
      return search_to_outcome(search_dring_invariant(D, witness_list(ws, task)));
    }
    const RationalMap& map =
        resolve(ws.maps, task.at("map").get<std::string>(), "map");
    DynamicalSystem sys(map);
    return search_to_outcome(search_map_invariant(sys, witness_list(ws, task)));
  }
  if (type == "search-integral") {
    const Derivation& d = resolve(
        ws.derivations, task.at("derivation").get<std::string>(),
        "derivation");
    return search_to_outcome(search_first_integral(d, witness_list(ws, task)));
  }
  if (type == "d-check") {
    const DRingStructure& D = resolve(
        ws.dstructures, task.at("dstructure").get<std::string>(),
        "dstructure");
    const Hypersurface& H = resolve(
        ws.hypersurfaces, task.at("hypersurface").get<std::string>(),
        "hypersurface");
    Ideal principal(D.ring()->poly_ring(), {H.product_poly()});
    bool by_ops = totally_invariant_by_operators(D, principal);
    bool by_ext = totally_invariant_by_extension(D, principal);
    out.status = (by_ops && by_ext) ? "found" : "none";
    out.result = json{{"by_operators", by_ops},
                      {"by_extension", by_ext},
                      {"agree", by_ops == by_ext}};
    if (by_ops != by_ext)
      out.diagnostics.push_back(
          "criteria disagree; this indicates a defect, please report");
    return out;
  }
  if (type == "demo-frobenius") {
    std::uint32_t p = task.at("p").get<std::uint32_t>();
    FrobeniusReport rep = frobenius_demo(p);
    json points = json::array();
    for (const auto& pt : rep.points) {
      json divisor = json::array();
      for (const auto& t : pt.scheme_divisor.terms)
        divisor.push_back(json{{"factor", t.factor.to_string()},
                               {"multiplicity", t.multiplicity}});
      points.push_back(json{{"point", pt.point.to_string()},
                            {"scheme_divisor", divisor},
                            {"transform", hypersurface_json(pt.transform)},
                            {"scheme_is_radical", pt.scheme_radical}});
    }
    out.status = rep.search_status == SearchStatus::Refused ? "refused"
                 : rep.search_status == SearchStatus::Found ? "found"
                                                            : "none";
    out.result = json{{"p", rep.p},
                      {"points", points},
                      {"separable", rep.separable}};
    out.diagnostics = rep.diagnostics;
    return out;
  }
  bad_job("unknown task type '" + type + "'");
}

int exit_code_for(const std::string& status) {
  if (status == "found") return 0;
  if (status == "none") return 2;
  if (status == "refused") return 4;
  return 3;
}

JobResult finish(const json& task_echo, TaskOutcome&& out) {
  json report;
  report["task"] = task_echo;
  report["status"] = out.status;
  if (out.certificate && out.status == "found")
    report["certificate"] = certificate_json(*out.certificate);
  if (!out.result.is_null()) report["result"] = out.result;
  report["diagnostics"] = out.diagnostics;
  report["assumptions"] = out.assumptions;
  JobResult r;
  r.exit_code = exit_code_for(out.status);
  r.status = out.status;
  r.report_json = report.dump(2) + "\n";
  r.summary = "status: " + out.status;
  return r;
}

}  // namespace

JobResult run_job_bytes(const std::string& bytes,
                        std::optional<GroebnerBudget> budget) {
  if (budget) set_default_groebner_budget(*budget);
  json task_echo;
  auto error_result = [&](const std::string& status, const std::string& msg) {
    json report;
    report["task"] = task_echo;
    report["status"] = status;
    report["diagnostics"] = json::array({msg});
    report["assumptions"] = json::array();
    JobResult r;
    r.exit_code = exit_code_for(status);
    r.status = status;
    r.report_json = report.dump(2) + "\n";
    r.summary = "status: " + status + " (" + msg + ")";
    return r;
  };

  try {
    json job = json::parse(bytes);
    if (!job.is_object() || !job.contains("task"))
      bad_job("job must be a JSON object with a task");
    task_echo = job.at("task");
    Workspace ws = build_workspace(job);
    TaskOutcome out = run_task(ws, job.at("task"));
    return finish(task_echo, std::move(out));
  } catch (const ParseError& e) {
    return error_result("error",
                        std::string("expression error at line ") +
                            std::to_string(e.line()) + ", column " +
                            std::to_string(e.column()) + ": " + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HypothesisViolation)
      return error_result("refused", e.what());
    return error_result("error", e.what());
  } catch (const json::exception& e) {
    return error_result("error", std::string("job schema: ") + e.what());
  } catch (const std::exception& e) {
    return error_result("error", e.what());
  }
}

}  // namespace invkit

#include "fnet/render.hpp"

namespace fnet {

std::string to_string(const BigRat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Json to_json(const BinaryCode& c) {
  Json j;
  j["length"] = c.length();
  j["rank"] = c.rank();
  Json gens = Json::array();
  for (const BitWord& row : c.basis()) gens.push_back(row.to_string());
  j["generators"] = std::move(gens);
  return j;
}

BinaryCode code_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("length") || !j.contains("generators"))
    throw InputError("code literal needs {\"length\": n, \"generators\": [...]}");
  const int length = j.at("length").get<int>();
  std::vector<BitWord> gens;
  for (const auto& g : j.at("generators")) {
    BitWord w = BitWord::from_string(g.get<std::string>());
    if (w.length() != length)
      throw InputError("code literal: generator length " + std::to_string(w.length()) +
                       " does not match declared length " + std::to_string(length));
    gens.push_back(std::move(w));
  }
  return make_code(length, gens);
}

Json to_json(const DyadicRootTwo& v) {
  Json j;
  j["str"] = v.to_string();
  j["a"] = v.a();
  j["b"] = v.b();
  j["e"] = v.e();
  return j;
}

Json spin_json(const SixteenthWeight& w) {
  Json j;
  j["sixteenths"] = w.spin_exponent();
  if (w.spin_is_one())
    j["real"] = "+1";
  else if (w.spin_is_real())
    j["real"] = "-1";
  else
    j["real"] = nullptr;
  return j;
}

Json to_json(const AlphaClass& cls) {
  Json j;
  j["beta"] = cls.beta.to_string();
  j["rep"] = cls.rep.to_string();
  j["weight"] = weight_and_spin(cls.rep).to_string();
  j["spin"] = spin_json(cls.spin);
  j["dim"] = to_json(sector_dim(cls.rep));
  return j;
}

Json to_json(const BetaReport& r) {
  Json j;
  j["beta"] = r.beta.to_string();
  j["weight"] = r.weight;
  j["num_lambda"] = r.num_lambda.str();
  j["c_beta_size"] = r.c_beta_size.str();
  j["num_classes"] = r.num_classes;
  j["multiplicity_m"] = r.multiplicity_m.str();
  j["split_t"] = r.split_t.str();
  j["irreducible_dim_d"] = r.irreducible_dim_d;
  j["mu_contribution"] = r.mu_contribution.str();
  Json classes = Json::array();
  for (const AlphaClass& cls : r.classes) classes.push_back(to_json(cls));
  j["classes"] = std::move(classes);
  return j;
}

Json to_json(const ExtensionReport& r) {
  Json j;
  j["code"] = to_json(r.code);
  j["dual"] = to_json(r.dual_code);
  j["total_sectors"] = r.total_sectors.str();
  j["total_mu"] = r.total_mu.str();
  j["target_mu"] = r.target_mu.str();
  j["consistent"] = r.consistent;
  Json reports = Json::array();
  for (const BetaReport& b : r.beta_reports) reports.push_back(to_json(b));
  j["beta_reports"] = std::move(reports);
  return j;
}

Json to_json(const LyDiagnostics& d) {
  Json j;
  j["length"] = d.length;
  j["length_ok"] = d.length_ok;
  j["n16"] = d.n16;
  j["triply_even"] = d.triply_even;
  j["has_all_one"] = d.has_all_one;
  j["all"] = d.all();
  return j;
}

Json to_json(const StructureDiagnostics& d) {
  Json j;
  j["c_even"] = d.c_even;
  j["d_triply_even"] = d.d_triply_even;
  j["c_subset_dual_d"] = d.c_subset_dual_d;
  j["c_equals_dual_d"] = d.c_equals_dual_d;
  return j;
}

Json to_json(const DeltaTable& t) {
  Json j;
  j["complete"] = t.complete;
  j["generated_all_spin_one"] = t.generated_all_spin_one;
  j["mismatch_count"] = t.mismatch_count;
  Json gens = Json::array();
  for (const auto& [beta, rep] : t.generator_choices) {
    Json g;
    g["beta"] = beta.to_string();
    g["rep"] = rep.to_string();
    gens.push_back(std::move(g));
  }
  j["generator_choices"] = std::move(gens);
  Json entries = Json::array();
  for (const DeltaEntry& e : t.entries) {
    Json entry;
    entry["beta"] = e.beta.to_string();
    entry["rep"] = e.chosen.rep.to_string();
    entry["spin"] = spin_json(e.chosen.spin);
    entry["generated_has_spin_one"] = e.generated_has_spin_one;
    entry["generated_matches"] = e.generated_matches;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const std::vector<ChainStep>& chain) {
  Json arr = Json::array();
  for (const ChainStep& step : chain) {
    Json s;
    s["d_rank"] = step.d_code.rank();
    s["d_divisibility"] = to_string(divisibility_class(step.d_code));
    Json gens = Json::array();
    for (const BitWord& row : step.d_code.basis()) gens.push_back(row.to_string());
    s["d_generators"] = std::move(gens);
    s["c_rank"] = step.c_code.rank();
    arr.push_back(std::move(s));
  }
  return arr;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["passed"] = cert.passed;
  if (cert.first_failure.empty())
    j["first_failure"] = nullptr;
  else
    j["first_failure"] = cert.first_failure;
  Json stages = Json::array();
  for (const CertStage& s : cert.stages) {
    Json stage;
    stage["name"] = s.name;
    stage["passed"] = s.passed;
    stage["detail"] = s.detail;
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  j["ly"] = to_json(cert.ly);
  j["structure"] = cert.structure ? to_json(*cert.structure) : Json(nullptr);
  j["holomorphic_mu"] = cert.mu ? Json(to_string(*cert.mu)) : Json(nullptr);
  j["report"] = cert.report ? to_json(*cert.report) : Json(nullptr);
  j["delta"] = cert.delta ? to_json(*cert.delta) : Json(nullptr);
  Json chains = Json::array();
  for (std::size_t i = 0; i < cert.chains.size(); ++i) {
    Json c;
    c["beta"] = cert.chain_betas[i].to_string();
    c["steps"] = to_json(cert.chains[i]);
    chains.push_back(std::move(c));
  }
  j["chains"] = std::move(chains);
  return j;
}

}  // namespace fnet

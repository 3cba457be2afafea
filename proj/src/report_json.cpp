#include "cteleport/report_json.hpp"

#include <string>

namespace cteleport {

std::string pair_key(const QubitPair& pair) {
  return std::to_string(pair.first) + std::to_string(pair.second);
}

Json to_json(const RoleAssignment& assign) {
  Json j;
  j["alice"] = {assign.alice[0], assign.alice[1]};
  j["bob"] = {assign.bob[0], assign.bob[1]};
  j["charlie"] = assign.charlie;
  return j;
}

Json to_json(const PureState& s) {
  Json j;
  j["num_qubits"] = s.num_qubits();
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
  j["amplitudes"] = std::move(amps);
  return j;
}

Json to_json(const PurityReport& report) {
  Json j;
  Json pairs = Json::object();
  for (const auto& [pair, value] : report.pair_purities) pairs[pair_key(pair)] = value;
  Json singles = Json::object();
  for (const auto& [q, value] : report.single_purities) singles[std::to_string(q)] = value;
  j["pairs"] = std::move(pairs);
  j["singles"] = std::move(singles);
  j["mmes"] = report.mmes.is_mmes;
  j["worst_pair"] = pair_key(report.mmes.worst_pair);
  j["max_deviation"] = report.mmes.max_deviation;
  return j;
}

Json to_json(const CriterionReport& report) {
  Json j;
  j["assignment"] = to_json(report.assignment);
  j["theta"] = report.theta;
  j["sigma111_defect"] = report.sigma111_defect;
  j["sigma112_defect"] = report.sigma112_defect;
  j["pass"] = report.pass;
  j["purity_alice_pair"] = report.purity_alice_pair;
  j["purity_bob_pair"] = report.purity_bob_pair;
  return j;
}

Json to_json(const std::vector<TeleportationRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    Json j;
    j["outcome"] = {r.outcome.i, r.outcome.j, r.outcome.n};
    j["probability"] = r.probability;
    j["fidelity"] = r.fidelity;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const ThetaClassification& c) {
  Json j;
  j["kind"] = std::string(to_string(c.kind));
  j["roots"] = c.roots;
  j["min_defect"] = c.min_defect;
  j["argmin_theta"] = c.argmin_theta;
  return j;
}

Json to_json(const ScanReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json j = to_json(e.assignment);
    const Json c = to_json(e.classification);
    for (const auto& item : c.items()) j[item.key()] = item.value();
    j["purity_alice"] = e.purity_alice;
    j["purity_bob"] = e.purity_bob;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace cteleport

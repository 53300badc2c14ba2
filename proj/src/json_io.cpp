#include "orelim/json_io.hpp"

namespace orelim {

using nlohmann::json;

json to_json(const RowOp& op, const std::string& var) {
  if (op.kind == RowOp::Kind::SignedSwap) return {{"op", "signed_swap"}, {"i", op.i}, {"j", op.j}};
  return {{"op", "addmul"}, {"i", op.i}, {"j", op.j}, {"q", op.q.to_string(var)}};
}

json to_json(const DetResult& det, const std::string& var) {
  json log = json::array();
  for (const auto& op : det.op_log) log.push_back(to_json(op, var));
  json j;
  j["rep"] = det.rep.to_string(var);
  if (det.is_zero)
    j["degree"] = "-inf";
  else
    j["degree"] = det.degree;
  j["is_zero"] = det.is_zero;
  j["op_log"] = std::move(log);
  return j;
}

json to_json(const ModularPlan& plan) {
  const FieldCtx& work = *plan.work_field();
  json points = json::array();
  for (auto a : plan.points) points.push_back(work.to_string(a));
  return {{"base_field", plan.base->spec()},
          {"work_field", work.spec()},
          {"embedding_of_t", work.to_string(plan.ext.embed.image_of_gen())},
          {"sigma1_exponent", plan.sigma1.exponent()},
          {"sigma1_order", plan.sigma1.order()},
          {"sigma2_exponent", plan.sigma2.exponent()},
          {"degree_bound", plan.degree_bound},
          {"points", std::move(points)}};
}

json to_json(const ConjugacyReport& report, const FieldCtx& field) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json members = json::array();
    for (auto a : c.members) members.push_back(field.to_string(a));
    classes.push_back({{"norm", field.to_string(c.norm)}, {"size", c.members.size()}, {"members", members}});
  }
  json j{{"classes", std::move(classes)}, {"zero_points", report.zero_points}};
  if (report.zero_points) j["note"] = "ZeroElement";
  return j;
}

}  // namespace orelim

#include "equiosc/problem_json.hpp"

#include <fstream>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double num(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ValidationError(std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Json formula_to_json(const FieldFormula& f) {
  return std::visit(
      Overloaded{
          [](const Constant& c) { return Json{{"type", "Constant"}, {"c", c.c}}; },
          [](const NegInfinity&) { return Json{{"type", "NegInfinity"}}; },
          [](const LogOfWeight& w) {
            return Json{{"type", "LogOfWeight"}, {"c", w.c},         {"left", w.left},
                        {"alpha", w.alpha},      {"right", w.right}, {"beta", w.beta}};
          },
          [](const SqrtAffine& s) {
            return Json{{"type", "SqrtAffine"}, {"c", s.c}, {"s", s.s}, {"t0", s.t0}};
          },
          [](const Indicator& i) { return Json{{"type", "Indicator"}, {"value", i.value}}; },
      },
      f);
}

FieldFormula formula_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "Constant") return Constant{num(j, "c")};
  if (type == "NegInfinity") return NegInfinity{};
  if (type == "LogOfWeight") {
    return LogOfWeight{num(j, "c"), num(j, "left"), num(j, "alpha"), num(j, "right"),
                       num(j, "beta")};
  }
  if (type == "SqrtAffine") return SqrtAffine{num(j, "c"), num(j, "s"), num(j, "t0")};
  if (type == "Indicator") return Indicator{num(j, "value")};
  throw ValidationError("unknown field formula type '" + type + "'");
}

/// Runs a parser, translating library-level JSON errors into validation
/// errors.
template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed problem JSON: ") + e.what());
  }
}

}  // namespace

Json ext_to_json(ExtReal v) { return v.is_neg_inf() ? Json(nullptr) : Json(v.value()); }

Json kernel_to_json(const KernelSpec& k) {
  switch (k.variant()) {
    case KernelVariant::kLog: return {{"variant", "Log"}, {"params", Json::object()}};
    case KernelVariant::kCappedLog: return {{"variant", "CappedLog"}, {"params", {{"a", k.cap()}}}};
    case KernelVariant::kSqrtShift: return {{"variant", "SqrtShift"}, {"params", Json::object()}};
    case KernelVariant::kTentLog: return {{"variant", "TentLog"}, {"params", Json::object()}};
    case KernelVariant::kCappedLogPlusQuadratic:
      return {{"variant", "CappedLogPlusQuadratic"}, {"params", {{"a", k.cap()}}}};
    case KernelVariant::kRegularized:
      return {{"variant", "Regularized"},
              {"params", {{"base", kernel_to_json(k.base())}, {"eta", k.eta()}}}};
  }
  throw ValidationError("unknown kernel variant");
}

KernelSpec kernel_from_json(const Json& j) {
  return guarded([&] {
    const std::string v = j.at("variant").get<std::string>();
    const Json params = j.value("params", Json::object());
    if (v == "Log") return KernelSpec::log();
    if (v == "CappedLog") return KernelSpec::capped_log(num(params, "a"));
    if (v == "SqrtShift") return KernelSpec::sqrt_shift();
    if (v == "TentLog") return KernelSpec::tent_log();
    if (v == "CappedLogPlusQuadratic") return KernelSpec::capped_log_plus_quadratic(num(params, "a"));
    if (v == "Regularized") {
      return KernelSpec::regularized(kernel_from_json(params.at("base")), num(params, "eta"));
    }
    throw ValidationError("unknown kernel variant '" + v + "'");
  });
}

Json field_to_json(const FieldSpec& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"formula", formula_to_json(p.formula)}});
  }
  Json points = Json::array();
  for (const auto& pv : f.point_values()) points.push_back(Json::array({pv.t, ext_to_json(pv.value)}));
  return {{"pieces", pieces}, {"point_values", points}};
}

FieldSpec field_from_json(const Json& j) {
  return guarded([&] {
    std::vector<FieldPiece> pieces;
    for (const auto& p : j.at("pieces")) {
      pieces.push_back(FieldPiece{num(p, "lo"), num(p, "hi"), formula_from_json(p.at("formula"))});
    }
    std::vector<PointValue> points;
    if (j.contains("point_values")) {
      for (const auto& pv : j.at("point_values")) {
        if (!pv.is_array() || pv.size() != 2) throw ValidationError("point value must be [t, v]");
        const ExtReal v = pv[1].is_null() ? kNegInf : ExtReal::from_double(pv[1].get<double>());
        points.push_back(PointValue{pv[0].get<double>(), v});
      }
    }
    return FieldSpec(std::move(pieces), std::move(points));
  });
}

Json problem_to_json(const Problem& p) {
  return {{"n", p.n()},
          {"r", p.r()},
          {"kernel", kernel_to_json(p.kernel())},
          {"field", field_to_json(p.field())}};
}

Problem problem_from_json(const Json& j) {
  return guarded([&] {
    auto r = j.at("r").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(r.size())) {
      throw ValidationError("'n' disagrees with the length of 'r'");
    }
    const Json field = j.contains("field") ? j.at("field") : field_to_json(FieldSpec::zero());
    return Problem(std::move(r), kernel_from_json(j.at("kernel")), field_from_json(field));
  });
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file '" + path + "'");
  return guarded([&] { return problem_from_json(Json::parse(in)); });
}

}  // namespace equiosc

#include "equiosc/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "equiosc/errors.hpp"

namespace equiosc {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_real(ExtReal v) { return v.is_neg_inf() ? "-inf" : format_real(v.value()); }

Json maxima_to_json(const NodeSystem& y, const MaximaVector& mv) {
  Json m = Json::array();
  Json arg = Json::array();
  for (std::size_t j = 0; j < mv.m.size(); ++j) {
    m.push_back(ext_to_json(mv.m[j]));
    arg.push_back(mv.argmax[j] ? Json(*mv.argmax[j]) : Json(nullptr));
  }
  return {{"nodes", y.nodes()}, {"m", m}, {"argmax", arg}};
}

Json report_to_json(const SolveReport& r) {
  Json out = maxima_to_json(r.nodes, r.maxima);
  Json phi = Json::array();
  for (std::size_t j = 1; j < r.maxima.m.size(); ++j) {
    const ExtReal a = r.maxima.m[j];
    const ExtReal b = r.maxima.m[j - 1];
    phi.push_back(a.is_finite() && b.is_finite() ? Json(a.value() - b.value()) : Json(nullptr));
  }
  out["phi"] = phi;
  out["value"] = r.value;
  out["residual"] = r.residual;
  out["iterations"] = r.iterations;
  out["converged"] = r.converged;
  out["target"] = r.target;
  out["non_uniqueness_risk"] = r.non_uniqueness_risk;
  return out;
}

void export_curve(const Problem& p, const NodeSystem& y, int samples,
                  const std::filesystem::path& path) {
  if (samples < 2) throw PreconditionError("export needs at least 2 samples");
  std::ofstream csv(path);
  if (!csv) throw std::runtime_error("cannot write " + path.string());
  csv << "t,F\n";
  for (int k = 0; k < samples; ++k) {
    const double t = (k == samples - 1) ? 1.0 : static_cast<double>(k) / (samples - 1);
    const ExtReal v = eval_F(p, y, t);
    csv << format_real(t) << ',' << (v.is_neg_inf() ? "" : format_real(v.value())) << '\n';
  }
  if (!csv) throw std::runtime_error("failed writing " + path.string());

  std::filesystem::path side = path;
  side += ".json";
  std::ofstream js(side);
  if (!js) throw std::runtime_error("cannot write " + side.string());
  js << maxima_to_json(y, interval_maxima(p, y)).dump(2) << '\n';
}

}  // namespace equiosc

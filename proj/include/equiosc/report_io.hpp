#pragma once

#include <filesystem>
#include <string>

#include "equiosc/equi_solver.hpp"
#include "equiosc/problem_json.hpp"

namespace equiosc {

/// Nine significant digits; "-inf" for negative infinity.
std::string format_real(double v);
std::string format_real(ExtReal v);

/// {nodes, m, phi, value, residual, iterations, converged}; -inf maxima and
/// undefined differences are null.
Json report_to_json(const SolveReport& r);

Json maxima_to_json(const NodeSystem& y, const MaximaVector& mv);

/// CSV with header `t,F` and `samples` equispaced rows over [0,1]; -inf is
/// an empty field. Writes `<path>.json` alongside with nodes, maxima and
/// argmax points. Throws PreconditionError for samples < 2 and
/// std::runtime_error on I/O failure.
void export_curve(const Problem& p, const NodeSystem& y, int samples,
                  const std::filesystem::path& path);

}  // namespace equiosc

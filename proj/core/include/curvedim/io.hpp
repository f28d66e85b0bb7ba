#ifndef CURVEDIM_IO_HPP
#define CURVEDIM_IO_HPP

#include "curvedim/curve_model.hpp"
#include "curvedim/dichotomy.hpp"
#include "curvedim/divisor.hpp"
#include "curvedim/quadrature.hpp"

#include <json.hpp>

#include <string>

namespace curvedim {

using ordered_json = nlohmann::ordered_json;

/// Parse and analyze a curve description (schema version "1").
CurveModel load_curve(const nlohmann::json& doc);
/// Parse an open-set description.
OpenSetSpec load_openset(const nlohmann::json& doc);
/// Parse a quadrature configuration.
QuadratureConfig load_config(const nlohmann::json& doc);

ordered_json report_analyze(const CurveModel& model);
ordered_json report_decide(const CurveModel& model, const OpenSetSpec& spec,
                           const DichotomyReport& rep);
ordered_json report_l2delta(const CurveModel& model, const OpenSetSpec& spec,
                            const L2DeltaResult& res);
ordered_json report_verify(const QuadratureConfig& cfg, const VerifySummary& summary);

} // namespace curvedim

#endif

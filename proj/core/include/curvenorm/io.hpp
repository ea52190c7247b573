#pragma once

#include <string>

#include "curvenorm/curve.hpp"
#include "curvenorm/harmonic.hpp"
#include "curvenorm/types.hpp"
#include "curvenorm/zoo.hpp"

namespace curvenorm {

/// Reads {"nodes": [[re, im], ...], "closed": true}; when "resample": N is
/// present the polyline is resampled to N equispaced nodes on load.
/// Throws io_error when unreadable, config_error on schema violations.
JordanCurve load_curve_file(const std::string& path);

/// Reads {"kind": "samples", "values": [[re, im], ...]} or
/// {"kind": "builtin", "name": ..., "params": {...}} resolved against the
/// given curve.
CurveFunction load_function_file(const std::string& path,
                                 const JordanCurve& curve);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// CSV dump of the grid (cell center, mask, value), one row per cell.
std::string field_dump_csv(const HarmonicGridField& field);

}  // namespace curvenorm

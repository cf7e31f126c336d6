#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "convsec/asymptotics.hpp"
#include "convsec/bodies.hpp"
#include "convsec/centroids.hpp"
#include "convsec/cone.hpp"
#include "convsec/cutvol.hpp"
#include "convsec/ext_real.hpp"
#include "convsec/sections.hpp"

namespace convsec {

using json = nlohmann::json;

/// Vectors are JSON arrays of numbers.
json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// Infinite values serialize as the strings "+inf" / "-inf".
json ext_to_json(const ExtReal& x);
ExtReal ext_from_json(const json& j);

/// {"kind", "dim", "params", "translation", "function"?}; see
/// docs/body_schema.json. Throws Error(InvalidArgument) on malformed input.
json body_to_json(const BodySpec& body);
BodySpec body_from_json(const json& j);

json cone_to_json(const ConeDescriptor& cone);
json section_to_json(const SectionStats& s);
json line_fit_to_json(const LineFit& f);
json verdict_to_json(const LineFamilyVerdict& v);
json cut_result_to_json(const CutVolumeResult& r);
json scan_summary_to_json(const ScanSummary& s);
json shell_to_json(const ShellDistance& s);

/// Round-trip safe decimal form of a double (17 significant digits).
std::string format_double(double x);

/// CSV columns ux,uy[,uz],t,measure,cx,cy[,cz],err,n_evals.
std::string section_csv_header(int dim);
std::string section_csv_row(const SectionStats& s);

}  // namespace convsec

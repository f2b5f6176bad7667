#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rephom/gc_algebra.hpp"
#include "rephom/poincare_series.hpp"

namespace rephom::report {

// Insertion-ordered JSON keeps reports byte-stable.
using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

Format format_from_string(const std::string& s);

// Fixed record of the engine's sign and normalization choices; embedded in
// every report so regressions are attributable to a convention change.
Json conventions();

// Report skeleton: schema tag, the command, the conventions block.
Json make_report(const std::string& command);

// Degree-indexed map with ascending integer keys serialized as strings.
Json dims_to_json(const std::map<int, std::size_t>& dims);

// Weight exponent label: "1" for zero weight, else "q^a" / "q^a t^b".
std::string weight_label(const gca::Weight& w);

// Degree-keyed object; with weights present, each degree maps to a
// weight-labelled sub-object.
Json series_to_json(const PoincareSeries& s);

std::string render(const Json& j, Format format);

// Writes the rendered report to `path`, or to stdout when empty or "-".
void emit(const Json& j, const std::string& path, Format format);

}  // namespace rephom::report

#include "rephom/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "rephom/errors.hpp"
#include "rephom/rational.hpp"

namespace rephom::report {

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw InputError("unknown format \"" + s + "\" (expected json, csv, text)");
}

Json conventions() {
  Json c;
  c["coefficients"] = "exact rationals (GMP)";
  c["generator_order"] = "representation generators sorted by (degree, algebra index, label)";
  c["representation_differential"] =
      "d(xi* (x) v) = xi-component of the universal representation of dv; scale 1";
  c["current_boundary"] =
      "odd derivation of the internal differential plus pairwise bracket "
      "contraction with front multiplication; no global sign";
  c["chain_to_engine_degree"] = "n = -(chain degree)";
  c["hodge_loop_degree"] = "n = -(form degree) - 1";
  c["trace_normalization"] =
      "form-side trace scaled by 1/(m+1)!; algebra legs carry no extra sign";
  c["constant_term_normalization"] =
      "raw constant term reported; chi comparisons carry 1/|W|";
  c["weight_truncation"] = "scalar total-weight cutoff";
  return c;
}

Json make_report(const std::string& command) {
  Json j;
  j["schema"] = "rephom/1";
  j["command"] = command;
  j["conventions"] = conventions();
  return j;
}

Json dims_to_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (const auto& [degree, dim] : dims)
    j[std::to_string(degree)] = static_cast<std::int64_t>(dim);
  return j;
}

std::string weight_label(const gca::Weight& w) {
  if (w == gca::weight_zero()) return "1";
  std::string out;
  if (w[0] != 0) {
    out = "q";
    if (w[0] != 1) out += "^" + std::to_string(w[0]);
  }
  if (w[1] != 0) {
    if (!out.empty()) out += " ";
    out += "t";
    if (w[1] != 1) out += "^" + std::to_string(w[1]);
  }
  return out;
}

Json series_to_json(const PoincareSeries& s) {
  Json j = Json::object();
  if (s.weight_rank() == 0) {
    for (const auto& [key, c] : s.terms())
      j[std::to_string(key[0])] = rat_to_string(c);
    return j;
  }
  for (const auto& [key, c] : s.terms()) {
    const std::string deg = std::to_string(key[0]);
    if (!j.contains(deg)) j[deg] = Json::object();
    j[deg][weight_label({key[1], key[2]})] = rat_to_string(c);
  }
  return j;
}

namespace {

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void csv_walk(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      csv_walk(value, path.empty() ? key : path + "/" + key, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) csv_walk(value, path + "/" + std::to_string(i++), os);
  } else {
    os << csv_quote(path) << "," << csv_quote(scalar_str(j)) << "\n";
  }
}

void text_walk(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        text_walk(value, indent + 1, os);
      } else {
        os << pad << key << ": " << scalar_str(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "- [" << i << "]\n";
        text_walk(value, indent + 1, os);
      } else {
        os << pad << "- " << scalar_str(value) << "\n";
      }
      ++i;
    }
  } else {
    os << pad << scalar_str(j) << "\n";
  }
}

}  // namespace

std::string render(const Json& j, Format format) {
  switch (format) {
    case Format::json:
      return j.dump(2) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "key,value\n";
      csv_walk(j, "", os);
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      text_walk(j, 0, os);
      return os.str();
    }
  }
  throw InputError("unknown report format");
}

void emit(const Json& j, const std::string& path, Format format) {
  const std::string body = render(j, format);
  if (path.empty() || path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file " + path);
  out << body;
  if (!out) throw InputError("failed writing output file " + path);
}

}  // namespace rephom::report

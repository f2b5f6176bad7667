#include "rephom/jobs.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "rephom/catalog.hpp"
#include "rephom/ce_complex.hpp"
#include "rephom/drinfeld.hpp"
#include "rephom/errors.hpp"
#include "rephom/hodge.hpp"
#include "rephom/invariant_polynomial.hpp"
#include "rephom/macdonald.hpp"
#include "rephom/rep_complex.hpp"

namespace rephom::jobs {

namespace {

using report::Json;

std::string command_name(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::invariants: return "invariants";
    case Command::ce_check: return "ce-check";
    case Command::hodge: return "hodge";
    case Command::trace: return "trace";
    case Command::drinfeld_check: return "drinfeld-check";
    case Command::macdonald: return "macdonald";
    case Command::series: return "series";
    case Command::catalog: return "catalog";
    case Command::validate: return "validate";
  }
  return "unknown";
}

bool looks_like_file(const std::string& s) {
  return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("unparsable JSON in " + path + ": " + e.what());
  }
  return j;
}

// File contents are user input: validation failures surface as input errors.
model::SpaceModels load_space(const std::string& spec, int cap) {
  if (spec.empty()) throw InputError("missing --space");
  if (!looks_like_file(spec)) return model::catalog(spec, cap);
  const nlohmann::json j = read_json_file(spec);
  const std::string type = j.value("type", "");
  model::SpaceModels out;
  out.spec = spec;
  out.description = "model file " + spec;
  try {
    if (type == "quillen")
      out.quillen = model::QuillenModel::from_json(j);
    else if (type == "sullivan")
      out.sullivan = model::SullivanModel::from_json(j);
    else
      throw InputError(spec +
                       ": model type must be \"quillen\" or \"sullivan\"");
  } catch (const MathError& e) {
    throw InputError(spec + ": " + e.what());
  }
  return out;
}

lie::LieAlgebra load_group(const std::string& name) {
  if (name.empty()) throw InputError("missing --group");
  if (!looks_like_file(name)) return lie::LieAlgebra::builtin(name);
  try {
    lie::LieAlgebra g = lie::LieAlgebra::from_json(read_json_file(name));
    g.validate();
    return g;
  } catch (const MathError& e) {
    throw InputError(name + ": " + e.what());
  }
}

const model::QuillenModel& need_quillen(const model::SpaceModels& m,
                                        int max_degree) {
  if (!m.quillen)
    throw InputError("space " + m.spec + " has no Lie model for this command");
  if (m.quillen_validity && *m.quillen_validity < max_degree)
    throw InputError("the Lie model of " + m.spec +
                     " is only valid to degree " +
                     std::to_string(*m.quillen_validity));
  return *m.quillen;
}

const model::SullivanModel& need_sullivan(const model::SpaceModels& m) {
  if (!m.sullivan)
    throw InputError("space " + m.spec +
                     " has no Sullivan model for this command");
  return *m.sullivan;
}

void require_reductive(const lie::LieAlgebra& g) {
  if (g.exponents.empty())
    throw InputError("group " + g.name +
                     " carries no exponent data; invariant computations need "
                     "a reductive algebra");
}

int ce_cutoff(const JobSpec& job, const model::SullivanModel& a) {
  if (job.weight_cutoff > 0) return job.weight_cutoff;
  return ce::CeComplex::required_cutoff(a, job.max_degree);
}

Json nonzero_dims(const std::vector<std::size_t>& dims) {
  std::map<int, std::size_t> nonzero;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != 0) nonzero[static_cast<int>(i)] = dims[i];
  return report::dims_to_json(nonzero);
}

std::string tree_str(const model::LieTree& t, const model::QuillenModel& m) {
  if (t.leaf >= 0) return m.label(t.leaf);
  return "[" + tree_str(*t.left, m) + "," + tree_str(*t.right, m) + "]";
}

std::string expr_str(const model::LieExpr& e, const model::QuillenModel& m) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, t] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != Rat(1)) os << rat_to_string(c) << "*";
    os << tree_str(*t, m);
  }
  return os.str();
}

std::string word_str(const drinfeld::SymWord& w, const model::QuillenModel& m) {
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += " . ";
    if (f.terms().size() > 1)
      out += "(" + expr_str(f, m) + ")";
    else
      out += expr_str(f, m);
  }
  return out;
}

int cmd_compute(const JobSpec& job, bool invariant_only) {
  const model::SpaceModels models = load_space(job.space, job.max_degree);
  const lie::LieAlgebra g = load_group(job.group);
  if (invariant_only) require_reductive(g);
  const model::QuillenModel& qm = need_quillen(models, job.max_degree);

  Json j = report::make_report(command_name(job.command));
  j["space"] = models.spec;
  j["group"] = g.name;
  j["max_degree"] = job.max_degree;
  const rep::RepComplex rc(qm, g);
  if (!invariant_only) {
    j["dims"] = nonzero_dims(rc.homology_dims(job.max_degree));
    j["series"] = rc.homology_series(job.max_degree).forget_weights().str();
  }
  if (!g.exponents.empty()) {
    j["invariant_dims"] = nonzero_dims(rc.invariant_homology_dims(job.max_degree));
    j["invariant_series"] =
        rc.invariant_homology_series(job.max_degree).forget_weights().str();
  }
  report::emit(j, job.output, job.format);
  return 0;
}

int cmd_ce_check(const JobSpec& job) {
  const model::SpaceModels models = load_space(job.space, job.max_degree);
  const lie::LieAlgebra g = load_group(job.group);
  const model::QuillenModel& qm = need_quillen(models, job.max_degree);
  const model::SullivanModel& a = need_sullivan(models);
  const int cutoff = ce_cutoff(job, a);

  Json j = report::make_report("ce-check");
  j["space"] = models.spec;
  j["group"] = g.name;
  j["max_degree"] = job.max_degree;
  j["weight_cutoff"] = cutoff;

  const rep::RepComplex rc(qm, g);
  bool pass = true;
  const auto compare = [&](const PoincareSeries& lie_route,
                           const PoincareSeries& current_route) {
    Json side;
    side["lie_route"] = lie_route.str();
    side["current_route"] = current_route.str();
    Json rows = Json::array();
    for (int d = 0; d <= job.max_degree; ++d) {
      const Rat a_coeff = lie_route.z_coefficient(d);
      const Rat b_coeff = current_route.z_coefficient(d);
      if (is_zero(a_coeff) && is_zero(b_coeff)) continue;
      rows.push_back(Json{{"degree", d},
                          {"lie_route", rat_to_string(a_coeff)},
                          {"current_route", rat_to_string(b_coeff)},
                          {"ok", a_coeff == b_coeff}});
    }
    side["rows"] = rows;
    const std::string mismatch = lie_route.first_mismatch(current_route);
    if (!mismatch.empty()) side["first_mismatch"] = mismatch;
    pass = pass && mismatch.empty();
    return side;
  };

  {
    const ce::CeComplex cc(g, a, cutoff, false);
    j["absolute"] = compare(rc.homology_series(job.max_degree).forget_weights(),
                            cc.series(job.max_degree).forget_weights());
  }
  if (!g.exponents.empty()) {
    const ce::CeComplex cc(g, a, cutoff, true);
    j["relative"] =
        compare(rc.invariant_homology_series(job.max_degree).forget_weights(),
                cc.series(job.max_degree).forget_weights());
  }
  j["pass"] = pass;
  report::emit(j, job.output, job.format);
  return pass ? 0 : 1;
}

int cmd_hodge(const JobSpec& job) {
  const model::SpaceModels models = load_space(job.space, job.max_degree);
  const model::SullivanModel& a = need_sullivan(models);
  const lie::LieAlgebra g = load_group(job.group);
  require_reductive(g);

  Json j = report::make_report("hodge");
  j["space"] = models.spec;
  j["group"] = g.name;
  j["max_degree"] = job.max_degree;
  const hodge::FormComplex forms(a);
  Json pieces = Json::array();
  for (int m : g.exponents) {
    Json piece;
    piece["exponent"] = m;
    piece["hodge_piece"] = m + 1;
    piece["weight_cutoff"] = forms.cutoff_for_degree(m, job.max_degree);
    piece["loop_dims"] =
        report::dims_to_json(forms.loop_dims(m, job.max_degree));
    pieces.push_back(std::move(piece));
  }
  j["pieces"] = pieces;
  report::emit(j, job.output, job.format);
  return 0;
}

int cmd_trace(const JobSpec& job) {
  const model::SpaceModels models = load_space(job.space, job.max_degree);
  const lie::LieAlgebra g = load_group(job.group);
  require_reductive(g);
  const model::QuillenModel& qm = need_quillen(models, job.max_degree);
  const model::SullivanModel& a = need_sullivan(models);

  Json j = report::make_report("trace");
  j["space"] = models.spec;
  j["group"] = g.name;
  j["max_degree"] = job.max_degree;

  const rep::RepComplex rc(qm, g);
  const hodge::FormComplex forms(a);
  const auto polys = lie::InvariantPolynomial::standard_generators(g);
  bool pass = true;
  Json traces = Json::array();
  for (const auto& poly : polys) {
    Json entry;
    entry["polynomial"] = poly.name();
    entry["degree"] = poly.degree();
    const auto dims = forms.loop_dims(poly.degree() - 1, job.max_degree);
    if (dims.empty()) {
      entry["note"] = "no generators below the degree cap";
      traces.push_back(std::move(entry));
      continue;
    }
    const int n0 = dims.begin()->first;
    entry["target_degree"] = n0;
    Json images = Json::array();
    for (const auto& w : drinfeld::trace_words(qm, poly.degree(), n0)) {
      const gca::Element img = drinfeld::quillen_trace(poly, rc, w);
      if (img.is_zero()) continue;
      const bool cycle = rc.algebra().apply(rc.diff(), img).is_zero();
      bool invariant = true;
      for (int u = 0; u < g.dim && invariant; ++u)
        invariant = rc.algebra().apply(rc.ad_action(u), img).is_zero();
      pass = pass && cycle && invariant;
      images.push_back(Json{{"word", word_str(w, qm)},
                            {"image", rc.algebra().element_str(img)},
                            {"cycle", cycle},
                            {"ad_invariant", invariant}});
    }
    entry["images"] = images;
    traces.push_back(std::move(entry));
  }
  j["traces"] = traces;
  j["pass"] = pass;
  report::emit(j, job.output, job.format);
  return pass ? 0 : 1;
}

int cmd_drinfeld_check(const JobSpec& job) {
  const lie::LieAlgebra g = load_group(job.group);
  if (job.space.empty()) throw InputError("missing --space");
  const drinfeld::FreenessReport fr =
      drinfeld::drinfeld_freeness_check(job.space, g, job.max_degree);

  Json j = report::make_report("drinfeld-check");
  j["space"] = fr.space;
  j["group"] = fr.group;
  j["max_degree"] = job.max_degree;
  j["generator_degrees"] = fr.generator_degrees;
  j["free_series"] = fr.free_series;
  j["invariant_series"] = fr.invariant_series;
  Json checks = Json::array();
  for (const auto& row : fr.checks)
    checks.push_back(
        Json{{"item", row.item}, {"ok", row.ok}, {"detail", row.detail}});
  j["checks"] = checks;
  j["pass"] = fr.pass;
  report::emit(j, job.output, job.format);
  return fr.pass ? 0 : 1;
}

int cmd_macdonald(const JobSpec& job) {
  if (job.root_type.empty())
    throw InputError("missing --type (one of A1, A2, A3, B2, G2, B3)");
  if (job.r < 0) throw InputError("--r must be nonnegative");
  const macd::RootSystem rs = macd::RootSystem::builtin(job.root_type);

  Json j = report::make_report("macdonald");
  j["type"] = rs.type_rank;
  j["r"] = job.r;
  const macd::QIdentityReport q = macd::verify_q_identity(rs, job.r);
  j["lhs"] = q.ct;
  j["rhs"] = q.product_side;
  j["normalization_note"] = q.normalization;
  Json qj;
  qj["pass"] = q.pass;
  qj["chi_ct"] = q.chi_ct;
  qj["chi_product"] = q.chi_product;
  if (!q.first_mismatch.empty()) qj["first_mismatch"] = q.first_mismatch;
  j["q_identity"] = qj;
  bool pass = q.pass;

  if (job.order_q >= 2 && job.order_t >= 2) {
    const macd::QtIdentityReport qt =
        macd::verify_qt_identity(rs, job.order_q, job.order_t);
    Json qtj;
    qtj["order_q"] = qt.order_q;
    qtj["order_t"] = qt.order_t;
    qtj["pass"] = qt.pass;
    qtj["lhs"] = qt.lhs;
    qtj["rhs"] = qt.rhs;
    qtj["normalization_note"] = qt.normalization;
    if (!qt.first_mismatch.empty()) qtj["first_mismatch"] = qt.first_mismatch;
    j["qt_identity"] = qtj;
    pass = pass && qt.pass;
  }
  j["verdict"] = pass ? "PASS" : "FAIL";
  report::emit(j, job.output, job.format);
  return pass ? 0 : 1;
}

int cmd_series(const JobSpec& job) {
  const model::SpaceModels models = load_space(job.space, job.max_degree);
  const model::SullivanModel& a = need_sullivan(models);
  const lie::LieAlgebra g = load_group(job.group);
  const int cutoff = ce_cutoff(job, a);

  Json j = report::make_report("series");
  j["space"] = models.spec;
  j["group"] = g.name;
  j["max_degree"] = job.max_degree;
  j["weight_cutoff"] = cutoff;

  const auto euler_json = [](const std::map<gca::Weight, Int>& euler) {
    Json out = Json::object();
    for (const auto& [w, chi] : euler)
      out[report::weight_label(w)] = chi.get_str();
    return out;
  };

  {
    const ce::CeComplex cc(g, a, cutoff, false);
    j["series"] = report::series_to_json(cc.series(job.max_degree));
    j["weight_euler"] = euler_json(cc.weight_euler());
  }
  if (!g.exponents.empty()) {
    const ce::CeComplex cc(g, a, cutoff, true);
    j["relative_series"] = report::series_to_json(cc.series(job.max_degree));
    j["relative_weight_euler"] = euler_json(cc.weight_euler());
  }
  report::emit(j, job.output, job.format);
  return 0;
}

int cmd_catalog(const JobSpec& job) {
  Json j = report::make_report("catalog");
  Json families = Json::array();
  for (const auto& [pattern, description] : model::catalog_families())
    families.push_back(Json{{"pattern", pattern}, {"description", description}});
  j["families"] = families;
  Json samples = Json::array();
  for (const auto& spec : model::catalog_samples()) {
    const model::SpaceModels m = model::catalog(spec, 6);
    Json entry;
    entry["space"] = m.spec;
    entry["description"] = m.description;
    entry["lie_model"] = m.quillen.has_value();
    entry["sullivan_model"] = m.sullivan.has_value();
    if (m.quillen_validity) entry["lie_model_validity"] = *m.quillen_validity;
    samples.push_back(std::move(entry));
  }
  j["samples"] = samples;
  report::emit(j, job.output, job.format);
  return 0;
}

int cmd_validate(const JobSpec& job) {
  if (job.space.empty() && job.group.empty())
    throw InputError("validate needs --space and/or --group");
  Json j = report::make_report("validate");
  Json items = Json::array();
  if (!job.space.empty()) {
    const model::SpaceModels models = load_space(job.space, job.max_degree);
    Json item;
    item["input"] = job.space;
    item["kind"] = "space";
    item["ok"] = true;
    if (models.quillen) item["lie_model"] = "valid";
    if (models.quillen_validity)
      item["lie_model_validity"] = *models.quillen_validity;
    if (models.sullivan) item["sullivan_model"] = "valid";
    items.push_back(std::move(item));
  }
  if (!job.group.empty()) {
    const lie::LieAlgebra g = load_group(job.group);
    g.validate();
    items.push_back(Json{{"input", job.group},
                         {"kind", "group"},
                         {"ok", true},
                         {"name", g.name},
                         {"dim", g.dim}});
  }
  j["validated"] = items;
  report::emit(j, job.output, job.format);
  return 0;
}

void emit_error(const JobSpec& job, int code, const std::string& message) {
  std::cerr << "rephom: " << message << "\n";
  if (job.output.empty() || job.output == "-") return;
  Json j;
  j["schema"] = "rephom/1";
  j["command"] = command_name(job.command);
  j["error"] = Json{{"exit", code}, {"message", message}};
  try {
    report::emit(j, job.output, report::Format::json);
  } catch (const InputError&) {
    // The diagnostic already went to stderr.
  }
}

}  // namespace

int run(const JobSpec& job) {
  try {
    if (job.max_degree < 1) throw InputError("max_degree must be >= 1");
    if (job.weight_cutoff < 0)
      throw InputError("weight_cutoff must be nonnegative");
    switch (job.command) {
      case Command::compute: return cmd_compute(job, false);
      case Command::invariants: return cmd_compute(job, true);
      case Command::ce_check: return cmd_ce_check(job);
      case Command::hodge: return cmd_hodge(job);
      case Command::trace: return cmd_trace(job);
      case Command::drinfeld_check: return cmd_drinfeld_check(job);
      case Command::macdonald: return cmd_macdonald(job);
      case Command::series: return cmd_series(job);
      case Command::catalog: return cmd_catalog(job);
      case Command::validate: return cmd_validate(job);
    }
    throw InputError("unknown command");
  } catch (const InputError& e) {
    emit_error(job, 2, e.what());
    return 2;
  } catch (const MathError& e) {
    emit_error(job, 1, e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    emit_error(job, 2, e.what());
    return 2;
  }
}

}  // namespace rephom::jobs

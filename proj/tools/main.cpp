#include <string>

#include <CLI11.hpp>

#include "rephom/jobs.hpp"

namespace jobs = rephom::jobs;

int main(int argc, char** argv) {
  CLI::App app{"rephom: exact representation homology of simply connected spaces"};
  app.require_subcommand(1);

  jobs::JobSpec job;
  std::string format = "json";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", job.output,
                    "report file (stdout when omitted)");
    sub->add_option("--format", format, "report format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  const auto space_group_degree = [&](CLI::App* sub) {
    sub->add_option("--space", job.space,
                    "catalog spec (sphere:3, cp:2, hp:2, op2, kz:4, kzxs:2:3) "
                    "or a model JSON file")
        ->required();
    sub->add_option("--group", job.group,
                    "builtin algebra (sl2, sl3, sl4, so4, sp4, gl2, torus:n) "
                    "or an algebra JSON file")
        ->required();
    sub->add_option("--max-degree", job.max_degree, "top homological degree");
    common(sub);
  };

  auto* compute = app.add_subcommand(
      "compute", "Homology of the representation complex of a space");
  space_group_degree(compute);

  auto* invariants = app.add_subcommand(
      "invariants", "Invariant part of the representation homology");
  space_group_degree(invariants);

  auto* ce_check = app.add_subcommand(
      "ce-check",
      "Cross-check the Lie-model route against the current-algebra route");
  space_group_degree(ce_check);
  ce_check->add_option("--weight-cutoff", job.weight_cutoff,
                       "total-weight cutoff (0 derives the needed bound)");

  auto* hodge = app.add_subcommand(
      "hodge", "Loop-space Hodge piece dimensions per group exponent");
  space_group_degree(hodge);

  auto* trace = app.add_subcommand(
      "trace", "Trace images of the standard invariant polynomials");
  space_group_degree(trace);

  auto* drinfeld = app.add_subcommand(
      "drinfeld-check",
      "Freeness of the invariant homology on the trace generators");
  space_group_degree(drinfeld);

  auto* macdonald =
      app.add_subcommand("macdonald", "Constant-term identity checks");
  macdonald
      ->add_option("--type", job.root_type,
                   "root system: A1, A2, A3, B2, G2 or B3")
      ->required();
  macdonald->add_option("--r", job.r,
                        "truncation level of the one-variable identity");
  macdonald->add_option(
      "--order-q", job.order_q,
      "q-order for the two-variable identity (with --order-t; both >= 2)");
  macdonald->add_option("--order-t", job.order_t,
                        "t-order for the two-variable identity");
  common(macdonald);

  auto* series = app.add_subcommand(
      "series", "Weighted homology series via the current-algebra route");
  space_group_degree(series);
  series->add_option("--weight-cutoff", job.weight_cutoff,
                     "total-weight cutoff (0 derives the needed bound)");

  auto* catalog = app.add_subcommand("catalog", "List builtin spaces");
  common(catalog);

  auto* validate =
      app.add_subcommand("validate", "Validate models and algebras");
  validate->add_option("--space,--model", job.space,
                       "catalog spec or model JSON file");
  validate->add_option("--group", job.group,
                       "builtin name or algebra JSON file");
  validate->add_option("--max-degree", job.max_degree,
                       "degree cap used when building catalog models");
  common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (compute->parsed()) job.command = jobs::Command::compute;
  if (invariants->parsed()) job.command = jobs::Command::invariants;
  if (ce_check->parsed()) job.command = jobs::Command::ce_check;
  if (hodge->parsed()) job.command = jobs::Command::hodge;
  if (trace->parsed()) job.command = jobs::Command::trace;
  if (drinfeld->parsed()) job.command = jobs::Command::drinfeld_check;
  if (macdonald->parsed()) job.command = jobs::Command::macdonald;
  if (series->parsed()) job.command = jobs::Command::series;
  if (catalog->parsed()) job.command = jobs::Command::catalog;
  if (validate->parsed()) job.command = jobs::Command::validate;
  job.format = rephom::report::format_from_string(format);

  return jobs::run(job);
}

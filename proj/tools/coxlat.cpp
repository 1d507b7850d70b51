// coxlat: lattices, Coxeter elements and Poincare series of Kleinian and
// genus-0 Fuchsian singularities.
//
// Exit codes: 0 success, 1 verification failure, 2 input or validation error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxlat/error.hpp"
#include "coxlat/io.hpp"
#include "coxlat/series.hpp"
#include "coxlat/star.hpp"
#include "coxlat/verifier.hpp"

namespace {

using coxlat::io::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputOptions {
  std::optional<std::string> kleinian;
  std::optional<std::string> fuchsian;
  std::optional<std::string> name;
  std::optional<std::string> gram;
  std::optional<std::string> invariants;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  auto* group = cmd->add_option_group("input", "exactly one input source");
  group->add_option("--kleinian", opts.kleinian, "Kleinian arm parameters, e.g. 2,3,5");
  group->add_option("--fuchsian", opts.fuchsian, "Fuchsian arm parameters, e.g. 2,3,7");
  group->add_option("--name", opts.name, "catalog entry, e.g. E8");
  group->add_option("--gram", opts.gram, "JSON Gram file {\"labels\":[..],\"gram\":[[..]]}");
  group->add_option("--invariants", opts.invariants, "JSON orbit-invariants file");
  group->require_option(1);
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

coxlat::VerificationInput resolve(const InputOptions& opts) {
  using coxlat::OrbitInvariants;
  using coxlat::VerificationInput;
  if (opts.kleinian) return VerificationInput::from_invariants(OrbitInvariants::kleinian(coxlat::io::parse_alpha_list(*opts.kleinian)));
  if (opts.fuchsian) return VerificationInput::from_invariants(OrbitInvariants::fuchsian(coxlat::io::parse_alpha_list(*opts.fuchsian)));
  if (opts.name) return VerificationInput::from_invariants(coxlat::catalog(*opts.name), *opts.name);
  if (opts.invariants) {
    return VerificationInput::from_invariants(
        coxlat::io::invariants_from_json(coxlat::io::read_json_file(*opts.invariants)));
  }
  const auto doc = coxlat::io::gram_document_from_json(coxlat::io::read_json_file(*opts.gram));
  return VerificationInput::from_lattice(*opts.gram, doc.minus, doc.invariants);
}

void print_lattice(const char* title, const coxlat::Lattice& lattice) {
  std::cout << title << " (rank " << lattice.rank() << ")\n  basis:";
  for (const auto& l : lattice.labels()) std::cout << ' ' << l;
  std::cout << "\n  gram:\n";
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    std::cout << "   ";
    for (std::size_t j = 0; j < lattice.rank(); ++j) {
      const std::string cell = lattice.pairing(i, j).str();
      std::cout << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
    }
    std::cout << '\n';
  }
}

int cmd_build(const InputOptions& opts) {
  const auto in = resolve(opts);
  if (opts.format == "json") {
    std::cout << coxlat::io::tower_to_json(in.tower, in.invariants).dump() << '\n';
    return kExitOk;
  }
  if (in.invariants) std::cout << "invariants " << in.invariants->to_string() << '\n';
  print_lattice("V-", in.tower.minus.lattice);
  print_lattice("V0", in.tower.zero.lattice);
  print_lattice("V+", in.tower.plus.lattice);
  return kExitOk;
}

int cmd_charpoly(const InputOptions& opts) {
  const auto in = resolve(opts);
  if (opts.format == "json") {
    json out{{"minus", coxlat::io::poly_to_json(in.delta_minus)},
             {"zero", coxlat::io::poly_to_json(in.delta_zero)},
             {"plus", coxlat::io::poly_to_json(in.delta_plus)}};
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << "Delta_- = " << in.delta_minus.to_string() << '\n'
            << "Delta_0 = " << in.delta_zero.to_string() << '\n'
            << "Delta_+ = " << in.delta_plus.to_string() << '\n';
  return kExitOk;
}

void print_series(const InputOptions& opts, const std::string& label, const coxlat::PowerSeries& s) {
  if (opts.format == "json") {
    json row = coxlat::io::series_to_json(s);
    row["series"] = label;
    std::cout << row.dump() << '\n';
  } else {
    std::cout << label << ": " << s.to_string() << '\n';
  }
}

int cmd_poincare(const InputOptions& opts, std::size_t order, const std::string& route) {
  const auto in = resolve(opts);
  if (!in.invariants || !in.kind) {
    throw coxlat::Error(coxlat::ErrorCode::InvalidInput,
                        "the Poincare series needs orbit invariants; add \"invariants\" to the Gram file");
  }
  std::optional<coxlat::PowerSeries> direct;
  std::optional<coxlat::PowerSeries> quotient;
  if (route != "quotient") direct = coxlat::poincare_direct(*in.invariants, *in.kind, order);
  if (route != "direct") {
    const auto& num = *in.kind == coxlat::SingularityKind::Kleinian ? in.delta_minus : in.delta_plus;
    quotient = coxlat::series_from_rational(num, in.delta_zero, order);
  }
  if (direct) print_series(opts, "direct", *direct);
  if (quotient) print_series(opts, "quotient", *quotient);
  if (direct && quotient && !(*direct == *quotient)) {
    std::cerr << "routes differ at coefficient " << *coxlat::series_equal(*direct, *quotient).first_mismatch
              << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_hilbert(const InputOptions& opts, std::size_t order, const std::string& which) {
  const auto in = resolve(opts);
  const coxlat::RootedLattice at_e = coxlat::rooted_at_center(in.tower);
  if (which != "Q") print_series(opts, "P", coxlat::hilbert_P(at_e, order));
  if (which != "P") print_series(opts, "Q", coxlat::hilbert_Q(at_e, order));
  return kExitOk;
}

int emit_reports(const std::vector<coxlat::VerificationReport>& reports, const std::string& format) {
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    if (r.failed()) ++failed;
    if (r.status == coxlat::CheckStatus::Skipped) ++skipped;
    if (format == "json") {
      std::cout << coxlat::io::report_to_json(r).dump() << '\n';
    } else {
      std::cout << coxlat::format_report_text(r) << '\n';
    }
  }
  if (format == "text") {
    std::cout << reports.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed ? kExitFailed : kExitOk;
}

int cmd_verify(const InputOptions& opts, bool all, std::size_t order, std::size_t random_count,
               std::uint64_t seed, std::size_t threads) {
  if (all) {
    const int code =
        emit_reports(coxlat::run_suite(coxlat::standard_inputs(random_count, seed), order, threads), opts.format);
    if (opts.format == "json") {
      std::cout << json{{"random_tuples", random_count}, {"seed", seed}}.dump() << '\n';
    } else {
      std::cout << "random Fuchsian tuples: " << random_count << ", seed " << seed << '\n';
    }
    return code;
  }
  return emit_reports(coxlat::verify_all(resolve(opts), order), opts.format);
}

int cmd_catalog(const std::optional<std::string>& name, const std::string& format) {
  std::vector<coxlat::CatalogEntry> entries;
  if (name) {
    entries.push_back({*name, coxlat::catalog(*name)});
  } else {
    entries = coxlat::catalog_entries();
  }
  for (const auto& e : entries) {
    if (format == "json") {
      std::cout << json{{"name", e.name}, {"invariants", coxlat::io::invariants_to_json(e.invariants)}}.dump()
                << '\n';
    } else {
      std::cout << e.name << std::string(e.name.size() < 6 ? 6 - e.name.size() : 1, ' ')
                << coxlat::kind_name(coxlat::validate(e.invariants)) << "  " << e.invariants.to_string() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter elements and Poincare series of Kleinian and Fuchsian singularities", "coxlat"};
  app.require_subcommand(1);

  InputOptions build_opts, charpoly_opts, poincare_opts, hilbert_opts, verify_opts;
  std::size_t order = 200;
  std::string route = "both";
  std::string series = "both";

  auto* build = app.add_subcommand("build", "print the Gram matrices of V-, V0, V+");
  add_input_options(build, build_opts);

  auto* charpoly = app.add_subcommand("charpoly", "print the characteristic polynomials of the Coxeter elements");
  add_input_options(charpoly, charpoly_opts);

  auto* poincare = app.add_subcommand("poincare", "print the Poincare series");
  add_input_options(poincare, poincare_opts);
  poincare->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  poincare->add_option("--route", route, "direct, quotient or both")
      ->check(CLI::IsMember({"direct", "quotient", "both"}));

  auto* hilbert = app.add_subcommand("hilbert", "print the Hilbert-Poincare series P and Q of (V0, E)");
  add_input_options(hilbert, hilbert_opts);
  hilbert->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  hilbert->add_option("--series", series, "P, Q or both")->check(CLI::IsMember({"P", "Q", "both"}));

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  bool all = false;
  std::size_t random_count = 50;
  std::uint64_t seed = coxlat::kDefaultSeed;
  std::size_t threads = 0;
  {
    auto* group = verify->add_option_group("input", "exactly one input source, or --all");
    group->add_option("--kleinian", verify_opts.kleinian, "Kleinian arm parameters");
    group->add_option("--fuchsian", verify_opts.fuchsian, "Fuchsian arm parameters");
    group->add_option("--name", verify_opts.name, "catalog entry");
    group->add_option("--gram", verify_opts.gram, "JSON Gram file");
    group->add_option("--invariants", verify_opts.invariants, "JSON orbit-invariants file");
    group->add_flag("--all", all, "catalog plus seeded random Fuchsian tuples");
    group->require_option(1);
    verify->add_option("--format", verify_opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
    verify->add_option("--random", random_count, "number of random Fuchsian tuples with --all");
    verify->add_option("--seed", seed, "seed for the random tuples");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");
  }

  auto* cat = app.add_subcommand("catalog", "list the named catalog");
  std::optional<std::string> cat_name;
  std::string cat_format = "text";
  cat->add_option("--name", cat_name, "show a single entry");
  cat->add_option("--format", cat_format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*build) return cmd_build(build_opts);
    if (*charpoly) return cmd_charpoly(charpoly_opts);
    if (*poincare) return cmd_poincare(poincare_opts, order, route);
    if (*hilbert) return cmd_hilbert(hilbert_opts, order, series);
    if (*verify) return cmd_verify(verify_opts, all, order, random_count, seed, threads);
    if (*cat) return cmd_catalog(cat_name, cat_format);
  } catch (const coxlat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

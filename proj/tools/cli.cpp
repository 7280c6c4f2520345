#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "sparsegroup/classify.hpp"
#include "sparsegroup/enumerate.hpp"
#include "sparsegroup/ideals.hpp"
#include "sparsegroup/io.hpp"
#include "sparsegroup/kappa.hpp"
#include "sparsegroup/leaps.hpp"
#include "sparsegroup/verify.hpp"

namespace sparsegroup::cli {
namespace {

// Raised for invalid flag combinations; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string gaps;
  std::string generators;
  std::string file;
  CLI::Option* gaps_opt = nullptr;
  CLI::Option* generators_opt = nullptr;
  CLI::Option* file_opt = nullptr;
};

void add_input(CLI::App* cmd, InputFlags& in) {
  in.gaps_opt = cmd->add_option("--gaps", in.gaps, "Comma-separated increasing gaps (\"\" for N_0)");
  in.generators_opt = cmd->add_option("--generators", in.generators, "Comma-separated generators");
  in.file_opt = cmd->add_option("--file", in.file, "Gap-list file, one semigroup per line");
}

/// Semigroups named on the command line, plus whether the input was a file.
struct Inputs {
  std::vector<NumericalSemigroup> semigroups;
  bool from_file = false;
};

Inputs read_inputs(const InputFlags& in) {
  const int sources = static_cast<int>(in.gaps_opt->count() > 0) +
                      static_cast<int>(in.generators_opt->count() > 0) +
                      static_cast<int>(in.file_opt->count() > 0);
  if (sources != 1) {
    throw UsageError("exactly one of --gaps, --generators, --file is required");
  }
  Inputs inputs;
  try {
    if (in.gaps_opt->count()) {
      inputs.semigroups.push_back(parse_gap_line(in.gaps));
    } else if (in.generators_opt->count()) {
      inputs.semigroups.push_back(NumericalSemigroup::from_generators(parse_int_list(in.generators)));
    } else {
      std::ifstream stream(in.file);
      if (!stream) throw UsageError("--file: cannot open " + in.file);
      inputs.semigroups = read_gap_list(stream);
      inputs.from_file = true;
    }
  } catch (const SemigroupError& e) {
    const char* flag = in.gaps_opt->count() ? "--gaps" : in.generators_opt->count() ? "--generators" : "--file";
    throw UsageError(std::string(flag) + ": " + std::string(to_string(e.code())) + ": " + e.what());
  }
  return inputs;
}

// One object, or an array with one compact object per line for file input.
void emit_objects(std::ostream& out, const std::vector<Json>& objects, bool as_array) {
  if (!as_array) {
    out << objects.front().dump() << '\n';
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    out << "  " << objects[i].dump() << (i + 1 < objects.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

Json profile_json(const LeapProfile& profile) {
  Json object = Json::object();
  for (auto [m, v] : profile.counts()) object[std::to_string(m)] = v;
  return object;
}

Int genus_cap(const std::optional<Int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPARSEGROUP_MAX_GENUS")) {
    try {
      const auto values = parse_int_list(env);
      if (values.size() == 1 && values[0] >= 0) return values[0];
    } catch (const SemigroupError&) {
    }
    throw UsageError(std::string("SPARSEGROUP_MAX_GENUS: invalid value \"") + env + "\"");
  }
  return kDefaultGenusCap;
}

Int require_kappa_flag(Int kappa, const char* flag) {
  if (kappa < 1) throw UsageError(std::string(flag) + ": kappa must be a positive integer");
  return kappa;
}

int cmd_info(const Inputs& inputs, std::ostream& out) {
  std::vector<Json> objects;
  for (const auto& h : inputs.semigroups) {
    Json object = to_json(h);
    object["multiplicity"] = h.multiplicity();
    object["small_elements"] = h.small_elements();
    objects.push_back(std::move(object));
  }
  emit_objects(out, objects, inputs.from_file);
  return kExitOk;
}

struct CheckFlags {
  bool arf = false;
  bool sparse = false;
  bool hyperelliptic = false;
  std::optional<Int> kappa;
  std::optional<Int> pure;
};

int cmd_check(const Inputs& inputs, const CheckFlags& flags, std::ostream& out) {
  if (!flags.arf && !flags.sparse && !flags.hyperelliptic && !flags.kappa && !flags.pure) {
    throw UsageError("check needs at least one of --arf, --sparse, --hyperelliptic, --kappa, --pure");
  }
  if (flags.kappa) require_kappa_flag(*flags.kappa, "--kappa");
  if (flags.pure) require_kappa_flag(*flags.pure, "--pure");

  bool all_hold = true;
  std::vector<Json> objects;
  for (const auto& h : inputs.semigroups) {
    Json checks = Json::array();
    bool holds = true;
    auto record = [&](Json entry, bool value) {
      entry["holds"] = value;
      checks.push_back(std::move(entry));
      holds = holds && value;
    };
    if (flags.hyperelliptic) record({{"check", "hyperelliptic"}}, is_hyperelliptic(h));
    if (flags.sparse) record({{"check", "sparse"}}, is_sparse(h));
    if (flags.arf) {
      const bool definition = is_arf_definition(h);
      Json entry = {{"check", "arf"},
                    {"procedures",
                     {{"definition", definition},
                      {"double", is_arf_double(h)},
                      {"stable", is_arf_stable(h)}}}};
      record(std::move(entry), definition);
    }
    if (flags.kappa) {
      const auto c = kappa_checks(h, *flags.kappa);
      Json procedures = {{"profile", c.profile}, {"gap_difference", c.gap_difference}};
      if (c.nongap) procedures["nongap"] = *c.nongap;
      if (c.run) procedures["run"] = *c.run;
      record({{"check", "kappa_sparse"}, {"kappa", *flags.kappa}, {"procedures", procedures}},
             c.profile);
    }
    if (flags.pure) {
      record({{"check", "pure_kappa_sparse"}, {"kappa", *flags.pure}},
             is_pure_kappa_sparse(h, *flags.pure));
    }
    Json object;
    object["gaps"] = h.gaps();
    object["checks"] = std::move(checks);
    object["holds"] = holds;
    objects.push_back(std::move(object));
    all_hold = all_hold && holds;
  }
  emit_objects(out, objects, inputs.from_file);
  return all_hold ? kExitOk : kExitFalse;
}

int cmd_leaps(const Inputs& inputs, std::ostream& out) {
  for (const auto& h : inputs.semigroups) {
    out << profile_json(leap_profile(h)).dump() << '\n';
    for (const auto& leap : leap_set(h)) out << leap.lo << '\t' << leap.hi << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Inputs& inputs, std::optional<Int> kappa, std::ostream& out) {
  if (kappa) require_kappa_flag(*kappa, "--kappa");
  std::vector<Json> objects;
  for (const auto& h : inputs.semigroups) {
    const Classification c = classify(h);
    const SparsenessReport report = sparseness_report(h, kappa);
    Json object;
    object["gaps"] = h.gaps();
    object["genus"] = c.genus;
    object["conductor"] = c.conductor;
    object["frobenius"] = c.frobenius;
    object["multiplicity"] = c.multiplicity;
    object["hyperelliptic"] = c.hyperelliptic;
    object["ordinary"] = c.ordinary;
    object["arf"] = c.arf;
    object["sparse"] = c.sparse;
    object["sparseness_index"] = c.sparseness_index;
    object["profile"] = profile_json(c.profile);
    object["pure_witness"] = report.pure_witness
                                 ? Json::array({report.pure_witness->lo, report.pure_witness->hi})
                                 : Json(nullptr);
    object["classes"] = c.labels();
    if (report.checks) {
      const auto& k = *report.checks;
      Json checks = {{"kappa", k.kappa}, {"profile", k.profile}, {"gap_difference", k.gap_difference}};
      if (k.nongap) checks["nongap"] = *k.nongap;
      if (k.run) checks["run"] = *k.run;
      checks["pure"] = is_pure_kappa_sparse(h, k.kappa);
      object["kappa_checks"] = std::move(checks);
    }
    objects.push_back(std::move(object));
  }
  emit_objects(out, objects, inputs.from_file);
  return kExitOk;
}

struct EnumerateFlags {
  Int genus = 0;
  std::optional<Int> kappa;
  bool pure = false;
  bool arf = false;
  bool count_only = false;
  std::string format;
  unsigned threads = 1;
  std::optional<Int> genus_cap;
};

void emit_census(std::ostream& out, const std::vector<CensusRow>& rows, bool with_kappa,
                 bool json) {
  if (json) {
    std::vector<Json> objects;
    for (const auto& row : rows) {
      Json histogram = Json::object();
      for (const auto& [profile, n] : row.profile_histogram) histogram[profile.key()] = n;
      Json object;
      object["genus"] = row.genus;
      object["total"] = row.total;
      object["per_class"] = row.per_class;
      object["profile_histogram"] = std::move(histogram);
      objects.push_back(std::move(object));
    }
    emit_objects(out, objects, true);
    return;
  }
  out << "genus\ttotal\tarf\tsparse\tkappa_sparse\tpure_kappa_sparse\n";
  for (const auto& row : rows) {
    out << row.genus << '\t' << row.total << '\t' << row.per_class.at("arf") << '\t'
        << row.per_class.at("sparse") << '\t';
    if (with_kappa) {
      out << row.per_class.at("kappa_sparse") << '\t' << row.per_class.at("pure_kappa_sparse");
    } else {
      out << "-\t-";
    }
    out << '\n';
  }
}

int cmd_enumerate(const EnumerateFlags& flags, std::ostream& out) {
  if (flags.pure && flags.arf) throw UsageError("--pure and --arf are mutually exclusive");
  if (flags.pure && !flags.kappa) throw UsageError("--pure requires --kappa");
  if (flags.arf && flags.kappa) throw UsageError("--arf cannot be combined with --kappa");
  if (flags.kappa) require_kappa_flag(*flags.kappa, "--kappa");
  if (flags.threads < 1) throw UsageError("--threads must be at least 1");

  EnumerationRequest request;
  request.max_genus = flags.genus;
  request.kappa = flags.kappa;
  request.mode = flags.pure    ? Population::PureKappaSparse
                 : flags.kappa ? Population::KappaSparse
                 : flags.arf   ? Population::Arf
                               : Population::All;
  request.emit = flags.count_only ? Emit::CountOnly : Emit::Full;
  request.traversal.genus_cap = genus_cap(flags.genus_cap);
  request.traversal.threads = flags.threads;
  try {
    validate(request);
  } catch (const SemigroupError& e) {
    throw UsageError(std::string("--genus/--kappa: ") + e.what());
  }

  const std::string format = flags.format.empty() ? (flags.count_only ? "tsv" : "json") : flags.format;
  if (request.emit == Emit::CountOnly) {
    emit_census(out, census(request), request.kappa.has_value(), format == "json");
    return kExitOk;
  }
  if (format == "tsv") {
    stream(request, [&](const NumericalSemigroup& h) { out << format_gap_line(h) << '\n'; });
    return kExitOk;
  }
  out << "[";
  bool first = true;
  stream(request, [&](const NumericalSemigroup& h) {
    out << (first ? "\n  " : ",\n  ") << to_json(h).dump();
    first = false;
  });
  out << (first ? "]\n" : "\n]\n");
  return kExitOk;
}

int cmd_verify(Int max_genus, Int pair_genus, std::optional<Int> cap_flag, std::ostream& out) {
  VerifyOptions options;
  options.max_genus = max_genus;
  options.pair_genus = pair_genus;
  options.genus_cap = genus_cap(cap_flag);
  std::vector<TheoremCheck> checks;
  try {
    checks = verify_theorems(options);
  } catch (const SemigroupError& e) {
    throw UsageError(std::string("--max-genus: ") + e.what());
  }
  bool all = true;
  for (const auto& check : checks) {
    out << (check.passed() ? "PASS" : "FAIL") << '\t' << check.name << '\t'
        << "instances=" << check.instances << '\t' << check.statement << '\n';
    if (!check.passed()) {
      out << "  counterexample: " << *check.counterexample << '\n';
      all = false;
    }
  }
  out << (all ? "PASS" : "FAIL") << ": " << checks.size() << " checks over genus <= " << max_genus
      << '\n';
  return all ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups: leaps, Arf and kappa-sparse classes, genus enumeration",
               "sparsegroup"};
  app.require_subcommand(1);

  InputFlags info_in, check_in, leaps_in, classify_in;
  auto* info = app.add_subcommand("info", "Genus, conductor, Frobenius number and generators");
  add_input(info, info_in);

  CheckFlags check_flags;
  auto* check = app.add_subcommand("check", "Test class membership; exit 0 iff every check holds");
  add_input(check, check_in);
  check->add_flag("--arf", check_flags.arf, "Arf property (all three procedures)");
  check->add_flag("--sparse", check_flags.sparse, "Every leap has size at most 2");
  check->add_flag("--hyperelliptic", check_flags.hyperelliptic, "2 is an element");
  check->add_option("--kappa", check_flags.kappa, "kappa-sparse (all four procedures)");
  check->add_option("--pure", check_flags.pure, "Pure kappa-sparse");

  auto* leaps = app.add_subcommand("leaps", "Leap profile as JSON, then leaps as TSV pairs");
  add_input(leaps, leaps_in);

  std::optional<Int> classify_kappa;
  auto* classify_cmd = app.add_subcommand("classify", "Full class report");
  add_input(classify_cmd, classify_in);
  classify_cmd->add_option("--kappa", classify_kappa, "Also report the kappa-sparse procedures");

  EnumerateFlags enum_flags;
  auto* enumerate = app.add_subcommand("enumerate", "Semigroups of a genus, or a census table");
  enumerate->add_option("--genus", enum_flags.genus, "Genus to list; census covers 0..genus")
      ->required();
  enumerate->add_option("--kappa", enum_flags.kappa, "Restrict to kappa-sparse semigroups");
  enumerate->add_flag("--pure", enum_flags.pure, "Restrict to pure kappa-sparse (needs --kappa)");
  enumerate->add_flag("--arf", enum_flags.arf, "Restrict to Arf semigroups");
  enumerate->add_flag("--count-only", enum_flags.count_only, "Census rows instead of semigroups");
  enumerate->add_option("--format", enum_flags.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  enumerate->add_option("--threads", enum_flags.threads, "Worker threads for subtree traversal");
  enumerate->add_option("--genus-cap", enum_flags.genus_cap, "Override the genus cap");

  Int verify_genus = 8;
  Int verify_pairs = 8;
  std::optional<Int> verify_cap;
  auto* verify = app.add_subcommand("verify", "Check every structural theorem over a census");
  verify->add_option("--max-genus", verify_genus, "Census bound")->capture_default_str();
  verify->add_option("--pair-genus", verify_pairs, "Bound for pairwise intersection checks")
      ->capture_default_str();
  verify->add_option("--genus-cap", verify_cap, "Override the genus cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(read_inputs(info_in), out);
    if (check->parsed()) return cmd_check(read_inputs(check_in), check_flags, out);
    if (leaps->parsed()) return cmd_leaps(read_inputs(leaps_in), out);
    if (classify_cmd->parsed()) {
      return cmd_classify(read_inputs(classify_in), classify_kappa, out);
    }
    if (enumerate->parsed()) return cmd_enumerate(enum_flags, out);
    if (verify->parsed()) return cmd_verify(verify_genus, verify_pairs, verify_cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SemigroupError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sparsegroup::cli

#include "regconn/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regconn/connectivity.hpp"
#include "regconn/cycle_theorems.hpp"
#include "regconn/error.hpp"
#include "regconn/facet_io.hpp"
#include "regconn/family_checks.hpp"
#include "regconn/generators.hpp"
#include "regconn/homology.hpp"
#include "regconn/regularity.hpp"

namespace regconn::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

SimplicialComplex load_input(const RunConfig& config) {
  const GhostPolicy policy = config.renumber ? GhostPolicy::Renumber : GhostPolicy::Reject;
  if (config.generator) return generate(*config.generator);
  if (config.input_path) return read_facet_file(*config.input_path, policy);
  throw Error(ErrorKind::BadParameters, "no input: give a facet file or --generate <spec>");
}

int exit_code_for(Status status) {
  switch (status) {
    case Status::Pass: return kPass;
    case Status::Fail: return kFail;
    case Status::HypothesisUnmet: return kHypothesisUnmet;
  }
  return kFail;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded: return kCapExceeded;
    case ErrorKind::HypothesisUnmet: return kHypothesisUnmet;
    case ErrorKind::Internal: return kFail;
    default: return kInputError;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Writes to --output when given, else to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) throw Error(ErrorKind::BadParameters, "cannot write '" + *config.output_path + "'");
    file << text;
  } else {
    out << text;
  }
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Analysis {
  SimplicialComplex complex;
  Predicates predicates;
  std::optional<int> s;
  std::vector<std::pair<FieldSpec, BettiVector>> betti;
  GradedBettiTable table{0, FieldSpec()};
  RegularityResult reg;
  std::optional<ConnectivityResult> connectivity;
  std::optional<int> top_degree;
  std::optional<CycleCertificate> certificate;
};

Analysis analyze(const RunConfig& config) {
  Analysis a;
  a.complex = load_input(config);
  const EnumerationLimits limits = config.limits();
  check_cap(a.complex.vertex_count(), limits);
  const std::vector<FieldSpec> fields = config.fields();

  a.predicates = predicates(a.complex);
  const auto nonfaces = minimal_nonface_sets(a.complex);
  if (!nonfaces.empty()) a.s = nonfaces.back().size();
  for (const FieldSpec& f : fields) {
    a.betti.emplace_back(f, reduced_betti(a.complex, f));
    if (auto top = a.betti.back().second.top_nonzero_degree()) {
      a.top_degree = std::max(a.top_degree.value_or(*top), *top);
    }
  }
  const RestrictionStore store(a.complex, fields.front(), limits);
  a.table = hochster_table(store);
  a.reg = regularity(store);
  if (a.complex.vertex_count() >= 2) {
    a.connectivity = vertex_connectivity(one_skeleton(a.complex), limits.jobs);
  }
  if (a.top_degree) {
    a.certificate = is_vertex_minimal_cycle(a.complex, *a.top_degree, fields, limits);
  }
  return a;
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream out;
  const Predicates& p = a.predicates;
  out << "instance: " << (a.complex.provenance().empty() ? "input" : a.complex.provenance())
      << '\n';
  out << "vertices: " << a.complex.vertex_count() << '\n';
  out << "dimension: " << p.dim << '\n';
  out << "pure: " << yes_no(p.is_pure) << '\n';
  out << "flag: " << yes_no(p.is_flag) << '\n';
  out << "strongly connected: " << yes_no(p.is_strongly_connected) << '\n';
  out << "pseudomanifold: " << yes_no(p.is_pseudomanifold) << '\n';
  out << "ridge degrees:";
  if (p.ridge_degrees) {
    for (const auto& [degree, count] : *p.ridge_degrees) out << ' ' << count << "x" << degree;
  } else {
    out << " undefined (not pure)";
  }
  out << '\n';
  out << "max minimal nonface size (s): "
      << (a.s ? std::to_string(*a.s) : std::string("none (full simplex)")) << '\n';
  for (const auto& [field, b] : a.betti) {
    out << "reduced betti " << field.name() << " (from degree -1): " << b.to_string() << '\n';
  }
  out << "graded betti table " << a.table.field().name() << ":\n" << a.table.to_text();
  out << "regularity: " << a.reg.reg << " (witness T=" << a.reg.witness_subset.to_string()
      << ", h=" << a.reg.witness_degree << ")\n";
  if (a.connectivity) {
    out << "vertex connectivity: " << a.connectivity->kappa;
    if (!a.connectivity->min_separator.empty()) {
      out << " (separator " << a.connectivity->min_separator.to_string() << ")";
    }
    out << '\n';
  } else {
    out << "vertex connectivity: undefined (fewer than two vertices)\n";
  }
  out << "vertex minimal cycle: ";
  if (!a.top_degree) {
    out << "no (acyclic over all fields tried)\n";
  } else if (a.certificate) {
    out << "yes, h=" << a.certificate->h << " over " << a.certificate->field.name() << '\n';
  } else {
    out << "not certified for h=" << *a.top_degree << " over the fields tried\n";
  }
  return out.str();
}

std::string analysis_json(const Analysis& a) {
  const Predicates& p = a.predicates;
  json j;
  j["report"] = "analyze";
  j["instance"] = a.complex.provenance().empty() ? "input" : a.complex.provenance();
  j["n"] = a.complex.vertex_count();
  j["dim"] = p.dim;
  j["pure"] = p.is_pure;
  j["flag"] = p.is_flag;
  j["strongly_connected"] = p.is_strongly_connected;
  j["pseudomanifold"] = p.is_pseudomanifold;
  if (p.ridge_degrees) {
    json ridges = json::object();
    for (const auto& [degree, count] : *p.ridge_degrees) ridges[std::to_string(degree)] = count;
    j["ridge_degrees"] = std::move(ridges);
  } else {
    j["ridge_degrees"] = nullptr;
  }
  j["s"] = a.s ? json(*a.s) : json(nullptr);
  j["reduced_betti"] = json::array();
  for (const auto& [field, b] : a.betti) {
    j["reduced_betti"].push_back({{"field", field.prime()}, {"values", b.values()}});
  }
  j["betti_table"] = json::parse(a.table.to_json());
  j["regularity"] = {{"reg", a.reg.reg},
                     {"witness", {{"subset", a.reg.witness_subset.labels()},
                                  {"h", a.reg.witness_degree}}}};
  if (a.connectivity) {
    j["connectivity"] = {{"kappa", a.connectivity->kappa},
                         {"separator", a.connectivity->min_separator.labels()}};
  } else {
    j["connectivity"] = nullptr;
  }
  if (a.certificate) {
    j["certificate"] = {{"h", a.certificate->h},
                        {"field", a.certificate->field.prime()},
                        {"full_set_betti", a.certificate->full_set_betti},
                        {"checked_subsets", a.certificate->checked_subsets}};
  } else {
    j["certificate"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.statement << ' ' << report.instance << ": " << to_string(report.status) << '\n';
  for (const Witness& w : report.witnesses) {
    out << "  " << w.role;
    if (w.subset) out << ' ' << w.subset->to_string();
    for (const auto& [key, value] : w.values) out << ' ' << key << '=' << value;
    if (!w.note.empty()) out << "  # " << w.note;
    out << '\n';
  }
  for (const std::string& note : report.notes) out << "  note: " << note << '\n';
  return out.str();
}

std::vector<int> range_values(const std::optional<std::string>& range, const std::string& fallback) {
  const auto [lo, hi] = parse_range(range.value_or(fallback));
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

VerificationReport build_report(const RunConfig& config) {
  const std::vector<FieldSpec> fields = config.fields();
  const EnumerationLimits limits = config.limits();
  const std::string& st = config.statement;

  if (st == "example6") {
    const auto grid = parse_grid(config.grid);
    VerificationReport r = verify_example6(grid, fields, limits);
    r.instance = "grid " + config.grid;
    return r;
  }
  if (st == "example2") {
    const auto dims = range_values(config.range, "2..5");
    return verify_example2(dims, fields, limits);
  }

  const SimplicialComplex complex = load_input(config);
  check_cap(complex.vertex_count(), limits);
  if (st == "theorem3") {
    const auto cert = find_cycle_certificate(complex, fields, limits);
    if (!cert) {
      VerificationReport r;
      r.statement = "theorem3";
      r.instance = complex.provenance().empty() ? "input" : complex.provenance();
      r.status = Status::HypothesisUnmet;
      r.notes.push_back("no vertex minimal cycle certificate over the configured fields");
      return r;
    }
    return verify_theorem_main(complex, *cert, limits);
  }
  if (st == "corollary5") return verify_corollary_connectivity(complex, fields, limits);
  if (st == "dhs-corollary") return verify_dhs_corollary(complex, fields, limits);
  if (st == "taylor-suitability") {
    return verify_taylor_suitability(complex, fields.front(), limits);
  }
  throw Error(ErrorKind::BadParameters, "unknown statement '" + st + "'");
}

std::vector<SimplicialComplex> search_family(const RunConfig& config) {
  std::vector<SimplicialComplex> out;
  const std::string& family = config.family;
  if (family == "nevo") {
    for (auto [s, h] : parse_grid(config.grid)) out.push_back(nevo_complex(s, h).first);
  } else if (family == "simplex-boundary") {
    for (int d : range_values(config.range, "2..6")) out.push_back(simplex_boundary(d));
  } else if (family == "cross-polytope") {
    for (int m : range_values(config.range, "2..5")) out.push_back(cross_polytope(m));
  } else if (family == "cycle") {
    for (int m : range_values(config.range, "4..10")) out.push_back(cycle_complex(m));
  } else if (family == "prism") {
    for (int d : range_values(config.range, "2..5")) out.push_back(prism_complex(d));
  } else if (family == "random") {
    for (int i = 0; i < config.count; ++i) {
      out.push_back(random_complex(config.random_n, config.dim_cap, config.density,
                                   config.seed + static_cast<std::uint64_t>(i)));
    }
  } else if (family == "generate") {
    out.push_back(load_input(config));
  } else {
    throw Error(ErrorKind::BadParameters, "unknown search family '" + family + "'");
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out) {
  const auto start = Clock::now();
  const Analysis a = analyze(config);
  if (config.format == OutputFormat::Json) {
    emit(config, out, analysis_json(a));
  } else {
    std::string text = analysis_text(a);
    if (config.timings) text += "elapsed ms: " + std::to_string(elapsed_ms(start)) + "\n";
    emit(config, out, text);
  }
  return kPass;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto start = Clock::now();
  VerificationReport report = build_report(config);
  if (config.timings) report.timings.emplace_back("total_ms", elapsed_ms(start));
  if (config.format == OutputFormat::Text) {
    emit(config, out, report_text(report));
  } else {
    emit(config, out, report.to_json(2) + "\n");
  }
  return exit_code_for(report.status);
}

int cmd_search(const RunConfig& config, std::ostream& out) {
  const std::vector<FieldSpec> fields = config.fields();
  const EnumerationLimits limits = config.limits();
  std::ostringstream csv;
  csv << "construction,n,s,h,reg,taylor_bound,kappa,balbarath_bound,slack,note\n";
  bool violated = false;
  for (const SimplicialComplex& complex : search_family(config)) {
    const int n = complex.vertex_count();
    csv << csv_field(complex.provenance()) << ',' << n << ',';
    if (n > limits.cap) {
      csv << ",,,,,,,skipped: n exceeds enumeration cap " << limits.cap << '\n';
      continue;
    }
    const auto nonfaces = minimal_nonface_sets(complex);
    std::optional<int> s;
    if (!nonfaces.empty()) s = nonfaces.back().size();
    const RegularityResult reg = regularity(complex, fields.front(), limits);
    const auto cert = find_cycle_certificate(complex, fields, limits);
    std::optional<int> kappa;
    if (n >= 2) kappa = vertex_connectivity(one_skeleton(complex), limits.jobs).kappa;

    std::string note;
    std::optional<std::int64_t> bound;
    if (!s) {
      note = "full simplex";
    } else if (!cert) {
      note = "not certified";
    } else if (cert->h < 1) {
      note = "certified in degree " + std::to_string(cert->h);
    } else {
      bound = balbarath_bound(*s, cert->h);
    }
    csv << (s ? std::to_string(*s) : "") << ',' << (cert ? std::to_string(cert->h) : "") << ','
        << reg.reg << ',' << (s ? taylor_bound(n, *s).to_string() : "") << ','
        << (kappa ? std::to_string(*kappa) : "") << ','
        << (bound ? std::to_string(*bound) : "") << ',';
    if (bound && kappa) {
      const std::int64_t slack = *kappa - *bound;
      if (slack < 0) {
        violated = true;
        note = "VIOLATION";
      }
      csv << slack;
    }
    csv << ',' << note << '\n';
  }
  emit(config, out, csv.str());
  return violated ? kFail : kPass;
}

int cmd_generate(const RunConfig& config, std::ostream& out) {
  emit(config, out, to_facet_text(load_input(config)));
  return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Homological and connectivity invariants of simplicial complexes"};
  app.require_subcommand(1);

  std::string format = "auto";
  std::string primes = "2,3";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--primes", primes, "Comma-separated field characteristics")
        ->capture_default_str();
    sub->add_option("--cap", config.cap, "Soft cap on vertices for 2^n enumeration")
        ->capture_default_str();
    sub->add_flag("--force", config.force, "Raise the cap to the hard ceiling");
    sub->add_option("-j,--jobs", config.jobs, "Worker threads (default: REGCONN_JOBS or all cores)");
    sub->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"auto", "text", "json"}));
    sub->add_option("-o,--output", config.output_path, "Write output to a file");
    sub->add_flag("--timings", config.timings, "Include wall-clock timings");
    sub->add_flag("--renumber", config.renumber, "Renumber unused vertices instead of failing");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input_path, "Facet file");
    sub->add_option("-g,--generate", config.generator, "Generator spec, e.g. nevo:3,3");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report every invariant of one complex");
  add_input(analyze_cmd);
  add_common(analyze_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify one statement; exit 0/1/4");
  verify_cmd
      ->add_option("statement", config.statement,
                   "theorem3 | corollary5 | dhs-corollary | example6 | example2 | "
                   "taylor-suitability")
      ->required()
      ->check(CLI::IsMember({"theorem3", "corollary5", "dhs-corollary", "example6", "example2",
                             "taylor-suitability"}));
  add_input(verify_cmd);
  add_common(verify_cmd);
  verify_cmd->add_option("--grid", config.grid, "example6 grid")->capture_default_str();
  verify_cmd->add_option("--range", config.range, "example2 dimensions, e.g. 2..5");

  CLI::App* search_cmd = app.add_subcommand("search", "CSV sweep of a complex family");
  search_cmd
      ->add_option("--family", config.family,
                   "nevo | simplex-boundary | cross-polytope | cycle | prism | random | generate")
      ->required();
  add_input(search_cmd);
  add_common(search_cmd);
  search_cmd->add_option("--grid", config.grid, "nevo grid")->capture_default_str();
  search_cmd->add_option("--range", config.range, "parameter range, e.g. 2..6");
  search_cmd->add_option("--count", config.count, "random family size")->capture_default_str();
  search_cmd->add_option("--n", config.random_n, "random family vertex count")->capture_default_str();
  search_cmd->add_option("--dim-cap", config.dim_cap, "random family dimension cap")
      ->capture_default_str();
  search_cmd->add_option("--density", config.density, "random family face density")
      ->capture_default_str();
  search_cmd->add_option("--seed", config.seed, "random family first seed")->capture_default_str();

  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a generated complex as facets");
  generate_cmd->add_option("spec", config.generator, "Generator spec")->required();
  generate_cmd->add_option("-o,--output", config.output_path, "Write output to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kPass : kInputError;
  }

  try {
    config.format = format == "json" ? OutputFormat::Json
                    : format == "text" ? OutputFormat::Text
                                       : OutputFormat::Auto;
    config.primes.clear();
    std::stringstream list(primes);
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        config.primes.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadParameters, "bad prime '" + item + "'");
      }
    }
    config.validate();

    if (analyze_cmd->parsed()) {
      config.command = "analyze";
      return cmd_analyze(config, out);
    }
    if (verify_cmd->parsed()) {
      config.command = "verify";
      return cmd_verify(config, out);
    }
    if (search_cmd->parsed()) {
      config.command = "search";
      return cmd_search(config, out);
    }
    config.command = "generate";
    return cmd_generate(config, out);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (use --force to raise the cap to "
        << kHardEnumerationCap << ")\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace regconn::cli

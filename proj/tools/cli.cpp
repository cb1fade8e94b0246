#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superconf/error.hpp"
#include "superconf/sampling.hpp"
#include "superconf/serialize.hpp"
#include "superconf/transform.hpp"
#include "superconf/verifier.hpp"

namespace superconf::cli {

namespace {

struct Options {
  int generators = 4;
  int max_degree = 3;
  int bound = 5;
  long trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> suite{"all"};
  int threads = 1;
  std::string format = "text";
  std::string input;
  std::string output;
  bool timing = false;
  CLI::Option* timing_option = nullptr;

  bool json() const { return format == "json"; }
  // Text shows timing unless --no-timing; JSON omits it unless --timing, so
  // a JSON report is a pure function of its configuration.
  bool with_timing() const { return timing_option->count() > 0 ? timing : !json(); }
  SampleParams params() const { return {generators, max_degree, bound}; }
};

std::string read_input(const Options& o) {
  if (o.input.empty() || o.input == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read input file " + o.input);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json classification(const SATransform& t) {
  return Json{{"reduction_kind", to_string(reduction_kind(t))},
              {"ber_class",
               {{to_string(ClassifyMode::PaperLiteral),
                 to_string(classify_berezinian(t, ClassifyMode::PaperLiteral))},
                {to_string(ClassifyMode::Derivative),
                 to_string(classify_berezinian(t, ClassifyMode::Derivative))}}}};
}

std::string classification_text(const Json& c) {
  std::string out = "reduction kind: " + c["reduction_kind"].get<std::string>() + "\n";
  for (const auto& [mode, value] : c["ber_class"].items()) {
    out += "Berezinian (" + mode + "): " + value.get<std::string>() + "\n";
  }
  return out;
}

int verify(const Options& o, std::string& text) {
  CheckConfig config;
  config.generator_count = o.generators;
  config.max_degree = o.max_degree;
  config.coefficient_bound = o.bound;
  config.trials = o.trials;
  config.seed = o.seed;
  config.suite = o.suite;
  config.threads = o.threads;
  config.validate();
  const CheckReport report = run_suite(config);
  text = o.json() ? dump(report_to_json(report, o.with_timing()))
                  : report_to_text(report, o.with_timing());
  return report.ok() ? kOk : kCheckFailed;
}

int reduce(const Options& o, std::string& text) {
  const ReducedPair pair = reduced_pair_from_json(parse_json(read_input(o)));
  const SATransform t = build_reduced(pair);
  text = o.json() ? dump(to_json(t)) : t.to_string() + "\n";
  return kOk;
}

int compose_command(const Options& o, std::string& text) {
  const Json in = parse_json(read_input(o));
  for (const char* key : {"outer", "inner"}) {
    if (!in.is_object() || !in.contains(key)) {
      throw Error(Errc::Parse, std::string("parse error at /: missing key \"") + key + "\"");
    }
  }
  auto field = [&](const char* key) {
    return transform_from_json(in[key], std::string("/") + key);
  };
  const SATransform outer = field("outer");
  const SATransform inner = field("inner");
  if (outer.generator_count() != inner.generator_count()) {
    throw Error(Errc::AlgebraMismatch, "algebra mismatch: outer and inner generator counts");
  }
  const SATransform composite = compose(outer, inner);
  const Json c = classification(composite);
  if (o.json()) {
    Json j{{"composite", to_json(composite)}};
    for (const auto& [key, value] : c.items()) j[key] = value;
    text = dump(j);
  } else {
    text = composite.to_string() + "\n" + classification_text(c);
  }
  return kOk;
}

int classify(const Options& o, std::string& text) {
  const SATransform t = transform_from_json(parse_json(read_input(o)));
  const ReductionConditions r = reduction_conditions(t);
  const Json c = classification(t);
  if (o.json()) {
    Json j = c;
    j["q"] = to_json(r.q);
    j["delta"] = to_json(r.delta);
    j["delta0"] = to_json(r.delta0);
    text = dump(j);
  } else {
    text = classification_text(c) + "Q = " + r.q.to_string() + "\n" +
           "Delta = " + r.delta.to_string() + "\n" + "Delta0 = " + r.delta0.to_string() + "\n";
  }
  return kOk;
}

// Two chains U1 -> U2 -> U3: SCf then SCf (standard cocycle), and TPt then
// SCf (mixed cocycle).
int demo_cocycle(const Options& o, std::string& text) {
  if (o.generators < 2) {
    throw Error(Errc::InvalidConfig, "invalid config: demo-cocycle needs at least 2 generators");
  }
  Sampler s(o.params(), o.seed, stable_hash("demo-cocycle"));
  const SATransform scf12 = s.transform(TransformKind::Superconformal);
  const SATransform scf23 = s.transform(TransformKind::Superconformal);
  const SATransform tpt12 = s.transform(TransformKind::TwistParity);
  const SATransform mixed23 = s.transform(TransformKind::Superconformal);
  const bool standard = cocycle_standard(scf23, scf12);
  const bool mixed = cocycle_mixed(mixed23, tpt12);
  const char* mixed_kind = to_string(reduction_kind(compose(mixed23, tpt12)));
  auto verdict = [](bool ok) { return ok ? "holds" : "FAILS"; };
  if (o.json()) {
    text = dump(Json{{"standard", {{"T12", to_json(scf12)}, {"T23", to_json(scf23)},
                                   {"holds", standard}}},
                     {"mixed", {{"T12", to_json(tpt12)}, {"T23", to_json(mixed23)},
                                {"holds", mixed}, {"composite_kind", mixed_kind}}}});
  } else {
    std::ostringstream os;
    os << "SCf o SCf chain:\n  T12: " << scf12.to_string() << "\n  T23: " << scf23.to_string()
       << "\n  standard cocycle " << verdict(standard) << "\n"
       << "SCf o TPt chain:\n  T12: " << tpt12.to_string() << "\n  T23: " << mixed23.to_string()
       << "\n  mixed cocycle " << verdict(mixed) << ", composite " << mixed_kind << "\n";
    text = os.str();
  }
  return standard && mixed ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact superanalytic transformation toolkit", "superconf"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--generators", o.generators, "Grassmann generators L")
      ->capture_default_str()
      ->check(CLI::Range(0, GrassmannNumber::kMaxGenerators));
  app.add_option("--max-degree", o.max_degree, "Maximum sampled polynomial degree")
      ->capture_default_str()
      ->check(CLI::Range(0, 64));
  app.add_option("--bound", o.bound, "Sampled coefficient bound")
      ->capture_default_str()
      ->check(CLI::Range(1, 1 << 20));
  app.add_option("--trials", o.trials, "Trials per check")
      ->capture_default_str()
      ->check(CLI::Range(1L, 100000000L));
  app.add_option("--seed", o.seed, "Base seed")->capture_default_str();
  app.add_option("--suite", o.suite, "Comma-separated check names, or all")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));
  app.add_option("--format", o.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input", o.input, "Input file (default stdin)");
  app.add_option("--output", o.output, "Output file (default stdout)");
  o.timing_option =
      app.add_flag("--timing,!--no-timing", o.timing, "Include wall time in the report");

  app.add_subcommand("verify", "Run identity checks");
  app.add_subcommand("reduce", "Build the transform of a reduced (g, psi) pair");
  app.add_subcommand("compose", "Compose {\"outer\", \"inner\"} and classify the result");
  app.add_subcommand("classify", "Classify a transform and print Q, Delta, Delta0");
  app.add_subcommand("demo-cocycle", "Check both cocycle relations on random chains");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::string text;
  int status = kOk;
  try {
    if (name == "verify") {
      status = verify(o, text);
    } else if (name == "reduce") {
      status = reduce(o, text);
    } else if (name == "compose") {
      status = compose_command(o, text);
    } else if (name == "classify") {
      status = classify(o, text);
    } else {
      status = demo_cocycle(o, text);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.output.empty() || o.output == "-") {
    out << text;
    out.flush();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write output file " << o.output << "\n";
      return kUsage;
    }
  }
  return status;
}

}  // namespace superconf::cli

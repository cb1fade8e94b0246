#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "helpers.hpp"
#include "superconf/serialize.hpp"

using namespace superconf;
using namespace superconf::test;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "superconf");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("superconf_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("verify emits a JSON report and exit 0") {
  const Outcome o =
      run({"verify", "--suite", "ber-addition", "--trials", "10", "--seed", "1", "--format", "json"});
  CHECK(o.status == 0);
  const Json j = parse_json(o.out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"][0]["name"] == "ber-addition");
  CHECK(j["checks"][0]["failures"] == 0);
  CHECK_FALSE(j["checks"][0].contains("millis"));
  CHECK(run({"verify", "--suite", "ber-addition", "--trials", "10", "--seed", "1", "--format",
             "json"})
            .out == o.out);
  CHECK(parse_json(run({"verify", "--suite", "det-addition-footnote", "--trials", "2", "--format",
                        "json", "--timing"})
                       .out)["checks"][0]
            .contains("millis"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--bogus"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"verify", "--format", "yaml"}).status == 2);
  CHECK(run({"verify", "--trials", "0"}).status == 2);
  CHECK(run({"verify", "--generators", "99"}).status == 2);
  const Outcome unknown = run({"verify", "--suite", "no-such-check", "--trials", "1"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown check") != std::string::npos);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("reduce builds the SUSY translation") {
  const std::string input = temp_file("reduce.json", R"({"generator_count": 2,
    "g": [[{"mask": 0, "re": [1, 1]}]], "psi": [[{"mask": 1, "re": [1, 1]}]], "spin": 1,
    "f0": []})");
  const Outcome o = run({"reduce", "--input", input, "--format", "json"});
  CHECK(o.status == 0);
  CHECK(transform_from_json(parse_json(o.out)) == susy_translation(2));
  CHECK(o.out == dump(to_json(susy_translation(2))));
}

TEST_CASE("compose reports kind and Berezinian class") {
  Json in{{"outer", to_json(susy_translation(3))}, {"inner", to_json(tpt_example(3))}};
  const Outcome o = run({"compose", "--input", temp_file("compose.json", in.dump()),
                         "--format", "json"});
  CHECK(o.status == 0);
  const Json j = parse_json(o.out);
  CHECK(transform_from_json(j["composite"]) == compose(susy_translation(3), tpt_example(3)));
  CHECK(j["reduction_kind"] == "TPT");
  CHECK(j["ber_class"]["paper-literal"] == "NONINVERTIBLE");
}

TEST_CASE("classify") {
  const SATransform no_g(ComponentFunction::identity(2), zero(2, Parity::Odd), zero(2, Parity::Odd),
                         zero(2, Parity::Even));
  const Outcome o = run({"classify", "--input", temp_file("classify.json", to_json(no_g).dump()),
                         "--format", "json"});
  CHECK(o.status == 0);
  const Json j = parse_json(o.out);
  CHECK(j["ber_class"]["paper-literal"] == "NONEXISTENT");
  CHECK(j["ber_class"]["derivative"] == "NONEXISTENT");
  CHECK(j.contains("q"));
  CHECK(j.contains("delta"));
  CHECK(j.contains("delta0"));
  const Outcome text = run({"classify", "--input", temp_file("classify2.json",
                                                             to_json(tpt_example(2)).dump())});
  CHECK(text.out.find("reduction kind: TPT") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with a location") {
  const Outcome syntax = run({"classify", "--input", temp_file("bad.json", "{\"f\": [")});
  CHECK(syntax.status == 2);
  CHECK(syntax.err.find("parse error at byte") != std::string::npos);
  const Outcome shape = run({"compose", "--input", temp_file("bad2.json",
                                                              R"({"outer": {}, "inner": {}})")});
  CHECK(shape.status == 2);
  CHECK(shape.err.find("parse error at /outer: missing key") != std::string::npos);
  CHECK(run({"classify", "--input", "/nonexistent/file.json"}).status == 2);
}

TEST_CASE("demo-cocycle") {
  const Outcome o = run({"demo-cocycle", "--seed", "3", "--format", "json"});
  CHECK(o.status == 0);
  const Json j = parse_json(o.out);
  CHECK(j["standard"]["holds"] == true);
  CHECK(j["mixed"]["holds"] == true);
  CHECK(j["mixed"]["composite_kind"] == "TPT");
  CHECK(run({"demo-cocycle", "--seed", "3", "--format", "json"}).out == o.out);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "superconf_test_out.txt";
  std::filesystem::remove(path);
  const Outcome o = run({"verify", "--suite", "det-addition-footnote", "--trials", "3", "--output",
                         path.string()});
  CHECK(o.status == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("PASS", 0) == 0);
}

TEST_CASE("installed binary honours the exit-status contract") {
  const std::string bin = SUPERCONF_CLI_PATH;
  CHECK(std::system((bin + " verify --suite det-addition-footnote --trials 5 >/dev/null").c_str()) ==
        0);
  CHECK(WEXITSTATUS(std::system((bin + " verify --nope 2>/dev/null").c_str())) == 2);
}

// End-to-end checks of the command-line tool: JSON output against the
// checked-in schema, exit codes, and output determinism.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FLIESS_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    r.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

// A minimal JSON-schema validator covering the subset used by the checked-in
// schema: oneOf, enum, type, required, properties, items, pattern.
bool validates(const json& schema, const json& value) {
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const json& branch : schema["oneOf"])
      if (validates(branch, value)) ++hits;
    return hits == 1;
  }
  if (schema.contains("enum")) {
    for (const json& allowed : schema["enum"])
      if (allowed == value) return true;
    return false;
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "number" && !value.is_number()) return false;
    if (t == "integer" && !value.is_number_integer()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
  }
  if (schema.contains("pattern")) {
    if (!value.is_string()) return false;
    if (!std::regex_match(value.get<std::string>(),
                          std::regex(schema["pattern"].get<std::string>())))
      return false;
  }
  if (schema.contains("required")) {
    for (const json& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !validates(sub, value[key])) return false;
  }
  if (schema.contains("items") && value.is_array()) {
    for (const json& item : value)
      if (!validates(schema["items"], item)) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::ifstream schema_file(FLIESS_SCHEMA_PATH);
  if (!schema_file) {
    std::printf("FAIL  schema file missing at %s\n", FLIESS_SCHEMA_PATH);
    return 1;
  }
  const json schema = json::parse(schema_file);

  const std::array<std::string, 6> json_cmds = {
      "devlin --n 4 --format json",
      "antipode --word x0x0 --format json",
      "shuffle x1 \"e + x1\" --format json",
      "verify --max-degree 3 --format json",
      "abel-sim --alpha 0 --beta 1 --t-end 0.1 --format json",
      "return-map --alpha 1 --beta 1 --omega 1/10 --n 4 --format json",
  };
  for (const std::string& cmd : json_cmds) {
    const RunResult r = run(cmd);
    bool ok = r.exit_code == 0;
    if (ok) {
      try {
        ok = validates(schema, json::parse(r.output));
      } catch (const json::parse_error&) {
        ok = false;
      }
    }
    expect(ok, "schema-valid json: " + cmd);
  }

  // byte determinism across runs
  expect(run("devlin --n 6").output == run("devlin --n 6").output &&
             run("antipode --word x0x1 --format json").output ==
                 run("antipode --word x0x1 --format json").output,
         "deterministic output");

  // exact text renderings
  expect(run("devlin --n 4").output == "6*x1x1x1 + 3*x0x1 + 2*x1x0\n",
         "devlin table rendering");
  expect(run("antipode --word x0").output == "-a[x0] + a[x1]a[e]\n",
         "antipode rendering");
  expect(run("inverse \"x1\" --max-degree 4 --method antipode").output ==
             run("inverse \"x1\" --max-degree 4 --method fixpoint").output,
         "inverse routes agree through the CLI");

  // exit codes: 0 ok, 1 verification failure is unreachable here, 2 usage and
  // parse errors, 3 blow-up
  expect(run("verify --max-degree 3").exit_code == 0, "verify exits 0");
  expect(run("bogus-subcommand").exit_code == 2, "unknown subcommand exits 2");
  expect(run("shuffle \"1/0*x1\" x1").exit_code == 2, "parse error exits 2");
  expect(run("devlin").exit_code == 2, "missing required option exits 2");
  expect(run("abel-sim --alpha 0 --beta 1 --t-end 1.5").exit_code == 3,
         "finite-time escape exits 3");
  expect(run("--help").exit_code == 0, "help exits 0");

  // environment variable supplies the default truncation degree
  {
    const std::string cmd = std::string("FLIESS_MAX_DEGREE=4 ") +
                            FLIESS_CLI_PATH + " unity-feedback x1 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
      out.append(buf, got);
    pclose(pipe);
    expect(out == run("unity-feedback x1 --max-degree 4").output,
           "FLIESS_MAX_DEGREE honored");
  }

  return failures == 0 ? 0 : 1;
}

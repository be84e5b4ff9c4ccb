#include <sstream>

#include "ctow/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ctow;

namespace {

int run(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

TEST_CASE("cli exit codes") {
  std::string out;
  CHECK(run({"gen-basis", "--algebra", "brauer", "--n", "2"}, &out) == kExitPass);
  auto j = nlohmann::json::parse(out);
  CHECK(j["elements"].size() == 3);
  CHECK(run({"verify", "--algebra", "tl", "--n", "3", "--all"}) == kExitPass);
  CHECK(run({"verify", "--algebra", "brauer", "--n", "3", "--cell", "--corrupt", "14"}) == kExitFail);
  CHECK(run({"gen-basis", "--algebra", "brauer", "--n", "9"}) == kExitUsage);
  CHECK(run({"gen-basis", "--algebra", "nonsense", "--n", "2"}) == kExitUsage);
  CHECK(run({}) == kExitUsage);
}

TEST_CASE("cli dims") {
  std::string out;
  CHECK(run({"dims", "--algebra", "partition", "--n", "4", "--from", "2"}, &out) == kExitPass);
  auto j = nlohmann::json::parse(out);
  CHECK(j["agree"] == true);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["level"] == 4);
  CHECK(j["rows"][2]["dimension"] == 15);
}

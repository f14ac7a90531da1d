#include <sstream>

#include "brauer/cli.hpp"
#include "brauer/io.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

const std::string kFixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "brauer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli verify") {
  auto r = run({"verify", "--fixture", kFixtures + "/zeta8.json", "--all-relations"});
  CHECK(r.code == kExitPass);
  std::size_t passes = 0;
  for (std::size_t p = r.out.find("PASS"); p != std::string::npos; p = r.out.find("PASS", p + 1)) ++passes;
  CHECK(passes == 4);  // three identities and the consistency check

  r = run({"verify", "--fixture", kFixtures + "/zeta8.json", "--json"});
  REQUIRE(r.code == kExitPass);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"][0]["c_z"] == "1/2");
  CHECK(j["reports"][0]["c_zs"] == "1");
  CHECK(j["reports"][0]["c_zs_homological"] == "1");
  CHECK(j["reports"][0]["checks"].size() == 3);

  r = run({"verify", "--fixture", kFixtures + "/x3m2.json", "--tolerance", "1e-6"});
  CHECK(r.code == kExitPass);

  r = run({"verify", "--fixture", kFixtures + "/corrupted.json"});
  CHECK(r.code == kExitDataError);
  CHECK(r.err.find("unit_gram") != std::string::npos);
  CHECK(r.err.find("\"h\" must be a positive integer") != std::string::npos);

  r = run({"verify", "--fixture", kFixtures + "/zeta8.json", "--relation", R"({"terms":[{"subgroup_class":1,"coeff":1}]})"});
  CHECK(r.code == kExitDataError);
  r = run({"verify", "--fixture", kFixtures + "/zeta8.json", "--relation", "basis:0", "--all-relations"});
  CHECK(r.code == kExitDataError);
}

TEST_CASE("cli relations and regconst") {
  auto r = run({"relations", "--group", "V4"});
  REQUIRE(r.code == kExitPass);
  json j = json::parse(r.out);
  CHECK(j["basis"].size() == 1);
  CHECK(j["classes"].size() == 5);
  CHECK(json::parse(run({"relations", "--group", "C7"}).out)["basis"].empty());
  CHECK(json::parse(run({"relations", "--group", R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})"}).out)["basis"].size() == 1);

  r = run({"regconst", "--group", "V4", "--relation", "basis:0", "--module", "trivial", "--method", "both", "--seed", "3"});
  REQUIRE(r.code == kExitPass);
  j = json::parse(r.out);
  CHECK(j["value"] == "1/2");
  CHECK(j["agree"] == true);
  CHECK(j["factors"].size() == 5);
  CHECK(j["homological"]["value"] == "1/2");

  r = run({"regconst", "--group", "S3", "--relation", "basis:0", "--module", "regular/3"});
  CHECK(json::parse(r.out)["value"] == "1");
  r = run({"regconst", "--group", "V4", "--relation", "basis:0", "--module", "perm:1", "--method", "homological"});
  CHECK(r.code == kExitPass);

  CHECK(run({"regconst", "--group", "V4", "--relation", "basis:4", "--module", "trivial"}).code == kExitDataError);
  CHECK(run({"regconst", "--group", "V4", "--relation", "basis:0", "--module", "{bad"}).code == kExitDataError);
  CHECK(run({"regconst", "--group", "V4", "--relation", "basis:0", "--module", "trivial", "--method", "x"}).code ==
        kExitDataError);
}

TEST_CASE("cli cohomology, inertial-check, selftest and usage") {
  auto r = run({"cohomology", "--group", "V4", "--module", "trivial", "--subgroup", "4", "--degree", "2"});
  REQUIRE(r.code == kExitPass);
  json j = json::parse(r.out);
  CHECK(j["order"] == "4");
  CHECK(run({"cohomology", "--group", "V4", "--module", "trivial", "--subgroup", "9", "--degree", "2"}).code ==
        kExitDataError);

  r = run({"inertial-check", "--group", "V4"});
  CHECK(r.code == kExitPass);
  CHECK(json::parse(r.out)["data"].size() == 4);
  r = run({"inertial-check", "--group", "V4", "--datum", R"({"inertia_subgroup_class":0,"frobenius_element":1})"});
  CHECK(r.code == kExitDataError);

  CHECK(run({"selftest"}).code == kExitPass);
  CHECK(run({"frobnicate"}).code == kExitDataError);
  CHECK(run({}).code == kExitDataError);
  CHECK(run({"relations"}).code == kExitDataError);
}

#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using qdeform::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "qdeform");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qrat") {
  const Run r = run({"qrat", "5/2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["num"] == "q^3+q^2+2*q+1");
  CHECK(j["den"] == "q+1");
  CHECK(j["text"] == "(q^3+q^2+2*q+1)/(q+1)");
  const Run f = run({"qrat", "2", "--flavor", "flat", "--at", "2"});
  REQUIRE(f.code == 0);
  const auto jf = nlohmann::json::parse(f.out);
  CHECK(jf["num"] == "q^2+1");
  CHECK(jf["value"] == "5");
  CHECK(nlohmann::json::parse(run({"qrat", "1/0"}).out)["den"] == "0");
  const Run pole = run({"qrat", "1/2", "--at", "-1"});
  CHECK(nlohmann::json::parse(pole.out)["value"] == "inf");
}

TEST_CASE("cf") {
  CHECK(run({"cf", "5/2"}).out == "[2,2]\n");
  CHECK(run({"cf", "-6/4"}).out == "[-2,2]\n");
}

TEST_CASE("op bracket") {
  const Run r = run({"op", "bracket", "1", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["basis"] == "(1)*D3 + (q-1)*D2");
  CHECK(run({"op", "bracket", "9", "0"}).code == 2);
  CHECK(run({"op", "bracket", "9", "0", "--window", "9"}).code == 0);
}

TEST_CASE("series") {
  const Run r = run({"series", "tsallis", "--order", "3"});
  CHECK(r.out == "1\n1\n-1/2*q+1\n1/3*q^2-7/6*q+1\n");
  CHECK(run({"series", "tsallis", "--order", "3", "--at-q", "1"}).out == "1\n1\n1/2\n1/6\n");
}

TEST_CASE("flow") {
  const Run r = run({"flow", "dm1", "--q", "2", "--t", "0.5", "--x", "1,0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["image"][0].get<double>() == doctest::Approx(2.2974425414002564));
  const Run m = run({"flow", "d0", "--q", "3/2", "--t", "0"});
  REQUIRE(m.code == 0);
  CHECK(nlohmann::json::parse(m.out).contains("matrix"));
}

TEST_CASE("verify") {
  const Run r = run({"verify", "sl2", "--jobs", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "sl2");
  CHECK(!j["checks"].empty());
  const Run p = run({"verify", "heisenberg", "--pretty"});
  CHECK(p.code == 0);
  CHECK(p.out.find("heisenberg") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"qrat", "1/x"}).code == 2);
  CHECK(!run({"qrat", "1/x"}).err.empty());
  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"verify", "witt", "--window", "1"}).code == 2);
  CHECK(run({"flow", "d2", "--q", "2", "--t", "1"}).code == 2);
  CHECK(run({"flow", "d0", "--q", "2", "--t", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

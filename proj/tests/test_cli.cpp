#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = reflex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli normalize") {
  Run r = run({"normalize", "--model", "free-cl:2", "s k k g1"});
  CHECK(r.code == 0);
  CHECK(r.out == "g1\n");
  r = run({"normalize", "--model", "lambda-beta", "e i"});
  CHECK(r.out == "\\x. x\n");
  r = run({"normalize", "--model", "free-cl:1", "s i i (s i i)", "--fuel", "20"});
  CHECK(r.code == 2);
  CHECK(r.out == "UNKNOWN(fuel)\n");
  CHECK(r.err.find("20") != std::string::npos);
  r = run({"normalize", "--model", "free-cl:2", "s k ("});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli abstract") {
  CHECK(run({"abstract", "--mode", "dag", "--var", "x1", "g1 x1"}).out == "e g1\n");
  CHECK(run({"abstract", "--mode", "star", "--var", "x1", "x1"}).out == "i\n");
  CHECK(run({"abstract", "--mode", "dag", "--var", "x2", "x1"}).out == "e (k x1)\n");
  CHECK(run({"abstract", "--mode", "sideways", "--var", "x2", "x1"}).code == 1);
  CHECK(run({"abstract", "--var", "k", "x1"}).code == 1);
}

TEST_CASE("cli check") {
  Run r = run({"check", "--model", "lambda-beta", "--suite", "strong-reflexivity7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: holds") != std::string::npos);
  r = run({"check", "--model", "free-cl:2", "--suite", "curry5", "--format", "json"});
  CHECK(r.code == 3);
  CHECK(r.out.find("\"witnesses\"") != std::string::npos);
  CHECK(run({"check", "--model", "bar1:free-cl:2", "--suite", "premodel"}).code == 0);
  CHECK(run({"check", "--model", "lambda-beta", "--suite", "meyer-scott-probe"}).code == 2);
  CHECK(run({"check", "--model", "lambda-beta", "--suite", "bogus"}).code == 1);
  CHECK(run({"check", "--model", "bogus", "--suite", "curry5"}).code == 1);
  CHECK(run({"check", "--suite", "curry5"}).code == 1);
}

TEST_CASE("cli fuel from environment") {
  ::setenv("REFLEX_FUEL", "20", 1);
  Run r = run({"normalize", "--model", "free-cl:1", "s i i (s i i)"});
  CHECK(r.err.find("after 20 steps") != std::string::npos);
  r = run({"normalize", "--model", "free-cl:1", "s i i (s i i)", "--fuel", "30"});
  CHECK(r.err.find("after 30 steps") != std::string::npos);
  ::unsetenv("REFLEX_FUEL");
}

TEST_CASE("cli sim1 and roundtrip") {
  CHECK(run({"sim1", "--model", "free-cl:2", "s (k g1) i", "g1"}).code == 0);
  Run r = run({"sim1", "--model", "free-cl:2", "g1", "g2"});
  CHECK(r.code == 3);
  CHECK(r.out.find("not-equal") == 0);
  CHECK(run({"roundtrip", "--model", "free-cl:3", "x1 x1"}).code == 0);
  CHECK(run({"roundtrip", "--model", "free-cl:3", "g1"}).code == 0);
  CHECK(run({"roundtrip", "--model", "lambda-beta", "--kind", "xy", "x2 x1"}).code == 0);
  CHECK(run({"roundtrip", "--model", "free-cl:2", "--kind", "fragment", "--n", "1", "--m", "3", "x1"}).code == 0);
  CHECK(run({"roundtrip", "--model", "free-cl:2", "--kind", "fragment", "--n", "3", "--m", "1", "x1"}).code == 1);
}

TEST_CASE("cli usage") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

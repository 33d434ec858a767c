#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "nczeta/cli.hpp"

using namespace nczeta;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "nczeta");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NCZETA_TEST_DATA) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(NCZETA_TEST_DATA) + "/../golden/" + name);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cli: zeta matches the golden output") {
  const auto r = call({"zeta", "--builtin", "paper2x2", "--order", "10"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == golden("zeta_paper2x2.txt"));
  const auto from_file = call({"zeta", data("paper2x2.mat"), "--order", "10"});
  CHECK(from_file.out == r.out);
}

TEST_CASE("cli: an and g") {
  const auto r = call({"an", "--builtin", "kontsevich:1", "--order", "4"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "1: 0\n2: 2\n3: 0\n4: 6\n");
  const auto g = call({"g", "--builtin", "paper2x2", "--order", "4"});
  CHECK(g.out == "0: 0\n1: 0\n2: 6\n3: 0\n4: 30\n");
  const auto np = call({"an", "--builtin", "paper2x2", "--order", "8", "--no-prune"});
  CHECK(np.out == call({"an", "--builtin", "paper2x2", "--order", "8"}).out);
}

TEST_CASE("cli: euler agrees for every built-in") {
  for (const char* name : {"kontsevich:1", "kontsevich:2", "paper2x2", "paperdxd:3"}) {
    const auto r = call({"euler", "--builtin", name, "--lyndon", "6"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("EQUAL to order 6") != std::string::npos);
  }
}

TEST_CASE("cli: guess and verify") {
  const auto r = call({"guess", "--builtin", "paper2x2", "--target", "g", "--degt", "4", "--degy", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out != "none\n");
  CHECK(r.out.find("y^2") != std::string::npos);

  std::string poly = r.out;
  poly.pop_back();
  const auto v = call({"verify", "--builtin", "paper2x2", "--target", "g", "--poly", poly, "--order", "30"});
  CHECK(v.code == exit_ok);
  CHECK(v.out == "ANNIHILATES to order 30\n");

  const auto bad = call({"verify", "--builtin", "paper2x2", "--poly", "y - 1", "--order", "6"});
  CHECK(bad.code == exit_validation_error);
  CHECK(bad.out == "FAILS at t^2\n");

  const auto none = call({"guess", "--builtin", "paper2x2", "--degt", "1", "--degy", "1"});
  CHECK(none.code == exit_ok);
  CHECK(none.out == "none\n");
}

TEST_CASE("cli: system") {
  const auto r = call({"system", data("lukasiewicz.sys"), "--length", "5"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("xi1:\n", 0) == 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(call({"an", data("bad_syntax.mat")}).code == exit_parse_error);
  CHECK(call({"an", "--builtin", "paperdxd:2"}).code == exit_validation_error);
  CHECK(call({"an"}).code == exit_validation_error);
  CHECK(call({"an", data("missing.mat")}).code == exit_validation_error);
  CHECK(call({"an", "--builtin", "paper2x2", "--order", "0"}).code == exit_validation_error);
  CHECK(call({"frobnicate"}).code == exit_validation_error);
  CHECK(call({"--help"}).code == exit_ok);
  const auto r = call({"an", "--builtin", "paper2x2", "--order", "30", "--max-terms", "50"});
  CHECK(r.code == exit_resource_error);
  CHECK(r.out.empty());
}

TEST_CASE("cli: output is deterministic") {
  const std::vector<std::string> args{"zeta", "--builtin", "paperdxd:3", "--order", "8"};
  CHECK(call(args).out == call(args).out);
  CHECK(call({"selfcheck"}).out == call({"selfcheck"}).out);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "semicov/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = semicov::cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ns info") {
  auto r = run({"ns", "info", "--gens", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"msg\":[1],\"frobenius\":-1,\"genus\":0,\"gaps\":[]}\n");

  r = run({"ns", "info", "--gens", "3,7,8"});
  CHECK(r.out ==
        "{\"msg\":[3,7,8],\"frobenius\":5,\"genus\":4,\"gaps\":[1,2,4,5]}\n");

  r = run({"ns", "info", "--gens", "5,7,9", "--format", "msg"});
  CHECK(r.out == "5,7,9\n");
}

TEST_CASE("theta subcommands") {
  auto r = run({"theta", "enumerate", "--gens", "3,7,8", "--format", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  r = run({"theta", "enumerate", "--gens", "3,7,8"});
  CHECK(r.out ==
        "{\"minimum\":{\"msg\":[3,7,8],\"frobenius\":5,\"genus\":4,\"gaps\":"
        "[1,2,4,5]},\"members\":[{\"msg\":[3,7,8],\"frobenius\":5,\"genus\":4,"
        "\"gaps\":[1,2,4,5]},{\"msg\":[3,4],\"frobenius\":5,\"genus\":3,"
        "\"gaps\":[1,2,5]},{\"msg\":[3,5,7],\"frobenius\":4,\"genus\":3,"
        "\"gaps\":[1,2,4]},{\"msg\":[3,4,5],\"frobenius\":2,\"genus\":2,"
        "\"gaps\":[1,2]},{\"msg\":[2,3],\"frobenius\":1,\"genus\":1,\"gaps\":"
        "[1]},{\"msg\":[1],\"frobenius\":-1,\"genus\":0,\"gaps\":[]}],"
        "\"edges\":[[1,0],[2,0],[3,2],[4,3],[5,4]]}\n");

  r = run({"theta", "closure", "--gens", "5,7,9", "--set", "4,6", "--format",
           "msg"});
  CHECK(r.out == "4,5,6,7\n");

  r = run({"theta", "msg", "--gens", "5,7", "--member", "3,4,5"});
  CHECK(r.out == "[3,4]\n");

  r = run({"theta", "rank1", "--gens", "5,7,9", "--format", "count"});
  CHECK(r.out == "8\n");

  r = run({"theta", "rank1", "--gens", "2,3"});
  CHECK(r.out ==
        "{\"count\":1,\"items\":[{\"x\":1,\"semigroup\":{\"msg\":[1],"
        "\"frobenius\":-1,\"genus\":0,\"gaps\":[]}}]}\n");
}

TEST_CASE("coe subcommands") {
  auto r = run({"coe", "enumerate", "--frobenius", "7", "--format", "count"});
  CHECK(r.out == "6\n");

  r = run({"coe", "closure", "--frobenius", "7", "--set", "5", "--format",
           "msg"});
  CHECK(r.out == "4,5,6\n");

  r = run({"coe", "closure", "--frobenius", "7"});
  CHECK(r.out ==
        "{\"msg\":[8,9,10,11,12,13,14,15],\"frobenius\":7,\"genus\":7,"
        "\"gaps\":[1,2,3,4,5,6,7]}\n");

  r = run({"coe", "msg", "--frobenius", "7", "--member", "4,5,6", "--format",
           "msg"});
  CHECK(r.out == "5\n");

  r = run({"coe", "rank1", "--frobenius", "7", "--format", "count"});
  CHECK(r.out == "4\n");

  r = run({"coe", "check", "--gens", "4,5,6"});
  CHECK(r.out == "true\n");
  r = run({"coe", "check", "--gens", "3,7,8"});
  CHECK(r.out == "false\n");
}

TEST_CASE("tree export") {
  auto r = run({"tree", "--frobenius", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "digraph family {\n"
        "  n0 [label=\"{0,4,→}\"];\n"
        "  n1 [label=\"2∪{4,→}\"];\n"
        "  n1 -> n0;\n"
        "}\n");

  r = run({"tree", "--gens", "2,3"});
  CHECK(r.out ==
        "digraph family {\n"
        "  n0 [label=\"{0,2,→}\"];\n"
        "  n1 [label=\"{0,→}\"];\n"
        "  n1 -> n0;\n"
        "}\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"coe", "enumerate", "--frobenius", "4"}).code == 1);
  CHECK(run({"theta", "enumerate", "--gens", "2,4"}).code == 1);
  CHECK(run({"theta", "enumerate", "--gens", "3,7,8", "--max-members", "3"})
            .code == 1);
  CHECK(run({"theta", "closure", "--gens", "5,7,9", "--set", "5"}).code == 1);

  CHECK(run({"unknown"}).code == 2);
  CHECK(run({"theta", "enumerate"}).code == 2);
  CHECK(run({"ns", "info", "--gens", "1", "--format", "dot"}).code == 2);
  CHECK(run({"tree"}).code == 2);
  CHECK(run({}).code == 2);

  const auto r = run({"coe", "enumerate", "--frobenius", "4"});
  CHECK(r.err.find("error[even_frobenius]") == 0);
  CHECK(r.out.empty());
}

TEST_CASE("max-members honors the environment override") {
  setenv("SEMICOV_MAX_MEMBERS", "2", 1);
  CHECK(run({"theta", "enumerate", "--gens", "3,7,8"}).code == 1);
  // an explicit flag wins over the environment
  CHECK(run({"theta", "enumerate", "--gens", "3,7,8", "--max-members",
             "100"}).code == 0);
  unsetenv("SEMICOV_MAX_MEMBERS");
  CHECK(run({"theta", "enumerate", "--gens", "3,7,8"}).code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> golden = {
      {"ns", "info", "--gens", "3,7,8"},
      {"theta", "enumerate", "--gens", "3,7,8"},
      {"theta", "enumerate", "--gens", "3,7,8", "--format", "dot"},
      {"theta", "enumerate", "--gens", "5,7,9", "--format", "count"},
      {"theta", "closure", "--gens", "5,7,9", "--set", "4,6"},
      {"theta", "msg", "--gens", "5,7", "--member", "3,4,5"},
      {"theta", "rank1", "--gens", "5,7,9"},
      {"coe", "enumerate", "--frobenius", "7"},
      {"coe", "enumerate", "--frobenius", "7", "--format", "dot"},
      {"coe", "closure", "--frobenius", "7", "--set", "5", "--format", "msg"},
      {"coe", "msg", "--frobenius", "7", "--member", "4,5,6"},
      {"coe", "rank1", "--frobenius", "7"},
      {"coe", "check", "--gens", "4,5,6"},
      {"tree", "--gens", "3,7,8"},
      {"tree", "--frobenius", "7"},
      {"oracle", "verify", "--max-genus", "5", "--max-frobenius", "9"},
  };
  for (const auto& cmd : golden) {
    const auto first = run(cmd);
    const auto second = run(cmd);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
    CHECK(first.code == 0);
  }
}

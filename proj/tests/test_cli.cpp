#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"

using testutil::run_cli;

namespace {
bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("cli: gen") {
  SUBCASE("certified 4k1 instance exits 0") {
    const auto res = run_cli("gen --family 4k1 --k 3 --n 2");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "diameter: 5"));
    CHECK(contains(res.output, "vertices: 3314"));
    CHECK(contains(res.output, "certified: yes"));
  }

  SUBCASE("diameter selector resolves the first 4k3 instance") {
    const auto res = run_cli("gen --diameter 7 --index 0 --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.output);
    CHECK(doc["family"] == "4k+3");
    CHECK(doc["parameter"] == "4");
    CHECK(doc["vertices"] == "12197");
    CHECK(doc["spectrum"]["integral"] == true);
    CHECK(doc["params"]["r"] == "36");
    CHECK(doc["params"]["radii"] == nlohmann::json({"16", "25", "36"}));
  }

  SUBCASE("infeasible k exits 1 and names the minimum") {
    const auto res = run_cli("gen --family 4k1 --k 2 --n 2");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "k >= 3"));
  }

  SUBCASE("usage errors exit 1") {
    CHECK(run_cli("gen").exit_code == 1);
    CHECK(run_cli("gen --family 4k1 --n 2").exit_code == 1);
    CHECK(run_cli("gen --family nope --k 3 --n 2").exit_code == 1);
    CHECK(run_cli("gen --diameter 6 --index 0").exit_code == 1);
  }
}

TEST_CASE("cli: spectrum") {
  SUBCASE("closed and oracle agree on C(2,5,9)") {
    const auto res = run_cli("spectrum --c 2,5,9 --method both");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "x^17 * (x^2 - 2)^9 * (x^2 - 5)^3 * (x^2 - 9)"));
    CHECK(contains(res.output, "methods agree: yes"));
    CHECK(contains(res.output, "distinct eigenvalues: 0, ±√2, ±√5, ±3"));
  }

  SUBCASE("closed and oracle agree on T(1,1,2,3)") {
    const auto res = run_cli("spectrum --t 1,1,2,3 --method both --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.output);
    CHECK(doc["agree"] == true);
    CHECK(doc["vertices"] == "10");
    // x^4 (x^2-1)(x^2-3)(x^2-5) once the psi residual is split
    CHECK(doc["spectrum"]["integral"] == false);  // sqrt(3), sqrt(5) survive
  }

  SUBCASE("unsorted radii exit 1 with the validation message") {
    const auto res = run_cli("spectrum --c 3,2,1");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "radii must be strictly increasing"));
  }

  SUBCASE("oracle beyond its cap advises the closed method") {
    // C(2,5,9) has 43 vertices
    const auto res = run_cli("--oracle-max 20 spectrum --c 2,5,9 --method oracle");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "--method closed"));
  }

  SUBCASE("oracle method alone reports the spectrum") {
    // C(4) is the 5-vertex star: x^3 (x^2 - 4), integral
    const auto res = run_cli("spectrum --c 4 --method oracle");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "integral: yes"));
    CHECK(contains(res.output, "2: 1"));
  }

  SUBCASE("--method both never mismatches across a small grid") {
    for (const std::string spec :
         {"--c 1", "--c 3", "--c 1,2", "--c 2,4", "--c 1,3,4", "--c 2,3,5",
          "--t 1,1,2,3", "--t 2,1,2,4", "--t 3,2,3,4", "--t 1,1,1,2,3",
          "--t 2,2,1,3,4"}) {
      const auto res = run_cli("spectrum " + spec + " --method both");
      CHECK(res.exit_code == 0);
      CHECK(contains(res.output, "methods agree: yes"));
    }
  }
}

TEST_CASE("cli: pell") {
  const auto res = run_cli("pell --count 3");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "1 1 -"));
  CHECK(contains(res.output, "5 3 -"));
  CHECK(contains(res.output, "19 11 4"));

  const auto res5 = run_cli("pell --count 5 --format json");
  CHECK(res5.exit_code == 0);
  const auto doc = nlohmann::json::parse(res5.output);
  REQUIRE(doc.size() == 5);
  CHECK(doc[3]["x"] == "71");
  CHECK(doc[3]["a"] == "-11");
  CHECK(doc[0]["a"].is_null());

  CHECK(run_cli("pell --count 1").output ==
        run_cli("pell --count 1").output);  // deterministic
}

TEST_CASE("cli: export") {
  SUBCASE("3-vertex path edge list") {
    const auto res = run_cli("export --c 1,2 --format edge-list");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "# vertices=3 root=0\n0 1\n1 2\n");
  }

  SUBCASE("3314-vertex file round numbers") {
    const auto res = run_cli("export --t 35,1,36,64 --format edge-list");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "# vertices=3314 root=0\n"));
    // one line per edge plus the header
    const auto lines = std::count(res.output.begin(), res.output.end(), '\n');
    CHECK(lines == 3314);
  }

  SUBCASE("beyond the cap exits 1 reporting the requirement") {
    const auto res = run_cli("--max-vertices 100 export --t 35,1,36,64 --format edge-list");
    CHECK(res.exit_code == 1);
    CHECK(contains(res.output, "3314"));
  }

  SUBCASE("dot format and --out") {
    const std::string path = "/tmp/integra_test_export.dot";
    const auto res = run_cli("export --c 2 --format dot --out " + path);
    CHECK(res.exit_code == 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(contains(text, "0 -- 1;"));
    CHECK(contains(text, "0 -- 2;"));
    std::remove(path.c_str());
  }

  SUBCASE("identical invocations produce identical bytes") {
    const auto a = run_cli("export --t 2,1,2,3 --format edge-list");
    const auto b = run_cli("export --t 2,1,2,3 --format edge-list");
    CHECK(a.output == b.output);
  }
}

TEST_CASE("cli: environment variables set the caps") {
  const std::string cmd = "INTEGRA_MAX_VERTICES=100 " + std::string(INTEGRA_CLI_PATH) +
                          " export --t 35,1,36,64 --format edge-list 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 1);
  CHECK(contains(output, "3314"));
}

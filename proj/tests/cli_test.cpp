#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperchar/cli.hpp"

using namespace hyperchar;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chi command") {
  Result r = cli({"chi", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "s^2 - 12*s + 20\n");
  CHECK(r.err.empty());

  CHECK(cli({"chi", "--n", "3"}).out == "s - 3\n");
  CHECK(cli({"chi", "--n", "3", "--method", "via_tau"}).out == "s - 3\n");
  CHECK(cli({"chi", "--n", "3", "--method", "triangular"}).out == "s - 3\n");

  CHECK(cli({"chi", "--n", "5", "--format", "tsv"}).out == "5\t-210,180,-35,1\n");

  auto j = nlohmann::json::parse(cli({"chi", "--n", "4", "--format", "json"}).out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0]["coef"] == "20");
  CHECK(j[2]["exp"]["s"] == 2);
}

TEST_CASE("tau and mobius-hat commands") {
  CHECK(cli({"tau", "--n", "4"}).out == "1 + 12*t + 20*t^2\n");
  CHECK(cli({"tau", "--n", "3", "--format", "tsv"}).out == "3\t1,3\n");
  CHECK(cli({"tau", "--n", "2"}).out == "1\n");
  CHECK(cli({"mobius-hat", "--n", "7"}).out == "7776\n");
  CHECK(cli({"mobius-hat", "--n", "4"}).out == "-9\n");
}

TEST_CASE("usage errors exit with 2 and name the limit") {
  Result r = cli({"chi", "--n", "31"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("[2, 30]") != std::string::npos);

  CHECK(cli({"chi"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"chi", "--n", "4", "--format", "yaml"}).code == 2);
  CHECK(cli({"enumerate", "--family", "hypertree", "--n", "7"}).code == 2);
  CHECK(cli({"enumerate", "--family", "graph", "--n", "3"}).code == 2);
  CHECK(cli({"verify", "--suite", "everything"}).code == 2);
  CHECK(cli({"char", "--which", "XXX", "--degree", "2"}).code == 2);

  Result help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("chi") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("enumerate command") {
  Result r = cli({"enumerate", "--family", "hypertree", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "# family=hypertree n=3 count=4\n3|12,13\n3|12,23\n3|13,23\n3|123\n");

  CHECK(cli({"enumerate", "--family", "forest", "--n", "1"}).out ==
        "# family=forest n=1 count=1\n1|\n");

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "hyperchar_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  fs::path dump = dir / "pp3.txt";
  Result d = cli({"enumerate", "--family", "pointed_partition", "--n", "3", "--dump",
                  dump.string()});
  CHECK(d.code == 0);
  CHECK(d.out == "wrote 10 lines to " + dump.string() + "\n");
  std::ifstream in(dump);
  std::string header;
  std::getline(in, header);
  CHECK(header == "# family=pointed_partition n=3 count=10");

  // cache round trip: second call reads the file written by the first
  fs::path cache = dir / "cache";
  std::string first =
      cli({"--cache-dir", cache.string(), "enumerate", "--family", "cyclic_hypertree",
           "--n", "3"})
          .out;
  CHECK(fs::exists(cache / "cyclic_hypertree_3.txt"));
  std::string second =
      cli({"--cache-dir", cache.string(), "enumerate", "--family", "cyclic_hypertree",
           "--n", "3"})
          .out;
  CHECK(first == second);
  CHECK(first.find("# family=cyclic_hypertree n=3 count=4") == 0);

  // a corrupted cache is rejected, not silently used
  {
    std::ofstream f(cache / "cyclic_hypertree_3.txt", std::ios::trunc);
    f << "# family=cyclic_hypertree n=3 count=1\nnot a line\n";
  }
  Result bad = cli({"--cache-dir", cache.string(), "enumerate", "--family",
                    "cyclic_hypertree", "--n", "3"});
  CHECK(bad.code == 2);

  fs::remove_all(dir);
}

TEST_CASE("char command emits degree JSON") {
  Result r = cli({"char", "--which", "HAL", "--degree", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["degree"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["partition"] == nlohmann::json::array({1, 1}));
  CHECK(j["terms"][0]["coef"]["t^0"] == "1/2");

  for (const char* which : {"HA", "HAC", "WHPP", "CE", "M"})
    CHECK(cli({"char", "--which", which, "--degree", "3"}).code == 0);
}

TEST_CASE("verify command") {
  Result r = cli({"verify", "--suite", "identities", "--trunc", "5"});
  CHECK(r.code == 0);
  for (const char* name :
       {"koszul_comm", "poisson", "koszul_perm", "vertebres", "prelie_product", "somme1"})
    CHECK(r.out.find(std::string(name) + ": ok\n") != std::string::npos);

  Result c = cli({"verify", "--suite", "conjecture", "--max-n", "3", "--trunc", "4"});
  CHECK(c.code == 0);
  CHECK(c.out.find("conjecture_dimensions_n3: ok") != std::string::npos);
  CHECK(c.out.find("conjecture_equal_n3: equal") != std::string::npos);
}

TEST_CASE("report command") {
  Result r = cli({"report", "--conjecture", "--n", "3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["equal"] == true);
  CHECK(j["dimension_check"] == true);
  CHECK(j["difference"]["terms"].empty());

  CHECK(cli({"report", "--n", "3"}).code == 2);  // --conjecture is required
}

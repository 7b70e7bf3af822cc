#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" ALCOVE_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r)
{
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::filesystem::path scratch()
{
  const auto dir = std::filesystem::temp_directory_path() / "alcove_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text)
{
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

} // namespace

TEST_CASE("gallery command")
{
  const Json h = json_of(run("gallery --type A --rank 2 --coweight 1,1 --ls --count-only"));
  CHECK(h["total"] == 8);
  CHECK(h["by_weight"]["0,0"] == 2);
  CHECK(json_of(run("gallery --rank 2 --coweight 1,0 --ls --count-only"))["total"] == 3);
  CHECK(json_of(run("--jobs 1 gallery --rank 2 --coweight 1,0 --ls --count-only"))["total"] == 3);

  const Json zero = json_of(run("gallery --rank 2 --coweight 0,0 --ls"));
  CHECK(zero["galleries"].size() == 1);

  const Json all = json_of(run("gallery --rank 2 --coweight 1,1"));
  CHECK(all["galleries"].size() == 12);
  CHECK(all["based"]["folds"] == Json::parse("[false]"));

  const Json w0 = json_of(run("gallery --rank 2 --coweight 1,1 --weight 0,0"));
  CHECK(w0["galleries"].size() == 6);
  int ls = 0;
  for (const auto& g : w0["galleries"]) ls += g["ls"].get<bool>();
  CHECK(ls == 2);

  const Json only = json_of(run("gallery --rank 2 --coweight 1,1 --count-only --weight 0,0"));
  CHECK(only["total"] == 6);
}

TEST_CASE("gallery errors and budget")
{
  CHECK(run("gallery --rank 2 --coweight 1,-1").code == 2);
  CHECK(run("gallery --rank 2 --coweight 1").code == 2);
  CHECK(run("gallery --type B --rank 2 --coweight 1,1").code == 2);
  CHECK(run("gallery --rank 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("gallery --rank 2 --coweight 3,3", "ALCOVE_BUDGET=10").code == 3);
  CHECK(run("gallery --rank 2 --coweight 3,3 --ls --count-only", "ALCOVE_BUDGET=10").code == 3);
  CHECK(run("gallery --rank 2 --coweight 1,1", "ALCOVE_BUDGET=zero").code == 2);
}

TEST_CASE("gallery picture")
{
  const std::string svg = (scratch() / "gamma.svg").string();
  std::filesystem::remove(svg);
  CHECK(run("gallery --rank 2 --coweight 2,1 --ls --count-only --svg '" + svg + "'").code == 0);
  std::ifstream in(svg);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("crystal command")
{
  const Json j = json_of(run("crystal --rank 2 --coweight 1,1 --format json"));
  CHECK(j["nodes"].size() == 8);
  CHECK(json_of(run("crystal --rank 2 --coweight 0,0"))["nodes"].size() == 1);
  const Json def = json_of(run("crystal --rank 2 --coweight 1,0"));
  REQUIRE(def["edges"].size() == 2);
  CHECK(def["edges"][0]["i"] == 1);
  CHECK(def["edges"][1]["i"] == 2);
  const Run dot = run("crystal --rank 2 --coweight 1,1 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(run("crystal --rank 2 --coweight 1,1 --format png").code == 2);
}

TEST_CASE("quiver command")
{
  const Json m = json_of(run("quiver --maya 5 2,4,5"));
  CHECK(m["dims"] == Json::parse("[1, 1, 2, 1, 0]"));
  CHECK(m["preprojective"] == true);
  CHECK(run("quiver --maya 3 1,2").code == 2);
  CHECK(run("quiver --maya 3 x").code == 2);
  CHECK(run("quiver").code == 2);

  const std::string c = write("moduleC.json", R"({"dims": [1, 1], "arrows": [{"from": 2, "to": 1, "matrix": [["1"]]}]})");
  const Json pc = json_of(run("quiver --module '" + c + "' --pol"));
  CHECK(pc["polytope"]["vertices"] == Json::parse(R"([["0", "0"], ["1", "0"], ["1", "1"]])"));
  const Json ex = json_of(run("quiver --module '" + c + "' --pol --method exhaustive --prime 3"));
  CHECK(ex["polytope"] == pc["polytope"]);

  const std::string z = write("zero.json", R"({"dims": [0, 0, 0]})");
  const Json pz = json_of(run("quiver --module '" + z + "' --pol"));
  CHECK(pz["polytope"]["vertices"].size() == 1);

  const std::string two = write("two.json", R"({"dims": [1, 1], "arrows": [{"from": 2, "to": 1, "matrix": [["2"]]}]})");
  CHECK(run("quiver --module '" + two + "'").code == 4);
  CHECK(run("quiver --module '" + two + "' --method exhaustive --prime 9").code == 4);
  CHECK(run("quiver --module '" + write("bad.json", "{") + "'").code == 2);
  CHECK(run("quiver --module /nonexistent/file.json").code == 2);
}

TEST_CASE("polytope command")
{
  const Json prim = json_of(run("polytope --primitive-a2"));
  CHECK(prim.size() == 4);
  const std::string b1 = write("b1.json", prim["beta1"].dump());
  const std::string b2 = write("b2.json", prim["beta2"].dump());
  const std::string a1 = write("a1.json", prim["alpha1"].dump());
  const std::string a2 = write("a2.json", prim["alpha2"].dump());
  const Json sum = json_of(run("polytope --minkowski '" + a1 + "' '" + a2 + "'"));
  CHECK(sum["vertices"].size() == 4);
  const std::string s = write("sum.json", sum.dump());
  CHECK(json_of(run("polytope --union-check '" + b1 + "' '" + b2 + "' '" + s + "'"))["union_equals"] == true);
  CHECK(json_of(run("polytope --union-check '" + b1 + "' '" + s + "'"))["union_equals"] == false);

  const std::string origin = write("origin.json", R"({"vertices": [["0", "0"]]})");
  CHECK(json_of(run("polytope --minkowski '" + b1 + "' '" + origin + "'")) == prim["beta1"]);

  const std::string svg = (scratch() / "prim.svg").string();
  CHECK(run("polytope --primitive-a2 --svg '" + svg + "'").code == 0);
  CHECK(std::filesystem::file_size(svg) > 100);
  CHECK(run("polytope").code == 2);
  CHECK(run("polytope --primitive-a2 --minkowski '" + a1 + "' '" + a2 + "'").code == 2);
}

TEST_CASE("oracle command")
{
  const Json j = json_of(run("oracle --rank 2 --coweight 1,1"));
  CHECK(j["dim"] == 8);
  CHECK(j["multiplicities"]["0,0"] == 2);
  CHECK(j["multiplicities"]["-1,-1"] == 1);
  CHECK(json_of(run("oracle --rank 2 --coweight 0,0"))["dim"] == 1);
  CHECK(run("oracle --rank 2 --coweight -1,0").code == 2);
}

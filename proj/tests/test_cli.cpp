#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "negadesigns/constructions.hpp"
#include "negadesigns/matalg.hpp"

using namespace negadesigns;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NEGADESIGNS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto dir = std::filesystem::temp_directory_path() / "negadesigns_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

// Value of "key: value" in default output.
std::string field(const std::string& out, const std::string& key) {
  auto pos = out.find(key + ": ");
  if (pos == std::string::npos) return {};
  pos += key.size() + 2;
  return out.substr(pos, out.find('\n', pos) - pos);
}

}  // namespace

TEST_CASE("construct ng from the Ito series") {
  auto r = run("construct ng --series ito --q 11");
  CHECK(r.code == 0);
  CHECK(field(r.out, "length") == "6");
  NGPair p(BinarySeq::parse(field(r.out, "a")), BinarySeq::parse(field(r.out, "b")));
  CHECK(p.length() == 6);
}

TEST_CASE("verify an order-2 hadamard file") {
  auto f = temp_file("order2.txt", "++\n-+\n");
  CHECK(run("verify --kind hadamard --file " + f).code == 0);
  auto bad = temp_file("bad.txt", "++\n++\n");
  CHECK(run("verify --kind hadamard --file " + bad).code == 2);
}

TEST_CASE("corpus check on the block section") {
  auto r = run("corpus check --source B");
  CHECK(r.code == 0);
  CHECK(r.out.find(" FAIL ") == std::string::npos);
  CHECK(run("corpus check").code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("construct ng --series ito").code == 1);
  CHECK(run("construct ng --series ito --q 13").code == 1);
  CHECK(run("construct ng --series first-paley --q 7").code == 1);
  CHECK(run("nonsense").code == 1);
  CHECK(run("search nega-hadamard --order 8").code == 3);
  CHECK(run("search nega-hadamard --order 2").code == 0);
  CHECK(run("search ng --length 12 --budget 1").code == 4);
  CHECK(run("construct negacyclic-conference --q 89").code == 4);
}

TEST_CASE("equiv verdicts and scripts") {
  auto a = temp_file("ab.txt", "+----+----\n+--+-+-++-\n");
  auto c = temp_file("cd.txt", "+-+-+++-+-\n+++--++---\n");
  auto r = run("equiv --pair1 " + a + " --pair2 " + c);
  CHECK(r.code == 0);
  CHECK_FALSE(field(r.out, "script").empty());
  auto two = temp_file("two.txt", "++\n+-\n");
  CHECK(run("equiv --pair1 " + a + " --pair2 " + two).code == 3);
  CHECK(run("equiv --pair1 " + a + " --pair2 " + c + " --max-orbit 3").code == 4);
}

TEST_CASE("construct outputs re-verify through verify") {
  auto r = run("--porcelain construct paley-conference --q 9");
  REQUIRE(r.code == 0);
  std::string body;
  for (std::size_t pos = 0; (pos = r.out.find("row=", pos)) != std::string::npos;) {
    pos += 4;
    body += r.out.substr(pos, r.out.find('\n', pos) - pos) + "\n";
  }
  CHECK(run("verify --kind conference --file " + temp_file("pc9.txt", body)).code == 0);

  auto ng = run("construct ng --series second-paley --q 19");
  REQUIRE(ng.code == 0);
  auto pf = temp_file("ng19.txt", field(ng.out, "a") + "\n" + field(ng.out, "b") + "\n");
  CHECK(run("verify --kind ng --file " + pf).code == 0);
  auto dbl = run("construct double --pair " + pf + " --verify");
  CHECK(dbl.code == 0);
  CHECK(field(dbl.out, "length") == "20");
  CHECK(run("construct weighing --q 11 --verify").code == 0);
}

TEST_CASE("turyn multiplication and quasi-Williamson subcommands") {
  auto g = temp_file("g.txt", "+-\n++\n");
  auto p = temp_file("p.txt", "0+\n+0\n");
  auto r = run("construct turyn-mult --golay " + g + " --pair " + p + " --kind N --verify");
  CHECK(r.code == 0);
  CHECK(field(r.out, "weight") == "4");
  auto ten = run("construct ng --series second-paley --q 19");
  auto pf = temp_file("p10.txt", field(ten.out, "a") + "\n" + field(ten.out, "b") + "\n");
  auto q = run("construct ng-to-qw --pair " + pf + " --verify");
  CHECK(q.code == 0);
  auto rows = temp_file("q5.txt", field(q.out, "a") + "\n" + field(q.out, "b") + "\n" + field(q.out, "c") + "\n" +
                                      field(q.out, "d") + "\n");
  CHECK(run("construct qw-to-ng --rows " + rows + " --verify").code == 0);
}

TEST_CASE("identical invocations give identical output") {
  for (const char* args : {"search ng --length 8 --canonical", "search nega-conference --order 14",
                           "construct weighing --q 7", "corpus list"}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("pipelines") {
  CHECK(run("pipeline negacyclic-conference:13 symmetric-2c turyn-williamson williamson-array verify-hadamard:28")
            .code == 0);
  CHECK(run("pipeline ito-ng:7 double verify-ng:8").code == 0);
  CHECK(run("pipeline ito-ng:19 ng-to-qw verify-qw").code == 0);
  CHECK(run("pipeline ito-ng:7 symmetric-2c").code == 1);
}

// The htcli front end run as a subprocess, and the JSON encoding it uses.
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ht/json_io.h"

using namespace ht;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run htcli(const std::string& args) {
  std::string cmd = std::string(HTCLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t object_total(const Json& j) {
  std::size_t n = 0;
  for (const auto& c : j.at("cells")) n += c.at("objects").size();
  return n;
}

}  // namespace

TEST_CASE("value encodings") {
  CHECK(to_json(Rational(1, 2)) == Json("1/2"));
  CHECK(to_json(Rational(-3)) == Json("-3"));
  CHECK(rational_from_json(Json("-7/4")) == Rational(-7, 4));
  LaurentPoly p = LaurentPoly::v(1) + LaurentPoly::v(-1);
  CHECK(p.str() == "v^-1+v");
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(to_json(Arrangement{{{0, 3}, {1, 2}}}).dump() == "[[0,3],[1,2]]");
  CHECK(to_json(BarSymbol{{0, 1}, {2}}).dump() == R"({"M":[0,1],"N":[2]})");
  CHECK(dump(Json::array()) == "[]\n");
}

TEST_CASE("tables round-trip through JSON") {
  std::vector<ClassificationTable> tables = {classify("2A", 4), classify("2A", 6), classify("2D", 4), classify("2D", 9),
                                             classify("3D4"), classify("2E6"), classify_2e6(E6Reading::verbatim)};
  for (const auto& t : tables) {
    CAPTURE(t.family);
    CAPTURE(t.n);
    auto back = table_from_json(Json::parse(dump(table_to_json(t))));
    CHECK(back == t);
  }
  CHECK_THROWS_AS(table_from_json(Json::parse(R"({"family":"2A"})")), std::invalid_argument);
}

TEST_CASE("classify 3D4 emits eight objects") {
  auto r = htcli("classify --family 3D4 --format json");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j.at("family") == "3D4");
  CHECK(object_total(j) == 8);
  for (const auto& [name, c] : j.at("checks").items()) CHECK(c.at("pass") == true);
  // the CLI output loads to the library's table
  CHECK(table_from_json(j) == classify("3D4"));
}

TEST_CASE("classify 2D carries bar-symbols, eta bits and rational entries") {
  auto r = htcli("classify --family 2D --n 4");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(object_total(j) == 10);
  bool half = false;
  for (const auto& c : j.at("cells")) {
    CHECK(c.contains("M"));
    CHECK(c.contains("N"));
    for (const auto& o : c.at("objects")) CHECK(o.contains("eta"));
    for (const auto& row : c.at("pairing"))
      for (const auto& e : row) half = half || e == "1/2" || e == "-1/2";
  }
  CHECK(half);
  CHECK(table_from_json(j) == classify("2D", 4));
}

TEST_CASE("symbols subcommands") {
  auto r = htcli("symbols arrangements --set 0,1,2,3,4,5");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  std::set<std::string> got;
  for (const auto& a : j) got.insert(a.dump());
  CHECK(got == std::set<std::string>{"[[0,1],[2,3],[4,5]]", "[[0,5],[1,2],[3,4]]", "[[0,3],[1,2],[4,5]]",
                                     "[[0,1],[2,5],[3,4]]", "[[0,5],[1,4],[2,3]]"});
  auto empty = htcli("symbols arrangements --set 0,1,2");
  CHECK(empty.code == 0);
  CHECK(empty.out == "[]\n");
  auto count = Json::parse(htcli("symbols count --n 4").out);
  CHECK(count.at("bar_symbol_sum") == "10");
  CHECK(count.at("formula") == "10");
  CHECK(Json::parse(htcli("symbols barx --n 3").out).size() == 5);
  CHECK(Json::parse(htcli("symbols barx --n 4").out).size() == 7);
}

TEST_CASE("verify prints one pass line per identity") {
  auto r = htcli("verify --suite traces --family 2A --n 3 --format tsv");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.rfind("PASS\t", 0) == 0);
  }
  CHECK(lines >= 10);
  auto j = Json::parse(htcli("verify --suite symbols").out);
  CHECK(j.at("pass") == true);
}

TEST_CASE("verification failure exits 1 with a machine-readable report") {
  auto r = htcli("classify --family 2E6 --e6-verbatim");
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  bool some_fail = false;
  for (const auto& [name, c] : j.at("checks").items()) some_fail = some_fail || c.at("pass") == false;
  CHECK(some_fail);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const char* args : {"classify --family 2D --n 5", "hecke --family A3 --format tsv", "cells --family 2A --n 4",
                           "traces --family 2A --n 3 --format tsv"}) {
    CAPTURE(args);
    auto a = htcli(args), b = htcli(args);
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("hecke TSV lists P_{y,x}") {
  auto r = htcli("hecke --family A3 --format tsv");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("s2\ts2.s1.s3.s2\t1+q\n") != std::string::npos);
}

TEST_CASE("--out writes the file instead of standard output") {
  std::string path = "htcli_out_test.json";
  auto r = htcli("classify --family 2A --n 3 --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(table_from_json(Json::parse(ss.str())) == classify("2A", 3));
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  for (const char* args : {"", "bogus", "classify --family 2X", "classify --family 2A", "classify --family 2A --n 1",
                           "classify --family 3D4 --format xml", "verify --family 2A --n 3", "verify --suite nope --family 2A --n 3",
                           "symbols arrangements --set 0,a", "symbols count --n 1", "traces --family A3",
                           "cells --family 2E6", "classify --family 2A --n 3 --e6-verbatim", "classify --family 3D4 --bogus"}) {
    CAPTURE(args);
    CHECK(htcli(args).code == 2);
  }
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "lozenge/cli.hpp"
#include "lozenge/engines.hpp"
#include "lozenge/json_io.hpp"
#include "lozenge/theorems.hpp"

using namespace lozenge;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lozenge_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

 private:
  fs::path path_;
};

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

const char* kReference = R"({"x":4,"y":3,"U":[2,4,5,8,11],"D":[4,9,11,12],"B":[6,13]})";

}  // namespace

TEST_CASE("count and qcount") {
  TempDir dir;
  const std::string reference = dir.write("reference.json", kReference);
  const Result c = cli({"count", "--spec", reference, "--engine", "axis"});
  CHECK(c.code == 0);
  CHECK(c.out == "28693855097460\n");
  CHECK(cli({"count", "--spec", reference, "--jobs", "8"}).out == c.out);
  CHECK(cli({"qcount", "--spec", reference, "--at-one"}).out == c.out);
  CHECK(cli({"qcount", "--spec", reference}).out == cli({"qcount", "--spec", reference, "--jobs", "4"}).out);

  const std::string h = dir.write("h.json", R"({"x":1,"y":1,"U":[],"D":[],"B":[]})");
  CHECK(cli({"qcount", "--spec", h, "--engine", "brute"}).out == "1*q^-1 + 1*q^1\n");
  CHECK(cli({"count", "--spec", reference, "--engine", "brute"}).code == 1);
}

TEST_CASE("qcount at one equals count on a corpus sample") {
  TempDir dir;
  const auto sample = sample_corpus(small_corpus(), 3, 40);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const std::string p = dir.write("s" + std::to_string(i) + ".json", to_json(sample[i]).dump());
    for (const char* engine : {"axis", "brute"}) {
      CHECK(cli({"qcount", "--spec", p, "--at-one", "--engine", engine}).out ==
            cli({"count", "--spec", p, "--engine", engine}).out);
    }
  }
}

TEST_CASE("input errors exit 1") {
  TempDir dir;
  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"count"}).code == 1);
  CHECK(cli({"count", "--spec", "/nonexistent.json"}).code == 1);
  CHECK(cli({"count", "--spec", dir.write("bad.json", "{\"x\":1}")}).code == 1);
  const Result unsorted = cli({"count", "--spec", dir.write("u.json", R"({"x":1,"y":1,"U":[3,2],"D":[],"B":[]})")});
  CHECK(unsorted.code == 1);
  CHECK(unsorted.err.find("NotSorted") != std::string::npos);
  CHECK(cli({"count", "--spec", dir.write("e.json", kReference), "--engine", "fast"}).code == 1);
  CHECK(cli({"verify", "--suite", "nope"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("ratio") {
  TempDir dir;
  const std::string a = dir.write("a.json", R"({"x":1,"y":1,"U":[1,3],"D":[2],"B":[]})");
  const std::string b = dir.write("b.json", R"({"x":1,"y":1,"U":[2,3],"D":[1],"B":[]})");
  const Result id = cli({"ratio", "--thm", "1", "--spec-a", a, "--spec-b", a});
  CHECK(id.code == 0);
  CHECK(id.out == "1\n");
  CHECK(cli({"ratio", "--thm", "1", "--spec-a", a, "--spec-b", b}).out == "2\n");
  CHECK(cli({"ratio", "--thm", "2", "--spec-a", a, "--spec-b", b, "--engine", "brute"}).out == "2\n");
  CHECK(cli({"ratio", "--thm", "3", "--spec-a", a, "--spec-b", b}).code == 0);

  const std::string other = dir.write("c.json", R"({"x":2,"y":0,"U":[2,3],"D":[1],"B":[]})");
  CHECK(cli({"ratio", "--spec-a", a, "--spec-b", other}).code == 1);
  CHECK(cli({"ratio", "--thm", "4", "--spec-a", a, "--spec-b", b}).code == 1);
}

TEST_CASE("verify") {
  const Result r = cli({"verify", "--suite", "thm1", "--count", "4", "--max-L", "8"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  nlohmann::json last;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    ++n;
  }
  CHECK(last["summary"] == true);
  CHECK(last["failed"] == 0);
  CHECK(last["checks"] == 8);
  CHECK(n == 8 + 4 + 1);  // reports, controls, summary
  CHECK(r.out.find("elapsed_ms") == std::string::npos);
  CHECK(cli({"verify", "--suite", "kuo", "--count", "2", "--timing"}).out.find("elapsed_ms") != std::string::npos);

  const Result seq = cli({"verify", "--suite", "all", "--seed", "7", "--max-L", "8", "--jobs", "1"});
  const Result par = cli({"verify", "--suite", "all", "--seed", "7", "--max-L", "8", "--jobs", "8"});
  CHECK(seq.code == 0);
  CHECK(seq.out == par.out);
}

TEST_CASE("asym csv") {
  TempDir dir;
  const std::string c = dir.write("c.json", R"({"clusters":[["UP","DOWN"],["UP"]],"gaps":[2]})");
  const std::string c2 = dir.write("c2.json", R"({"clusters":[["DOWN","UP"],["UP"]],"gaps":[2]})");
  const Result r = cli({"asym", "--clusters", c, "--clusters-prime", c2, "--x", "1", "--y", "1", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,ratio,ratio_over_limit,deviation\n", 0) == 0);
  CHECK(occurrences(r.out, "\n") == 5);
  CHECK(r.out.find("inf,1,1,0\n") != std::string::npos);
  CHECK(r.out.find('.') == std::string::npos);
  const Result f = cli({"asym", "--clusters", c, "--clusters-prime", c2, "--nmax", "2", "--float"});
  CHECK(f.out.find("deviation_float") != std::string::npos);
  const std::string bad = dir.write("bad.json", R"({"clusters":[["UP","SIDEWAYS"]],"gaps":[]})");
  CHECK(cli({"asym", "--clusters", bad, "--clusters-prime", c2}).code == 1);
  CHECK(cli({"asym", "--clusters", c, "--clusters-prime", c2, "--nmax", "9", "--term-budget", "50"}).code == 1);
}

TEST_CASE("render") {
  TempDir dir;
  const std::string reference = dir.write("reference.json", kReference);
  const Result r = cli({"render", "--spec", reference});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
  CHECK(occurrences(r.out, "class=\"dent\"") == 9);
  CHECK(occurrences(r.out, "class=\"barrier\"") == 2);
  CHECK(occurrences(r.out, "class=\"cell\"") == build_region(validate_spec(load_region_spec(reference))).size());
  CHECK(cli({"render", "--spec", reference, "--tiling", "0"}).code == 1);  // too large for enumeration

  const std::string empty = dir.write("e.json", R"({"x":0,"y":0,"U":[],"D":[],"B":[]})");
  const Result e = cli({"render", "--spec", empty});
  CHECK(e.code == 0);
  CHECK(occurrences(e.out, "<polygon") == 0);

  const std::string h = dir.write("h.json", R"({"x":1,"y":1,"U":[],"D":[],"B":[]})");
  const Result t0 = cli({"render", "--spec", h, "--tiling", "0"});
  const Result t1 = cli({"render", "--spec", h, "--tiling", "1"});
  CHECK(occurrences(t0.out, "class=\"lozenge") == 3);
  CHECK(occurrences(t1.out, "class=\"lozenge") == 3);
  CHECK(t0.out != t1.out);
  CHECK(cli({"render", "--spec", h, "--tiling", "2"}).code == 1);

  const std::string wide = cli({"render", "--spec", h, "--unit", "48"}).out;
  CHECK(wide.find("width=\"144\"") != std::string::npos);  // 2 units plus half-unit margins
}

TEST_CASE("corpus") {
  const Result all = cli({"corpus", "--max-L", "4"});
  CHECK(all.code == 0);
  const Result s1 = cli({"corpus", "--seed", "5", "--sample", "20"});
  const Result s2 = cli({"corpus", "--seed", "5", "--sample", "20"});
  CHECK(s1.out == s2.out);
  CHECK(occurrences(s1.out, "\n") == 20);
  CHECK(s1.out != cli({"corpus", "--seed", "6", "--sample", "20"}).out);
  std::istringstream lines(all.out);
  std::string line;
  while (std::getline(lines, line)) CHECK_NOTHROW(validate_spec(region_spec_from_json(nlohmann::json::parse(line))));
}

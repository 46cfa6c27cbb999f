#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "tautring/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tautring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> k3 = {"--profile", "three-quadrics", "--n", "2", "--b", "22"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("gram report") {
  const Outcome r = run({"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2", "--no-timing"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["command"] == "gram");
  CHECK(j["params"]["delta"] == "2");
  CHECK(j["results"]["rank"] == 4);
  CHECK(j["results"]["basis"] == nlohmann::json{"h1*h2", "o1", "o2", "t(1,2)"});
  CHECK(j["results"]["gram"][0][0] == "64");
  CHECK(j["results"]["gram"][3][3] == "2");
  CHECK(j["results"]["kernel"].empty());
  CHECK(j["status"] == "pass");
  CHECK(j["timing_ms"].is_null());

  const Outcome timed = run({"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2"});
  CHECK(timed.json()["timing_ms"].is_number());
}

TEST_CASE("report keys come in a fixed order") {
  const Outcome r = run(with({"euler"}, with(k3, {"--no-timing"})));
  REQUIRE(r.code == 0);
  std::vector<std::string> keys;
  const auto report = nlohmann::ordered_json::parse(r.out);
  for (const auto& [key, value] : report.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"command", "params", "inputs", "results", "status", "timing_ms"});
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"gram", "--n", "3", "--d", "8", "--b", "3", "--m", "2", "--codim", "2"}).code == 2);
  CHECK(run({"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2", "--frobnicate"}).code == 2);
  CHECK(run({"gram", "--n", "2", "--d", "8", "--m", "2", "--codim", "2"}).code == 2);
  CHECK(run({"euler", "--profile", "three-quadrics", "--n", "2", "--b", "22", "--d", "3"}).code == 2);
  CHECK(run({"euler", "--profile", "double-plane", "--n", "4", "--b", "44"}).code == 2);
  CHECK(run({"euler", "--profile", "k3"}).code == 2);
  CHECK(run({"mul", "h1", "h4", "--n", "2", "--d", "8", "--b", "3", "--m", "2"}).code == 2);
  CHECK(run({"mul", "h1", "--n", "2", "--d", "8", "--b", "3", "--m", "2"}).code == 2);
  CHECK(run({"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2", "--format", "xml"}).code == 2);
  CHECK(run({"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2", "--delta", "1/0"}).code == 2);

  const Outcome bad = run({"mul", "h1 +", "h1", "--n", "2", "--d", "8", "--b", "3", "--m", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("mul and pair") {
  const std::vector<std::string> p = {"--n", "2", "--d", "8", "--b", "3", "--m", "3", "--no-timing"};
  Outcome r = run(with({"mul", "t(1,2)", "t(1,3)"}, p));
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["product"] == "t(2,3)*o1");

  r = run(with({"pair", "t(1,2)*o3", "t(1,2)*o3"}, p));
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["value"] == "0");

  r = run(with({"pair", "t(1,2)*h3^0*o3", "t(1,2)"}, p));
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["value"] == "2");

  r = run(with({"mul", "h1^2", "h2"}, p));
  REQUIRE(r.code == 0);
  CHECK(r.json()["inputs"]["x"] == "8*o1");
  CHECK(run(with({"mul", "h1^2", "h2", "--normalize-input", "false"}, p)).code == 2);
}

TEST_CASE("verification commands pass on the profiles") {
  for (const char* cmd : {"verify-ck", "verify-mck", "lemma-ok", "gamma3", "euler"}) {
    CAPTURE(cmd);
    CHECK(run(with({cmd}, with(k3, {"--no-timing"}))).code == 0);
    CHECK(run({cmd, "--profile", "double-plane", "--b", "44", "--no-timing"}).code == 0);
    CHECK(run({cmd, "--n", "4", "--d", "8", "--b", "5", "--no-timing"}).code == 0);
  }
  const Outcome euler = run({"euler", "--profile", "double-plane", "--b", "44", "--no-timing"});
  CHECK(euler.json()["results"]["value"] == "46");
}

TEST_CASE("failed checks exit with 1") {
  const Outcome k = run({"kimura", "--n", "2", "--d", "8", "--b", "2", "--delta", "2", "--no-timing"});
  CHECK(k.code == 1);
  CHECK(k.json()["status"] == "fail");
  CHECK(k.json()["results"]["vanishing"] == false);

  CHECK(run({"euler", "--n", "2", "--d", "8", "--b", "3", "--delta", "7/2"}).code == 1);
  CHECK(run({"kimura", "--n", "2", "--d", "8", "--b", "2", "--no-timing"}).code == 0);
}

TEST_CASE("scan") {
  const Outcome ok = run({"scan", "--n", "2", "--d", "8", "--b", "2", "--m-max", "4", "--no-timing"});
  REQUIRE(ok.code == 0);
  const auto j = ok.json();
  CHECK(j["results"]["injective_up_to_threshold"] == true);
  CHECK(j["results"]["first_deficient"]["m"] == 4);
  CHECK(j["results"]["first_deficient"]["codim"] == 4);

  const Outcome capped =
      run({"scan", "--n", "2", "--d", "8", "--b", "3", "--m-max", "5", "--cap-gram", "10", "--no-timing"});
  CHECK(capped.code == 3);
  CHECK(capped.json()["status"] == "error");
  CHECK(capped.json()["results"]["truncated"] == true);
  CHECK_FALSE(capped.json()["results"]["rows"].empty());

  CHECK(run({"kimura", "--n", "2", "--d", "8", "--b", "3", "--cap-b", "2"}).code == 3);
}

TEST_CASE("csv and text formats") {
  const std::vector<std::string> args = {"gram", "--n", "2", "--d", "8", "--b", "3", "--m", "2", "--codim", "2",
                                         "--no-timing", "--format"};
  const Outcome csv = run(with(args, {"csv"}));
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("monomial,h1*h2,o1,o2,\"t(1,2)\"\n", 0) == 0);
  CHECK(csv.out.find("\"t(1,2)\",0,0,0,2\n") != std::string::npos);

  const Outcome text = run(with(args, {"text"}));
  REQUIRE(text.code == 0);
  CHECK(text.out.find("status: pass") != std::string::npos);
}

TEST_CASE("reports are reproducible without timing") {
  const std::vector<std::vector<std::string>> commands = {
      {"basis", "--n", "2", "--d", "8", "--b", "3", "--m", "3", "--codim", "3"},
      {"gram", "--n", "2", "--d", "8", "--b", "2", "--m", "4", "--codim", "4", "--threads", "4"},
      {"kimura", "--n", "2", "--d", "8", "--b", "3"},
      {"scan", "--n", "2", "--d", "8", "--b", "2", "--m-max", "3", "--format", "csv"},
  };
  for (const auto& cmd : commands) {
    const auto args = with(cmd, {"--no-timing"});
    CHECK(run(args).out == run(args).out);
  }
  const auto serial = run({"gram", "--n", "2", "--d", "8", "--b", "2", "--m", "4", "--codim", "4", "--no-timing"});
  const auto threaded = run({"gram", "--n", "2", "--d", "8", "--b", "2", "--m", "4", "--codim", "4", "--threads",
                             "4", "--no-timing"});
  CHECK(nlohmann::json::parse(serial.out)["results"] == nlohmann::json::parse(threaded.out)["results"]);
}

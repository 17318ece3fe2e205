#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string command = std::string(MACKEY_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("socle") {
  auto one = run("socle --lambda 1 --mu -");
  CHECK(one.status == 0);
  CHECK(one.out == "W_{1;-}\nlayer 0: 1*[(V*/V_*)_(-) x V_(1;-)]\nlayer 1: 1*[(V*/V_*)_(1) x V_(-;-)]\n");
  auto only_v = run("socle --lambda - --mu 2");
  CHECK(only_v.status == 0);
  CHECK(only_v.out.find("layer 1") == std::string::npos);
  auto hook = run("socle --lambda 2,1 --mu - --format json");
  CHECK(hook.status == 0);
  auto j = nlohmann::ordered_json::parse(hook.out);
  CHECK(j["layers"].size() == 4);
  std::size_t constituents = 0;
  for (const auto& layer : j["layers"]) constituents += layer.size();
  CHECK(constituents == 6);
  CHECK(j.dump(2) + "\n" == hook.out);
}

TEST_CASE("lengths and coefficients") {
  CHECK(run("length --m 1 --n 0").out == "2\n");
  CHECK(run("length --m 0 --n 1").out == "1\n");
  CHECK(run("length --m 1 --n 1").out == "3\n");
  CHECK(run("simple-length --lambda 2,1 --mu -").out == "6\n");
  CHECK(run("lr 2,1 1 2").out == "1\n");
  CHECK(run("coproduct 1").out == "1*(- x 1) + 1*(1 x -)\n");
  CHECK(run("product 1 1").out == "1*(2) + 1*(1,1)\n");
  CHECK(run("dim --rank 3 --lambda 1 --mu 1").out == "8\n");
  CHECK(run("words --m 2 --k 1").out == "00\n01\n10\n");
  CHECK(run("filtration --rank 5 --block 3 --lambda 2").out == "layer dimensions: 6 6 3\npredicted: 6 6 3\n");
}

TEST_CASE("errors") {
  CHECK(run("socle --lambda 1,2 --mu -").status == 2);
  CHECK(run("socle --lambda x --mu -").status == 2);
  CHECK(run("lr 2,1 1").status == 2);
  CHECK(run("dim --rank 1 --lambda 1 --mu 1").status == 2);
  CHECK(run("words --m 1 --k 2").status == 2);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("dump --rank 10 --m 5 --n 0").status == 2);
}

TEST_CASE("budget from the environment") {
  std::string command = std::string("SOCLE_BUDGET=5 ") + MACKEY_CLI + " dump --rank 3 --m 2 --n 0 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(command.c_str())) == 2);
  CHECK(run("dump --rank 2 --m 1 --n 0").status == 0);
}

TEST_CASE("verify") {
  auto hopf = run("verify hopf");
  CHECK(hopf.status == 0);
  CHECK(hopf.out.find("FAIL") == std::string::npos);
  auto branching = run("verify branching --format json");
  CHECK(branching.status == 0);
  for (const auto& r : nlohmann::json::parse(branching.out)) CHECK(r["passed"].get<bool>());
  CHECK(run("verify brute --budget 20000").status == 0);
  CHECK(run("verify hopf --seed 5").status == 0);
  // Deterministic output across runs.
  CHECK(run("verify hopf").out == hopf.out);
}

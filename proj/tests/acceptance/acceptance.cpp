// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic_chroma/characterization.hpp"
#include "cyclic_chroma/constructor.hpp"
#include "cyclic_chroma/cycle_model.hpp"
#include "cyclic_chroma/decomposition.hpp"
#include "cyclic_chroma/oracle.hpp"
#include "cyclic_chroma/verifier.hpp"
#include "naive_oracle.hpp"

namespace {

using namespace cyclic_chroma;
using Ints = std::vector<int>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: none
  std::function<Outcome()> body;
};

std::string show(const Ints& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

Outcome theorem_validation() {
  Outcome o;
  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int t = 1; t <= n; ++t) {
      ++checked;
      if (exists_search(n, t, Mode::cyclic_interval) != contains(n, t)) {
        o.fail("search and formula disagree at n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (n,t) pairs agree";
  return o;
}

Outcome interval_validation() {
  Outcome o;
  for (int k = 2; k <= 6; ++k) {
    Ints expected;
    for (int t = 2; t <= k + 1; ++t) expected.push_back(t);
    const Ints got = theta_by_search(2 * k, Mode::interval).members;
    if (got != expected) o.fail("n=" + std::to_string(2 * k) + " gave " + show(got));
  }
  for (int n = 3; n <= 11; n += 2) {
    const Ints got = theta_by_search(n, Mode::interval).members;
    if (!got.empty()) o.fail("odd n=" + std::to_string(n) + " gave " + show(got));
  }
  if (o.pass) o.detail = "even n in [4,12] and odd n in [3,11]";
  return o;
}

Outcome constructor_totality() {
  Outcome o;
  long witnesses = 0;
  for (int n = 3; n <= 500; ++n) {
    for (int t = 1; t <= n; ++t) {
      const Construction r = construct(n, t);
      const auto* c = std::get_if<CycleColoring>(&r);
      if ((c != nullptr) != contains(n, t)) {
        o.fail("construct/contains mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t));
        continue;
      }
      if (c == nullptr) continue;
      ++witnesses;
      if (!verify(*c, Mode::cyclic_interval).mode_satisfied) {
        o.fail("invalid witness at n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
    if (n % 2 == 0) {
      for (int t : theta_interval(n).members) {
        if (!verify(tent(n, t), Mode::interval).mode_satisfied) {
          o.fail("tent not interval at n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(witnesses) + " witnesses verified";
  return o;
}

Outcome spot_values() {
  Outcome o;
  const std::vector<std::pair<int, Ints>> expected = {
      {5, {3, 5}}, {6, {2, 3, 4, 6}}, {7, {3, 5, 7}}, {8, {2, 3, 4, 5, 6, 8}}};
  for (const auto& [n, members] : expected) {
    if (theta_cyclic(n).members != members) o.fail("Θ(C(" + std::to_string(n) + ")) mismatch");
  }
  if (forbidden_set(10) != Ints{7, 9}) o.fail("forbidden_set(10) = " + show(forbidden_set(10)));
  for (int n = 3; n <= 100; ++n) {
    if (bounds_cyc(n) != std::make_pair(3 - epsilon(n), n)) {
      o.fail("bounds_cyc(" + std::to_string(n) + ") mismatch");
    }
  }
  return o;
}

Outcome oracle_counts() {
  Outcome o;
  const std::vector<std::tuple<int, int, std::uint64_t>> expected = {{3, 3, 6}, {4, 3, 12}, {4, 4, 8}};
  for (const auto& [n, t, want] : expected) {
    const std::uint64_t searched = count(n, t, Mode::cyclic_interval);
    const std::uint64_t brute = naive::count_valid(n, t, naive::Kind::cyclic);
    if (searched != want || brute != want) {
      o.fail("count(" + std::to_string(n) + "," + std::to_string(t) + "): search " +
             std::to_string(searched) + ", naive " + std::to_string(brute));
    }
  }
  return o;
}

Outcome decomposition_identity() {
  Outcome o;
  int case_b = 0;
  for (int n = 4; n <= 9; ++n) {
    for (int t = 2; t <= n; ++t) {
      for (const auto& c : enumerate(n, t, {Mode::cyclic_interval, std::nullopt, false})) {
        const ProofDecomposition d = decompose(c);
        if (d.m < 2) continue;
        ++case_b;
        if (d.psi_sum() != n + 2 * d.m) o.fail("Σψ != n+2m for " + to_record(c));
        if (d.non_horizontal_count() % 2 != 0) o.fail("odd non-horizontal count for " + to_record(c));
      }
    }
  }
  if (case_b == 0) o.fail("no coloring with m >= 2 encountered");
  if (o.pass) o.detail = std::to_string(case_b) + " colorings with m >= 2";
  return o;
}

Outcome symmetry_suite() {
  Outcome o;
  std::vector<CycleColoring> pool;
  for (int n = 3; n <= 9; ++n) {
    for (int t = 2; t <= n; ++t) {
      for (auto& c : enumerate(n, t, {Mode::cyclic_interval, std::nullopt, false})) {
        pool.push_back(std::move(c));
      }
    }
  }
  std::mt19937 rng(1000);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int sample = 0; sample < 1000; ++sample) {
    const CycleColoring& c = pool[pick(rng)];
    const int d = std::uniform_int_distribution<int>(0, c.t() - 1)(rng);
    const int k = std::uniform_int_distribution<int>(0, c.n() - 1)(rng);
    const CycleColoring images[] = {shift_colors(c, d), rotate_edges(c, k), reverse_edges(c),
                                    reflect_colors(c)};
    for (const auto& image : images) {
      if (!verify(image, Mode::cyclic_interval).mode_satisfied) {
        o.fail("symmetry image of " + to_record(c) + " is invalid");
      }
    }
  }
  if (o.pass) o.detail = "1000 samples from " + std::to_string(pool.size()) + " colorings";
  return o;
}

int shell(const std::string& command, std::string* out = nullptr) {
  FILE* pipe = popen(("bash -o pipefail -c '" + command + "'").c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  const int status = pclose(pipe);
  if (out != nullptr) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_contract() {
  Outcome o;
  const std::string bin = CYCLIC_CHROMA_CLI_PATH;

  std::mt19937 rng(50);
  for (int sample = 0; sample < 50; ++sample) {
    const int n = std::uniform_int_distribution<int>(3, 80)(rng);
    const Ints theta = theta_cyclic(n).members;
    const int t = theta[std::uniform_int_distribution<std::size_t>(0, theta.size() - 1)(rng)];
    const std::string cmd = bin + " make " + std::to_string(n) + " " + std::to_string(t) + " | " +
                            bin + " check --mode cyclic >/dev/null";
    if (shell(cmd) != 0) o.fail("make|check failed for n=" + std::to_string(n) + " t=" + std::to_string(t));
  }

  for (int n = 3; n <= 12; ++n) {
    if (shell(bin + " oracle " + std::to_string(n) + " --assert-theorem >/dev/null") != 0) {
      o.fail("oracle " + std::to_string(n) + " --assert-theorem did not exit 0");
    }
  }

  std::string table;
  if (shell(bin + " table 8 --oracle-upto 8 --format csv", &table) != 0) o.fail("table exited nonzero");
  std::ifstream golden(CYCLIC_CHROMA_GOLDEN_DIR "/table_8_oracle_8.csv", std::ios::binary);
  const std::string expected{std::istreambuf_iterator<char>(golden), std::istreambuf_iterator<char>()};
  if (expected.empty() || table != expected) o.fail("table 8 CSV differs from golden file");

  if (o.pass) o.detail = "50 pipes, 10 oracle runs, golden CSV";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "theorem validation: exists_search == contains, n in [3,12]", 60, theorem_validation},
      {2, "interval validation: θ by search, even n to 12, odd n to 11", 30, interval_validation},
      {3, "constructor totality and soundness, n in [3,500]", 30, constructor_totality},
      {4, "spot values of Θ, forbidden set, bounds", 0, spot_values},
      {5, "oracle counts match naive enumeration", 0, oracle_counts},
      {6, "decomposition identity Σψ = n + 2m, n in [4,9]", 0, decomposition_identity},
      {7, "symmetry property suite, 1000 samples", 0, symmetry_suite},
      {8, "CLI contract: make|check, oracle --assert-theorem, golden table", 0, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}

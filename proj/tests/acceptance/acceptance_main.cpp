// Copyright 2026 the fdcp authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits non-zero if any check fails.
//
// Usage: fdcp_acceptance <path-to-fdcp-cli> <path-to-golden-dir>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "fdcp/constraints.hpp"
#include "fdcp/model.hpp"
#include "fdcp/oracle.hpp"
#include "fdcp/search.hpp"
#include "fdcp/solver.hpp"
#include "support/random_csp.hpp"
#include "support/trail_fuzz.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& note) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2: trail round-trip fuzz and timestamp economy.

void criteriaTrailFuzz() {
  const auto start = Clock::now();
  std::uint64_t nodes = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t boundaryViolations = 0;
  std::uint64_t maxEntries = 0;
  std::uint64_t steps = 0;
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    const auto result = fdcp::test::runTrailFuzz(20000, 8, seed);
    steps += result.steps;
    nodes += result.nodesCreated;
    mismatches += result.valueMismatches + result.boundaryViolations;
    boundaryViolations += result.boundaryViolations;
    if (result.maxEntriesPerEpoch > maxEntries) maxEntries = result.maxEntriesPerEpoch;
  }
  const double elapsed = secondsSince(start);

  std::ostringstream note1;
  note1 << steps << " ops, " << nodes << " nodes, " << mismatches << " mismatches, "
        << elapsed << " s";
  report(1, "trail round-trip fuzz matches the full-copy reference",
         steps >= 10000 && nodes >= 500 && mismatches == 0 && elapsed < 5.0, note1.str());

  std::ostringstream note2;
  note2 << "max trail entries per int per node epoch = " << maxEntries;
  report(2, "timestamp economy: at most one trail entry per int per node", maxEntries <= 1,
         note2.str());
}

// ---------------------------------------------------------------------------
// Shared restoration bookkeeping for criteria 3, 5 and 6. The search's
// closing undoAll pops every trailed change, including root-level entries
// written by initial propagation, so "pre-search" bounds are the bounds
// the variables were created with.

struct RestorationLedger {
  std::uint64_t runs = 0;
  std::uint64_t violations = 0;

  void checkRun(fdcp::Solver& solver, const std::vector<fdcp::IntervalVar*>& vars,
                const std::vector<std::int64_t>& preBounds) {
    ++runs;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i]->min() != preBounds[2 * i] || vars[i]->max() != preBounds[2 * i + 1]) {
        ++violations;
        return;
      }
    }
    if (solver.trail().size() != 0 || solver.trail().depth() != 0) ++violations;
  }
};

std::vector<std::int64_t> snapshotBounds(const std::vector<fdcp::IntervalVar*>& vars) {
  std::vector<std::int64_t> bounds;
  bounds.reserve(vars.size() * 2);
  for (const auto* v : vars) {
    bounds.push_back(v->min());
    bounds.push_back(v->max());
  }
  return bounds;
}

// ---------------------------------------------------------------------------
// Criterion 3: propagation fixpoint on random bound CSPs.

void criterionFixpoint(RestorationLedger& ledger) {
  std::mt19937_64 rng(20260809);
  std::uint64_t violations = 0;
  std::uint64_t propagated = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const fdcp::test::RandomCsp csp = fdcp::test::makeRandomCsp(rng);
    fdcp::Solver solver;
    std::vector<fdcp::IntervalVar*> vars;
    std::vector<fdcp::Propagator*> props;
    for (const auto& b : csp.bounds) vars.push_back(&solver.makeVar(b.min, b.max));
    const std::vector<std::int64_t> creationBounds = snapshotBounds(vars);
    for (const auto& relation : csp.relations) {
      std::unique_ptr<fdcp::Propagator> p;
      if (const auto* leq = std::get_if<fdcp::oracle::Leq>(&relation)) {
        p = std::make_unique<fdcp::LowerEqual>(*vars[leq->x], *vars[leq->y]);
      } else {
        const auto& neq = std::get<fdcp::oracle::NeqOffset>(relation);
        p = std::make_unique<fdcp::NotEqualOffset>(*vars[neq.x], *vars[neq.y], neq.a, neq.b);
      }
      props.push_back(p.get());
      solver.add(std::move(p));
    }
    if (!solver.propagate()) continue;
    ++propagated;

    const std::vector<std::int64_t> bounds = snapshotBounds(vars);
    bool stable = true;
    for (auto* p : props) stable = p->propagate() && stable;
    stable = solver.propagate() && stable;
    if (!stable || bounds != snapshotBounds(vars)) ++violations;

    // Criterion 6 material: a search on the propagated instance must
    // restore the pristine root.
    fdcp::StaticMin heuristic(solver.trail(), vars);
    fdcp::Search search(solver, heuristic);
    search.search();
    ledger.checkRun(solver, vars, creationBounds);
  }
  std::ostringstream note;
  note << propagated << " propagated instances of 100, " << violations << " violations";
  report(3, "propagation fixpoint: rerunning every propagator changes no bound",
         violations == 0, note.str());
}

// ---------------------------------------------------------------------------
// Criterion 4: exhaustive bounds consistency of the leq propagator.

void criterionBoundsConsistency() {
  std::uint64_t mismatches = 0;
  std::uint64_t pairs = 0;
  for (std::int64_t xlo = -10; xlo <= 10; ++xlo)
    for (std::int64_t xhi = xlo; xhi <= 10; ++xhi)
      for (std::int64_t ylo = -10; ylo <= 10; ++ylo)
        for (std::int64_t yhi = ylo; yhi <= 10; ++yhi) {
          ++pairs;
          fdcp::PropagationQueue queue;
          fdcp::Trail trail;
          fdcp::IntervalVar x(queue, trail, xlo, xhi);
          fdcp::IntervalVar y(queue, trail, ylo, yhi);
          fdcp::LowerEqual p(x, y);
          const bool ok = p.init();
          if (xlo > yhi) {
            if (ok) ++mismatches;
            continue;
          }
          if (!ok || x.min() != xlo || x.max() != std::min(xhi, yhi) ||
              y.min() != std::max(ylo, xlo) || y.max() != yhi) {
            ++mismatches;
          }
        }
  std::ostringstream note;
  note << pairs << " interval pairs, " << mismatches << " mismatches";
  report(4, "leq propagator reaches the analytic bounds-consistent fixpoint",
         mismatches == 0, note.str());
}

// ---------------------------------------------------------------------------
// Criterion 5: solver/oracle equivalence, plus an independent queens check.

// Independent n-queens enumeration: no solver or oracle code involved.
std::vector<std::vector<std::int64_t>> enumerateQueensDirect(int n) {
  std::vector<std::vector<std::int64_t>> boards;
  std::vector<std::int64_t> q(n, 1);
  for (;;) {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      for (int j = i + 1; ok && j < n; ++j) {
        const std::int64_t d = q[i] - q[j];
        if (d == 0 || d == j - i || d == i - j) ok = false;
      }
    if (ok) boards.push_back(q);
    int i = n - 1;
    while (i >= 0 && q[i] == n) {
      q[i] = 1;
      --i;
    }
    if (i < 0) return boards;
    ++q[i];
  }
}

void criterionDifferential(RestorationLedger& ledger) {
  const auto start = Clock::now();
  std::uint64_t mismatches = 0;

  std::mt19937_64 rng(424242);
  for (int instance = 0; instance < 100; ++instance) {
    const fdcp::test::RandomCsp csp = fdcp::test::makeRandomCsp(rng);
    const auto expected = fdcp::oracle::enumerate(csp.toOracleProblem());
    if (!expected) {
      ++mismatches;
      continue;
    }
    fdcp::Solver solver;
    std::vector<fdcp::IntervalVar*> vars;
    std::vector<std::int64_t> preBounds;
    {
      // Solve and compare; StaticMin's left-first descent must agree with
      // the oracle's lexicographic order.
      vars = csp.build(solver);
      preBounds.clear();
      for (const auto& b : csp.bounds) {
        preBounds.push_back(b.min);
        preBounds.push_back(b.max);
      }
      fdcp::StaticMin heuristic(solver.trail(), vars);
      fdcp::Search search(solver, heuristic);
      std::vector<std::vector<std::int64_t>> found;
      search.onSolution([&] {
        std::vector<std::int64_t> values;
        for (auto* v : vars) values.push_back(v->min());
        found.push_back(std::move(values));
      });
      search.search();
      std::vector<std::vector<std::int64_t>> sortedFound = found;
      std::vector<std::vector<std::int64_t>> sortedExpected = *expected;
      std::sort(sortedFound.begin(), sortedFound.end());
      std::sort(sortedExpected.begin(), sortedExpected.end());
      if (sortedFound != sortedExpected) ++mismatches;
      if (!found.empty() && !expected->empty() && found.front() != expected->front())
        ++mismatches;
      ledger.checkRun(solver, vars, preBounds);
    }
  }

  std::uint64_t queensMismatches = 0;
  std::uint64_t queens4Solutions = 0;
  for (int n : {4, 5, 6}) {
    fdcp::Solver solver;
    std::vector<fdcp::IntervalVar*> vars;
    for (int i = 0; i < n; ++i) vars.push_back(&solver.makeVar(1, n));
    const std::vector<std::int64_t> preBounds = snapshotBounds(vars);
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        const std::int64_t d = static_cast<std::int64_t>(j - i);
        solver.add(std::make_unique<fdcp::NotEqualOffset>(*vars[i], *vars[j], 0, 0));
        solver.add(std::make_unique<fdcp::NotEqualOffset>(*vars[i], *vars[j], d, 0));
        solver.add(std::make_unique<fdcp::NotEqualOffset>(*vars[i], *vars[j], 0, d));
      }
    fdcp::StaticMin heuristic(solver.trail(), vars);
    fdcp::Search search(solver, heuristic);
    std::vector<std::vector<std::int64_t>> found;
    search.onSolution([&] {
      std::vector<std::int64_t> values;
      for (auto* v : vars) values.push_back(v->min());
      found.push_back(std::move(values));
    });
    search.search();
    ledger.checkRun(solver, vars, preBounds);

    if (found != enumerateQueensDirect(n)) ++queensMismatches;
    if (n == 4) queens4Solutions = found.size();
  }

  const double elapsed = secondsSince(start);
  std::ostringstream note;
  note << "100 random instances + queens {4,5,6}, " << (mismatches + queensMismatches)
       << " mismatches, queens-4 solutions = " << queens4Solutions << ", " << elapsed << " s";
  report(5, "solver solution sets equal brute-force enumeration",
         mismatches == 0 && queensMismatches == 0 && queens4Solutions == 2 && elapsed < 60.0,
         note.str());
}

// ---------------------------------------------------------------------------
// Criterion 7: budget contract and node-count determinism on 6-queens.

void criterionBudget() {
  fdcp::model::Model model = fdcp::model::parseModel(fdcp::model::generateQueens(6));

  fdcp::Solver solver;
  std::vector<fdcp::IntervalVar*> vars;
  for (const auto& decl : model.vars) vars.push_back(&solver.makeVar(decl.min, decl.max));
  for (const auto& constraint : model.constraints) {
    const auto& neq = std::get<fdcp::model::NeqOffsetDecl>(constraint);
    solver.add(std::make_unique<fdcp::NotEqualOffset>(*vars[neq.x], *vars[neq.y], neq.a, neq.b));
  }
  fdcp::StaticMin heuristic(solver.trail(), vars);
  fdcp::Search search(solver, heuristic);

  const bool cutReturnsFalse = !search.search(1);
  const bool restoredAfterCut = solver.trail().size() == 0 && vars[0]->min() == 1 &&
                                vars[0]->max() == 6;

  const bool fullReturnsTrue = search.search();
  const std::uint64_t nodesFirst = search.stats().nodes;
  search.search();
  const std::uint64_t nodesSecond = search.stats().nodes;

  std::ostringstream note;
  note << "search(1) -> " << (cutReturnsFalse ? "false" : "true") << ", unlimited -> "
       << (fullReturnsTrue ? "true" : "false") << ", nodes " << nodesFirst << " vs "
       << nodesSecond;
  report(7, "budget contract and node-count determinism on 6-queens",
         cutReturnsFalse && restoredAfterCut && fullReturnsTrue && nodesFirst == nodesSecond,
         note.str());
}

// ---------------------------------------------------------------------------
// Criterion 8: the queue drains on conflict without running later filters.

struct FlagProbe final : fdcp::Propagator {
  explicit FlagProbe(bool result) : result_(result) {}
  bool init() override { return true; }
  bool propagate() override {
    ++calls;
    return result_;
  }
  int calls = 0;
  bool result_;
};

void criterionConflictDrain() {
  fdcp::PropagationQueue queue;
  FlagProbe failing(false);
  FlagProbe pending(true);
  queue.enqueue(failing);
  queue.enqueue(pending);
  const bool result = queue.propagate();
  const bool pass = !result && failing.calls == 1 && pending.calls == 0 &&
                    !failing.enqueued && !pending.enqueued && queue.empty();
  std::ostringstream note;
  note << "conflict propagator ran " << failing.calls << "x, pending filter ran "
       << pending.calls << "x, flags cleared";
  report(8, "conflict still drains the queue and clears every enqueued flag", pass, note.str());
}

// ---------------------------------------------------------------------------
// Criterion 9: CLI golden files.

struct CommandResult {
  int exitCode = -1;
  std::string output;
};

CommandResult runCommand(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exitCode = WEXITSTATUS(status);
  return result;
}

std::string normalizeTiming(const std::string& text) {
  static const std::regex timing("(\"wall_time_ms\": )[-+0-9.eE]+");
  return std::regex_replace(text, timing, "$010.0");
}

void criterionGolden(const std::string& cli, const std::string& goldenDir) {
  const CommandResult run = runCommand(cli + " solve --gen queens:4 --json");
  std::ifstream goldenFile(goldenDir + "/queens4.json");
  std::ostringstream goldenText;
  goldenText << goldenFile.rdbuf();
  const bool goldenOk = goldenFile.good() && run.exitCode == 0 &&
                        normalizeTiming(run.output) == normalizeTiming(goldenText.str());

  const CommandResult bad =
      runCommand(cli + " solve " + goldenDir + "/bad_model.fd 2>&1");
  const bool badOk =
      bad.exitCode == 2 && bad.output.find("line 3") != std::string::npos;

  std::ostringstream note;
  note << "queens:4 --json " << (goldenOk ? "byte-identical" : "differs")
       << "; parse error exit=" << bad.exitCode;
  report(9, "CLI golden output and parse-error contract", goldenOk && badOk, note.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: fdcp_acceptance <fdcp-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string goldenDir = argv[2];

  RestorationLedger restoration;

  criteriaTrailFuzz();
  criterionFixpoint(restoration);
  criterionBoundsConsistency();
  criterionDifferential(restoration);

  std::ostringstream note6;
  note6 << restoration.runs << " searches checked, " << restoration.violations << " violations";
  report(6, "every search run restores bounds and empties the trail",
         restoration.runs > 0 && restoration.violations == 0, note6.str());

  criterionBudget();
  criterionConflictDrain();
  criterionGolden(cli, goldenDir);

  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return g_failures == 0 ? 0 : 1;
}

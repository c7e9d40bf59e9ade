// Copyright 2026 The Authors.
//
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

// Command-line front end: generate family files, check and search cyclic
// orderings, classify flowers, inflate, and run verification suites.
//
// Exit codes: 0 success / all claims pass / ordering found or valid,
// 1 a claim failed / not found / invalid, 2 usage, input or cap error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclomat/connectivity.h"
#include "cyclomat/constructions.h"
#include "cyclomat/cyclic.h"
#include "cyclomat/errors.h"
#include "cyclomat/families.h"
#include "cyclomat/harness.h"
#include "cyclomat/io.h"

namespace cyclomat {
namespace {

struct Globals {
  std::string seed = "none";
  int max_n = kMaxElements;
  std::string format = "json";
  std::string out;
};

void Emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(g.out, text);
  }
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

Matroid LoadMatroid(const std::string& path, const Globals& g) {
  const MatroidFile file = MatroidFileFromJson(ReadJsonFile(path));
  if (file.n > g.max_n) {
    throw SizeCapError(path + " has " + std::to_string(file.n) +
                       " elements, above --max-n " + std::to_string(g.max_n));
  }
  return file.Build();
}

OrderingFile LoadOrdering(const std::string& path, const Matroid& m) {
  OrderingFile file = OrderingFileFromJson(ReadJsonFile(path));
  if (file.ordering.size() != m.n()) {
    throw InvalidInput("ordering has " + std::to_string(file.ordering.size()) +
                       " elements, matroid has " + std::to_string(m.n()));
  }
  return file;
}

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidInput("bad petal size '" + item + "'");
    }
  }
  return sizes;
}

// "x.json" -> "x".
std::string Stem(const std::string& out) {
  if (out.size() > 5 && out.ends_with(".json")) {
    return out.substr(0, out.size() - 5);
  }
  return out;
}

std::string SidecarPath(const std::string& out) {
  return Stem(out) + ".ordering.json";
}

int Run(int argc, char** argv) {
  CLI::App app{"cyclomat: cyclic orderings, flowers and inflation of matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "randomness seed; only 'none' is accepted")
      ->check(CLI::IsMember({"none"}));
  app.add_option("--max-n", g.max_n, "largest accepted ground set")
      ->check(CLI::Range(1, kMaxElements));
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "write output here instead of stdout");

  std::string family, matroid_path, ordering_path, suite, petal_sizes,
      report_path, mode = "t_cyclic";
  int r = 0, n = 0, t = 0, k = 0, iterations = 1, r_min = 3, r_max = 6;
  std::optional<int> t_filter;

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", family, "wheel|whirl|spike|swirl|uniform")
      ->required();
  gen->add_option("--r", r, "rank")->required();
  gen->add_option("--n", n, "ground set size (uniform only)");

  auto* check = app.add_subcommand("check-ordering", "test a t-cyclic ordering");
  check->add_option("--matroid", matroid_path)->required();
  check->add_option("--ordering", ordering_path)->required();
  check->add_option("--t", t, "overrides the t in the ordering file");

  auto* find = app.add_subcommand("find-ordering", "search for an ordering");
  find->add_option("--matroid", matroid_path)->required();
  find->add_option("--t", t)->required();
  find->add_option("--mode", mode)->check(CLI::IsMember({"property", "t_cyclic"}));

  auto* flower = app.add_subcommand("flower", "classify a concatenation");
  flower->add_option("--matroid", matroid_path)->required();
  flower->add_option("--ordering", ordering_path)->required();
  flower->add_option("--petal-sizes", petal_sizes, "comma separated")->required();
  flower->add_option("--k", k)->required();
  int start = 0;
  flower->add_option("--start", start, "position of the first petal");

  auto* inflate = app.add_subcommand("inflate", "truncate then Higgs lift");
  inflate->add_option("--matroid", matroid_path)->required();
  inflate->add_option("--ordering", ordering_path)->required();
  inflate->add_option("--t", t)->required();
  inflate->add_option("--iterations", iterations)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember(SuiteNames()));
  verify->add_option("--r-min", r_min);
  verify->add_option("--r-max", r_max);
  verify->add_option("--t", t_filter);
  std::optional<int> drop_basis;
  verify->add_option("--drop-basis", drop_basis,
                     "fault injection: remove this basis from every family");

  auto* report = app.add_subcommand("report", "render a saved JSON report");
  report->add_option("--in", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat format = OutputFormatFromString(g.format);

    if (*gen) {
      const FamilyKind kind = FamilyKindFromString(family);
      if (kind == FamilyKind::kUniform) {
        if (n > g.max_n) throw SizeCapError("n above --max-n");
        const Matroid m = Uniform(r, n);
        Emit(g, DumpJson(ToJson(ToMatroidFile(m))));
        return 0;
      }
      if (2 * r > g.max_n) throw SizeCapError("2r above --max-n");
      const FamilyBundle b = MakeFamily(kind, r);
      MatroidFile file{b.matroid.label(), b.matroid.n(),
                       b.source ? *b.source : ToMatroidFile(b.matroid).repr};
      const OrderingFile ordering{b.ordering, b.t, b.parity};
      if (g.out.empty()) {
        Emit(g, DumpJson({{"matroid", ToJson(file)},
                          {"ordering", ToJson(ordering)}}));
      } else {
        WriteTextFile(g.out, DumpJson(ToJson(file)));
        WriteTextFile(SidecarPath(g.out), DumpJson(ToJson(ordering)));
      }
      return 0;
    }

    if (*check) {
      const Matroid m = LoadMatroid(matroid_path, g);
      const OrderingFile file = LoadOrdering(ordering_path, m);
      const int tt = t > 0 ? t : file.t;
      if (tt < 1) throw InvalidInput("no t given");
      const TCyclicResult res = IsTCyclicOrdering(m, file.ordering, tt);
      Json j = {{"t", tt},
                {"parity", res.parity ? Json(std::string(ToString(*res.parity)))
                                      : Json(nullptr)},
                {"anchor", res.anchor},
                {"both_clauses", res.both_clauses},
                {"note", res.note}};
      if (file.parity && res.parity) {
        j["declared_parity_matches"] = *file.parity == *res.parity;
      }
      if (format == OutputFormat::kText) {
        Emit(g, res.parity ? std::string(ToString(*res.parity)) + "\n"
                           : std::string("none\n"));
      } else {
        Emit(g, DumpJson(j));
      }
      return res.parity ? 0 : 1;
    }

    if (*find) {
      const Matroid m = LoadMatroid(matroid_path, g);
      const auto found = FindCyclicOrdering(m, t, SearchModeFromString(mode));
      Json j = {{"found", found.has_value()}, {"mode", mode}, {"t", t}};
      if (found) {
        const TCyclicResult res = IsTCyclicOrdering(m, *found, t);
        j["ordering"] = found->seq();
        j["parity"] = res.parity ? Json(std::string(ToString(*res.parity)))
                                 : Json(nullptr);
      }
      if (format == OutputFormat::kText) {
        std::string line = found ? "found:" : "none";
        if (found) {
          for (int e : found->seq()) line += " " + std::to_string(e);
        }
        Emit(g, line + "\n");
      } else {
        Emit(g, DumpJson(j));
      }
      return found ? 0 : 1;
    }

    if (*flower) {
      const Matroid m = LoadMatroid(matroid_path, g);
      const OrderingFile file = LoadOrdering(ordering_path, m);
      Concatenation c{start, ParseSizes(petal_sizes)};
      int total = 0;
      for (int s : c.sizes) {
        if (s < 1) throw InvalidInput("petal sizes must be positive");
        total += s;
      }
      if (total != m.n()) {
        throw InvalidInput("petal sizes sum to " + std::to_string(total) +
                           ", expected " + std::to_string(m.n()));
      }
      const Flower f = MakeFlower(file.ordering, c, k);
      const FlowerClass cls = ClassifyFlower(m, f);
      Json j = ToJson(cls);
      Json petals = Json::array();
      for (const auto& p : f.petals) petals.push_back(p.members());
      j["petals"] = std::move(petals);
      j["k"] = k;
      if (format == OutputFormat::kText) {
        Emit(g, std::string(ToString(cls.verdict)) + "\n");
      } else {
        Emit(g, DumpJson(j));
      }
      return cls.verdict == FlowerVerdict::kNotAFlower ||
                     cls.verdict == FlowerVerdict::kMixed
                 ? 1
                 : 0;
    }

    if (*inflate) {
      const Matroid m = LoadMatroid(matroid_path, g);
      const OrderingFile file = LoadOrdering(ordering_path, m);
      const auto traces = InflateRepeatedly(m, file.ordering, t, iterations);
      const InflationTrace& last = traces.back();
      Json steps = Json::array();
      bool ok = true;
      for (const auto& tr : traces) {
        steps.push_back(ToJson(tr));
        ok = ok && tr.checks.all_passed();
      }
      const OrderingFile out_ordering{file.ordering, last.t_out,
                                      last.parity_out};
      if (g.out.empty()) {
        Emit(g, DumpJson({{"matroid", ToJson(ToMatroidFile(last.output))},
                          {"ordering", ToJson(out_ordering)},
                          {"trace", std::move(steps)}}));
      } else {
        WriteTextFile(g.out, DumpJson(ToJson(ToMatroidFile(last.output))));
        WriteTextFile(SidecarPath(g.out), DumpJson(ToJson(out_ordering)));
        WriteTextFile(Stem(g.out) + ".trace.json", DumpJson(steps));
      }
      return ok ? 0 : 1;
    }

    if (*verify) {
      SuiteSpec spec;
      spec.name = suite;
      spec.r_min = r_min;
      spec.r_max = r_max;
      spec.t = t_filter;
      spec.max_n = g.max_n;
      spec.drop_basis = drop_basis;
      const VerificationReport rep = RunSuite(spec);
      Emit(g, EmitReport(rep, format));
      return rep.all_passed() ? 0 : 1;
    }

    if (*report) {
      const VerificationReport rep = ReportFromJson(ReadJsonFile(report_path));
      Emit(g, EmitReport(rep, format));
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace
}  // namespace cyclomat

int main(int argc, char** argv) { return cyclomat::Run(argc, argv); }

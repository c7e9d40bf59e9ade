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

#include "cyclomat/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cyclomat/errors.h"

namespace cyclomat {

namespace {

std::vector<std::vector<int>> SortedSets(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string SetsToText(const std::vector<std::vector<int>>& sets) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    out += "}";
  }
  return out;
}

Json SetsJson(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

}  // namespace

OutputFormat OutputFormatFromString(std::string_view s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "text") return OutputFormat::kText;
  throw InvalidInput("unknown format '" + std::string(s) + "'");
}

Json ToJson(const MatroidRepr& repr) {
  return std::visit(
      [](const auto& rep) -> Json {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, BasesRep>) {
          return {{"kind", "bases"}, {"bases", SortedSets(rep.bases)}};
        } else if constexpr (std::is_same_v<T, CircuitsRep>) {
          return {{"kind", "circuits"}, {"circuits", SortedSets(rep.circuits)}};
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          Json rows = Json::array();
          for (int i = 0; i < rep.rows; ++i) {
            Json row = Json::array();
            for (int c = 0; c < rep.cols; ++c) row.push_back(rep.at(i, c));
            rows.push_back(std::move(row));
          }
          return {{"kind", "linear"}, {"p", rep.p}, {"rows", rep.rows},
                  {"cols", rep.cols}, {"matrix", std::move(rows)}};
        } else {
          Json edges = Json::array();
          for (const auto& [u, v] : rep.edges) edges.push_back({u, v});
          return {{"kind", "graph"},
                  {"vertices", rep.vertex_count},
                  {"edges", std::move(edges)}};
        }
      },
      repr);
}

MatroidRepr ReprFromJson(const Json& j) {
  const std::string kind = Get<std::string>(j, "kind");
  if (kind == "bases") {
    BasesRep rep;
    rep.n = j.value("n", -1);
    rep.bases = Get<std::vector<std::vector<int>>>(j, "bases");
    return rep;
  }
  if (kind == "circuits") {
    CircuitsRep rep;
    rep.n = j.value("n", -1);
    rep.circuits = Get<std::vector<std::vector<int>>>(j, "circuits");
    return rep;
  }
  if (kind == "linear") {
    LinearRep rep;
    rep.p = j.value("p", kDefaultPrime);
    const Json& matrix = Field(j, "matrix");
    if (!matrix.is_array()) throw InvalidInput("'matrix' must be an array");
    if (!matrix.empty() && matrix.front().is_array()) {
      const auto rows = Get<std::vector<std::vector<std::int64_t>>>(j, "matrix");
      rep.rows = static_cast<int>(rows.size());
      rep.cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != rep.cols) {
          throw InvalidInput("ragged matrix rows");
        }
        rep.entries.insert(rep.entries.end(), row.begin(), row.end());
      }
    } else {
      rep.entries = Get<std::vector<std::int64_t>>(j, "matrix");
      rep.rows = Get<int>(j, "rows");
      if (rep.rows <= 0 || rep.entries.size() % rep.rows != 0) {
        throw InvalidInput("flat matrix length is not a multiple of rows");
      }
      rep.cols = static_cast<int>(rep.entries.size()) / rep.rows;
    }
    if (j.contains("cols") && j.at("cols").get<int>() != rep.cols) {
      throw InvalidInput("'cols' disagrees with the matrix");
    }
    if (rep.p > 0) {
      for (auto& e : rep.entries) e = ((e % rep.p) + rep.p) % rep.p;
    }
    return rep;
  }
  if (kind == "graph") {
    GraphRep rep;
    rep.vertex_count = Get<int>(j, "vertices");
    for (const auto& e : Get<std::vector<std::vector<int>>>(j, "edges")) {
      if (e.size() != 2) throw InvalidInput("graph edges need two endpoints");
      rep.edges.emplace_back(e[0], e[1]);
    }
    return rep;
  }
  throw InvalidInput("unknown representation kind '" + kind + "'");
}

Json ToJson(const MatroidFile& file) {
  return {{"name", file.name}, {"n", file.n}, {"repr", ToJson(file.repr)}};
}

MatroidFile MatroidFileFromJson(const Json& j) {
  MatroidFile file;
  file.name = j.is_object() ? j.value("name", std::string("matroid"))
                            : std::string("matroid");
  file.n = Get<int>(j, "n");
  Json repr = Field(j, "repr");
  if (repr.is_object() && !repr.contains("n")) repr["n"] = file.n;
  file.repr = ReprFromJson(repr);
  std::visit(
      [&](auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, BasesRep> ||
                      std::is_same_v<T, CircuitsRep>) {
          if (rep.n != file.n) throw InvalidInput("'n' disagrees with repr");
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          if (rep.cols != file.n) {
            throw InvalidInput("matrix has " + std::to_string(rep.cols) +
                               " columns, expected " + std::to_string(file.n));
          }
        } else {
          if (static_cast<int>(rep.edges.size()) != file.n) {
            throw InvalidInput("graph has " + std::to_string(rep.edges.size()) +
                               " edges, expected " + std::to_string(file.n));
          }
        }
      },
      file.repr);
  return file;
}

MatroidFile ToMatroidFile(const Matroid& m) {
  BasesRep rep;
  rep.n = m.n();
  for (Mask b : m.bases()) rep.bases.push_back(ElementSet(m.n(), b).members());
  return {m.label(), m.n(), std::move(rep)};
}

Json ToJson(const OrderingFile& file) {
  Json j = {{"ordering", file.ordering.seq()}, {"t", file.t}};
  j["parity"] = file.parity ? Json(std::string(ToString(*file.parity)))
                            : Json(nullptr);
  return j;
}

OrderingFile OrderingFileFromJson(const Json& j) {
  OrderingFile file;
  file.ordering = CyclicOrdering(Get<std::vector<int>>(j, "ordering"));
  file.t = j.contains("t") ? Get<int>(j, "t") : 0;
  if (j.contains("parity") && !j.at("parity").is_null()) {
    file.parity = ParityFromString(Get<std::string>(j, "parity"));
  }
  return file;
}

Json ToJson(const FlowerClass& c) {
  Json evidence = Json::array();
  for (const auto& e : c.evidence) {
    evidence.push_back({{"petals", e.petal_indices}, {"lambda", e.lambda}});
  }
  return {{"verdict", std::string(ToString(c.verdict))},
          {"evidence", std::move(evidence)}};
}

Json ToJson(const InflationTrace& trace) {
  Json j;
  j["input"] = ToJson(ToMatroidFile(trace.input));
  j["after_truncation"] = ToJson(ToMatroidFile(trace.after_truncation));
  j["output"] = ToJson(ToMatroidFile(trace.output));
  j["t_in"] = trace.t_in;
  j["t_out"] = trace.t_out;
  j["ordering"] = trace.ordering.seq();
  j["parity_in"] = std::string(ToString(trace.parity_in));
  j["parity_out"] = trace.parity_out
                        ? Json(std::string(ToString(*trace.parity_out)))
                        : Json(nullptr);
  j["merged_cocircuits"] = SetsJson(trace.merged_cocircuit_witnesses);
  j["merged_circuits"] = SetsJson(trace.merged_circuit_witnesses);
  j["checks"] = ToJson(trace.checks);
  return j;
}

Json ToJson(const WindowCertificate& cert) {
  Json windows = Json::array();
  for (const auto& w : cert.windows) {
    Json entry = {{"index", w.index},
                  {"window", w.window.members()},
                  {"circuits", SetsJson(w.circuits)},
                  {"cocircuits", SetsJson(w.cocircuits)}};
    entry["circuit_extra"] =
        w.circuit_extra ? Json(*w.circuit_extra) : Json(nullptr);
    entry["cocircuit_extra"] =
        w.cocircuit_extra ? Json(*w.cocircuit_extra) : Json(nullptr);
    windows.push_back(std::move(entry));
  }
  return {{"t", cert.t},
          {"case", cert.case_tag},
          {"circuit_window_parity", cert.circuit_window_parity},
          {"windows", std::move(windows)},
          {"report", ToJson(cert.report)}};
}

Json ToJson(const VerificationReport& report) {
  Json failures = Json::array();
  Json rows = Json::array();
  for (const auto& r : report.records) {
    Json row = {{"instance", r.instance},
                {"claim", r.claim},
                {"passed", r.passed},
                {"witness", r.witness},
                {"detail", r.detail}};
    if (!r.passed) failures.push_back(row);
    rows.push_back(std::move(row));
  }
  return {{"suite", report.suite},
          {"instances_run", report.instances_run()},
          {"passes", report.passes()},
          {"failures", std::move(failures)},
          {"rows", std::move(rows)},
          {"wall_time_ms", report.wall_time_ms}};
}

VerificationReport ReportFromJson(const Json& j) {
  VerificationReport report;
  report.suite = Get<std::string>(j, "suite");
  report.wall_time_ms = j.value("wall_time_ms", 0.0);
  for (const auto& row : Field(j, "rows")) {
    ClaimRecord rec;
    rec.instance = Get<std::string>(row, "instance");
    rec.claim = Get<std::string>(row, "claim");
    rec.passed = Get<bool>(row, "passed");
    rec.witness = Get<std::vector<std::vector<int>>>(row, "witness");
    rec.detail = row.value("detail", std::string());
    report.records.push_back(std::move(rec));
  }
  if (report.instances_run() != Get<int>(j, "instances_run") ||
      report.passes() != Get<int>(j, "passes") ||
      static_cast<int>(report.failures().size()) !=
          static_cast<int>(Field(j, "failures").size())) {
    throw InvalidInput("report counters disagree with its rows");
  }
  return report;
}

std::string ReportToText(const VerificationReport& report) {
  std::size_t wi = 8, wc = 5;
  for (const auto& r : report.records) {
    wi = std::max(wi, r.instance.size());
    wc = std::max(wc, r.claim.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  out << "suite: " << report.suite << "\n";
  out << pad("instance", wi) << "  " << pad("claim", wc) << "  status  witness\n";
  for (const auto& r : report.records) {
    out << pad(r.instance, wi) << "  " << pad(r.claim, wc) << "  "
        << (r.passed ? "pass  " : "FAIL  ") << "  " << SetsToText(r.witness);
    if (!r.passed && !r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
  out << report.passes() << "/" << report.instances_run() << " passed, "
      << report.failures().size() << " failed\n";
  return out.str();
}

std::string EmitReport(const VerificationReport& report, OutputFormat format) {
  if (format == OutputFormat::kText) return ReportToText(report);
  return ToJson(report).dump(2) + "\n";
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace cyclomat

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

#ifndef CYCLOMAT_IO_H_
#define CYCLOMAT_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cyclomat/connectivity.h"
#include "cyclomat/constructions.h"
#include "cyclomat/cyclic.h"
#include "cyclomat/matroid.h"
#include "cyclomat/report.h"

namespace cyclomat {

using Json = nlohmann::json;

enum class OutputFormat { kJson, kText };

OutputFormat OutputFormatFromString(std::string_view s);

// Matroid files: {"name": ..., "n": ..., "repr": {"kind": ..., ...}}.
//   bases / circuits: {"kind": "bases", "bases": [[0, 1], ...]}
//   linear: {"kind": "linear", "p": 1009, "matrix": [[row], ...]}; a flat
//           row-major "matrix" is accepted together with "rows".
//   graph:  {"kind": "graph", "vertices": 5, "edges": [[0, 1], ...]}
struct MatroidFile {
  std::string name;
  int n = 0;
  MatroidRepr repr;

  Matroid Build() const { return Construct(repr, name); }
};

Json ToJson(const MatroidRepr& repr);
MatroidRepr ReprFromJson(const Json& j);
Json ToJson(const MatroidFile& file);
// Throws InvalidInput on malformed documents.
MatroidFile MatroidFileFromJson(const Json& j);
// The basis representation of an already constructed matroid.
MatroidFile ToMatroidFile(const Matroid& m);

// Ordering files: {"ordering": [...], "t": 3, "parity": "odd"}.
struct OrderingFile {
  CyclicOrdering ordering;
  int t = 0;
  std::optional<Parity> parity;
};

Json ToJson(const OrderingFile& file);
OrderingFile OrderingFileFromJson(const Json& j);

Json ToJson(const FlowerClass& c);
Json ToJson(const InflationTrace& trace);
Json ToJson(const WindowCertificate& cert);

Json ToJson(const VerificationReport& report);
VerificationReport ReportFromJson(const Json& j);

// One row per record, failures carrying their witness sets.
std::string ReportToText(const VerificationReport& report);
std::string EmitReport(const VerificationReport& report, OutputFormat format);

// File helpers; throw InvalidInput if the file cannot be read or parsed.
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace cyclomat

#endif  // CYCLOMAT_IO_H_

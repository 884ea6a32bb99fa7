// Copyright 2026 The Reachkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Instance files.
//
// One document format serves every subcommand. It is read as YAML, so
// both JSON and block-style YAML are accepted; the toolkit itself always
// writes JSON. Every section is optional, but the system fields come as a
// group:
//
//   {
//     "n": 3, "m": 3,
//     "A": [[0, 1, 1], [0, 0, 0], [0, 0, 0]],   // or {"phi": {"U": ..., "d": 2}}
//     "B": "identity",                          // or an n x m array
//     "t0": 0, "t1": 1,
//     "x0": [0, 0, 0], "x1": [1, 0, 0],
//     "setfun": {"v": [...], "M": [[...]], "c": 2},
//     "varsel": {"U": [[...]], "z": [...], "delta": 0},
//     "source": {"U": [[...]], "z": [...], "delta": 0,
//                "dims": {"m": 1, "l": 1, "d": 1, "n": 2}}
//   }
//
// Parse errors are reported as InputError with a "origin:line:column:"
// prefix (1-based).

#ifndef REACHKIT_INSTANCE_IO_H_
#define REACHKIT_INSTANCE_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "reachkit/hardness.h"
#include "reachkit/matcore.h"
#include "reachkit/solvers.h"
#include "reachkit/sysmodel.h"

namespace reachkit {

struct SetFunctionSpec {
  Vector v;
  Matrix m;
  double c = 2.0;

  bool operator==(const SetFunctionSpec& other) const;
};

struct HardnessSource {
  VarSelInstance inst;
  HardnessDims dims;

  bool operator==(const HardnessSource&) const = default;
};

struct InstanceFile {
  std::optional<LinearSystem> system;
  std::optional<SetFunctionSpec> setfun;
  std::optional<VarSelInstance> varsel;
  std::optional<HardnessSource> source;

  bool operator==(const InstanceFile&) const = default;
};

InstanceFile ParseInstance(std::string_view text,
                           std::string_view origin = "<input>");
InstanceFile LoadInstance(const std::filesystem::path& path);

// Pretty-printed JSON. Doubles are written in shortest round-trip form, so
// ParseInstance(SerializeInstance(f)) == f.
std::string SerializeInstance(const InstanceFile& file);
void SaveInstance(const InstanceFile& file, const std::filesystem::path& path);

// A file holding just a matrix: either a bare array of rows or a mapping
// with a "U" entry.
Matrix LoadMatrix(const std::filesystem::path& path);

// Bundles system, source and a matching varsel section.
InstanceFile ToInstanceFile(const HardInstance& inst);
// Throws InputError unless the file has both a system and a source section
// forming a valid hard instance.
HardInstance ToHardInstance(const InstanceFile& file);

}  // namespace reachkit

#endif  // REACHKIT_INSTANCE_IO_H_

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

#include "reachkit/instance_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "json.hpp"
#include "reachkit/errors.h"

namespace reachkit {

namespace {

using json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::string_view origin) : origin_(origin) {}

  [[noreturn]] void Fail(const YAML::Mark& mark,
                         const std::string& message) const {
    std::ostringstream out;
    out << origin_;
    if (!mark.is_null()) out << ':' << mark.line + 1 << ':' << mark.column + 1;
    out << ": " << message;
    throw InputError(out.str());
  }

  YAML::Node Require(const YAML::Node& map, const char* key) const {
    YAML::Node child = map[key];
    if (!child) Fail(map.Mark(), std::string("missing field \"") + key + "\"");
    return child;
  }

  double Number(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) Fail(node.Mark(), what + " must be a number");
    double value = 0.0;
    if (!YAML::convert<double>::decode(node, value) || !std::isfinite(value)) {
      Fail(node.Mark(), what + " must be a finite number, got \"" +
                            node.Scalar() + "\"");
    }
    return value;
  }

  int Integer(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) Fail(node.Mark(), what + " must be an integer");
    int value = 0;
    if (!YAML::convert<int>::decode(node, value)) {
      Fail(node.Mark(), what + " must be an integer, got \"" + node.Scalar() +
                            "\"");
    }
    return value;
  }

  Vector Vec(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence() || node.size() == 0) {
      Fail(node.Mark(), what + " must be a non-empty array of numbers");
    }
    Vector v(node.size());
    for (size_t i = 0; i < node.size(); ++i) {
      v(i) = Number(node[i], what + "[" + std::to_string(i) + "]");
    }
    return v;
  }

  Matrix Mat(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence() || node.size() == 0) {
      Fail(node.Mark(), what + " must be a non-empty array of rows");
    }
    size_t cols = 0;
    Matrix m;
    for (size_t r = 0; r < node.size(); ++r) {
      const Vector row = Vec(node[r], what + " row " + std::to_string(r + 1));
      if (r == 0) {
        cols = row.size();
        m.resize(node.size(), cols);
      } else if (static_cast<size_t>(row.size()) != cols) {
        Fail(node[r].Mark(), what + " row " + std::to_string(r + 1) +
                                 " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(cols));
      }
      m.row(r) = row.transpose();
    }
    return m;
  }

  LinearSystem System(const YAML::Node& root) const {
    LinearSystem sys;
    const int n = Integer(Require(root, "n"), "n");
    if (n < 1) Fail(root["n"].Mark(), "n must be positive");

    const YAML::Node a = Require(root, "A");
    if (a.IsMap()) {
      const YAML::Node phi = Require(a, "phi");
      const Matrix u = Mat(Require(phi, "U"), "A.phi.U");
      const int d = Integer(Require(phi, "d"), "A.phi.d");
      try {
        sys.a = Phi(u, n, d);
      } catch (const InputError& e) {
        Fail(phi.Mark(), e.what());
      }
    } else {
      sys.a = Mat(a, "A");
    }
    if (sys.a.rows() != n || sys.a.cols() != n) {
      Fail(a.Mark(), "A must be " + std::to_string(n) + "x" +
                         std::to_string(n));
    }

    const YAML::Node b = Require(root, "B");
    if (b.IsScalar() && b.Scalar() == "identity") {
      sys.b = Matrix::Identity(n, n);
    } else {
      sys.b = Mat(b, "B");
      if (sys.b.rows() != n) {
        Fail(b.Mark(), "B must have " + std::to_string(n) + " rows");
      }
    }
    if (const YAML::Node m = root["m"]) {
      if (Integer(m, "m") != sys.b.cols()) {
        Fail(m.Mark(), "m = " + m.Scalar() + " does not match B's " +
                           std::to_string(sys.b.cols()) + " columns");
      }
    }

    sys.t0 = Number(Require(root, "t0"), "t0");
    sys.t1 = Number(Require(root, "t1"), "t1");
    if (!(sys.t1 > sys.t0)) Fail(root["t1"].Mark(), "need t1 > t0");
    const YAML::Node x0 = Require(root, "x0");
    const YAML::Node x1 = Require(root, "x1");
    sys.x0 = Vec(x0, "x0");
    sys.x1 = Vec(x1, "x1");
    if (sys.x0.size() != n) {
      Fail(x0.Mark(), "x0 must have " + std::to_string(n) + " entries");
    }
    if (sys.x1.size() != n) {
      Fail(x1.Mark(), "x1 must have " + std::to_string(n) + " entries");
    }
    return sys;
  }

  SetFunctionSpec SetFun(const YAML::Node& node) const {
    SetFunctionSpec spec;
    spec.v = Vec(Require(node, "v"), "setfun.v");
    spec.m = Mat(Require(node, "M"), "setfun.M");
    if (spec.m.rows() != spec.v.size()) {
      Fail(node["M"].Mark(), "setfun.M must have as many rows as v");
    }
    if (const YAML::Node c = node["c"]) {
      spec.c = Number(c, "setfun.c");
      if (!(spec.c > 0.0)) Fail(c.Mark(), "setfun.c must be positive");
    }
    return spec;
  }

  VarSelInstance VarSel(const YAML::Node& node, const std::string& section)
      const {
    VarSelInstance inst;
    inst.u = Mat(Require(node, "U"), section + ".U");
    inst.z = Vec(Require(node, "z"), section + ".z");
    if (inst.z.size() != inst.u.rows()) {
      Fail(node["z"].Mark(), section + ".z must have as many entries as U "
                                       "has rows");
    }
    if (const YAML::Node delta = node["delta"]) {
      inst.delta = Number(delta, section + ".delta");
      if (inst.delta < 0.0) Fail(delta.Mark(), "delta must be non-negative");
    }
    return inst;
  }

  HardnessSource Source(const YAML::Node& node) const {
    HardnessSource source;
    source.inst = VarSel(node, "source");
    const YAML::Node dims = Require(node, "dims");
    source.dims.m = Integer(Require(dims, "m"), "dims.m");
    source.dims.l = Integer(Require(dims, "l"), "dims.l");
    source.dims.d = Integer(Require(dims, "d"), "dims.d");
    source.dims.n = Integer(Require(dims, "n"), "dims.n");
    return source;
  }

 private:
  std::string origin_;
};

json MatrixJson(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json VectorJson(const Vector& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

json VarSelJson(const VarSelInstance& inst) {
  return {{"U", MatrixJson(inst.u)},
          {"z", VectorJson(inst.z)},
          {"delta", inst.delta}};
}

// Like json::dump(2), but arrays of scalars stay on one line so matrices
// read as one row per line.
void PrettyPrint(const json& value, int indent, std::ostream& out) {
  const auto is_scalar = [](const json& v) { return !v.is_structured(); };
  const std::string pad(indent + 2, ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, child] : value.items()) {
      if (!first) out << ",\n";
      first = false;
      out << pad << json(key).dump() << ": ";
      PrettyPrint(child, indent + 2, out);
    }
    out << '\n' << std::string(indent, ' ') << '}';
  } else if (value.is_array() &&
             !std::all_of(value.begin(), value.end(), is_scalar)) {
    out << "[\n";
    for (size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out << ",\n";
      out << pad;
      PrettyPrint(value[i], indent + 2, out);
    }
    out << '\n' << std::string(indent, ' ') << ']';
  } else {
    out << value.dump();
  }
}

}  // namespace

bool SetFunctionSpec::operator==(const SetFunctionSpec& other) const {
  return v.size() == other.v.size() && m.rows() == other.m.rows() &&
         m.cols() == other.m.cols() && v == other.v && m == other.m &&
         c == other.c;
}

InstanceFile ParseInstance(std::string_view text, std::string_view origin) {
  Reader reader(origin);
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    reader.Fail(e.mark, e.msg);
  }
  if (!root.IsMap()) reader.Fail(root.Mark(), "expected a mapping at top level");

  InstanceFile file;
  try {
    if (root["A"] || root["n"]) file.system = reader.System(root);
    if (const YAML::Node s = root["setfun"]) file.setfun = reader.SetFun(s);
    if (const YAML::Node v = root["varsel"]) {
      file.varsel = reader.VarSel(v, "varsel");
    }
    if (const YAML::Node s = root["source"]) file.source = reader.Source(s);
  } catch (const YAML::Exception& e) {
    reader.Fail(e.mark, e.msg);
  }
  if (!file.system && !file.setfun && !file.varsel) {
    reader.Fail(root.Mark(), "document has no system, setfun or varsel section");
  }
  return file;
}

InstanceFile LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseInstance(text.str(), path.string());
}

std::string SerializeInstance(const InstanceFile& file) {
  json doc = json::object();
  if (file.system) {
    const LinearSystem& sys = *file.system;
    doc["n"] = sys.n();
    doc["m"] = sys.m();
    doc["A"] = MatrixJson(sys.a);
    if (sys.b.rows() == sys.b.cols() && sys.b.isIdentity(0.0)) {
      doc["B"] = "identity";
    } else {
      doc["B"] = MatrixJson(sys.b);
    }
    doc["t0"] = sys.t0;
    doc["t1"] = sys.t1;
    doc["x0"] = VectorJson(sys.x0);
    doc["x1"] = VectorJson(sys.x1);
  }
  if (file.setfun) {
    doc["setfun"] = {{"v", VectorJson(file.setfun->v)},
                     {"M", MatrixJson(file.setfun->m)},
                     {"c", file.setfun->c}};
  }
  if (file.varsel) doc["varsel"] = VarSelJson(*file.varsel);
  if (file.source) {
    json source = VarSelJson(file.source->inst);
    const HardnessDims& dims = file.source->dims;
    source["dims"] = {{"m", dims.m}, {"l", dims.l}, {"d", dims.d},
                      {"n", dims.n}};
    doc["source"] = std::move(source);
  }
  std::ostringstream out;
  PrettyPrint(doc, 0, out);
  out << '\n';
  return out.str();
}

void SaveInstance(const InstanceFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot open for writing");
  out << SerializeInstance(file);
  if (!out) throw InputError(path.string() + ": write failed");
}

Matrix LoadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  Reader reader(path.string());
  YAML::Node root;
  try {
    root = YAML::Load(text.str());
  } catch (const YAML::ParserException& e) {
    reader.Fail(e.mark, e.msg);
  }
  if (root.IsMap()) return reader.Mat(reader.Require(root, "U"), "U");
  return reader.Mat(root, "matrix");
}

InstanceFile ToInstanceFile(const HardInstance& inst) {
  InstanceFile file;
  file.system = inst.sys;
  file.varsel = inst.source;
  file.source = HardnessSource{inst.source, inst.dims};
  return file;
}

HardInstance ToHardInstance(const InstanceFile& file) {
  if (!file.system || !file.source) {
    throw InputError("file needs both a system and a source section");
  }
  HardInstance inst{*file.system, file.source->inst, file.source->dims};
  inst.Validate();
  return inst;
}

}  // namespace reachkit

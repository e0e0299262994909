#include "altalg/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace altalg {

namespace {

Scalar scalar_from_json(const json& j, const Field& f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  throw UsageError("scalar must be a string or an integer, got " + j.dump());
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= dim) {
    throw UsageError(std::string(what) + " index out of range: " + j.dump());
  }
  return static_cast<std::size_t>(j.get<long long>());
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_prime()) return json{{"kind", "prime"}, {"p", f.modulus()}};
  return json{{"kind", "rational"}};
}

Field field_from_json(const json& j) {
  const auto& kind = member(j, "kind");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    const auto& p = member(j, "p");
    if (!p.is_number_integer() || p.get<long long>() < 2) throw UsageError("field.p must be an integer prime");
    return Field::prime(p.get<std::uint64_t>());
  }
  throw UsageError("field.kind must be \"rational\" or \"prime\"");
}

json element_to_json(const Element& e) {
  json out = json::array();
  for (const auto& s : e.coords()) out.push_back(s.to_string());
  return out;
}

Element element_from_json(const json& j, const Algebra& a) {
  if (!j.is_array()) throw UsageError("element must be a JSON array of scalar strings");
  if (j.size() != a.dim()) {
    throw UsageError("element has " + std::to_string(j.size()) + " coordinates, algebra has dimension " + std::to_string(a.dim()));
  }
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, a.field()));
  return Element(std::move(v));
}

json algebra_to_json(const Algebra& a) {
  json out;
  out["name"] = a.name();
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  out["basis"] = a.labels();
  if (a.unit()) out["unit"] = element_to_json(*a.unit());
  json st = json::array();
  for (const auto& e : a.entries()) st.push_back(json::array({e.i, e.j, e.k, e.coeff.to_string()}));
  out["structure"] = std::move(st);
  if (!a.comment().empty()) out["comment"] = a.comment();
  return out;
}

Algebra algebra_from_json(const json& j) {
  try {
    const Field f = field_from_json(member(j, "field"));
    const auto& dim_j = member(j, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long long>() < 0) throw UsageError("dim must be a non-negative integer");
    const auto n = dim_j.get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis")) {
      labels = j.at("basis").get<std::vector<std::string>>();
      if (labels.size() != n) throw UsageError("basis has " + std::to_string(labels.size()) + " labels, dim is " + std::to_string(n));
    } else {
      for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    }
    std::vector<StructureEntry> entries;
    for (const auto& row : member(j, "structure")) {
      if (!row.is_array() || row.size() != 4) throw UsageError("structure entries must be [i, j, k, scalar]");
      entries.push_back({index_from_json(row[0], n, "structure"), index_from_json(row[1], n, "structure"),
                         index_from_json(row[2], n, "structure"), scalar_from_json(row[3], f)});
    }
    std::optional<Element> unit;
    if (j.contains("unit")) {
      const auto& u = j.at("unit");
      if (u.size() != n) throw UsageError("unit has wrong length");
      Vec v;
      for (const auto& x : u) v.push_back(scalar_from_json(x, f));
      unit = Element(std::move(v));
    }
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("algebra");
    const std::string comment = j.contains("comment") ? j.at("comment").get<std::string>() : std::string();
    return Algebra(name, f, std::move(labels), std::move(entries), std::move(unit), comment);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed algebra: ") + e.what());
  }
}

json map_to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.matrix()(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"matrix", std::move(rows)}};
}

LinearMap map_from_json(const json& j, const Algebra& a) {
  try {
    const auto n = member(j, "dim").get<std::size_t>();
    if (n != a.dim()) throw UsageError("map has dimension " + std::to_string(n) + ", algebra has dimension " + std::to_string(a.dim()));
    const auto& rows = member(j, "matrix");
    if (!rows.is_array() || rows.size() != n) throw UsageError("map matrix must have dim rows");
    Matrix m(a.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) throw UsageError("map matrix row " + std::to_string(r) + " must have dim entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(rows[r][c], a.field());
    }
    return LinearMap(std::move(m));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed map: ") + e.what());
  }
}

json decomposition_to_json(const Decomposition& d) {
  json out{{"z", element_to_json(d.z)},
           {"z1", element_to_json(d.z1)},
           {"z2", element_to_json(d.z2)},
           {"xi", map_to_json(d.xi)},
           {"verified", d.verified}};
  if (d.failure) out["failure"] = *d.failure;
  return out;
}

json witness_to_json(const Witness& w) {
  json elems = json::object();
  for (const auto& [name, e] : w.elements) elems[name] = element_to_json(e);
  return json{{"description", w.description}, {"elements", std::move(elems)}};
}

json check_to_json(const CheckRecord& c) {
  json out{{"check", c.check}, {"pass", c.pass}};
  if (c.witness) out["witness"] = witness_to_json(*c.witness);
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (c.instances > 0) out["instances"] = c.instances;
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

namespace {

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

void dump_into(std::string& out, const json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(k).dump() + ": ";
      dump_into(out, v, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ",\n";
      out += pad;
      dump_into(out, j[i], indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i > 0 ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_into(out, j, 0);
  return out;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << dump_json(j) << '\n';
}

Algebra read_algebra(const std::string& path) { return algebra_from_json(read_json(path)); }

LinearMap read_map(const std::string& path, const Algebra& a) { return map_from_json(read_json(path), a); }

Element parse_element(const std::string& spec, const Algebra& a) {
  if (auto idx = a.label_index(spec)) return a.basis(*idx);
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return element_from_json(read_json(spec), a);
  Vec v;
  std::string tok;
  std::istringstream ss(spec);
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty coordinate in element \"" + spec + "\"");
    v.push_back(Scalar::parse(a.field(), tok.substr(b, e - b + 1)));
  }
  if (v.size() != a.dim()) {
    throw UsageError("element \"" + spec + "\" is neither a basis label, a file, nor " + std::to_string(a.dim()) + " scalars");
  }
  return Element(std::move(v));
}

}  // namespace altalg

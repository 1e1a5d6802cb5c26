#include "halg/io.hpp"

#include <cctype>
#include <fstream>

namespace halg {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

std::string need_string(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw ParseError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

std::size_t need_size(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::string> labels_from_json(const json& j, std::size_t dim) {
  std::vector<std::string> out;
  if (!j.contains("labels")) return out;
  const json& l = j.at("labels");
  if (!l.is_array() || l.size() != dim) {
    throw ParseError("labels must be an array of length dim");
  }
  for (const auto& x : l) out.push_back(x.get<std::string>());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      if (out[i] == out[k]) throw ParseError("duplicate label '" + out[i] + "'");
    }
  }
  return out;
}

}  // namespace

FieldSpec parse_field_name(const std::string& name) {
  if (name == "Q" || name == "q") return FieldSpec::rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        throw ParseError("unknown field '" + name + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    return FieldSpec::prime(p);
  }
  throw ParseError("unknown field '" + name + "'");
}

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
  std::string kind = need_string(j, "kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") return FieldSpec::prime(need_size(j, "p"));
  throw ParseError("unknown field kind '" + kind + "'");
}

json matrix_to_json(const LinearMap& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).str());
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

LinearMap matrix_from_json(const json& j, const FieldSpec& f) {
  std::size_t rows = need_size(j, "rows"), cols = need_size(j, "cols");
  const json& entries = need(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ParseError("matrix entries must be an array of rows*cols strings");
  }
  LinearMap m(rows, cols, f);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t jj = 0; jj < cols; ++jj, ++k) {
      if (!entries[k].is_string()) throw ParseError("matrix entry must be a string");
      m.set(i, jj, Scalar::parse(f, entries[k].get<std::string>()));
    }
  }
  return m;
}

json group_table_to_json(const GroupTable& g) {
  json table = json::array();
  for (const auto& row : g.table) table.push_back(row);
  return json{{"order", g.order}, {"table", table}, {"labels", g.labels}};
}

GroupTable group_table_from_json(const json& j) {
  std::size_t order = need_size(j, "order");
  const json& table = need(j, "table");
  if (!table.is_array() || table.size() != order) {
    throw ParseError("table must be an order x order array");
  }
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != order) {
      throw ParseError("table must be an order x order array");
    }
    std::vector<std::size_t> out_row;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError("table entries must be element indices");
      }
      out_row.push_back(v.get<std::size_t>());
    }
    rows.push_back(std::move(out_row));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  }
  return GroupTable::from_table(std::move(rows), std::move(labels));
}

GroupTable load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return group_table_from_json(j);
}

json report_to_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& e : r.entries()) {
    json je{{"axiom", e.axiom},
            {"pass", e.pass},
            {"checked", e.checked},
            {"failed", e.failed}};
    if (e.witness) {
      je["witness"] = json{{"index", e.witness->index},
                           {"lhs", e.witness->lhs},
                           {"rhs", e.witness->rhs}};
    }
    out.push_back(je);
  }
  return out;
}

namespace {

json coalgebra_to_json(const Coalgebra& c) {
  json j{{"type", "coalgebra"},
         {"dim", c.dim()},
         {"delta", matrix_to_json(c.delta)},
         {"epsilon", matrix_to_json(c.epsilon)}};
  if (!c.space.labels.empty()) j["labels"] = c.space.labels;
  return j;
}

Coalgebra coalgebra_from_json(const json& j, const FieldSpec& f) {
  std::size_t dim = need_size(j, "dim");
  Coalgebra c{VectorSpace{dim, f, labels_from_json(j, dim)},
              matrix_from_json(need(j, "delta"), f),
              matrix_from_json(need(j, "epsilon"), f)};
  require_coalgebra_shapes(c);
  return c;
}

json algebra_to_json(const Algebra& a) {
  json j{{"type", "algebra"},
         {"dim", a.dim()},
         {"mul", matrix_to_json(a.mul)},
         {"unit", matrix_to_json(a.unit)}};
  if (!a.space.labels.empty()) j["labels"] = a.space.labels;
  return j;
}

Algebra algebra_from_json(const json& j, const FieldSpec& f) {
  std::size_t dim = need_size(j, "dim");
  Algebra a{VectorSpace{dim, f, labels_from_json(j, dim)},
            matrix_from_json(need(j, "mul"), f),
            matrix_from_json(need(j, "unit"), f)};
  require_algebra_shapes(a);
  return a;
}

json hopf_to_json(const HopfAlgebra& h) {
  json j{{"type", "hopf"},
         {"dim", h.dim()},
         {"mul", matrix_to_json(h.mul())},
         {"unit", matrix_to_json(h.unit())},
         {"delta", matrix_to_json(h.delta())},
         {"epsilon", matrix_to_json(h.epsilon())},
         {"antipode", matrix_to_json(h.antipode)}};
  if (!h.space().labels.empty()) j["labels"] = h.space().labels;
  return j;
}

HopfAlgebra hopf_from_json(const json& j, const FieldSpec& f) {
  std::size_t dim = need_size(j, "dim");
  VectorSpace space{dim, f, labels_from_json(j, dim)};
  Bialgebra b{Algebra{space, matrix_from_json(need(j, "mul"), f),
                      matrix_from_json(need(j, "unit"), f)},
              Coalgebra{space, matrix_from_json(need(j, "delta"), f),
                        matrix_from_json(need(j, "epsilon"), f)}};
  require_algebra_shapes(b.alg);
  require_coalgebra_shapes(b.coalg);
  if (j.contains("antipode")) {
    LinearMap s = matrix_from_json(j.at("antipode"), f);
    if (s.rows() != dim || s.cols() != dim) {
      throw ParseError("antipode must be dim x dim");
    }
    return HopfAlgebra{b, s};
  }
  try {
    auto h = compute_antipode(b);
    if (!h) throw ParseError("bialgebra has no antipode; supply one explicitly");
    return *h;
  } catch (const NotABialgebra&) {
    throw ParseError(
        "hopf object without antipode fails the bialgebra axioms; supply an "
        "antipode to run diagnostics");
  }
}

json object_to_json(const BundleObject& o) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HopfAlgebra>) {
          return hopf_to_json(v);
        } else if constexpr (std::is_same_v<T, Coalgebra>) {
          return coalgebra_to_json(v);
        } else if constexpr (std::is_same_v<T, Algebra>) {
          return algebra_to_json(v);
        } else if constexpr (std::is_same_v<T, ActionObj>) {
          return json{{"type", "action"},       {"coalgebra", v.coalgebra},
                      {"hopf", v.hopf},         {"c_dim", v.map.c_dim},
                      {"h_dim", v.map.h_dim},   {"matrix", matrix_to_json(v.map.map)}};
        } else if constexpr (std::is_same_v<T, DualActionObj>) {
          return json{{"type", "dual_action"},  {"algebra", v.algebra},
                      {"hopf", v.hopf},         {"h_dim", v.map.h_dim},
                      {"a_dim", v.map.a_dim},   {"matrix", matrix_to_json(v.map.map)}};
        } else if constexpr (std::is_same_v<T, CoactionObj>) {
          return json{{"type", "coaction"},     {"coalgebra", v.coalgebra},
                      {"hopf", v.hopf},         {"h_dim", v.map.h_dim},
                      {"c_dim", v.map.c_dim},   {"matrix", matrix_to_json(v.map.map)}};
        } else {
          return json{{"type", "map"},
                      {"from", v.from},
                      {"to", v.to},
                      {"matrix", matrix_to_json(v.map)}};
        }
      },
      o);
}

BundleObject object_from_json(const json& j, const FieldSpec& f) {
  std::string type = need_string(j, "type");
  if (type == "hopf") return hopf_from_json(j, f);
  if (type == "coalgebra") return coalgebra_from_json(j, f);
  if (type == "algebra") return algebra_from_json(j, f);
  if (type == "action") {
    ActionObj a;
    a.coalgebra = need_string(j, "coalgebra");
    a.hopf = need_string(j, "hopf");
    a.map.c_dim = need_size(j, "c_dim");
    a.map.h_dim = need_size(j, "h_dim");
    a.map.map = matrix_from_json(need(j, "matrix"), f);
    if (a.map.map.rows() != a.map.c_dim ||
        a.map.map.cols() != a.map.c_dim * a.map.h_dim) {
      throw ParseError("action matrix must be c_dim x (c_dim*h_dim)");
    }
    return a;
  }
  if (type == "dual_action") {
    DualActionObj a;
    a.algebra = need_string(j, "algebra");
    a.hopf = need_string(j, "hopf");
    a.map.h_dim = need_size(j, "h_dim");
    a.map.a_dim = need_size(j, "a_dim");
    a.map.map = matrix_from_json(need(j, "matrix"), f);
    if (a.map.map.rows() != a.map.a_dim ||
        a.map.map.cols() != a.map.h_dim * a.map.a_dim) {
      throw ParseError("dual action matrix must be a_dim x (h_dim*a_dim)");
    }
    return a;
  }
  if (type == "coaction") {
    CoactionObj a;
    a.coalgebra = need_string(j, "coalgebra");
    a.hopf = need_string(j, "hopf");
    a.map.h_dim = need_size(j, "h_dim");
    a.map.c_dim = need_size(j, "c_dim");
    a.map.map = matrix_from_json(need(j, "matrix"), f);
    if (a.map.map.rows() != a.map.h_dim * a.map.c_dim ||
        a.map.map.cols() != a.map.c_dim) {
      throw ParseError("coaction matrix must be (h_dim*c_dim) x c_dim");
    }
    return a;
  }
  if (type == "map") {
    MapObj mo;
    mo.from = need_string(j, "from");
    mo.to = need_string(j, "to");
    mo.map = matrix_from_json(need(j, "matrix"), f);
    return mo;
  }
  throw ParseError("unknown object type '" + type + "'");
}

template <class T>
const T& get_typed(const Bundle& b, const std::string& name, const char* what) {
  auto it = b.objects.find(name);
  if (it == b.objects.end()) {
    throw ParseError("bundle has no object named '" + name + "'");
  }
  const T* p = std::get_if<T>(&it->second);
  if (!p) {
    throw ParseError("object '" + name + "' is not a " + std::string(what));
  }
  return *p;
}

}  // namespace

const HopfAlgebra& Bundle::hopf(const std::string& n) const {
  return get_typed<HopfAlgebra>(*this, n, "hopf algebra");
}
const Coalgebra& Bundle::coalgebra(const std::string& n) const {
  return get_typed<Coalgebra>(*this, n, "coalgebra");
}
const Algebra& Bundle::algebra(const std::string& n) const {
  return get_typed<Algebra>(*this, n, "algebra");
}
const ActionObj& Bundle::action(const std::string& n) const {
  return get_typed<ActionObj>(*this, n, "action");
}
const DualActionObj& Bundle::dual_action(const std::string& n) const {
  return get_typed<DualActionObj>(*this, n, "dual action");
}
const CoactionObj& Bundle::coaction(const std::string& n) const {
  return get_typed<CoactionObj>(*this, n, "coaction");
}
const MapObj& Bundle::linear_map(const std::string& n) const {
  return get_typed<MapObj>(*this, n, "linear map");
}

json bundle_to_json(const Bundle& b) {
  json objects = json::object();
  for (const auto& [name, obj] : b.objects) objects[name] = object_to_json(obj);
  return json{{"version", "1"},
              {"field", field_to_json(b.field)},
              {"objects", objects},
              {"metadata", b.metadata}};
}

Bundle bundle_from_json(const json& j) {
  if (need_string(j, "version") != "1") {
    throw ParseError("unsupported bundle version");
  }
  Bundle b;
  b.field = field_from_json(need(j, "field"));
  const json& objects = need(j, "objects");
  if (!objects.is_object()) throw ParseError("objects must be an object");
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    b.objects.emplace(it.key(), object_from_json(it.value(), b.field));
  }
  if (j.contains("metadata")) b.metadata = j.at("metadata");
  return b;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

Bundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return bundle_from_json(j);
}

void write_bundle_file(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << canonical_dump(bundle_to_json(b));
}

}  // namespace halg

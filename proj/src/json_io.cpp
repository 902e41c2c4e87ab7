#include "plesken/json_io.hpp"

#include <fstream>
#include <sstream>

namespace plesken::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadJson", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::string> labels_from(const Json& j) {
  std::vector<std::string> labels;
  if (!j.contains("labels")) return labels;
  const Json& l = j.at("labels");
  if (!l.is_array()) bad("'labels' must be an array");
  for (const auto& s : l) {
    if (!s.is_string()) bad("labels must be strings");
    labels.push_back(s.get<std::string>());
  }
  return labels;
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("scalar must be a string such as \"3/2+1/2*I\"");
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a nested array (matrix)");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) bad("matrix rows have different lengths");
  }
  return Matrix::from_rows(rows);
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["table"] = g.table();
  j["labels"] = g.labels();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const Json& t = field(j, "table");
  if (!t.is_array()) bad("'table' must be an array of rows");
  FiniteGroup::Table table;
  for (const auto& row : t) {
    if (!row.is_array()) bad("'table' rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0) bad("table entries must be non-negative integers");
      r.push_back(x.get<std::size_t>());
    }
    table.push_back(std::move(r));
  }
  FiniteGroup g = from_cayley_table(std::move(table), labels_from(j));
  if (j.contains("order") && size_field(j, "order") != g.order()) bad("'order' does not match the table");
  if (j.contains("identity") && size_field(j, "identity") != g.identity()) {
    bad("'identity' does not match the table");
  }
  return g;
}

Json algebra_to_json(const LieAlgebra& L) {
  Json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const Vector& c = L.structure()[pair_index(L.dim(), i, k)];
      if (is_zero(c)) continue;
      Json e;
      e["i"] = i;
      e["j"] = k;
      e["c"] = to_json(c);
      brackets.push_back(std::move(e));
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const Json& b = j.at("brackets");
    if (!b.is_array()) bad("'brackets' must be an array");
    for (const auto& e : b) entries.push_back({size_field(e, "i"), size_field(e, "j"), vector_from_json(field(e, "c"))});
  }
  return from_structure_constants(dim, entries, labels_from(j));
}

Json form_to_json(const BilinearForm& a) {
  Json j;
  j["dim"] = a.dim();
  Json upper = Json::array();
  for (std::size_t i = 0; i + 1 < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = i + 1; k < a.dim(); ++k) row.push_back(a(i, k).str());
    upper.push_back(std::move(row));
  }
  j["upper"] = std::move(upper);
  return j;
}

BilinearForm form_from_json(const Json& j) {
  const std::size_t n = size_field(j, "dim");
  const Json& u = field(j, "upper");
  if (!u.is_array()) bad("'upper' must be an array");
  Vector flat;
  if (!u.empty() && u.front().is_array()) {
    if (u.size() != (n == 0 ? 0 : n - 1)) bad("'upper' must have dim-1 rows");
    for (std::size_t i = 0; i < u.size(); ++i) {
      Vector row = vector_from_json(u[i]);
      if (row.size() != n - 1 - i) bad("row " + std::to_string(i) + " of 'upper' must have dim-1-i entries");
      flat.insert(flat.end(), row.begin(), row.end());
    }
  } else {
    flat = vector_from_json(u);
  }
  return BilinearForm::from_upper(n, flat);
}

Json functional_to_json(const LinearFunctional& f) {
  Json j;
  j["v"] = to_json(f.values);
  return j;
}

LinearFunctional functional_from_json(const Json& j) { return {vector_from_json(field(j, "v"))}; }

Json extension_to_json(const CentralExtension& e) {
  Json j;
  j["base"] = algebra_to_json(e.base);
  j["total"] = algebra_to_json(e.total);
  j["f"] = to_json(e.injection);
  j["g"] = to_json(e.projection);
  if (e.section) j["s"] = to_json(*e.section);
  return j;
}

CentralExtension extension_from_json(const Json& j) {
  CentralExtension e;
  e.base = algebra_from_json(field(j, "base"));
  e.total = algebra_from_json(field(j, "total"));
  e.injection = vector_from_json(field(j, "f"));
  const std::size_t n = e.base.dim();
  e.projection = field(j, "g").empty() ? Matrix(0, n + 1) : matrix_from_json(field(j, "g"));
  if (j.contains("s")) e.section = j.at("s").empty() ? Matrix(n + 1, 0) : matrix_from_json(j.at("s"));
  if (e.injection.size() != n + 1) bad("'f' must have length dim(base)+1");
  if (e.projection.rows() != n || e.projection.cols() != n + 1) bad("'g' must be dim(base) x dim(total)");
  if (e.section && (e.section->rows() != n + 1 || e.section->cols() != n)) bad("'s' must be dim(total) x dim(base)");
  return e;
}

Json rep_to_json(const ProjectiveRep& r) {
  Json j;
  j["dim"] = r.matrices.size();
  j["degree"] = r.degree();
  Json mats = Json::array();
  for (const auto& m : r.matrices) mats.push_back(to_json(m));
  j["matrices"] = std::move(mats);
  if (r.cocycle) j["alpha"] = form_to_json(*r.cocycle);
  return j;
}

ProjectiveRep rep_from_json(const Json& j, const LieAlgebra& L) {
  const std::size_t dim = size_field(j, "dim");
  const std::size_t degree = size_field(j, "degree");
  if (dim != L.dim()) bad("'dim' does not match the algebra");
  const Json& mats = field(j, "matrices");
  if (!mats.is_array() || mats.size() != dim) bad("'matrices' must hold one matrix per basis vector");
  ProjectiveRep r{L, {}, std::nullopt};
  for (const auto& m : mats) {
    Matrix mat = matrix_from_json(m);
    if (mat.rows() != degree || mat.cols() != degree) bad("every matrix must be degree x degree");
    r.matrices.push_back(std::move(mat));
  }
  check_rep_shape(L, r.matrices);
  if (j.contains("alpha") && !j.at("alpha").is_null()) r.cocycle = form_from_json(j.at("alpha"));
  return r;
}

Json matrix_file_to_json(const Matrix& m) {
  Json j;
  j["matrix"] = to_json(m);
  return j;
}

Matrix matrix_file_from_json(const Json& j) {
  if (j.is_array()) return matrix_from_json(j);
  return matrix_from_json(field(j, "matrix"));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'", {{"path", path}});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write '" + path + "'", {{"path", path}});
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace plesken::io

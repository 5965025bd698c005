#include "rankcodes/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rankcodes {

namespace {

json bigint_to_json(const bigint& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json counts_to_json(const std::vector<bigint>& counts) {
  json arr = json::array();
  for (const auto& c : counts) arr.push_back(bigint_to_json(c));
  return arr;
}

}  // namespace

json field_to_json(const Field& f) {
  json j;
  j["q"] = f.characteristic();
  j["m"] = f.degree();
  j["modulus"] = f.modulus();  // low-to-high; empty for prime fields
  return j;
}

FieldPtr field_from_json(const json& j) {
  const std::uint32_t q = j.at("q").get<std::uint32_t>();
  const std::uint32_t m = j.at("m").get<std::uint32_t>();
  if (m == 1) return Field::prime(q);
  if (j.contains("modulus") && !j["modulus"].empty())
    return Field::extension(q, m, j["modulus"].get<std::vector<std::uint32_t>>());
  return Field::extension(q, m);
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = j[i][c].get<std::uint64_t>();
      if (v >= f->size())
        throw std::invalid_argument("matrix: element out of field range");
      m.at(i, c) = static_cast<gfelem>(v);
    }
  }
  return m;
}

json code_to_json(const MatrixCode& c) {
  json j;
  j["kind"] = "matrix";
  j["field"] = field_to_json(*c.field());
  j["n"] = c.n();
  j["m"] = c.m();
  j["basis"] = mat_to_json(c.basis());
  return j;
}

json code_to_json(const VectorCode& c) {
  json j;
  j["kind"] = "vector";
  j["field"] = field_to_json(*c.field());
  j["n"] = c.n();
  j["m"] = c.m();
  j["generator"] = mat_to_json(c.generator());
  return j;
}

json code_to_json(const AnyCode& c) {
  return std::visit([](const auto& x) { return code_to_json(x); }, c);
}

AnyCode code_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  FieldPtr f = field_from_json(j.at("field"));
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t m = j.at("m").get<std::size_t>();
  if (kind == "matrix") {
    if (f->degree() != 1)
      throw std::invalid_argument("matrix code: field must be prime");
    Mat rows = mat_from_json(f, j.at("basis"));
    if (rows.rows() && rows.cols() != n * m)
      throw std::invalid_argument("matrix code: basis rows must have n*m entries");
    return MatrixCode::from_flat(f, n, m, rows);
  }
  if (kind == "vector") {
    if (f->degree() != m)
      throw std::invalid_argument("vector code: field degree must equal m");
    Mat gen = mat_from_json(f, j.at("generator"));
    if (gen.rows() && gen.cols() != n)
      throw std::invalid_argument("vector code: generator rows must have n entries");
    return VectorCode::from_generator(f, gen);
  }
  throw std::invalid_argument("code: kind must be \"matrix\" or \"vector\"");
}

AnyCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return code_from_json(j);
}

void save_code(const AnyCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << code_to_json(c).dump(2) << "\n";
}

json distribution_to_json(const RankDistribution& d) {
  return counts_to_json(d.counts);
}

std::string distributions_to_csv(const RankDistribution& primal,
                                 const RankDistribution& dual_dist) {
  std::ostringstream out;
  out << "i,A_i,A_i_dual\n";
  for (std::size_t i = 0; i < primal.counts.size(); ++i) {
    out << i << "," << primal.counts[i] << ",";
    out << (i < dual_dist.counts.size() ? dual_dist.counts[i].str() : "0");
    out << "\n";
  }
  return out.str();
}

json report_to_json(const CodeReport& r) {
  json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["m"] = r.m;
  j["t"] = r.t;
  j["d"] = r.d;
  j["d_dual"] = r.d_dual;
  j["rdef"] = r.rdef;
  j["rdef_dual"] = r.rdef_dual;
  j["singleton_bound"] = r.singleton_bound;
  j["class"] = r.cls;
  j["s"] = r.s;
  j["dually_amrd"] = r.dually_amrd;
  j["distribution"] = distribution_to_json(r.dist);
  j["dual_distribution"] = distribution_to_json(r.dist_dual);
  return j;
}

json profile_to_json(const GenWeightProfile& p) {
  json j;
  j["kind"] = p.matrix_kind ? "matrix" : "vector";
  j["weights"] = p.weights;
  if (p.i_mrd) {
    j["i_mrd"] = json{{"i", p.i_mrd->i}, {"degree", p.i_mrd->degree}};
  } else {
    j["i_mrd"] = nullptr;
  }
  return j;
}

json checks_to_json(const std::vector<CheckResult>& v) {
  json arr = json::array();
  for (const auto& c : v) {
    json j;
    j["id"] = c.id;
    j["applicable"] = c.applicable;
    j["ok"] = c.ok;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace rankcodes

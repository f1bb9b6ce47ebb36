#include "pgap/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pgap/error.hpp"

namespace pgap {

json field_spec_to_json(const FieldSpec& spec) {
  return {{"p", spec.characteristic}, {"k", spec.degree}, {"modulus", spec.modulus}};
}

FieldSpec field_spec_from_json(const json& j) {
  require(j.is_object(), "field spec must be an object");
  require(j.contains("p"), "field spec needs \"p\"");
  const auto p = j.at("p").get<std::uint32_t>();
  const auto k = j.value("k", std::uint32_t{1});
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  return make_field_spec(p, k, modulus);
}

Elem elem_from_json(const Field& field, const json& j) {
  if (j.is_array()) {
    const auto coeffs = j.get<std::vector<std::uint32_t>>();
    return field.from_coefficients(coeffs);
  }
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    require(v >= 0 && field.contains(static_cast<Elem>(v)),
            "field element " + std::to_string(v) + " out of range for " + field.spec().describe());
    return static_cast<Elem>(v);
  }
  fail(ErrorCode::invalid_argument, "field element must be an integer or a coefficient array");
}

json curve_spec_to_json(const CurveSpec& spec) {
  json j = field_spec_to_json(spec.field->spec());
  j["n"] = spec.n;
  json coeffs = json::array();
  for (const auto& [e, c] : spec.g_coeffs) coeffs.push_back({e[0], e[1], e[2], c});
  j["g_coeffs"] = coeffs;
  return j;
}

CurveSpec curve_spec_from_json(const json& j) {
  require(j.is_object(), "curve spec must be an object");
  const FieldSpec fs = field_spec_from_json(j);
  CurveSpec spec;
  spec.field = Field::create(fs);
  require(j.contains("n"), "curve spec needs \"n\"");
  spec.n = j.at("n").get<int>();
  if (j.contains("g_coeffs")) {
    for (const auto& term : j.at("g_coeffs")) {
      require(term.is_array() && term.size() == 4, "g_coeffs entries must be [e1, e2, e3, coeff]");
      const Exponents e{term[0].get<int>(), term[1].get<int>(), term[2].get<int>()};
      const Elem c = elem_from_json(*spec.field, term[3]);
      auto& slot = spec.g_coeffs[e];
      slot = spec.field->add(slot, c);
    }
  }
  return spec;
}

CurveSpec load_curve_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::invalid_argument, "cannot parse " + path + ": " + e.what());
  }
  return curve_spec_from_json(j);
}

json divisor_to_json(const ThreePointDivisor& d) { return json::array({d.a, d.b, d.c}); }

ThreePointDivisor divisor_from_json(const json& j) {
  require(j.is_array() && j.size() == 3, "divisor must be [a, b, c]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json rr_space_to_json(const RRSpace& space) {
  json basis = json::array();
  for (const auto& f : space.basis) basis.push_back(f.form);
  json monomials = json::array();
  for (const auto& m : space.monomials) monomials.push_back({m[0], m[1], m[2]});
  return {{"divisor", divisor_to_json(space.divisor)},
          {"dimension", space.dimension},
          {"form_degree", space.form_degree},
          {"shift", space.shift},
          {"monomials", monomials},
          {"basis", basis}};
}

json point_to_json(const ProjectivePoint& pt) { return json::array({pt.coords[0], pt.coords[1], pt.coords[2]}); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Elem>(m.row(r), m.row(r) + m.cols()));
  return rows;
}

namespace {

std::string elem_csv(const Field& f, Elem e) {
  if (f.degree() == 1) return std::to_string(e);
  std::string out;
  const auto coeffs = f.coefficients(e);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

}  // namespace

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream os;
  if (!m.field()) return "";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << elem_csv(*m.field(), m.at(r, c));
    os << '\n';
  }
  return os.str();
}

std::string points_to_csv(const Field& field, const std::vector<ProjectivePoint>& points) {
  std::ostringstream os;
  os << "x,y,z\n";
  for (const auto& pt : points)
    os << elem_csv(field, pt.coords[0]) << ',' << elem_csv(field, pt.coords[1]) << ','
       << elem_csv(field, pt.coords[2]) << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) fail(ErrorCode::io, "cannot read " + path);
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorCode::io, "cannot write " + path);
}

void append_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) fail(ErrorCode::io, "cannot open " + path + " for appending");
  out << text;
  if (!out) fail(ErrorCode::io, "cannot write " + path);
}

}  // namespace pgap

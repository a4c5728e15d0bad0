#include "skewbez/io.hpp"

#include <fstream>
#include <sstream>

namespace skewbez {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, const Field& f) {
  if (!j.is_array() || j.empty())
    throw domain_error("matrix JSON must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw domain_error("matrix JSON rows have inconsistent lengths");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = row.at(static_cast<std::size_t>(c));
      if (cell.is_string())
        m.at(i, c) = Scalar::parse(cell.get<std::string>(), f);
      else if (cell.is_number_integer())
        m.at(i, c) = Scalar::of_int(f, cell.get<long>());
      else
        throw domain_error("matrix entries must be scalar strings or integers");
    }
  }
  return m;
}

nlohmann::ordered_json space_to_json(const BilinearSpace& space,
                                     const Matrix* isometry) {
  nlohmann::ordered_json j;
  j["dim"] = space.dim;
  j["epsilon"] = space.epsilon;
  j["gram"] = matrix_to_json(space.gram);
  if (isometry) j["isometry"] = matrix_to_json(*isometry);
  return j;
}

std::string matrix_to_text(const Matrix& m) {
  std::size_t width = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      width = std::max(width, m.at(i, j).str().size());
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = m.at(i, j).str();
      if (j) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

SpaceFile read_space_file(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error("cannot parse " + path + ": " + e.what());
  }

  SpaceFile out;
  if (j.is_array()) {
    out.gram = matrix_from_json(j, f);
    return out;
  }
  if (!j.is_object()) throw domain_error(path + ": expected a JSON object or matrix");
  if (j.contains("gram")) out.gram = matrix_from_json(j.at("gram"), f);
  if (j.contains("isometry")) out.isometry = matrix_from_json(j.at("isometry"), f);
  if (j.contains("epsilon")) out.epsilon = j.at("epsilon").get<int>();
  return out;
}

}  // namespace skewbez

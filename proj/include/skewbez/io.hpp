#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewbez/bezoutian.hpp"

namespace skewbez {

/// Matrix as a JSON array of arrays of scalar strings.
nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const Field& f);

/// {"dim": d, "epsilon": e, "gram": [[..]], "isometry": [[..]]?}
nlohmann::ordered_json space_to_json(const BilinearSpace& space,
                                     const Matrix* isometry);

/// Aligned text matrix, one row per line, entries right-justified.
std::string matrix_to_text(const Matrix& m);

/// Contents of a JSON file holding a space and/or matrices.
struct SpaceFile {
  std::optional<Matrix> gram;
  std::optional<Matrix> isometry;
  std::optional<int> epsilon;
};
SpaceFile read_space_file(const std::string& path, const Field& f);

}  // namespace skewbez

#include "mre/state_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mre {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

StateFile parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("state file must be a JSON object");

  if (j.contains("pure")) {
    const json& arr = j["pure"];
    if (!arr.is_array() || arr.size() != 4)
      throw parse_error("\"pure\" must hold 4 amplitude pairs");
    Eigen::Vector4cd amp;
    for (int i = 0; i < 4; ++i) amp(i) = parse_complex(arr[i]);
    PureState psi = PureState::normalized(amp);
    return {psi, DensityMatrix::validate(psi.projector(), 1e-8)};
  }
  if (j.contains("matrix")) {
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 4)
      throw parse_error("\"matrix\" must hold 4 rows");
    CMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4)
        throw parse_error("\"matrix\" rows must hold 4 entries");
      for (int k = 0; k < 4; ++k) m(i, k) = parse_complex(rows[i][k]);
    }
    return {std::nullopt, DensityMatrix::validate(m, 1e-8)};
  }
  throw parse_error("state file needs a \"pure\" or \"matrix\" key");
}

StateFile load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

}  // namespace mre

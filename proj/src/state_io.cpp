#include "qss/state_io.hpp"

#include <fstream>
#include <set>

namespace qss {

using nlohmann::json;

std::vector<std::string> StateFile::register_labels() const {
  std::vector<std::string> reg;
  std::set<std::string> seen_parties;
  for (std::size_t p = 0; p < state.layout().size(); ++p) {
    const auto& label = state.layout().label(p);
    const auto it = parties.find(label);
    const std::string party = it == parties.end() ? std::string() : it->second;
    if (party.empty() || state.layout().dim(p) != 2) continue;
    if (seen_parties.insert(party).second) reg.push_back(label);
  }
  return reg;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed state file '" + path.string() + "': " + e.what());
  }
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");

  try {
    if (!j.is_object()) throw std::invalid_argument("top level must be an object");
    if (j.value("format_version", -1) != StateFile::kFormatVersion)
      throw std::invalid_argument("unsupported format_version");
    const double tol = j.value("tolerance", kDefaultVerifyTol);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    SystemLayout layout;
    PartyMap parties;
    for (const auto& sub : j.at("layout")) {
      const auto label = sub.at("label").get<std::string>();
      const auto dim = sub.at("dim").get<Index>();
      layout.append(label, dim);
      parties[label] = sub.value("party", std::string());
    }

    const auto& rows = j.at("matrix");
    const Index dim = layout.total_dim();
    if (static_cast<Index>(rows.size()) != dim)
      throw std::invalid_argument("matrix row count does not match layout dimension");
    Matrix m(dim, dim);
    for (Index r = 0; r < dim; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Index>(row.size()) != dim)
        throw std::invalid_argument("matrix is not square");
      for (Index c = 0; c < dim; ++c) {
        const auto& entry = row[static_cast<std::size_t>(c)];
        if (!entry.is_array() || entry.size() != 2)
          throw std::invalid_argument("matrix entries must be [re, im] pairs");
        m(r, c) = cplx(entry[0].get<double>(), entry[1].get<double>());
      }
    }

    StateFile file(DensityMatrix(std::move(m), std::move(layout), tol), std::move(parties), tol);
    file.metadata = j.value("metadata", json::object());
    return file;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed state file '" + path.string() + "': " + e.what());
  }
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
  json j;
  j["format_version"] = StateFile::kFormatVersion;
  j["tolerance"] = file.tolerance;

  json layout = json::array();
  for (std::size_t p = 0; p < file.state.layout().size(); ++p) {
    const auto& label = file.state.layout().label(p);
    const auto it = file.parties.find(label);
    layout.push_back({{"label", label},
                      {"dim", file.state.layout().dim(p)},
                      {"party", it == file.parties.end() ? std::string() : it->second}});
  }
  j["layout"] = std::move(layout);

  const Matrix& m = file.state.matrix();
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (!file.metadata.empty()) j["metadata"] = file.metadata;

  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace qss

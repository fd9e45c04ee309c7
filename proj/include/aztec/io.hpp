#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aztec/model.hpp"

namespace aztec {

// A model file: either {k, alpha, beta, gamma?} or {k, faces}, where faces is
// a list of 4k values in class order or a list of [i, j, a] entries.
struct Model {
  std::string name;
  std::optional<WeightSpec> spec;
  std::optional<FaceWeights> faces;
  std::string hash; // of the canonical JSON text

  int k() const;
  // edge weights for a diamond of size kN (faces are gauged per N)
  WeightSpec spec_for(int N) const;
  // edge weights for size-independent work; faces need the standard gauge
  WeightSpec asymptotic_spec() const;
};

Model parse_model(const nlohmann::json &raw, std::string name = "");
Model load_model(const std::string &path);
nlohmann::json model_to_json(const Model &m);

// Shortest text that reads back to the same double (at most 17 digits).
std::string fmt_double(double x);
// FNV-1a, as 16 hex digits
std::string hash_text(const std::string &s);

class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string> &cells);
  std::string str() const { return out_; }

private:
  std::size_t width_;
  std::string out_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string &text);

// JSON text with every double printed by fmt_double, 2-space indent.
std::string dump_json(const nlohmann::json &j);

void write_file(const std::string &path, const std::string &text);
std::string read_file(const std::string &path);

} // namespace aztec

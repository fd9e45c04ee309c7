#include "aztec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aztec {

int Model::k() const { return spec ? spec->k : faces->k; }

WeightSpec Model::spec_for(int N) const {
  if (spec) return *spec;
  return path_spec_from_faces(*faces, N);
}

WeightSpec Model::asymptotic_spec() const {
  if (spec) return *spec;
  // the gauge offsets move by kN(1,1), a multiple of the lattice vector
  // (k,k), so the result does not depend on N
  return path_spec_from_faces(*faces, 2);
}

Model parse_model(const nlohmann::json &raw, std::string name) {
  if (!raw.is_object()) throw Error(Errc::LengthMismatch, "model must be a JSON object");
  Model m;
  m.name = raw.value("name", name);
  if (raw.contains("alpha") || raw.contains("beta")) m.spec = validate_spec(raw);
  if (raw.contains("faces")) {
    if (!raw.contains("k") || !raw["k"].is_number_integer())
      throw Error(Errc::LengthMismatch, "faces need an integer k");
    const int k = raw["k"].get<int>();
    if (k < 1) throw Error(Errc::LengthMismatch, "k must be positive");
    const auto &f = raw["faces"];
    if (!f.is_array() || f.empty()) throw Error(Errc::LengthMismatch, "faces must be a list");
    if (f[0].is_array()) {
      std::vector<std::array<double, 3>> entries;
      for (const auto &e : f) {
        if (!e.is_array() || e.size() != 3) throw Error(Errc::LengthMismatch, "face entry is [i, j, a]");
        entries.push_back({e[0].get<double>(), e[1].get<double>(), e[2].get<double>()});
      }
      m.faces = faces_from_entries(k, entries);
    } else {
      if (f.size() != std::size_t(4 * k))
        throw Error(Errc::LengthMismatch, "face table needs 4k values");
      FaceWeights fw{k, f.get<std::vector<double>>()};
      for (double a : fw.table)
        if (!(a > 0) || !std::isfinite(a))
          throw Error(Errc::NonPositiveWeight, "face weights must be positive and finite");
      m.faces = fw;
    }
  }
  if (!m.spec && !m.faces) throw Error(Errc::LengthMismatch, "model needs alpha/beta or faces");
  if (m.spec && m.faces && m.spec->k != m.faces->k)
    throw Error(Errc::LengthMismatch, "k disagrees between edges and faces");
  m.hash = hash_text(dump_json(model_to_json(m)));
  return m;
}

Model load_model(const std::string &path) {
  nlohmann::json raw;
  try {
    raw = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::BadFile, std::string("cannot parse model: ") + e.what());
  }
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.rfind('.'));
  return parse_model(raw, stem);
}

nlohmann::json model_to_json(const Model &m) {
  nlohmann::json j = m.spec ? spec_to_json(*m.spec) : nlohmann::json::object();
  j["k"] = m.k();
  if (!m.name.empty()) j["name"] = m.name;
  if (m.faces) j["faces"] = m.faces->table;
  return j;
}

std::string fmt_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  // shortest representation that round-trips; never more than 17 digits
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general);
  return std::string(buf, r.ptr);
}

std::string hash_text(const std::string &s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string> &cells) {
  if (cells.size() != width_) throw Error(Errc::LengthMismatch, "csv row width");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> r;
    std::size_t p = 0;
    for (;;) {
      const std::size_t q = line.find(',', p);
      r.push_back(line.substr(p, q - p));
      if (q == std::string::npos) break;
      p = q + 1;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

void dump_into(const nlohmann::json &j, int depth, std::string &out) {
  const std::string pad(2 * depth + 2, ' '), close(2 * depth, ' ');
  switch (j.type()) {
  case nlohmann::json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::json(it.key()).dump() + ": ";
      dump_into(it.value(), depth + 1, out);
    }
    out += "\n" + close + "}";
    return;
  }
  case nlohmann::json::value_t::array: {
    // arrays of scalars stay on one line
    bool flat = true;
    for (const auto &e : j) flat = flat && !e.is_structured();
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += flat ? "[" : "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += flat ? ", " : ",\n";
      if (!flat) out += pad;
      dump_into(j[i], depth + 1, out);
    }
    out += flat ? "]" : "\n" + close + "]";
    return;
  }
  case nlohmann::json::value_t::number_float: {
    const double x = j.get<double>();
    std::string s = fmt_double(x);
    if (!std::isfinite(x)) s = "null";
    else if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    out += s;
    return;
  }
  default:
    out += j.dump();
  }
}

} // namespace

std::string dump_json(const nlohmann::json &j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

void write_file(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::BadFile, "cannot write " + path);
  f << text;
}

std::string read_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::BadFile, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace aztec

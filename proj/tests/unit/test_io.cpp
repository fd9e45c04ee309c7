#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>

#include "aztec/io.hpp"
#include "aztec/verify.hpp"

using namespace aztec;

TEST_CASE("doubles print losslessly") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20000; ++t) {
    std::uint64_t bits = rng();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    const std::string s = fmt_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
    // significant digits: skip leading zeros, stop at the exponent
    int digits = 0;
    bool lead = true;
    for (char c : s) {
      if (c == 'e') break;
      if (c < '0' || c > '9') continue;
      if (lead && c == '0') continue;
      lead = false;
      ++digits;
    }
    CHECK(digits <= 17);
  }
  CHECK(fmt_double(0.1) == "0.1");
  CHECK(fmt_double(-2.0) == "-2");
}

TEST_CASE("csv and json round-trip through their parsers") {
  CsvWriter w({"chi", "eta", "label"});
  w.row({fmt_double(-0.99), fmt_double(1.0 / 3), "smooth1"});
  w.row({fmt_double(1e-300), "", "frozen"});
  const auto rows = parse_csv(w.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][2] == "smooth1");
  CHECK(std::stod(rows[1][1]) == 1.0 / 3);
  CHECK(rows[2][1].empty());
  CHECK_THROWS_AS(w.row({"a"}), Error);

  nlohmann::json j;
  j["x"] = 1.0 / 7;
  j["n"] = 3;
  j["whole"] = 2.0;
  j["rows"] = {{1.5, -2.25}, {0.1, 1e-17}};
  j["name"] = "a\"b";
  const std::string text = dump_json(j);
  const nlohmann::json back = nlohmann::json::parse(text);
  CHECK(back == j);
  CHECK(back["whole"].is_number_float());
  CHECK(dump_json(back) == text);
}

TEST_CASE("model files") {
  const Model a = parse_model(nlohmann::json::parse(R"({"k": 2, "alpha": [0.5, 2.0], "beta": [1, 1]})"));
  CHECK(a.k() == 2);
  CHECK(a.spec_for(4) == a.asymptotic_spec());
  CHECK(a.hash.size() == 16);
  const Model b = parse_model(parse_model(model_to_json(a)).spec ? model_to_json(a) : nlohmann::json());
  CHECK(b.hash == a.hash);

  const Model f = parse_model(nlohmann::json::parse(R"({"k": 1, "faces": [1, 2, 3, 4]})"));
  REQUIRE(f.faces);
  CHECK(f.k() == 1);
  // the face gauge lands on the same edge weights for every N
  CHECK(f.spec_for(2) == f.spec_for(6));

  CHECK_THROWS_AS(parse_model(nlohmann::json::parse(R"({"k": 1})")), Error);
  CHECK_THROWS_AS(parse_model(nlohmann::json::parse(R"({"k": 1, "faces": [1, 2, 3]})")), Error);
  CHECK_THROWS_AS(parse_model(nlohmann::json::parse(R"({"k": 1, "faces": [1, 2, -3, 4]})")), Error);
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), Error);
}

TEST_CASE("verify suite on the shipped models") {
  for (const char *name : {"uniform-k1", "two-periodic", "fig2x3", "faces-k2"}) {
    const Model m = load_model(std::string(AZTEC_MODELS_DIR) + "/" + name + ".json");
    for (const CheckResult &r : verify_model(m, 1)) {
      INFO(name << ": " << r.name << ": " << r.detail);
      CHECK(r.pass);
    }
  }
}

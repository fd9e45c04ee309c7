// aztec: command-line entry point. Data goes to --out (stdout by default),
// the one-line summary to stderr. JSON outputs embed their run manifest;
// CSV and SVG outputs written to a file get a <path>.manifest.json beside it.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aztec/height.hpp"
#include "aztec/io.hpp"
#include "aztec/kernels.hpp"
#include "aztec/oracle.hpp"
#include "aztec/phases.hpp"
#include "aztec/sampler.hpp"
#include "aztec/verify.hpp"

#ifndef AZTEC_VERSION
#define AZTEC_VERSION "0.0.0"
#endif

using namespace aztec;
using nlohmann::json;

namespace {

struct Globals {
  std::string model_path;
  std::string out = "-";
  int threads = std::max(1u, std::thread::hardware_concurrency());
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

bool to_stdout(const std::string &p) { return p.empty() || p == "-"; }

json poly_json(const RPoly &p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p[i]);
  return a;
}

json interval_json(const Interval &iv) {
  // -inf has no JSON spelling; null marks the unbounded end
  json lo = std::isfinite(iv.lo) ? json(iv.lo) : json(nullptr);
  return json::array({lo, iv.hi});
}

json block_json(const Mat2c &m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json r = json::array();
    for (int j = 0; j < 2; ++j) r.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(r);
  }
  return rows;
}

// Tracks everything the run writes, then stamps the manifest.
class Run {
public:
  Run(std::string sub, const Globals &g, const Model *m) : g_(g) {
    manifest_["subcommand"] = std::move(sub);
    manifest_["version"] = AZTEC_VERSION;
    manifest_["seed"] = g.seed;
    manifest_["model_hash"] = m ? json(m->hash) : json(nullptr);
    flags_["model"] = g.model_path;
    flags_["out"] = g.out;
    flags_["threads"] = g.threads;
    flags_["tol"] = g.tol;
    flags_["seed"] = g.seed;
  }
  json &flags() { return flags_; }

  void json_out(const std::string &path, json doc) {
    outputs_.push_back(to_stdout(path) ? "-" : path);
    pending_json_.push_back({path, std::move(doc)});
  }
  void text_out(const std::string &path, std::string text) {
    outputs_.push_back(to_stdout(path) ? "-" : path);
    pending_text_.push_back({path, std::move(text)});
  }

  void flush() {
    manifest_["flags"] = flags_;
    manifest_["outputs"] = outputs_;
    for (auto &[path, text] : pending_text_) {
      write_file(path, text);
      if (!to_stdout(path)) write_file(path + ".manifest.json", dump_json(manifest_));
    }
    for (auto &[path, doc] : pending_json_) {
      doc["manifest"] = manifest_;
      write_file(path, dump_json(doc));
    }
  }

private:
  const Globals &g_;
  json manifest_, flags_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, json>> pending_json_;
  std::vector<std::pair<std::string, std::string>> pending_text_;
};

void summary(const std::string &s) { std::cerr << s << "\n"; }

// rows [0, n) split round-robin over the pool; results land in row order
template <typename F> void parallel_rows(int n, int threads, const F &f) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int j = 0; j < n; ++j) f(j);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (int j = t; j < n; j += threads) f(j);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto &th : pool) th.join();
  for (auto &e : errs)
    if (e) std::rethrow_exception(e);
}

const char *region_color(Region r) {
  switch (r) {
  case Region::Frozen: return "#f0f0f0";
  case Region::Rough: return "#6baed6";
  case Region::Smooth: return "#fd8d3c";
  case Region::BoundaryFR: return "#252525";
  case Region::BoundaryRS: return "#7f2704";
  }
  return "#ffffff";
}

std::string phase_svg(const PhaseGrid &g, double cell = 2.0) {
  std::ostringstream o;
  const double side = cell * g.n;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
    << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.n; ++i)
      // eta grows upward
      o << "<rect x=\"" << i * cell << "\" y=\"" << (g.n - 1 - j) * cell << "\" width=\"" << cell
        << "\" height=\"" << cell << "\" fill=\"" << region_color(g.at(i, j).label) << "\"/>\n";
  o << "</svg>\n";
  return o.str();
}

std::string with_index(const std::string &path, int i) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  const std::string tag = "-" + std::to_string(i);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

std::vector<Site> parse_points(const std::string &text) {
  std::vector<Site> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c = item.find(':');
    if (c == std::string::npos) throw CLI::ValidationError("--points", "expected m:v, got " + item);
    try {
      out.push_back({std::stoi(item.substr(0, c)), std::stoi(item.substr(c + 1))});
    } catch (const std::exception &) {
      throw CLI::ValidationError("--points", "expected integers in " + item);
    }
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Doubly periodic Aztec diamond: spectra, phases, kernels, heights, sampling"};
  app.set_version_flag("--version", AZTEC_VERSION);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--model", g.model_path, "model file (JSON)");
  app.add_option("--out", g.out, "output path, - for stdout");
  app.add_option("--threads", g.threads, "worker threads for grids")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "integration tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");

  auto *spectral = app.add_subcommand("spectral", "discriminant data as JSON");

  auto *phase = app.add_subcommand("phase-diagram", "classified grid as CSV");
  int phase_grid_n = 200;
  std::string phase_svg_path;
  phase->add_option("--grid", phase_grid_n, "cells per side")->check(CLI::Range(2, 4000));
  phase->add_option("--svg", phase_svg_path, "also render the grid to this SVG path");

  auto *arctic = app.add_subcommand("arctic", "arctic curves as CSV");
  int arctic_samples = 512;
  std::string specials_path;
  arctic->add_option("--samples", arctic_samples, "points per curve")->check(CLI::Range(8, 1000000));
  arctic->add_option("--specials", specials_path, "special points JSON path");

  auto *kernel = app.add_subcommand("kernel", "one 2x2 kernel block as JSON");
  std::string ktype;
  int kN = 0, km = 0, kxi = 0, kmp = 0, kxip = 0, kell = 1, kkappa = 0, kzeta = 0, kkappap = 0,
      kzetap = 0;
  double kchi = 0, keta = 0;
  std::string kmethod = "auto";
  kernel->add_option("type", ktype, "finite | smooth | rough")
      ->required()
      ->check(CLI::IsMember({"finite", "smooth", "rough"}));
  kernel->add_option("--N", kN, "finite: N (even)");
  kernel->add_option("--m", km, "finite: column m");
  kernel->add_option("--xi", kxi, "finite: height xi");
  kernel->add_option("--mp", kmp, "finite: column m'");
  kernel->add_option("--xip", kxip, "finite: height xi'");
  kernel->add_option("--method", kmethod, "finite: auto | quadrature | residue")
      ->check(CLI::IsMember({"auto", "quadrature", "residue"}));
  kernel->add_option("--ell", kell, "smooth: component");
  kernel->add_option("--chi", kchi, "rough: chi");
  kernel->add_option("--eta", keta, "rough: eta");
  kernel->add_option("--kappa", kkappa, "smooth/rough: kappa");
  kernel->add_option("--zeta", kzeta, "smooth/rough: zeta");
  kernel->add_option("--kappap", kkappap, "smooth/rough: kappa'");
  kernel->add_option("--zetap", kzetap, "smooth/rough: zeta'");

  auto *height = app.add_subcommand("height", "limit height on a grid as CSV");
  int hgrid = 50;
  double hchi0 = -1, hchi1 = 1, heta0 = -1, heta1 = 1;
  height->add_option("--grid", hgrid, "cells per side")->check(CLI::Range(1, 4000));
  height->add_option("--chi-min", hchi0);
  height->add_option("--chi-max", hchi1);
  height->add_option("--eta-min", heta0);
  height->add_option("--eta-max", heta1);

  auto *sample = app.add_subcommand("sample", "exact samples by domino shuffling");
  int sN = 0, scount = 1;
  std::string ssvg;
  sample->add_option("--N,--size-N", sN, "N (even)")->required();
  sample->add_option("--count", scount, "number of tilings")->check(CLI::Range(1, 100000));
  sample->add_option("--svg", ssvg, "SVG path (indexed when --count > 1)");

  auto *oracle = app.add_subcommand("oracle", "exhaustive enumeration against the kernel");
  int oN = 2;
  std::string opoints;
  oracle->add_option("--N,--size", oN, "N (even, kN <= 6)");
  oracle->add_option("--points", opoints, "sites m:v,m:v,... (default: every single site)");

  auto *verify = app.add_subcommand("verify", "invariant suite; nonzero exit on failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (g.model_path.empty()) {
      std::cerr << "--model is required\n";
      return 2;
    }
    const Model model = load_model(g.model_path);
    const std::string sub = app.get_subcommands().front()->get_name();
    Run run(sub, g, &model);

    if (spectral->parsed()) {
      const SpectralData sd = discriminant(model.asymptotic_spec());
      json d;
      d["k"] = sd.k();
      d["k_prime"] = sd.k_prime;
      d["trace_poly"] = poly_json(sd.trace_poly);
      d["p"] = poly_json(sd.p);
      d["p_plus"] = poly_json(sd.p_plus);
      d["p_minus"] = poly_json(sd.p_minus);
      d["q"] = poly_json(sd.q);
      d["p0"] = poly_json(sd.p0);
      d["roots"] = sd.roots;
      d["x"] = sd.x;
      d["bands"] = json::array();
      for (const Interval &b : sd.bands) d["bands"].push_back(interval_json(b));
      d["cuts"] = json::array();
      for (const Interval &c : sd.cuts) d["cuts"].push_back(interval_json(c));
      run.json_out(g.out, d);
      run.flush();
      summary("spectral: k = " + std::to_string(sd.k()) + ", k' = " + std::to_string(sd.k_prime) +
              ", " + std::to_string(sd.roots.size()) + " roots");
      return 0;
    }

    if (phase->parsed()) {
      run.flags()["grid"] = phase_grid_n;
      run.flags()["svg"] = phase_svg_path;
      const SpectralData sd = discriminant(model.asymptotic_spec());
      const PhaseGrid pg = phase_grid(sd, phase_grid_n, g.threads);
      CsvWriter csv({"chi", "eta", "label"});
      for (int j = 0; j < pg.n; ++j)
        for (int i = 0; i < pg.n; ++i)
          csv.row({fmt_double(pg.coord(i)), fmt_double(pg.coord(j)), pg.at(i, j).tag()});
      run.text_out(g.out, csv.str());
      if (!phase_svg_path.empty()) run.text_out(phase_svg_path, phase_svg(pg));
      run.flush();
      const int got = count_smooth_components(pg), want = smooth_component_count(sd);
      summary("phase-diagram: " + std::to_string(got) + " smooth components on the grid, k'-1 = " +
              std::to_string(want) + (got == want ? " (agree)" : " (DISAGREE)"));
      return 0;
    }

    if (arctic->parsed()) {
      run.flags()["samples"] = arctic_samples;
      run.flags()["specials"] = specials_path;
      const SpectralData sd = discriminant(model.asymptotic_spec());
      const ArcticCurves ac = arctic_curves(sd, arctic_samples);
      CsvWriter csv({"curve", "index", "chi", "eta"});
      auto put = [&](const std::string &name, const Polyline &p) {
        for (std::size_t i = 0; i < p.size(); ++i)
          csv.row({name, std::to_string(i), fmt_double(p[i].x), fmt_double(p[i].y)});
      };
      put("frozen", ac.frozen_boundary);
      for (std::size_t l = 0; l < ac.smooth_boundaries.size(); ++l)
        put("smooth" + std::to_string(l + 1), ac.smooth_boundaries[l]);
      run.text_out(g.out, csv.str());
      std::string sp = specials_path;
      if (sp.empty() && !to_stdout(g.out)) sp = g.out + ".specials.json";
      if (!sp.empty()) {
        json s = json::array();
        for (const LabeledPoint &p : ac.specials)
          s.push_back({{"name", p.name}, {"chi", p.at.x}, {"eta", p.at.y}});
        run.json_out(sp, {{"specials", s}});
      }
      run.flush();
      summary("arctic: " + std::to_string(1 + ac.smooth_boundaries.size()) + " closed curves, " +
              std::to_string(ac.specials.size()) + " special points");
      return 0;
    }

    if (kernel->parsed()) {
      json d;
      d["type"] = ktype;
      KernelBlock b;
      if (ktype == "finite") {
        run.flags()["N"] = kN;
        run.flags()["method"] = kmethod;
        const FiniteMethod fm = kmethod == "quadrature" ? FiniteMethod::Quadrature
                                : kmethod == "residue"  ? FiniteMethod::Residue
                                                        : FiniteMethod::Auto;
        if (kN <= 0 || kN % 2) throw Error(Errc::OddN, "--N must be positive and even");
        b = finite_kernel(model.spec_for(kN), kN, km, kxi, kmp, kxip, g.tol, fm);
        d["indices"] = {{"N", kN}, {"m", km}, {"xi", kxi}, {"mp", kmp}, {"xip", kxip}};
      } else {
        const SpectralData sd = discriminant(model.asymptotic_spec());
        if (ktype == "smooth") {
          b = smooth_kernel(sd, kell, kkappa, kzeta, kkappap, kzetap, g.tol);
          d["indices"] = {{"ell", kell},       {"kappa", kkappa}, {"zeta", kzeta},
                          {"kappap", kkappap}, {"zetap", kzetap}};
        } else {
          b = rough_kernel(sd, kchi, keta, kkappa, kzeta, kkappap, kzetap, g.tol);
          d["indices"] = {{"chi", kchi},     {"eta", keta},       {"kappa", kkappa},
                          {"zeta", kzeta},   {"kappap", kkappap}, {"zetap", kzetap}};
          const WeightSpec &s = sd.spec;
          // the sine kernel describes the kappa = kappa' row of the uniform model
          if (s.k == 1 && s.alpha[0] == 1.0 && s.beta[0] == 1.0 && s.gamma[0] == 1.0 &&
              kkappa == kkappap) {
            const PhasePoint pp = classify(sd, kchi, keta);
            double th = std::arg(pp.z1);
            if (th < 0) th += 2 * kPi;
            Mat2c ref;
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j)
                ref(i, j) = sine_reference(th, std::abs(pp.z1), 2 * kzeta + i, 2 * kzetap + j);
            d["sine_reference"] = block_json(ref);
            d["sine_residual"] = (b.value - ref).cwiseAbs().maxCoeff();
          }
        }
      }
      d["entries"] = block_json(b.value);
      d["error"] = b.error;
      d["method"] = b.method;
      d["nodes"] = b.nodes;
      d["bits"] = b.bits;
      run.json_out(g.out, d);
      run.flush();
      summary("kernel " + ktype + ": error estimate " + fmt_double(b.error) + " (" + b.method + ")");
      return 0;
    }

    if (height->parsed()) {
      run.flags()["grid"] = hgrid;
      run.flags()["chi_min"] = hchi0;
      run.flags()["chi_max"] = hchi1;
      run.flags()["eta_min"] = heta0;
      run.flags()["eta_max"] = heta1;
      const SpectralData sd = discriminant(model.asymptotic_spec());
      const int n = hgrid;
      auto at = [&](double lo, double hi, int i) { return lo + (hi - lo) * (i + 0.5) / n; };
      std::vector<std::vector<std::string>> rows(std::size_t(n) * n);
      parallel_rows(n, g.threads, [&](int j) {
        const double eta = at(heta0, heta1, j);
        for (int i = 0; i < n; ++i) {
          const double chi = at(hchi0, hchi1, i);
          std::string label, value;
          try {
            const PhasePoint pp = classify(sd, chi, eta);
            label = pp.tag();
            if (pp.label == Region::Rough || pp.label == Region::Smooth)
              value = fmt_double(height_query(sd, chi, eta, std::min(g.tol, 1e-9)).value);
          } catch (const Error &) {
            // outside the diamond or on a degenerate curve: no value
            if (label.empty()) label = "unclassified";
          }
          rows[std::size_t(j) * n + i] = {fmt_double(chi), fmt_double(eta), label, value};
        }
      });
      CsvWriter csv({"chi", "eta", "label", "value"});
      std::size_t valued = 0;
      for (const auto &r : rows) {
        csv.row(r);
        valued += !r[3].empty();
      }
      run.text_out(g.out, csv.str());
      run.flush();
      summary("height: " + std::to_string(valued) + " of " + std::to_string(rows.size()) +
              " cells carry a value");
      return 0;
    }

    if (sample->parsed()) {
      run.flags()["N"] = sN;
      run.flags()["count"] = scount;
      run.flags()["svg"] = ssvg;
      if (sN <= 0 || sN % 2) throw Error(Errc::OddN, "--N must be positive and even");
      const WeightSpec s = model.spec_for(sN);
      json d;
      d["k"] = s.k;
      d["N"] = sN;
      d["size"] = s.k * sN;
      d["tilings"] = json::array();
      for (int c = 0; c < scount; ++c) {
        const Tiling t = sample_tiling(s, sN, g.seed, std::uint64_t(c));
        json doms = json::array();
        for (const Domino &x : t.dominoes)
          doms.push_back({domino_name(x.type), int(x.x), int(x.y)});
        d["tilings"].push_back({{"seed", t.seed}, {"stream", t.stream}, {"dominoes", doms}});
        if (!ssvg.empty()) run.text_out(scount == 1 ? ssvg : with_index(ssvg, c), render_svg(t));
      }
      run.json_out(g.out, d);
      run.flush();
      summary("sample: " + std::to_string(scount) + " tilings of order " +
              std::to_string(s.k * sN));
      return 0;
    }

    if (oracle->parsed()) {
      run.flags()["N"] = oN;
      run.flags()["points"] = opoints;
      if (oN <= 0 || oN % 2) throw Error(Errc::OddN, "--N must be positive and even");
      const WeightSpec s = model.spec_for(oN);
      const EnumeratedLaw law = model.faces ? enumerate_faces(*model.faces, oN) : enumerate(s, oN);
      std::vector<std::vector<Site>> queries;
      if (opoints.empty()) {
        for (int m = 1; m < oN; ++m)
          for (int v = -s.k * oN; v <= -1; ++v) queries.push_back({{m, v}});
      } else {
        queries.push_back(parse_points(opoints));
      }
      json d, pts = json::array();
      d["Z"] = law.Z;
      d["tilings"] = law.count();
      double worst = 0;
      for (const auto &q : queries) {
        const double p = exact_correlation(law, q);
        const double kd = kernel_correlation(s, oN, q, FiniteMethod::Auto, std::min(g.tol, 1e-10));
        json sites = json::array();
        for (const Site &x : q) sites.push_back({x.m, x.v});
        pts.push_back({{"sites", sites}, {"probability", p}, {"kernel", kd},
                       {"residual", std::abs(p - kd)}});
        worst = std::max(worst, std::abs(p - kd));
      }
      d["points"] = pts;
      d["max_residual"] = worst;
      run.json_out(g.out, d);
      run.flush();
      summary("oracle: " + std::to_string(law.count()) + " tilings, " +
              std::to_string(queries.size()) + " correlations, max residual " + fmt_double(worst));
      return 0;
    }

    if (verify->parsed()) {
      const std::vector<CheckResult> res = verify_model(model, g.threads, g.seed);
      json d, arr = json::array();
      int failed = 0;
      for (const CheckResult &r : res) {
        arr.push_back({{"name", r.name}, {"pass", r.pass}, {"measured", r.measured},
                       {"bound", r.bound}, {"detail", r.detail}});
        failed += !r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      }
      d["checks"] = arr;
      d["failed"] = failed;
      run.json_out(g.out, d);
      run.flush();
      summary("verify: " + std::to_string(res.size() - failed) + "/" + std::to_string(res.size()) +
              " checks pass");
      return failed ? 1 : 0;
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return errc_is_validation(e.code()) ? 3 : 4;
  } catch (const std::exception &e) {
    std::cerr << "NumericalFailure: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

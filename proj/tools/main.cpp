#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "harper/certify.hpp"
#include "harper/diffusion.hpp"
#include "harper/flows.hpp"
#include "harper/json_io.hpp"
#include "harper/nontwist.hpp"
#include "harper/parallel.hpp"
#include "harper/render.hpp"
#include "harper/rotset.hpp"

namespace {

using harper::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // scientific negative: not certified / mismatch
constexpr int kExitUsage = 2;

struct Artifacts {
  json result;                               // run summary, embedded in the manifest
  std::map<std::string, std::string> files;  // extension -> raw bytes
};

std::pair<double, double> parse_range(const std::string& text) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) throw CLI::ValidationError("range must look like lo:hi");
  const double lo = std::stod(text.substr(0, sep));
  const double hi = std::stod(text.substr(sep + 1));
  if (!(lo <= hi)) throw CLI::ValidationError("range must satisfy lo <= hi");
  return {lo, hi};
}

std::pair<int, int> parse_resolution(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) throw CLI::ValidationError("resolution must look like WxH");
  const int nx = std::stoi(text.substr(0, sep));
  const int ny = std::stoi(text.substr(sep + 1));
  if (nx < 1 || ny < 1) throw CLI::ValidationError("resolution must be positive");
  return {nx, ny};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string pgm_bytes(const harper::ScanGrid& grid) {
  const auto gray = harper::render_gray(grid);
  std::string out = "P5\n" + std::to_string(grid.spec.nx) + " " +
                    std::to_string(grid.spec.ny) + "\n255\n";
  out.append(reinterpret_cast<const char*>(gray.data()), gray.size());
  return out;
}

std::string ppm_bytes(const harper::ScanGrid& grid) {
  const auto rgb = harper::render_rgb(grid);
  std::string out = "P6\n" + std::to_string(grid.spec.nx) + " " +
                    std::to_string(grid.spec.ny) + "\n255\n";
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand runners: a config object in, artifacts out. verify() replays the
// same path from a stored config and compares fingerprints.
// ---------------------------------------------------------------------------

Artifacts run_scan(const json& cfg) {
  harper::ScanSpec spec;
  spec.alpha_lo = cfg.at("alpha_lo");
  spec.alpha_hi = cfg.at("alpha_hi");
  spec.beta_lo = cfg.at("beta_lo");
  spec.beta_hi = cfg.at("beta_hi");
  spec.nx = cfg.at("nx");
  spec.ny = cfg.at("ny");
  const harper::PixelBudget budget{cfg.at("seeds"), cfg.at("iters")};
  const harper::ScanGrid grid = harper::scan(spec, budget, cfg.at("seed"));

  Artifacts art;
  art.files[".csv"] = harper::scan_csv(grid);
  art.files[".pgm"] = pgm_bytes(grid);
  art.files[".ppm"] = ppm_bytes(grid);
  art.result = harper::scan_summary_to_json(grid);
  return art;
}

Artifacts run_rotset(const json& cfg) {
  const harper::Params p{cfg.at("alpha"), cfg.at("beta")};
  const harper::RotsetBudget budget{cfg.at("orbits"), cfg.at("iters"), cfg.at("seed")};

  Artifacts art;
  if (cfg.contains("diagonal") && !cfg.at("diagonal").empty()) {
    const std::vector<double> alphas = cfg.at("diagonal");
    const auto rows = harper::diagonal_monotonicity_experiment(alphas, budget);
    json out = json::array();
    for (const auto& row : rows) {
      json entry = {{"alpha", row.alpha}, {"polygon", harper::polygon_to_json(row.hull)}};
      if (!std::isnan(row.outside_next)) entry["outside_next"] = row.outside_next;
      out.push_back(entry);
    }
    art.result = {{"diagonal_hulls", out}};
    return art;
  }

  const harper::ConvexPolygon poly = harper::approx_rotation_set(p, budget);
  art.result = {
      {"polygon", harper::polygon_to_json(poly)},
      {"shape", harper::shape_name(harper::classify_shape(poly, 1e-3))},
  };
  const double n = p.alpha;
  if (p.alpha == p.beta && n >= 1.0 && n == std::floor(n)) {
    const std::vector<harper::Vec2> corners = {{n, -n}, {n, n}, {-n, n}, {-n, -n}};
    art.result["hausdorff_to_square"] =
        harper::hausdorff_distance(poly, harper::ConvexPolygon::hull_of(corners));
  }
  return art;
}

Artifacts run_certify(const json& cfg) {
  Artifacts art;
  if (cfg.contains("case")) {
    const std::string which = cfg.at("case");
    const harper::ModeLockReport report = harper::verify_mode_lock(
        which == "square11" ? harper::ModeLockCase::Square11
                            : harper::ModeLockCase::DiamondHalf);
    art.result = harper::mode_lock_report_to_json(report);
    return art;
  }
  const harper::Params p{cfg.at("alpha"), cfg.at("beta")};
  harper::HalfPlaneRequest request;
  request.normal = harper::Vec2{cfg.at("v").at(0).get<double>(), cfg.at("v").at(1).get<double>()};
  request.translation =
      Eigen::Vector2i{cfg.at("u").at(0).get<int>(), cfg.at("u").at(1).get<int>()};
  request.offset = cfg.at("c");
  request.power = cfg.at("power");
  request.step = cfg.at("step");
  const harper::HalfPlaneCertificate cert = harper::certify_half_plane(p, request);
  art.result = harper::certificate_to_json(cert);
  return art;
}

Artifacts run_betaplus(const json& cfg) {
  const std::vector<double> alphas = cfg.at("alphas");
  const harper::PixelBudget budget{cfg.at("seeds"), cfg.at("iters")};
  const int steps = cfg.at("steps");
  const std::uint64_t seed = cfg.at("seed");

  std::string csv = "alpha,beta_upper,ref_bound\r\n";
  json rows = json::array();
  for (const double alpha : alphas) {
    const double ref = (8.0 / harper::pi<double>) / std::sqrt(alpha);
    const auto found =
        harper::estimate_beta_minus_upper(alpha, 0.0, 1.1 * ref, steps, budget, seed);
    char line[128];
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\r\n", alpha, found.beta_minus_upper,
                  ref);
    csv += line;
    rows.push_back({{"alpha", alpha},
                    {"beta_upper", found.beta_minus_upper},
                    {"ref_bound", ref},
                    {"iterations", found.iterations_spent},
                    {"below_ref", found.beta_minus_upper <= ref}});
  }
  Artifacts art;
  art.files[".csv"] = csv;
  art.result = {{"thresholds", rows}};
  return art;
}

Artifacts run_euler(const json& cfg) {
  const std::vector<double> alphas = cfg.at("alphas");
  const harper::ConvergenceReport report =
      harper::euler_convergence_study(cfg.at("lambda"), alphas, cfg.at("samples"));

  std::string csv = "delta,c0_err,c1_err\r\n";
  for (std::size_t i = 0; i < report.deltas.size(); ++i) {
    char line[128];
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\r\n", report.deltas[i],
                  report.sup_errors_c0[i], report.sup_errors_c1[i]);
    csv += line;
  }
  Artifacts art;
  art.files[".csv"] = csv;
  art.result = harper::convergence_report_to_json(report);
  return art;
}

Artifacts run_nontwist(const json& cfg) {
  Artifacts art;
  if (cfg.contains("alpha0")) {
    const std::vector<int> ns = cfg.at("ns");
    const auto distances = harper::rescaling_convergence(cfg.at("alpha0"), ns, cfg.at("grid"));
    art.result = {{"n_list", ns}, {"sup_distances", distances}};
    return art;
  }

  const std::vector<int> ns = cfg.at("conjecture_ns");
  const harper::PixelBudget budget{cfg.at("seeds"), cfg.at("iters")};
  const std::uint64_t seed = cfg.at("seed");
  const int nx = cfg.at("nx");
  const int ny = cfg.at("ny");

  json summary = json::array();
  std::vector<harper::ScanGrid> strips;
  for (const int n : ns) {
    const harper::RescaledSetGrids grids = harper::conjecture_grids(n, nx, ny, budget, seed);
    const std::string tag = "_n" + std::to_string(n);
    art.files[tag + ".csv"] = harper::scan_csv(grids.harper_grid, "harper");
    art.files[tag + ".pgm"] = pgm_bytes(grids.harper_grid);
    if (summary.empty()) {
      art.files["_nontwist.csv"] = harper::scan_csv(grids.nontwist_grid, "nontwist");
      art.files["_nontwist.pgm"] = pgm_bytes(grids.nontwist_grid);
    }
    summary.push_back(
        {{"n", n},
         {"vs_nontwist",
          harper::verdict_symmetric_difference(grids.harper_grid, grids.nontwist_grid)}});
    strips.push_back(grids.harper_grid);
  }
  for (std::size_t i = 0; i + 1 < strips.size(); ++i) {
    summary[i]["vs_next_n"] = harper::verdict_symmetric_difference(strips[i], strips[i + 1]);
  }
  art.result = {{"rescaled_grids", summary}};
  return art;
}

Artifacts run_fixedpoints(const json& cfg) {
  const harper::Params p{cfg.at("alpha"), cfg.at("beta")};
  Artifacts art;
  art.result = {
      {"fixed_points", harper::fixed_point_reports_to_json(harper::fixed_point_reports(p))}};
  return art;
}

Artifacts dispatch(const json& cfg) {
  const std::string sub = cfg.at("subcommand");
  if (sub == "scan") return run_scan(cfg);
  if (sub == "rotset") return run_rotset(cfg);
  if (sub == "certify") return run_certify(cfg);
  if (sub == "betaplus") return run_betaplus(cfg);
  if (sub == "euler") return run_euler(cfg);
  if (sub == "nontwist") return run_nontwist(cfg);
  if (sub == "fixedpoints") return run_fixedpoints(cfg);
  throw std::runtime_error("unknown subcommand in config: " + sub);
}

int emit(const json& cfg, const std::string& prefix) {
  const Artifacts art = dispatch(cfg);

  json manifest;
  manifest["config"] = cfg;
  manifest["config_hash"] = harper::hash_hex(harper::fnv1a64(cfg.dump()));
  manifest["result"] = art.result;
  json outputs = json::object();
  for (const auto& [ext, bytes] : art.files) {
    const std::string path = prefix + ext;
    spill(path, bytes);
    outputs[ext] = harper::hash_hex(harper::fnv1a64(bytes));
  }
  manifest["outputs"] = outputs;
  spill(prefix + ".json", manifest.dump(2) + "\n");

  std::cout << art.result.dump(2) << "\n";
  if (art.result.contains("verdict") && !art.result.at("verdict").get<bool>()) {
    return kExitNegative;
  }
  return kExitOk;
}

int verify_manifest(const std::string& path) {
  const json manifest = json::parse(slurp(path));
  const json& cfg = manifest.at("config");

  if (manifest.at("config_hash") != harper::hash_hex(harper::fnv1a64(cfg.dump()))) {
    std::cout << "config hash mismatch\n";
    return kExitNegative;
  }

  const Artifacts art = dispatch(cfg);
  bool ok = true;
  for (const auto& [ext, stored] : manifest.at("outputs").items()) {
    const std::string recomputed = harper::hash_hex(harper::fnv1a64(art.files.at(ext)));
    if (recomputed != stored.get<std::string>()) {
      std::cout << "output " << ext << " differs\n";
      ok = false;
    }
  }

  // Certificates carry a numeric replay contract: grid_max must reproduce
  // bitwise on identical hardware and within 1e-12 otherwise.
  if (cfg.at("subcommand") == "certify" && manifest.at("result").contains("grid_max")) {
    const double stored = manifest.at("result").at("grid_max");
    const double redone = art.result.at("grid_max");
    const bool bitwise = stored == redone;
    std::cout << "grid_max replay: " << (bitwise ? "bit-exact" : "not bit-exact") << "\n";
    if (!bitwise && std::abs(stored - redone) > 1e-12) ok = false;
  } else if (art.result.dump() != manifest.at("result").dump()) {
    ok = false;
  }

  std::cout << (ok ? "verified\n" : "verification failed\n");
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for the kicked Harper family of torus maps"};
  app.require_subcommand(1);

  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker thread cap (default: cores, or HARPER_THREADS)");

  std::string out_prefix = "harper_out";

  auto* scan_cmd = app.add_subcommand("scan", "sweep the parameter plane for diffusion");
  std::string alpha_range = "0:1", beta_range = "0:1", resolution = "64x64";
  long scan_iters = 100000;
  int scan_seeds = 32;
  std::uint64_t scan_seed = 1;
  scan_cmd->add_option("--alpha", alpha_range, "alpha range lo:hi");
  scan_cmd->add_option("--beta", beta_range, "beta range lo:hi");
  scan_cmd->add_option("--res", resolution, "grid resolution WxH");
  scan_cmd->add_option("--iters", scan_iters, "iterations per seed");
  scan_cmd->add_option("--seeds", scan_seeds, "seeds per pixel");
  scan_cmd->add_option("--seed", scan_seed, "master random seed");
  scan_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* rotset_cmd = app.add_subcommand("rotset", "approximate a rotation set");
  double rs_alpha = 1.0, rs_beta = 1.0;
  int rs_orbits = 256;
  long rs_iters = 100000;
  std::uint64_t rs_seed = 1;
  std::vector<double> rs_diagonal;
  rotset_cmd->add_option("--alpha", rs_alpha, "alpha");
  rotset_cmd->add_option("--beta", rs_beta, "beta");
  rotset_cmd->add_option("--orbits", rs_orbits, "orbit count");
  rotset_cmd->add_option("--iters", rs_iters, "iterations per orbit");
  rotset_cmd->add_option("--seed", rs_seed, "random seed");
  rotset_cmd
      ->add_option("--diagonal", rs_diagonal, "diagonal alphas for the nested-hull experiment")
      ->delimiter(',');
  rotset_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* certify_cmd = app.add_subcommand("certify", "rigorous half-plane certificates");
  std::string lock_case, replay_path;
  double ct_alpha = 1.0, ct_beta = 1.0, ct_c = 0.0, ct_step = 1e-6;
  int ct_power = 1;
  std::vector<double> ct_v;
  std::vector<int> ct_u;
  certify_cmd->add_option("--case", lock_case, "mode-lock case: square11 | diamondhalf");
  certify_cmd->add_option("--replay", replay_path, "re-run a stored certificate manifest");
  certify_cmd->add_option("--alpha", ct_alpha, "alpha");
  certify_cmd->add_option("--beta", ct_beta, "beta");
  certify_cmd->add_option("--v", ct_v, "half-plane normal vx,vy")->delimiter(',');
  certify_cmd->add_option("--u", ct_u, "integer translation ux,uy")->delimiter(',');
  certify_cmd->add_option("--c", ct_c, "line offset");
  certify_cmd->add_option("--power", ct_power, "which iterate to certify");
  certify_cmd->add_option("--step", ct_step, "grid step along the line");
  certify_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* betaplus_cmd = app.add_subcommand("betaplus", "diffusion-onset upper bounds in beta");
  std::vector<double> bp_alphas{4.0, 16.0, 64.0};
  int bp_seeds = 8, bp_steps = 12;
  long bp_iters = 100000;
  std::uint64_t bp_seed = 42;
  betaplus_cmd->add_option("--alpha", bp_alphas, "alpha values")->delimiter(',');
  betaplus_cmd->add_option("--seeds", bp_seeds, "seeds per classification");
  betaplus_cmd->add_option("--iters", bp_iters, "iterations per seed");
  betaplus_cmd->add_option("--steps", bp_steps, "bisection steps");
  betaplus_cmd->add_option("--seed", bp_seed, "random seed");
  betaplus_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* euler_cmd = app.add_subcommand("euler", "euler-vs-flow convergence study");
  double eu_lambda = 0.5;
  std::vector<double> eu_alphas{0.02, 0.01, 0.005, 0.0025};
  int eu_samples = 32;
  euler_cmd->add_option("--lambda", eu_lambda, "ray slope beta = lambda*alpha");
  euler_cmd->add_option("--alphas", eu_alphas, "step sizes")->delimiter(',');
  euler_cmd->add_option("--samples", eu_samples, "quasi-random starts");
  euler_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* nontwist_cmd = app.add_subcommand("nontwist", "non-twist rescaling experiments");
  double nt_alpha0 = -1.0;
  std::vector<int> nt_ns{4, 16, 64};
  int nt_grid = 64;
  std::vector<int> nt_conjecture_ns;
  std::string nt_res = "64x64";
  int nt_seeds = 8;
  long nt_iters = 20000;
  std::uint64_t nt_seed = 42;
  nontwist_cmd->add_option("--alpha0", nt_alpha0, "rescaling base point in [0,1)");
  nontwist_cmd->add_option("--ns", nt_ns, "integer shifts for the convergence run")
      ->delimiter(',');
  nontwist_cmd->add_option("--grid", nt_grid, "annulus sample grid");
  nontwist_cmd
      ->add_option("--conjecture-n", nt_conjecture_ns, "strip indices for the rescaled-set grids")
      ->delimiter(',');
  nontwist_cmd->add_option("--res", nt_res, "grid resolution WxH");
  nontwist_cmd->add_option("--seeds", nt_seeds, "seeds per pixel");
  nontwist_cmd->add_option("--iters", nt_iters, "iterations per seed");
  nontwist_cmd->add_option("--seed", nt_seed, "master random seed");
  nontwist_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* fixed_cmd = app.add_subcommand("fixedpoints", "local analysis of the fixed points");
  double fp_alpha = 1.0, fp_beta = 1.0;
  fixed_cmd->add_option("--alpha", fp_alpha, "alpha");
  fixed_cmd->add_option("--beta", fp_beta, "beta");
  fixed_cmd->add_option("--out", out_prefix, "output path prefix");

  auto* verify_cmd = app.add_subcommand("verify", "re-run a manifest and compare hashes");
  std::string verify_path;
  verify_cmd->add_option("file", verify_path, "manifest json")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);

    if (threads > 0) harper::set_worker_count(threads);

    if (scan_cmd->parsed()) {
      const auto [alo, ahi] = parse_range(alpha_range);
      const auto [blo, bhi] = parse_range(beta_range);
      const auto [nx, ny] = parse_resolution(resolution);
      if (scan_iters < 1 || scan_seeds < 1) throw CLI::ValidationError("budget must be positive");
      const json cfg = {{"subcommand", "scan"},
                        {"alpha_lo", alo},
                        {"alpha_hi", ahi},
                        {"beta_lo", blo},
                        {"beta_hi", bhi},
                        {"nx", nx},
                        {"ny", ny},
                        {"iters", scan_iters},
                        {"seeds", scan_seeds},
                        {"seed", scan_seed}};
      return emit(cfg, out_prefix);
    }
    if (rotset_cmd->parsed()) {
      json cfg = {{"subcommand", "rotset"}, {"alpha", rs_alpha}, {"beta", rs_beta},
                  {"orbits", rs_orbits},    {"iters", rs_iters}, {"seed", rs_seed}};
      if (!rs_diagonal.empty()) cfg["diagonal"] = rs_diagonal;
      return emit(cfg, out_prefix);
    }
    if (certify_cmd->parsed()) {
      if (!replay_path.empty()) return verify_manifest(replay_path);
      json cfg = {{"subcommand", "certify"}};
      if (!lock_case.empty()) {
        if (lock_case != "square11" && lock_case != "diamondhalf") {
          throw CLI::ValidationError("case must be square11 or diamondhalf");
        }
        cfg["case"] = lock_case;
      } else {
        if (ct_v.size() != 2 || ct_u.size() != 2) {
          throw CLI::ValidationError("custom certificates need --v vx,vy and --u ux,uy");
        }
        cfg["alpha"] = ct_alpha;
        cfg["beta"] = ct_beta;
        cfg["v"] = ct_v;
        cfg["u"] = ct_u;
        cfg["c"] = ct_c;
        cfg["power"] = ct_power;
        cfg["step"] = ct_step;
      }
      return emit(cfg, out_prefix);
    }
    if (betaplus_cmd->parsed()) {
      const json cfg = {{"subcommand", "betaplus"}, {"alphas", bp_alphas}, {"seeds", bp_seeds},
                        {"iters", bp_iters},        {"steps", bp_steps},   {"seed", bp_seed}};
      return emit(cfg, out_prefix);
    }
    if (euler_cmd->parsed()) {
      const json cfg = {{"subcommand", "euler"},
                        {"lambda", eu_lambda},
                        {"alphas", eu_alphas},
                        {"samples", eu_samples}};
      return emit(cfg, out_prefix);
    }
    if (nontwist_cmd->parsed()) {
      json cfg = {{"subcommand", "nontwist"}};
      if (!nt_conjecture_ns.empty()) {
        const auto [nx, ny] = parse_resolution(nt_res);
        cfg["conjecture_ns"] = nt_conjecture_ns;
        cfg["nx"] = nx;
        cfg["ny"] = ny;
        cfg["seeds"] = nt_seeds;
        cfg["iters"] = nt_iters;
        cfg["seed"] = nt_seed;
      } else {
        if (nt_alpha0 < 0.0 || nt_alpha0 >= 1.0) {
          throw CLI::ValidationError("--alpha0 must lie in [0,1) (or use --conjecture-n)");
        }
        cfg["alpha0"] = nt_alpha0;
        cfg["ns"] = nt_ns;
        cfg["grid"] = nt_grid;
      }
      return emit(cfg, out_prefix);
    }
    if (fixed_cmd->parsed()) {
      const json cfg = {{"subcommand", "fixedpoints"}, {"alpha", fp_alpha}, {"beta", fp_beta}};
      return emit(cfg, out_prefix);
    }
    if (verify_cmd->parsed()) {
      return verify_manifest(verify_path);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
}

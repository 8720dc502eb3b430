#include "cylgabor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cylgabor/fock.hpp"
#include "cylgabor/io.hpp"
#include "cylgabor/stft.hpp"
#include "cylgabor/verify.hpp"

namespace cylgabor::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(what + ": '" + s + "' is not a finite number");
  }
}

int to_int(const std::string& s, const std::string& what) {
  const double v = to_double(s, what);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw UsageError(what + ": '" + s + "' is not an integer");
  return int(v);
}

// Prefix "name:" split off, empty argument when there is no colon.
std::pair<std::string, std::string> tagged(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    io::write_file(path, text);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Window parse_window(const std::string& text) {
  const auto [kind, arg] = tagged(text);
  if (kind == "gaussian" && arg.empty()) return Window::gaussian();
  if (kind == "hermite") {
    const int r = to_int(arg, "--window hermite:R");
    if (r < 0) throw UsageError("--window hermite:R needs R >= 0");
    return Window::hermite(r);
  }
  if (kind == "tp" && !arg.empty()) return Window::totally_positive(io::load_tp(arg));
  throw UsageError("--window: expected gaussian, hermite:R or tp:FILE, got '" + text + "'");
}

GridSpec parse_grid(const std::string& text) {
  const auto p = split(text, ',');
  if (p.size() != 6) throw UsageError("--grid: expected x0,x1,nx,xi0,xi1,nxi, got '" + text + "'");
  GridSpec g{to_double(p[0], "--grid x0"), to_double(p[1], "--grid x1"), to_int(p[2], "--grid nx"),
             to_double(p[3], "--grid xi0"), to_double(p[4], "--grid xi1"), to_int(p[5], "--grid nxi")};
  try {
    g.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("--grid: ") + e.what());
  }
  return g;
}

CylinderPoint parse_point(const std::string& text) {
  const auto p = split(text, ',');
  if (p.size() != 2) throw UsageError("expected a point x,xi, got '" + text + "'");
  return {to_double(p[0], "point x"), to_double(p[1], "point xi")};
}

Beta parse_beta(const std::string& text) {
  Beta b;
  try {
    b.exact = Rational::parse(text);
    b.value = b.exact.value();
    b.rational = true;
  } catch (const std::exception&) {
    if (text.find('/') != std::string::npos) throw UsageError("--beta: malformed fraction '" + text + "'");
    b.value = to_double(text, "--beta");
  }
  if (!(b.value > 0.0)) throw UsageError("--beta must be positive");
  return b;
}

PointSet detect_structure(std::vector<CylinderPoint> pts) {
  if (pts.empty()) throw UsageError("point file holds no points");
  std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.xi < b.xi; });
  const std::size_t n = pts.size();
  if (n >= 3 && n % 2 == 1) {
    const double beta = (pts.back().xi - pts.front().xi) / double(n - 1);
    const CylinderPoint mid = pts[n / 2];
    const double x0 = mid.canonical().x;
    bool lattice = beta > 0.0;
    for (std::size_t k = 0; k < n && lattice; ++k) {
      const double want = mid.xi + beta * (double(k) - double(n / 2));
      const double dx = std::abs(pts[k].canonical().x - x0);
      lattice = std::abs(pts[k].xi - want) <= 1e-9 * std::max(1.0, std::abs(want)) && std::min(dx, 1.0 - dx) <= 1e-12;
    }
    if (lattice) return PointSet::vertical_lattice(beta, int(n / 2), mid);
  }
  PointSet Z = PointSet::finite(pts, pts.front().xi, pts.back().xi);
  Z.validate();
  return Z;
}

namespace {

struct Options {
  std::string window = "gaussian";
  std::string beta = "1/2";
  double nu = 0.0;
  int modes = 32;
  double tol = 1e-12;
  std::string grid = "0,1,4,-2,2,4";
  std::string points;
  std::string samples;
  std::string signal;
  std::string out;
  std::string suite = "all";
  std::string type = "fock-analytic";
  std::string w = "0,0";
  int interpolate = -1;
  double r_max = 200.0;
  int r_steps = 12;
};

int cmd_stft(const Options& o, std::ostream& out) {
  if (o.signal.empty()) throw UsageError("stft needs --signal FILE");
  const QPSignal f = io::load_signal(o.signal);
  const Window g = parse_window(o.window);
  const GridSpec grid = parse_grid(o.grid);
  emit(io::dump_grid_csv(grid, stft_grid(f, g, grid)), o.out, out);
  return kExitOk;
}

int cmd_framebounds(const Options& o, std::ostream& out) {
  const Window g = parse_window(o.window);
  const Beta beta = parse_beta(o.beta);
  if (o.modes < 2) throw UsageError("--modes must be at least 2");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const FrameBounds fb = frame_bounds(FrameSpec{g, beta.value, o.nu, o.modes, o.tol});
  const PredicateResult pred = sufficient_frame_predicate(g, beta.value, beta.rational);
  const double ratio = fb.B > 0.0 ? fb.A / fb.B : 0.0;
  // The estimate is a finite section, so only gross disagreement with the predicate is flagged.
  std::string flag;
  if (pred.verdict == Verdict::frame && ratio < 1e-8) flag = "predicate says frame but A/B < 1e-8";
  if (pred.verdict == Verdict::not_frame && ratio > 1e-3) flag = "predicate says no frame but A/B > 1e-3";

  ordered_json j;
  j["window"] = g.label();
  j["beta"] = beta.value;
  if (beta.rational) j["beta_fraction"] = std::to_string(beta.exact.p) + "/" + std::to_string(beta.exact.q);
  j["nu"] = o.nu;
  j["K"] = fb.K;
  j["N"] = fb.N;
  j["A"] = fb.A;
  j["B"] = fb.B;
  j["ratio"] = ratio;
  j["convergence"] = fb.convergence;
  j["verdict_predicate"] = to_string(pred.verdict);
  j["certificate"] = pred.certificate;
  j["flagged"] = !flag.empty();
  if (!flag.empty()) j["flag_reason"] = flag;
  emit(dump(j), o.out, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& names = verify::suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    std::string known = "all";
    for (const auto& n : names) known += ", " + n;
    throw UsageError("unknown suite '" + o.suite + "' (known: " + known + ")");
  }
  const auto reports = verify::run(o.suite);
  emit(verify::to_json(reports) + "\n", o.out, out);
  bool ok = true;
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (!c.passed) {
        ok = false;
        err << "FAILED " << r.suite << "/" << c.name << ": measured " << io::fmt(c.measured) << ", needs "
            << c.relation << " " << io::fmt(c.tolerance) << "\n";
      }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_density(const Options& o, std::ostream& out) {
  if (o.points.empty()) throw UsageError("density needs --points FILE");
  if (!(o.r_max >= 1.0) || o.r_steps < 1) throw UsageError("density needs --rmax >= 1 and --steps >= 1");
  const PointSet Z = detect_structure(io::parse_points_csv(io::read_file(o.points), o.points));
  const DensityReport d = beurling_density(Z, o.r_max, o.r_steps);
  ordered_json j;
  j["structure"] = Z.structure == PointSet::Structure::vertical_lattice ? "vertical_lattice" : "finite";
  if (Z.structure == PointSet::Structure::vertical_lattice) j["beta"] = Z.beta;
  j["points"] = Z.size();
  j["separation"] = Z.size() > 1 ? ordered_json(separation(Z)) : ordered_json(nullptr);
  j["lower"] = d.lower;
  j["upper"] = d.upper;
  j["exact"] = d.exact ? ordered_json(*d.exact) : ordered_json(nullptr);
  j["window_limited"] = d.window_limited;
  ordered_json hist = ordered_json::array();
  for (const auto& s : d.history) hist.push_back({{"r", s.r}, {"lower", s.lower}, {"upper", s.upper}});
  j["history"] = hist;
  emit(dump(j), o.out, out);
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.samples.empty()) throw UsageError("reconstruct needs --samples FILE");
  auto samples = io::parse_samples_csv(io::read_file(o.samples), o.samples);
  std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.p.xi < b.p.xi; });
  std::vector<CylinderPoint> pts;
  std::vector<cplx> values;
  for (const auto& s : samples) {
    pts.push_back(s.p);
    values.push_back(s.value);
  }
  const PointSet Z = detect_structure(pts);
  const GridSpec grid = parse_grid(o.grid);
  Eigen::MatrixXcd V(grid.nxi, grid.nx);
  double worst_tail = 0.0;
  for (int j = 0; j < grid.nxi; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const cplx z(grid.x(i), grid.xi(j));
      if (o.interpolate >= 0) {
        V(j, i) = interpolate_true(o.interpolate, Z, values, z);
      } else {
        const SeriesValue s = sample_reconstruct(Z, values, z, o.nu);
        V(j, i) = s.value;
        worst_tail = std::max(worst_tail, s.tail_estimate);
      }
    }
  emit(io::dump_grid_csv(grid, V), o.out, out);
  if (o.interpolate < 0) err << "largest truncation tail estimate: " << io::fmt(worst_tail) << "\n";
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const Window g = parse_window(o.window);
  const Beta beta = parse_beta(o.beta);
  if (!beta.rational) throw UsageError("dual needs a rational --beta");
  if (o.out.empty()) throw UsageError("dual needs --out FILE for the window samples");
  const DualWindow d = dual_window(g, beta.exact);
  const double wr = wexler_raz_residual(g, d.gamma, beta.value, {-3, 3}, {-3, 3});
  const SampledWindow& s = *d.gamma.samples();
  std::string csv = "t,re,im\n";
  for (std::size_t k = 0; k < s.values.size(); ++k)
    csv += io::fmt(s.t(k)) + "," + io::fmt(s.values[k].real()) + "," + io::fmt(s.values[k].imag()) + "\n";
  io::write_file(o.out, csv);
  ordered_json j;
  j["beta"] = std::to_string(beta.exact.p) + "/" + std::to_string(beta.exact.q);
  j["samples"] = s.values.size();
  j["step"] = s.step;
  j["min_singular"] = d.min_singular;
  j["max_singular"] = d.max_singular;
  j["period"] = d.period;
  j["wexler_raz_residual"] = wr;
  out << dump(j);
  return kExitOk;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const auto [kind, arg] = tagged(o.type);
  const CylinderPoint w = parse_point(o.w);
  const GridSpec grid = parse_grid(o.grid);
  std::function<cplx(CylinderPoint)> K;
  auto level = [&](const std::string& what) {
    const int v = to_int(arg, "--type " + what);
    if (v < 0) throw UsageError("--type " + what + " must be non-negative");
    return v;
  };
  if (kind == "gabor") {
    const Window g = parse_window(o.window);
    K = [g, &o, w](CylinderPoint z) { return gabor_kernel(g, o.nu, z, w); };
  } else if (kind == "gaussian") {
    K = [&o, w](CylinderPoint z) { return kernel_gaussian_closed(o.nu, z, w); };
  } else if (kind == "hermite") {
    const int r = level("hermite:R");
    K = [r, &o, w](CylinderPoint z) { return kernel_hermite_closed(r, o.nu, z, w); };
  } else if (kind == "fock-analytic") {
    K = [&o, w](CylinderPoint z) { return fock_kernel_analytic(o.nu, z.z(), w.z()); };
  } else if (kind == "fock-theta") {
    K = [&o, w](CylinderPoint z) { return fock_kernel_analytic_theta(o.nu, z.z(), w.z()); };
  } else if (kind == "fock-true") {
    const int r = level("fock-true:R");
    K = [r, &o, w](CylinderPoint z) { return fock_kernel_true(r, o.nu, z.z(), w.z()); };
  } else if (kind == "fock-poly") {
    const int N = level("fock-poly:N");
    if (N < 1) throw UsageError("--type fock-poly:N needs N >= 1");
    K = [N, &o, w](CylinderPoint z) { return fock_kernel_poly(N, o.nu, z.z(), w.z()); };
  } else {
    throw UsageError("--type: expected gabor, gaussian, hermite:R, fock-analytic, fock-theta, fock-true:R or "
                     "fock-poly:N, got '" + o.type + "'");
  }
  Eigen::MatrixXcd V(grid.nxi, grid.nx);
  for (int j = 0; j < grid.nxi; ++j)
    for (int i = 0; i < grid.nx; ++i) V(j, i) = K({grid.x(i), grid.xi(j)});
  emit(io::dump_grid_csv(grid, V), o.out, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gabor analysis on the cylinder: transforms, frame bounds, kernels and verification suites",
               "cylgabor"};
  app.require_subcommand(1);

  auto window = [&](CLI::App* c) { c->add_option("--window", o.window, "gaussian | hermite:R | tp:FILE"); };
  auto beta = [&](CLI::App* c) { c->add_option("--beta", o.beta, "lattice step, p/q or decimal"); };
  auto nu = [&](CLI::App* c) { c->add_option("--nu", o.nu, "character of the quasi-periodic space"); };
  auto grid = [&](CLI::App* c) { c->add_option("--grid", o.grid, "x0,x1,nx,xi0,xi1,nxi"); };
  auto outfile = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };

  CLI::App* stft = app.add_subcommand("stft", "STFT of a signal on a grid, CSV");
  stft->add_option("--signal", o.signal, "signal JSON")->required();
  window(stft);
  grid(stft);
  outfile(stft);

  CLI::App* fb = app.add_subcommand("framebounds", "frame bounds of the lattice system, JSON");
  window(fb);
  beta(fb);
  nu(fb);
  fb->add_option("--modes", o.modes, "mode cutoff K");
  fb->add_option("--tol", o.tol, "window truncation tolerance");
  outfile(fb);

  CLI::App* ver = app.add_subcommand("verify", "run verification suites, JSON");
  std::string positional_suite;
  ver->add_option("name", positional_suite, "suite name or all (same as --suite)");
  ver->add_option("--suite", o.suite, "suite name or all");
  outfile(ver);

  CLI::App* den = app.add_subcommand("density", "separation and density of a point set, JSON");
  den->add_option("--points", o.points, "points CSV (x,xi)")->required();
  den->add_option("--rmax", o.r_max, "largest window height");
  den->add_option("--steps", o.r_steps, "number of radii");
  outfile(den);

  CLI::App* rec = app.add_subcommand("reconstruct", "function from samples on a grid, CSV");
  rec->add_option("--samples", o.samples, "samples CSV (x,xi,re,im)")->required();
  rec->add_option("--interpolate", o.interpolate, "interpolate in the true space of this level instead");
  nu(rec);
  grid(rec);
  outfile(rec);

  CLI::App* dual = app.add_subcommand("dual", "canonical dual window: samples to --out, report to stdout");
  window(dual);
  beta(dual);
  outfile(dual);

  CLI::App* ker = app.add_subcommand("kernel", "reproducing kernel K(z, w) over a grid of z, CSV");
  ker->add_option("--type", o.type,
                  "gabor | gaussian | hermite:R | fock-analytic | fock-theta | fock-true:R | fock-poly:N");
  ker->add_option("--w", o.w, "second argument x,xi");
  window(ker);
  nu(ker);
  grid(ker);
  outfile(ker);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cylgabor: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*stft) return cmd_stft(o, out);
    if (*fb) return cmd_framebounds(o, out);
    if (*ver) {
      if (!positional_suite.empty()) o.suite = positional_suite;
      return cmd_verify(o, out, err);
    }
    if (*den) return cmd_density(o, out);
    if (*rec) return cmd_reconstruct(o, out, err);
    if (*dual) return cmd_dual(o, out);
    if (*ker) return cmd_kernel(o, out);
  } catch (const UsageError& e) {
    err << "cylgabor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::ParseError& e) {
    err << "cylgabor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::FileError& e) {
    err << "cylgabor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "cylgabor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cylgabor: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace cylgabor::cli

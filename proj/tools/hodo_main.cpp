#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hodo/io.hpp"
#include "hodo/reproduce.hpp"
#include "hodo/svg.hpp"

namespace {

using namespace hodo;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open file: " + path);
  return in;
}

// Pretty c*q^2: collapses to (s*q)^2 when c is a perfect square.
std::string square_decomposition_string(const Rational& c,
                                        const RatFunc<Rational>& q) {
  if (auto s = rat_is_square(c)) {
    RatFunc<Rational> inner = q * *s;
    return "(" + inner.to_string() + ")^2";
  }
  return c.to_string() + " * (" + q.to_string() + ")^2";
}

int cmd_check_curve(const std::string& path) {
  auto in = open_input(path);
  PHCurve r = read_curve(in);
  Report rep;
  auto sp = speed_squared(r);
  rep.add("speed2", sp.to_string());
  auto verdict = is_ph(r);
  if (verdict) {
    rep.add("ph", "yes");
    rep.add("sigma2_scale", verdict->first.to_string());
    rep.add("sigma2_base", verdict->second.to_string());
    rep.add("sigma2", square_decomposition_string(verdict->first, verdict->second));
  } else {
    rep.add("ph", "no");
    rep.add("reason", "speed squared is not a square in R(t)");
  }
  std::cout << rep.to_string();
  return kOk;
}

int cmd_check_map(const std::string& path) {
  auto in = open_input(path);
  RationalMap phi = read_map(in);
  Report rep;
  try {
    auto verdict = is_ph_preserving(phi);
    if (verdict) {
      rep.add("ph_preserving", "yes");
      rep.add("lambda2_scale", verdict->first.to_string());
      rep.add("lambda2_base", verdict->second.to_string());
      rep.add("lambda2",
              square_decomposition_string(verdict->first, verdict->second));
    } else {
      rep.add("ph_preserving", "no");
      auto g = first_fundamental_form(phi);
      std::string reason = "diagonal entry is not a square in R(u)";
      const std::size_t m = phi.source_dim();
      for (std::size_t a = 0; a < m && reason.size(); ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          if (!g.entries[a][b].is_zero()) reason = "off-diagonal metric entry is nonzero";
      for (std::size_t a = 1; a < m; ++a)
        if (!(g.entries[a][a] == g.entries[0][0])) reason = "diagonal entries differ";
      rep.add("reason", reason);
    }
  } catch (const RankDeficient& e) {
    rep.add("ph_preserving", "no");
    rep.add("reason", std::string("RankDeficient: ") + e.what());
  }
  std::cout << rep.to_string();
  return kOk;
}

int cmd_from_psi(const std::string& expr) {
  auto psi = parse_expr<Gaussian>(expr, {"z"});
  Report rep;
  rep.add("psi", psi.to_string());
  try {
    auto phi = phi_from_psi(psi);
    rep.add("phi", phi.to_string());
  } catch (const NonzeroResidue& e) {
    rep.add("error", "NonzeroResidue");
    rep.add("remainder", e.remainder.to_string());
  }
  std::cout << rep.to_string();
  return kOk;
}

int cmd_solve_residues(const std::string& path) {
  auto in = open_input(path);
  LaurentSpec spec = read_laurent_spec(in);
  std::vector<Gaussian> locations;
  for (const auto& pole : spec.poles) locations.push_back(pole.location);
  Report rep;
  rep.add("poly", spec.polynomial_part.to_string());
  try {
    auto sol = solve_simple_pole_coeffs(spec.polynomial_part, locations);
    if (!sol) {
      rep.add("solution", "absent");
    } else {
      for (std::size_t k = 0; k < sol->size(); ++k)
        rep.add("a" + std::to_string(k + 1), (*sol)[k].to_string());
      LaurentSpec solved = spec;
      for (std::size_t k = 0; k < sol->size(); ++k)
        solved.poles[k].coefficients = {(*sol)[k]};
      auto psi = solved.to_ratfunc();
      rep.add("psi", psi.to_string());
      rep.add("phi", phi_from_psi(psi).to_string());
    }
  } catch (const SingularSystem& e) {
    rep.add("error", "SingularSystem");
    rep.add("detail", e.what());
  }
  std::cout << rep.to_string();
  return kOk;
}

int cmd_reproduce(const std::string& only) {
  std::string out;
  bool all = run_reproduce(only, out);
  std::cout << out;
  return all ? kOk : kInternal;
}

int cmd_plot(const std::string& path, const std::string& a, const std::string& b,
             int samples, int grid, const std::string& out_path) {
  auto ra = Rational::parse(a);
  auto rb = Rational::parse(b);
  if (!ra || !rb) throw FileFormatError("range bounds must be rationals");
  PlotSpec spec{*ra, *rb, samples, grid};

  auto in = open_input(path);
  std::string head;
  {
    std::streampos pos = in.tellg();
    std::getline(in, head);
    in.seekg(pos);
  }
  std::vector<std::vector<Polyline>> panels;
  if (head.rfind("params:", 0) == 0) {
    panels = curve_panels(read_curve(in), spec);
  } else if (head.rfind("source_dim:", 0) == 0) {
    panels = map_grid_panels(read_map(in), spec);
  } else {
    throw FileFormatError("unrecognized plot input (need a curve or map file)");
  }
  std::string svg = render_svg(panels);
  std::ofstream out(out_path);
  if (!out) throw FileFormatError("cannot write: " + out_path);
  out << svg;
  std::cout << "wrote: " << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Pythagorean-hodograph curves and PH-preserving maps"};
  app.require_subcommand(1);

  std::string curve_path, map_path, psi_expr, residues_path, only_id;
  std::string plot_path, plot_out = "plot.svg", range_a = "-10", range_b = "10";
  int samples = 400, grid = 10;

  auto* check_curve = app.add_subcommand("check-curve", "PH verdict for a curve file");
  check_curve->add_option("file", curve_path, "curve file")->required();

  auto* check_map = app.add_subcommand("check-map", "PH-preservation verdict for a map file");
  check_map->add_option("file", map_path, "map file")->required();

  auto* from_psi = app.add_subcommand("from-psi", "integrate Psi^2 into a planar PH-preserving map");
  from_psi->add_option("expr", psi_expr, "rational expression in z over Q(i)")->required();

  auto* solve = app.add_subcommand("solve-residues", "solve simple-pole coefficients from a laurent file");
  solve->add_option("file", residues_path, "laurent spec file")->required();

  auto* repro = app.add_subcommand("reproduce-paper", "run the golden example suite");
  repro->add_option("--only", only_id, "run a single item by id");

  auto* plot = app.add_subcommand("plot", "sample a curve or map-grid into an SVG");
  plot->add_option("file", plot_path, "curve or map file")->required();
  plot->add_option("--range", [&range_a, &range_b](CLI::results_t res) {
        range_a = res.at(0);
        range_b = res.at(1);
        return true;
      }, "parameter range a b")->expected(2);
  plot->add_option("--samples", samples, "sample count (>= 2)");
  plot->add_option("--grid", grid, "grid lines per direction for map plots");
  plot->add_option("--out", plot_out, "output SVG path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_curve->parsed()) return cmd_check_curve(curve_path);
    if (check_map->parsed()) return cmd_check_map(map_path);
    if (from_psi->parsed()) return cmd_from_psi(psi_expr);
    if (solve->parsed()) return cmd_solve_residues(residues_path);
    if (repro->parsed()) return cmd_reproduce(only_id);
    if (plot->parsed())
      return cmd_plot(plot_path, range_a, range_b, samples, grid, plot_out);
  } catch (const hodo::FileFormatError& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInput;
  } catch (const hodo::SyntaxError& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInput;
  } catch (const hodo::UndeclaredVariable& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInput;
  } catch (const hodo::ImaginaryInRealContext& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInput;
  } catch (const hodo::EmptyPlot& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInput;
  } catch (const hodo::Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

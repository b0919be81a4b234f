#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "stoc/stoc.h"

namespace stoc::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(key, "cannot parse '" + text + "' as a number");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::densities: return "densities";
    case Mode::diff_pol: return "diff-pol";
    case Mode::int_pol: return "int-pol";
    case Mode::fom: return "fom";
    case Mode::figure: return "figure";
  }
  return "?";
}

}  // namespace

Grid Grid::parse(const std::string& text, const std::string& key) {
  auto parts = split(text, ':');
  Grid g;
  if (!parts.empty() && parts.front() == "log") {
    g.log = true;
    parts.erase(parts.begin());
  }
  if (parts.size() != 3) {
    throw UsageError(key, "expected [log:]start:stop:count, got '" + text + "'");
  }
  g.start = parse_number(parts[0], key);
  g.stop = parse_number(parts[1], key);
  const double count = parse_number(parts[2], key);
  if (count < 1 || count != std::floor(count) || count > 1e7) {
    throw UsageError(key, "grid count must be a positive integer");
  }
  g.count = static_cast<int>(count);
  if (g.count == 1 ? g.stop != g.start : !(g.stop > g.start)) {
    throw UsageError(key, "grid needs start < stop (or start == stop with count 1)");
  }
  if (g.start < 0.0) throw UsageError(key, "grid values must be >= 0");
  if (g.log && !(g.start > 0.0)) throw UsageError(key, "log grid needs start > 0");
  return g;
}

std::vector<double> Grid::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    v[i] = log ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  if (count > 1) v.back() = stop;
  return v;
}

std::string Grid::str() const {
  return std::string(log ? "log:" : "") + fmt17(start) + ":" + fmt17(stop) + ":" +
         std::to_string(count);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Spin-to-orbital conversion simulator for electron Bessel beams", "stoc"};
  app.set_help_flag();
  app.require_subcommand(1, 1);
  app.allow_config_extras(false);
  app.set_config("--config", "", "key = value file with default flag values");

  std::string voltage, alpha, band, radius, qr, out, format;
  app.add_option("--voltage", voltage, "accelerating voltage [V]");
  app.add_option("--alpha", alpha, "convergence angle [rad]");
  app.add_option("--alpha-band", band, "ring aperture band lo:hi [rad]");
  app.add_option("--radius", radius, "detector radii [log:]start:stop:count [nm]");
  app.add_option("--qr", qr, "dimensionless radii [log:]start:stop:count");
  app.add_option("--out", out, "output file (directory for figure presets)");
  app.add_option("--format", format, "csv or json");

  RunConfig cfg;
  int figure = 0;
  for (const char* name : {"densities", "diff-pol", "int-pol", "fom"}) {
    app.add_subcommand(name)->fallthrough();
  }
  auto* fig = app.add_subcommand("figure", "figure reproduction preset");
  fig->fallthrough();
  fig->add_option("n", figure, "figure number 2..5")->required();

  // CLI11 consumes arguments back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string key = "argv";
    const std::string msg = e.what();
    for (const char* k : {"voltage", "alpha-band", "alpha", "radius", "qr", "out", "format", "config"}) {
      if (msg.find(k) != std::string::npos) {
        key = k;
        break;
      }
    }
    throw UsageError(key, msg);
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  if (sub == "densities") cfg.mode = Mode::densities;
  else if (sub == "diff-pol") cfg.mode = Mode::diff_pol;
  else if (sub == "int-pol") cfg.mode = Mode::int_pol;
  else if (sub == "fom") cfg.mode = Mode::fom;
  else cfg.mode = Mode::figure;

  if (cfg.mode == Mode::figure) {
    if (figure < 2 || figure > 5) throw UsageError("figure", "figure presets are 2, 3, 4 and 5");
    cfg.figure = figure;
  }
  if (!voltage.empty()) cfg.voltage = parse_number(voltage, "voltage");
  if (!(cfg.voltage > 0.0)) throw UsageError("voltage", "voltage must be positive");
  if (!alpha.empty()) cfg.alpha = parse_number(alpha, "alpha");
  const double alpha_limit = (cfg.mode == Mode::densities || cfg.mode == Mode::diff_pol)
                                 ? std::numbers::pi
                                 : 0.5 * std::numbers::pi;
  if (!(cfg.alpha >= 0.0 && cfg.alpha < alpha_limit)) {
    throw UsageError("alpha", "alpha out of range [0, " + fmt17(alpha_limit) + ")");
  }
  if (!band.empty()) {
    const auto parts = split(band, ':');
    if (parts.size() != 2) throw UsageError("alpha-band", "expected lo:hi, got '" + band + "'");
    const double lo = parse_number(parts[0], "alpha-band");
    const double hi = parse_number(parts[1], "alpha-band");
    if (!(lo >= 0.0 && lo < hi && hi < 0.5 * std::numbers::pi)) {
      throw UsageError("alpha-band", "need 0 <= lo < hi < pi/2");
    }
    cfg.alpha_band = std::make_pair(lo, hi);
  }
  if (cfg.mode == Mode::fom && !cfg.alpha_band) {
    throw UsageError("alpha-band", "fom needs a ring aperture band (--alpha-band lo:hi)");
  }
  if (!radius.empty()) cfg.radius = Grid::parse(radius, "radius");
  if (!qr.empty()) cfg.qr = Grid::parse(qr, "qr");
  cfg.out = out;
  if (format.empty() || format == "csv") cfg.format = Format::csv;
  else if (format == "json") cfg.format = Format::json;
  else throw UsageError("format", "format must be csv or json, got '" + format + "'");
  return cfg;
}

std::vector<std::string> serialize(const RunConfig& c) {
  std::vector<std::string> a{mode_name(c.mode)};
  if (c.mode == Mode::figure) a.push_back(std::to_string(c.figure));
  a.insert(a.end(), {"--voltage", fmt17(c.voltage), "--alpha", fmt17(c.alpha)});
  if (c.alpha_band) {
    a.insert(a.end(), {"--alpha-band", fmt17(c.alpha_band->first) + ":" + fmt17(c.alpha_band->second)});
  }
  a.insert(a.end(), {"--radius", c.radius.str(), "--qr", c.qr.str(), "--format",
                     c.format == Format::csv ? "csv" : "json"});
  if (!c.out.empty()) a.insert(a.end(), {"--out", c.out});
  return a;
}

namespace {

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string render(const Table& t, Format format) {
  std::ostringstream os;
  if (format == Format::csv) {
    os << "# tool: stoc " << stoc_version() << '\n';
    for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt17(row[i]);
      os << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json j;
  j["tool"] = std::string("stoc ") + stoc_version();
  for (const auto& [k, v] : t.meta) j["meta"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(1) + "\n";
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw RunError("cannot open '" + tmp.string() + "' for writing");
    f << text;
    if (!f.flush()) throw RunError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw RunError("cannot move output into place at '" + path.string() + "'");
  }
}

void check(stoc_status s, const std::string& point) {
  if (s != STOC_OK) throw RunError(std::string(stoc_last_error()) + " at " + point);
}

struct BeamHandle {
  stoc_beam* ptr = nullptr;
  BeamHandle(const BeamHandle&) = delete;
  BeamHandle& operator=(const BeamHandle&) = delete;
  BeamHandle() = default;
  ~BeamHandle() { stoc_beam_destroy(ptr); }
};

std::string point_of(double voltage, double alpha,
                     const std::optional<std::pair<double, double>>& band) {
  std::string p = "voltage=" + fmt17(voltage);
  if (band) p += " alpha_band=" + fmt17(band->first) + ":" + fmt17(band->second);
  else p += " alpha=" + fmt17(alpha);
  return p;
}

std::vector<std::pair<std::string, std::string>> beam_meta(
    const std::string& mode, double voltage, double alpha,
    const std::optional<std::pair<double, double>>& band, const std::string& config) {
  std::vector<std::pair<std::string, std::string>> m{{"mode", mode}};
  if (mode != "densities" && mode != "diff-pol") m.emplace_back("voltage_V", fmt17(voltage));
  if (band) m.emplace_back("alpha_band_rad", fmt17(band->first) + ":" + fmt17(band->second));
  else m.emplace_back("alpha_rad", fmt17(alpha));
  m.emplace_back("config", config);
  return m;
}

Table densities_table(double alpha, const std::vector<double>& qr, const std::string& config) {
  Table t{beam_meta("densities", 0.0, alpha, std::nullopt, config), {"q_r", "rho_up", "rho_down"}, {}};
  for (double x : qr) {
    double up = 0.0, down = 0.0;
    check(stoc_spin_densities(x, alpha, &up, &down), "q_r=" + fmt17(x) + " alpha=" + fmt17(alpha));
    t.rows.push_back({x, up, down});
  }
  return t;
}

Table diffpol_table(double alpha, const std::vector<double>& qr, const std::string& config) {
  Table t{beam_meta("diff-pol", 0.0, alpha, std::nullopt, config), {"q_r", "p_diff"}, {}};
  for (double x : qr) {
    double p = 0.0;
    check(stoc_differential_polarisation(x, alpha, &p), "q_r=" + fmt17(x) + " alpha=" + fmt17(alpha));
    t.rows.push_back({x, p});
  }
  return t;
}

Table intpol_table(double voltage, double alpha,
                   const std::optional<std::pair<double, double>>& band,
                   const std::vector<double>& radii, const std::string& config) {
  const std::string point = point_of(voltage, alpha, band);
  BeamHandle h;
  if (band) check(stoc_beam_create_annular(voltage, band->first, band->second, &h.ptr), point);
  else check(stoc_beam_create_pure(voltage, alpha, &h.ptr), point);
  std::vector<double> p(radii.size());
  check(stoc_beam_polarisation_sweep(h.ptr, radii.data(), radii.size(), p.data()), point);
  Table t{beam_meta("int-pol", voltage, alpha, band, config), {"delta_r_nm", "p"}, {}};
  for (std::size_t i = 0; i < radii.size(); ++i) t.rows.push_back({radii[i], p[i]});
  return t;
}

struct FomOutcome {
  Table table;
  double peak_radius;
  double peak_fom;
};

FomOutcome fom_table(double voltage, std::pair<double, double> band,
                     const std::vector<double>& radii, double peak_lo, double peak_hi,
                     const std::string& config) {
  const std::string point = point_of(voltage, 0.0, band);
  BeamHandle h;
  check(stoc_beam_create_annular(voltage, band.first, band.second, &h.ptr), point);
  std::vector<stoc_polarimetry> res(radii.size());
  check(stoc_beam_fom_sweep(h.ptr, radii.data(), radii.size(), res.data()), point);
  FomOutcome o{{beam_meta("fom", voltage, 0.0, band, config), {"delta_r_nm", "p", "de", "fom"}, {}},
               0.0, 0.0};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    o.table.rows.push_back({radii[i], res[i].polarisation, res[i].detection_efficiency,
                            res[i].figure_of_merit});
  }
  check(stoc_beam_fom_peak(h.ptr, peak_lo, peak_hi, &o.peak_radius, &o.peak_fom), point);
  return o;
}

void emit(const Table& t, const RunConfig& c, const std::filesystem::path& path,
          std::ostream& summary) {
  const std::string text = render(t, c.format);
  if (path.empty()) {
    summary << text;
    return;
  }
  write_atomically(path, text);
}

std::string extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

void run_figure(const RunConfig& c, std::ostream& summary) {
  const std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) {
    throw RunError("cannot create output directory '" + dir.string() + "'");
  }
  const std::string config = "figure " + std::to_string(c.figure);
  const auto file = [&](const std::string& stem) { return dir / (stem + extension(c.format)); };

  switch (c.figure) {
    case 2: {
      const auto qr = Grid{false, 0.0, 10.0, 501}.values();
      for (int n = 0; n <= 5; ++n) {
        const double alpha = n * std::numbers::pi / 10.0;
        const std::string stem = "fig2_n" + std::to_string(n);
        emit(densities_table(alpha, qr, config), c, file(stem + "_densities"), summary);
        emit(diffpol_table(alpha, qr, config), c, file(stem + "_diffpol"), summary);
      }
      summary << "figure 2: wrote 12 tables to " << dir.string() << '\n';
      break;
    }
    case 3: {
      const auto radii = Grid{true, 1e-3, 3.0, 241}.values();
      for (const auto& [v, stem] : {std::pair{200000.0, "fig3_200kV"}, std::pair{20000.0, "fig3_20kV"},
                                    std::pair{2000.0, "fig3_2kV"}}) {
        emit(intpol_table(v, 0.05, std::nullopt, radii, config), c, file(stem), summary);
      }
      summary << "figure 3: wrote 3 tables to " << dir.string() << '\n';
      break;
    }
    case 4: {
      const auto radii = Grid{true, 1e-3, 3.0, 241}.values();
      for (const auto& [a, stem] : {std::pair{0.010, "fig4_10mrad"}, std::pair{0.025, "fig4_25mrad"},
                                    std::pair{0.050, "fig4_50mrad"}}) {
        emit(intpol_table(20000.0, a, std::nullopt, radii, config), c, file(stem), summary);
      }
      summary << "figure 4: wrote 3 tables to " << dir.string() << '\n';
      break;
    }
    case 5: {
      const auto radii = Grid{false, 0.0, 1.0, 201}.values();
      for (const auto& [v, band, stem] :
           {std::tuple{20000.0, std::pair{8e-3, 12e-3}, "fig5_20kV"},
            std::tuple{200.0, std::pair{80e-3, 120e-3}, "fig5_200V"}}) {
        const auto o = fom_table(v, band, radii, 0.01, 5.0, config);
        emit(o.table, c, file(stem), summary);
        summary << stem << ": peak_fom=" << fmt17(o.peak_fom)
                << " delta_r_nm=" << fmt17(o.peak_radius) << '\n';
      }
      break;
    }
    default:
      throw RunError("unknown figure preset " + std::to_string(c.figure));
  }
}

}  // namespace

void run(const RunConfig& c, std::ostream& summary) {
  const std::string config = join_args(serialize(c));
  switch (c.mode) {
    case Mode::densities:
      emit(densities_table(c.alpha, c.qr.values(), config), c, c.out, summary);
      break;
    case Mode::diff_pol:
      emit(diffpol_table(c.alpha, c.qr.values(), config), c, c.out, summary);
      break;
    case Mode::int_pol:
      emit(intpol_table(c.voltage, c.alpha, c.alpha_band, c.radius.values(), config), c, c.out,
           summary);
      break;
    case Mode::fom: {
      const auto radii = c.radius.values();
      const double lo = radii.front();
      const double hi = radii.back() > lo ? radii.back() : lo + 1.0;
      const auto o = fom_table(c.voltage, *c.alpha_band, radii, lo, hi, config);
      emit(o.table, c, c.out, summary);
      summary << "peak_fom=" << fmt17(o.peak_fom) << " delta_r_nm=" << fmt17(o.peak_radius) << '\n';
      break;
    }
    case Mode::figure:
      run_figure(c, summary);
      break;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args.front() == "--help" || args.front() == "-h")) {
    out << "usage: stoc <densities|diff-pol|int-pol|fom|figure N> [--voltage V] [--alpha RAD]\n"
           "            [--alpha-band LO:HI] [--radius [log:]START:STOP:COUNT]\n"
           "            [--qr [log:]START:STOP:COUNT] [--out PATH] [--format csv|json]\n"
           "            [--config FILE]\n";
    return 0;
  }
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    std::string msg = e.what();
    for (char& ch : msg) if (ch == '\n') ch = ' ';
    err << "error: key=" << e.key() << " message=\"" << msg << "\"\n";
    return 2;
  }
  try {
    run(cfg, out);
  } catch (const std::exception& e) {
    err << "error: key=run message=\"" << e.what() << "\"\n";
    return 1;
  }
  return 0;
}

}  // namespace stoc::cli

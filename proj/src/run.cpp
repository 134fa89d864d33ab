#include "spinorth/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spinorth/version.hpp"

namespace spinorth {

namespace {

using Json = nlohmann::ordered_json;

Config with_axis_value(const Config& base, const std::string& axis, double value) {
  Config c = base;
  c.axis2.reset();
  if (axis == "gamma")
    c.chain.anisotropy = value;
  else if (axis == "lambda")
    c.chain.field = value;
  else if (axis == "dm")
    c.chain.dm = value;
  else if (axis == "g")
    c.chain.coupling = value;
  else if (axis == "n_sites")
    c.chain.n_sites = static_cast<int>(std::llround(value));
  else if (axis == "p")
    c.p = value;
  else
    throw ConfigError("grid.axis2", "unknown axis name '" + axis + "'");
  return c;
}

void write_header(const Config& cfg, const char* schema, std::ostream& os) {
  os << "# spinorth " << schema << "\n";
  os << "# version = " << kVersion << "\n";
  for (const auto& [key, value] : cfg.describe()) os << "# " << key << " = " << value << "\n";
}

Json params_json(const Config& cfg) {
  Json j;
  for (const auto& [key, value] : cfg.describe()) j[key] = value;
  return j;
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SignalArtifact run_signal(const Config& cfg) {
  cfg.validate();
  SignalArtifact art;
  art.config = cfg;
  const std::vector<double> grid = cfg.time_grid();
  art.signal = orthogonality_signal(cfg.signal_request(), grid, cfg.threads);
  art.s14.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    art.s14[i] = decoherence_factor(grid[i], 1, 4, cfg.chain);
  return art;
}

SweepArtifact run_sweep(const Config& cfg) {
  cfg.validate();
  if (!cfg.axis2) throw ConfigError("grid.axis2", "a sweep needs a second axis");

  SweepArtifact art;
  art.config = cfg;
  art.times = cfg.time_grid();
  art.axis2_name = cfg.axis2->name;
  art.axis2_values = cfg.axis2->values;
  art.rows.reserve(art.axis2_values.size());
  for (const double v : art.axis2_values) {
    const Config point = with_axis_value(cfg, art.axis2_name, v);
    point.chain.validate();
    const OrthogonalitySignal sig =
        orthogonality_signal(point.signal_request(), art.times, cfg.threads);
    std::vector<double> row(sig.overlaps.size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::abs(sig.overlaps[i]);
    art.rows.push_back(std::move(row));
  }
  return art;
}

EventsArtifact run_events(const Config& cfg) {
  cfg.validate();
  EventsArtifact art;
  art.config = cfg;
  const SignalRequest req = cfg.signal_request();
  const OrthogonalitySignal sig = orthogonality_signal(req, cfg.time_grid(), cfg.threads);
  art.fallback_samples = sig.fallback_samples.size();
  art.events = find_orthogonality_events(sig, cfg.threshold, abs_overlap_evaluator(req));
  return art;
}

VerifyArtifact run_verify(const Config& cfg) {
  cfg.validate();
  VerifyArtifact art;
  art.config = cfg;
  art.report = divergence_report(cfg.chain, cfg.time_grid());
  return art;
}

void write_csv(const SignalArtifact& a, std::ostream& os) {
  write_header(a.config, "signal v1", os);
  os << "# fallback_samples = " << a.signal.fallback_samples.size() << "\n";
  os << "t,re_Sor,im_Sor,abs_Sor,re_S14,im_S14\n";
  for (std::size_t i = 0; i < a.signal.times.size(); ++i) {
    const Complex sor = a.signal.overlaps[i];
    const Complex s14 = a.s14[i];
    os << format_full(a.signal.times[i]) << ',' << format_full(sor.real()) << ','
       << format_full(sor.imag()) << ',' << format_full(std::abs(sor)) << ','
       << format_full(s14.real()) << ',' << format_full(s14.imag()) << "\n";
  }
}

void write_csv(const SweepArtifact& a, std::ostream& os) {
  write_header(a.config, "sweep v1", os);
  os << "t," << a.axis2_name << ",abs_Sor\n";
  for (std::size_t j = 0; j < a.axis2_values.size(); ++j)
    for (std::size_t i = 0; i < a.times.size(); ++i)
      os << format_full(a.times[i]) << ',' << format_full(a.axis2_values[j]) << ','
         << format_full(a.rows[j][i]) << "\n";
}

void write_json(const SignalArtifact& a, std::ostream& os) {
  Json j;
  j["schema"] = "spinorth-signal-v1";
  j["version"] = kVersion;
  j["params"] = params_json(a.config);
  j["fallback_samples"] = a.signal.fallback_samples;
  j["t"] = a.signal.times;
  Json re = Json::array(), im = Json::array(), mag = Json::array();
  for (const Complex& c : a.signal.overlaps) {
    re.push_back(c.real());
    im.push_back(c.imag());
    mag.push_back(std::abs(c));
  }
  j["re_Sor"] = std::move(re);
  j["im_Sor"] = std::move(im);
  j["abs_Sor"] = std::move(mag);
  Json re14 = Json::array(), im14 = Json::array();
  for (const Complex& c : a.s14) {
    re14.push_back(c.real());
    im14.push_back(c.imag());
  }
  j["re_S14"] = std::move(re14);
  j["im_S14"] = std::move(im14);
  os << j.dump(2) << "\n";
}

void write_json(const SweepArtifact& a, std::ostream& os) {
  Json j;
  j["schema"] = "spinorth-sweep-v1";
  j["version"] = kVersion;
  j["params"] = params_json(a.config);
  j["t"] = a.times;
  j[a.axis2_name] = a.axis2_values;
  j["abs_Sor"] = a.rows;
  os << j.dump(2) << "\n";
}

void write_json(const EventsArtifact& a, std::ostream& os) {
  Json j;
  j["schema"] = "spinorth-events-v1";
  j["version"] = kVersion;
  j["params"] = params_json(a.config);
  j["threshold"] = a.config.threshold;
  j["count"] = a.events.count;
  if (a.events.first_event)
    j["first_event"] = *a.events.first_event;
  else
    j["first_event"] = nullptr;
  j["event_times"] = a.events.event_times;
  j["fallback_samples"] = a.fallback_samples;
  os << j.dump(2) << "\n";
}

void write_json(const VerifyArtifact& a, std::ostream& os) {
  Json j;
  j["schema"] = "spinorth-verify-v1";
  j["version"] = kVersion;
  j["params"] = params_json(a.config);
  Json pairs = Json::array();
  for (const PairGap& g : a.report.pairs) {
    Json p;
    p["alpha"] = g.alpha;
    p["beta"] = g.beta;
    p["max_abs_gap"] = g.max_abs_gap;
    p["max_modulus_gap"] = g.max_modulus_gap;
    p["max_phase_gap"] = g.max_phase_gap;
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  j["max_abs_gap"] = a.report.max_abs_gap;
  j["dm_sensitive"] = a.report.dm_sensitive;
  os << j.dump(2) << "\n";
}

void write_text(const VerifyArtifact& a, std::ostream& os) {
  os << "divergence of the analytic product formula from the exact pair dynamics\n";
  for (const auto& [key, value] : a.config.describe()) os << "  " << key << " = " << value << "\n";
  os << "\n  pair      max|dS|        max|d|S||      max|dphase|\n";
  char line[128];
  for (const PairGap& g : a.report.pairs) {
    std::snprintf(line, sizeof(line), "  S_%d%d   %12.5e   %12.5e   %12.5e\n", g.alpha, g.beta,
                  g.max_abs_gap, g.max_modulus_gap, g.max_phase_gap);
    os << line;
  }
  std::snprintf(line, sizeof(line), "\n  max gap: %.5e   dm_sensitive: %s\n", a.report.max_abs_gap,
                a.report.dm_sensitive ? "yes" : "no");
  os << line;
}

namespace {

// fixed five-stop colormap, dark blue -> yellow
struct Rgb {
  double r, g, b;
};

Rgb colormap(double x) {
  static constexpr Rgb stops[5] = {{0.050, 0.030, 0.330},
                                   {0.230, 0.300, 0.750},
                                   {0.130, 0.570, 0.550},
                                   {0.370, 0.780, 0.380},
                                   {0.990, 0.910, 0.140}};
  x = std::clamp(x, 0.0, 1.0) * 4.0;
  const int lo = std::min(3, static_cast<int>(x));
  const double f = x - lo;
  const Rgb& a = stops[lo];
  const Rgb& b = stops[lo + 1];
  return {a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)};
}

std::string hex_color(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(std::lround(c.r * 255)),
                static_cast<int>(std::lround(c.g * 255)),
                static_cast<int>(std::lround(c.b * 255)));
  return buf;
}

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

constexpr int kW = 840, kH = 520, kMargin = 60;

void svg_open(std::ostream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
     << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"24\" font-family=\"monospace\" font-size=\"14\" "
     << "text-anchor=\"middle\">" << title << "</text>\n";
}

void svg_axes(std::ostream& os, double x0, double x1, double y0, double y1,
              const std::string& xlabel, const std::string& ylabel) {
  const int px0 = kMargin, px1 = kW - kMargin, py0 = kH - kMargin, py1 = kMargin;
  os << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << px1 - px0 << "\" height=\""
     << py0 - py1 << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = i / 5.0;
    const double vx = x0 + fx * (x1 - x0);
    const double px = px0 + fx * (px1 - px0);
    os << "<text x=\"" << svg_num(px) << "\" y=\"" << py0 + 18
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << svg_num(vx)
       << "</text>\n";
    const double vy = y0 + fx * (y1 - y0);
    const double py = py0 - fx * (py0 - py1);
    os << "<text x=\"" << px0 - 8 << "\" y=\"" << svg_num(py + 4)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << svg_num(vy)
       << "</text>\n";
  }
  os << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kH - 16
     << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << xlabel
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << (py0 + py1) / 2
     << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 16 " << (py0 + py1) / 2 << ")\">" << ylabel << "</text>\n";
}

}  // namespace

void write_svg(const SignalArtifact& a, std::ostream& os) {
  const auto& ts = a.signal.times;
  svg_open(os, "abs_Sor(t)");
  svg_axes(os, ts.front(), ts.back(), 0.0, 1.0, "t", "abs_Sor");
  const int px0 = kMargin, px1 = kW - kMargin, py0 = kH - kMargin, py1 = kMargin;
  os << "<polyline fill=\"none\" stroke=\"#20509e\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double fx = (ts[i] - ts.front()) / (ts.back() - ts.front());
    const double fy = std::clamp(std::abs(a.signal.overlaps[i]), 0.0, 1.0);
    os << svg_num(px0 + fx * (px1 - px0)) << ',' << svg_num(py0 - fy * (py0 - py1)) << ' ';
  }
  os << "\"/>\n</svg>\n";
}

void write_svg(const SweepArtifact& a, std::ostream& os) {
  const int px0 = kMargin, px1 = kW - kMargin, py0 = kH - kMargin, py1 = kMargin;
  const std::size_t nx = a.times.size();
  const std::size_t ny = a.axis2_values.size();

  if (ny <= 8) {
    // few curves: draw them as lines
    static constexpr const char* palette[8] = {"#20509e", "#b03a2e", "#1e8449", "#7d3c98",
                                               "#b7950b", "#148f77", "#a04000", "#2e4053"};
    svg_open(os, "abs_Sor(t) per " + a.axis2_name);
    svg_axes(os, a.times.front(), a.times.back(), 0.0, 1.0, "t", "abs_Sor");
    for (std::size_t j = 0; j < ny; ++j) {
      os << "<polyline fill=\"none\" stroke=\"" << palette[j % 8]
         << "\" stroke-width=\"1\" points=\"";
      for (std::size_t i = 0; i < nx; ++i) {
        const double fx = (a.times[i] - a.times.front()) / (a.times.back() - a.times.front());
        const double fy = std::clamp(a.rows[j][i], 0.0, 1.0);
        os << svg_num(px0 + fx * (px1 - px0)) << ',' << svg_num(py0 - fy * (py0 - py1)) << ' ';
      }
      os << "\"/>\n";
      os << "<text x=\"" << px1 - 6 << "\" y=\"" << py1 + 16 + 14 * static_cast<int>(j)
         << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\" fill=\""
         << palette[j % 8] << "\">" << a.axis2_name << "=" << svg_num(a.axis2_values[j])
         << "</text>\n";
    }
    os << "</svg>\n";
    return;
  }

  svg_open(os, "abs_Sor over " + a.axis2_name + " x t");
  svg_axes(os, a.times.front(), a.times.back(), a.axis2_values.front(), a.axis2_values.back(), "t",
           a.axis2_name);
  // cap the cell count, then merge same-color runs along each row
  const std::size_t sx = (nx + 499) / 500;
  const std::size_t sy = (ny + 199) / 200;
  const std::size_t cx = (nx + sx - 1) / sx;
  const std::size_t cy = (ny + sy - 1) / sy;
  const double cw = static_cast<double>(px1 - px0) / static_cast<double>(cx);
  const double ch = static_cast<double>(py0 - py1) / static_cast<double>(cy);
  // 24 discrete color bands render as contour levels and merge into long runs
  auto level = [](double v) { return std::floor(std::clamp(v, 0.0, 1.0) * 24.0) / 24.0; };
  for (std::size_t j = 0; j < cy; ++j) {
    std::size_t i = 0;
    while (i < cx) {
      const double band = level(a.rows[j * sy][i * sx]);
      const std::string fill = hex_color(colormap(band));
      std::size_t run = i + 1;
      while (run < cx && level(a.rows[j * sy][run * sx]) == band) ++run;
      os << "<rect x=\"" << svg_num(px0 + cw * static_cast<double>(i)) << "\" y=\""
         << svg_num(py0 - ch * static_cast<double>(j + 1)) << "\" width=\""
         << svg_num(cw * static_cast<double>(run - i) + 0.5) << "\" height=\"" << svg_num(ch + 0.5)
         << "\" fill=\"" << fill << "\"/>\n";
      i = run;
    }
  }
  os << "</svg>\n";
}

}  // namespace spinorth

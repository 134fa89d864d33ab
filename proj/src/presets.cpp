#include "spinorth/presets.hpp"

namespace spinorth {

namespace {

std::vector<double> linspace_step(double lo, double hi, double step) {
  std::vector<double> out;
  for (double v = lo; v <= hi + step * 1e-9; v += step) out.push_back(v);
  return out;
}

Config pes_base() {
  Config c;
  c.state_kind = "pure";
  c.p = 0.5;
  // the pure family's own eigenvector sits at family index 4
  c.pair = PairSelector{4, 4};
  return c;
}

Config mes_base() {
  Config c;
  c.state_kind = "bell";
  c.pair = PairSelector{3, 3};
  return c;
}

Config with_gamma_curves(Config c) {
  c.axis2 = SweepAxis{"gamma", {0.0, 0.5, 1.0}};
  return c;
}

std::vector<FigurePreset> build() {
  std::vector<FigurePreset> out;

  {
    Config c = with_gamma_curves(pes_base());
    c.chain = {.n_sites = 7, .anisotropy = 0, .field = 0, .dm = 0, .coupling = 0.1};
    out.push_back({"pes-n7", "partially entangled state, N=7, lambda=0, D=0, g=0.1", c});
    c.chain.n_sites = 27;
    out.push_back({"pes-n27", "partially entangled state, N=27, lambda=0, D=0, g=0.1", c});
  }
  {
    Config c = with_gamma_curves(pes_base());
    c.chain = {.n_sites = 7, .anisotropy = 0, .field = 0.2, .dm = 0, .coupling = 0.1};
    out.push_back({"pes-lambda02", "partially entangled state, N=7, lambda=0.2", c});
    c.chain.field = 0.9;
    out.push_back({"pes-lambda09", "partially entangled state, N=7, lambda=0.9", c});
  }
  {
    Config c = with_gamma_curves(pes_base());
    c.chain = {.n_sites = 7, .anisotropy = 0, .field = 0, .dm = 0, .coupling = 0.3};
    out.push_back({"pes-g03", "partially entangled state, N=7, strong coupling g=0.3", c});
  }
  {
    Config c = with_gamma_curves(pes_base());
    c.chain = {.n_sites = 13, .anisotropy = 0, .field = 0.1, .dm = 0, .coupling = 0.1};
    out.push_back({"pes-dm0-n13", "partially entangled state, N=13, lambda=0.1, D=0", c});
    c.chain.dm = 0.3;
    out.push_back({"pes-dm03-n13", "partially entangled state, N=13, lambda=0.1, D=0.3", c});
  }
  {
    Config c = pes_base();
    c.chain = {.n_sites = 3, .anisotropy = 0, .field = 1.0, .dm = 0.5, .coupling = 0.05};
    c.axis2 = SweepAxis{"gamma", linspace_step(0.0, 1.0, 0.01)};
    out.push_back({"pes-contour-n3", "partially entangled state over the gamma-time plane, N=3", c});
    c.chain.n_sites = 9;
    out.push_back({"pes-contour-n9", "partially entangled state over the gamma-time plane, N=9", c});
  }
  {
    Config c = mes_base();
    c.chain = {.n_sites = 3, .anisotropy = 0, .field = 1.0, .dm = 0.5, .coupling = 0.05};
    c.axis2 = SweepAxis{"gamma", linspace_step(0.0, 1.0, 0.01)};
    out.push_back({"mes-contour-gamma-n3", "Bell state over the gamma-time plane, N=3", c});
    c.chain.n_sites = 9;
    out.push_back({"mes-contour-gamma-n9", "Bell state over the gamma-time plane, N=9", c});
  }
  for (const auto& [suffix, label, gamma] :
       std::vector<std::tuple<std::string, std::string, double>>{
           {"gamma0", "0", 0.0}, {"gamma05", "0.5", 0.5}, {"gamma1", "1", 1.0}}) {
    Config c = mes_base();
    c.chain = {.n_sites = 7, .anisotropy = gamma, .field = 1.0, .dm = 0, .coupling = 0.1};
    c.axis2 = SweepAxis{"dm", linspace_step(0.0, 1.0, 0.01)};
    out.push_back({"mes-contour-dm-n7-" + suffix,
                   "Bell state over the DM-time plane, N=7, gamma=" + label, c});
  }
  {
    Config c = with_gamma_curves(mes_base());
    c.chain = {.n_sites = 7, .anisotropy = 0, .field = 0, .dm = 0, .coupling = 0.3};
    out.push_back({"mes-g03", "Bell state, N=7, strong coupling g=0.3", c});
  }
  return out;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build();
  return presets;
}

std::optional<FigurePreset> find_preset(const std::string& name) {
  for (const auto& p : figure_presets())
    if (p.name == name) return p;
  return std::nullopt;
}

}  // namespace spinorth

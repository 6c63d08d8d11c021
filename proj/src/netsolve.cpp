#include "chainlab/netsolve.hpp"

#include <cmath>
#include <stdexcept>

#include "chainlab/errors.hpp"

namespace chainlab {

static void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(what) + " must be > 0");
}

complex Branch::impedance(double f) const {
  require_positive(f, "Branch: frequency");
  const double w = two_pi * f;
  const complex jw(0.0, w);
  switch (kind) {
    case BranchKind::resistor:
      require_positive(r_ohm, "Branch: resistance");
      return complex(r_ohm, 0.0);
    case BranchKind::inductor:
      require_positive(l_h, "Branch: inductance");
      return jw * l_h;
    case BranchKind::capacitor:
      require_positive(c_f, "Branch: capacitance");
      return 1.0 / (jw * c_f);
    case BranchKind::series_lc:
      require_positive(l_h, "Branch: inductance");
      require_positive(c_f, "Branch: capacitance");
      return jw * l_h + 1.0 / (jw * c_f);
    case BranchKind::parallel_lc: {
      require_positive(l_h, "Branch: inductance");
      require_positive(c_f, "Branch: capacitance");
      // Y = 1/(jwL) + jwC; at resonance Y -> 0 and Z diverges, which is
      // fine in series placement but singular as an ABCD shunt only when
      // inverted, so work in admittance.
      complex y = 1.0 / (jw * l_h) + jw * c_f;
      if (std::abs(y) == 0.0)
        throw analysis_error("Branch: parallel LC evaluated at resonance");
      return 1.0 / y;
    }
  }
  throw std::domain_error("Branch: unknown kind");
}

Branch series_r(double r) {
  return Branch{BranchPlacement::series, BranchKind::resistor, r, 0.0, 0.0};
}
Branch series_l(double l) {
  return Branch{BranchPlacement::series, BranchKind::inductor, 0.0, l, 0.0};
}
Branch series_c(double c) {
  return Branch{BranchPlacement::series, BranchKind::capacitor, 0.0, 0.0, c};
}
Branch series_lc(double l, double c) {
  return Branch{BranchPlacement::series, BranchKind::series_lc, 0.0, l, c};
}
Branch shunt_l(double l) {
  return Branch{BranchPlacement::shunt, BranchKind::inductor, 0.0, l, 0.0};
}
Branch shunt_c(double c) {
  return Branch{BranchPlacement::shunt, BranchKind::capacitor, 0.0, 0.0, c};
}
Branch shunt_parallel_lc(double l, double c) {
  return Branch{BranchPlacement::shunt, BranchKind::parallel_lc, 0.0, l, c};
}

Abcd abcd_of(const Branch& br, double f) {
  Abcd m;
  if (br.placement == BranchPlacement::series) {
    m.b = br.impedance(f);
  } else {
    // Shunt element enters as an admittance; compute it directly so a
    // parallel-LC branch stays finite at its resonance (y -> 0).
    const double w = two_pi * f;
    const complex jw(0.0, w);
    complex y;
    switch (br.kind) {
      case BranchKind::parallel_lc:
        require_positive(f, "Branch: frequency");
        require_positive(br.l_h, "Branch: inductance");
        require_positive(br.c_f, "Branch: capacitance");
        y = 1.0 / (jw * br.l_h) + jw * br.c_f;
        break;
      default:
        y = 1.0 / br.impedance(f);
        break;
    }
    m.c = y;
  }
  return m;
}

Abcd cascade(const Abcd& m1, const Abcd& m2) {
  Abcd r;
  r.a = m1.a * m2.a + m1.b * m2.c;
  r.b = m1.a * m2.b + m1.b * m2.d;
  r.c = m1.c * m2.a + m1.d * m2.c;
  r.d = m1.c * m2.b + m1.d * m2.d;
  return r;
}

Abcd ladder_abcd(const LadderNetwork& net, double f) {
  Abcd m;
  for (const Branch& br : net.branches) m = cascade(m, abcd_of(br, f));
  return m;
}

complex input_impedance(const Abcd& m, complex z_load) {
  complex den = m.c * z_load + m.d;
  if (std::abs(den) == 0.0)
    throw analysis_error("input_impedance: singular termination");
  return (m.a * z_load + m.b) / den;
}

double resonance_hz(double l_h, double c_f) {
  require_positive(l_h, "resonance_hz: inductance");
  require_positive(c_f, "resonance_hz: capacitance");
  return 1.0 / (two_pi * std::sqrt(l_h * c_f));
}

complex zin_degenerated(const TransistorSmallSignal& q, double ls_h,
                        double lg_h, double f) {
  require_positive(f, "zin_degenerated: frequency");
  require_positive(q.gm_s, "zin_degenerated: gm");
  require_positive(q.ct_f(), "zin_degenerated: gate capacitance");
  require_positive(ls_h, "zin_degenerated: source inductance");
  if (lg_h < 0.0)
    throw std::domain_error("zin_degenerated: gate inductance must be >= 0");
  const double w = two_pi * f;
  const double ct = q.ct_f();
  return complex(0.0, -1.0 / (w * ct)) + complex(0.0, w * (ls_h + lg_h)) +
         complex(q.gm_s * ls_h / ct, 0.0);
}

double synthesized_real_ohm(const TransistorSmallSignal& q, double ls_h) {
  require_positive(q.ct_f(), "synthesized_real_ohm: gate capacitance");
  require_positive(ls_h, "synthesized_real_ohm: source inductance");
  return q.gm_s * ls_h / q.ct_f();
}

LadderNetwork input_ladder(const MatchingNetworkSpec& m) {
  LadderNetwork net;
  net.branches.push_back(series_lc(m.l1_h, m.c1_f));
  net.branches.push_back(shunt_parallel_lc(m.l2_h, m.c2_f + m.c_pad_f));
  net.branches.push_back(series_l(m.lg_h));
  return net;
}

complex LnaLoadSpec::impedance(double f) const {
  require_positive(f, "LnaLoadSpec: frequency");
  require_positive(rd_ohm, "LnaLoadSpec: Rd");
  require_positive(ld_h, "LnaLoadSpec: Ld");
  if (cout_f < 0.0)
    throw std::domain_error("LnaLoadSpec: Cout must be >= 0");
  const complex s(0.0, two_pi * f);
  complex num = rd_ohm * (1.0 + s * ld_h / rd_ohm);
  complex den = 1.0 + s * rd_ohm * cout_f + s * s * ld_h * cout_f;
  if (std::abs(den) == 0.0)
    throw analysis_error("LnaLoadSpec: load resonance is singular");
  return num / den;
}

double LnaLoadSpec::spur_resonance_hz() const {
  return resonance_hz(ld_h, cout_f);
}

// Termination seen at the end of the passive ladder: the degenerated device
// without the gate inductor (that one is the ladder's last series branch).
static complex device_termination(const LnaDesign& d, double f) {
  return zin_degenerated(d.device, d.match.ls_h, 0.0, f);
}

complex lna_input_impedance(const LnaDesign& d, double f) {
  Abcd m = ladder_abcd(input_ladder(d.match), f);
  return input_impedance(m, device_termination(d, f));
}

double lna_gain_db(const LnaDesign& d, double f) {
  require_positive(d.rs_ohm, "lna_gain_db: source resistance");
  const double w = two_pi * f;
  const double ct = d.device.ct_f();
  Abcd m = ladder_abcd(input_ladder(d.match), f);
  complex zt = device_termination(d, f);
  // Branch current into the termination for unit source voltage:
  //   i = 1 / (A*Zt + B + Rs*(C*Zt + D))
  complex den = m.a * zt + m.b + d.rs_ohm * (m.c * zt + m.d);
  if (std::abs(den) == 0.0)
    throw analysis_error("lna_gain_db: singular input network");
  double i_mag = std::abs(1.0 / den);
  // Doubly-terminated transmission (1 at a perfect match), then the device
  // transconductance working into the drain load.
  double wmag = 2.0 * d.rs_ohm * i_mag;
  double gain =
      d.device.gm_s * wmag / (w * ct * d.rs_ohm) * std::abs(d.load.impedance(f));
  return db_from_ratio(gain, DbKind::amplitude);
}

double chebyshev_gamma(double rho_p) {
  if (!(rho_p >= 1.0))
    throw std::domain_error("chebyshev_gamma: ripple ratio must be >= 1");
  return std::sqrt(1.0 - 1.0 / rho_p);
}

double nf_spot_db(const NoiseProfile& p, double f) {
  if (p.freq_hz.size() != p.nf_db.size() || p.freq_hz.size() < 2)
    throw std::domain_error("NoiseProfile: need at least two points");
  for (std::size_t i = 1; i < p.freq_hz.size(); ++i)
    if (!(p.freq_hz[i] > p.freq_hz[i - 1]))
      throw std::domain_error("NoiseProfile: frequencies must increase");
  if (f < p.freq_hz.front() || f > p.freq_hz.back())
    throw std::range_error("nf_spot_db: frequency outside profile domain");
  std::size_t hi = 1;
  while (hi < p.freq_hz.size() - 1 && p.freq_hz[hi] < f) ++hi;
  const double f0 = p.freq_hz[hi - 1], f1 = p.freq_hz[hi];
  const double t = (std::log(f) - std::log(f0)) / (std::log(f1) - std::log(f0));
  return p.nf_db[hi - 1] + t * (p.nf_db[hi] - p.nf_db[hi - 1]);
}

std::vector<LnaSweepRow> lna_sweep(const LnaDesign& d, const NoiseProfile& nf,
                                   const FrequencyGrid& grid) {
  std::vector<LnaSweepRow> rows;
  rows.reserve(grid.points);
  for (std::size_t i = 0; i < grid.points; ++i) {
    LnaSweepRow row;
    row.f_hz = grid.at(i);
    row.zin = lna_input_impedance(d, row.f_hz);
    row.s11_db = s11_db(reflection_coefficient(row.zin, d.rs_ohm));
    row.gain_db = lna_gain_db(d, row.f_hz);
    row.nf_db = nf_spot_db(nf, row.f_hz);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chainlab

#pragma once

#include <cstddef>
#include <vector>

#include "chainlab/rfcore.hpp"

namespace chainlab {

// ---------------------------------------------------------------------------
// Lumped ladder networks via ABCD (chain) matrices.
// ---------------------------------------------------------------------------

enum class BranchPlacement { series, shunt };
enum class BranchKind { resistor, inductor, capacitor, series_lc, parallel_lc };

// One ladder branch.  Unused element values stay at zero; the ones required
// by `kind` must be positive.
struct Branch {
  BranchPlacement placement;
  BranchKind kind;
  double r_ohm = 0.0;
  double l_h = 0.0;
  double c_f = 0.0;

  // Branch impedance at f (Hz).  Throws std::domain_error for f <= 0 or a
  // missing element value.
  complex impedance(double f) const;
};

Branch series_r(double r);
Branch series_l(double l);
Branch series_c(double c);
Branch series_lc(double l, double c);
Branch shunt_l(double l);
Branch shunt_c(double c);
Branch shunt_parallel_lc(double l, double c);

// 2x2 chain matrix [[a, b], [c, d]] relating (v1, i1) to (v2, i2).
struct Abcd {
  complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
};

Abcd abcd_of(const Branch& br, double f);
Abcd cascade(const Abcd& first, const Abcd& second);

struct LadderNetwork {
  std::vector<Branch> branches;  // source side first
};

// Chain matrix of the whole ladder at f.
Abcd ladder_abcd(const LadderNetwork& net, double f);

// Impedance seen looking into a two-port terminated by z_load.
// Throws analysis_error if the denominator vanishes (singular termination).
complex input_impedance(const Abcd& m, complex z_load);

// Resonance of a lossless LC pair: 1 / (2*pi*sqrt(L*C)).
double resonance_hz(double l_h, double c_f);

// ---------------------------------------------------------------------------
// Inductively degenerated common-source LNA.
// ---------------------------------------------------------------------------

// Small-signal view of the input device: transconductance plus the total
// gate capacitance split into intrinsic Cgs and extrinsic pad/ESD Cp.
struct TransistorSmallSignal {
  double gm_s;   // transconductance
  double cgs_f;  // gate-source capacitance
  double cp_f;   // extrinsic gate-node capacitance

  double ct_f() const { return cgs_f + cp_f; }
};

// Input impedance of the degenerated device with gate inductance lg:
//   Zin = 1/(jw*Ct) + jw*(Ls+Lg) + gm*Ls/Ct
// The last term is the synthesized real part, frequency independent.
complex zin_degenerated(const TransistorSmallSignal& q, double ls_h,
                        double lg_h, double f);

double synthesized_real_ohm(const TransistorSmallSignal& q, double ls_h);

// Bandpass input matching ladder: series L1+C1, shunt L2 || (C2 + c_pad),
// then series Lg into the degenerated device.  c_pad absorbs the pad/ESD
// parasitics loading the interior node; set it to 0 for the bare netlist.
struct MatchingNetworkSpec {
  double l1_h, c1_f;
  double l2_h, c2_f;
  double lg_h;
  double ls_h;
  double c_pad_f = 0.0;
};

// The passive ladder only (source side first, without the device).
LadderNetwork input_ladder(const MatchingNetworkSpec& m);

// Drain load: Rd in series with Ld, shunted by Cout at the output node.
struct LnaLoadSpec {
  double ld_h;
  double rd_ohm;
  double cout_f;

  // Z_L(f) = Rd*(1 + jw*Ld/Rd) / (1 + jw*Rd*Cout + (jw)^2*Ld*Cout)
  complex impedance(double f) const;

  // Parasitic Ld/Cout resonance that sets the out-of-band gain spur.
  double spur_resonance_hz() const;
};

struct LnaDesign {
  TransistorSmallSignal device;
  MatchingNetworkSpec match;
  LnaLoadSpec load;
  double rs_ohm = 50.0;  // source and reference impedance
};

// Impedance looking into the complete input network (ladder terminated by
// the degenerated device).
complex lna_input_impedance(const LnaDesign& d, double f);

// Source-referenced voltage gain |vout / (vs/2)|.  The ladder transmission
// W = 2*Rs*i_branch/vs is ~1 in the matched band, and the device converts
// branch current to output through gm/(w*Ct) into the drain load.
double lna_gain_db(const LnaDesign& d, double f);

// Passband ripple -> worst-case in-band reflection for a Chebyshev match:
// |gamma| = sqrt(1 - 1/rho_p), rho_p >= 1 (power ripple ratio).
double chebyshev_gamma(double rho_p);

// Measured noise-figure profile, interpolated linearly in (log f, NF dB).
struct NoiseProfile {
  std::vector<double> freq_hz;  // strictly increasing
  std::vector<double> nf_db;
};

// Throws std::range_error outside the profile domain.
double nf_spot_db(const NoiseProfile& p, double f);

struct LnaSweepRow {
  double f_hz;
  complex zin;
  double s11_db;
  double gain_db;
  double nf_db;
};

// Full response sweep; the grid must lie inside the noise profile domain.
std::vector<LnaSweepRow> lna_sweep(const LnaDesign& d, const NoiseProfile& nf,
                                   const FrequencyGrid& grid);

}  // namespace chainlab

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "chainlab/chain.hpp"
#include "chainlab/dco.hpp"
#include "chainlab/netsolve.hpp"
#include "chainlab/specan.hpp"
#include "chainlab/txblocks.hpp"

namespace chainlab {

// Flat run configuration behind the CLI.  Values are plain numbers/strings
// settable through `section.key = value` lines; the build_* accessors
// construct validated module objects and attach the section name to any
// invariant violation.
struct RunConfig {
  std::string profile = "default";
  std::string out_dir = "out";
  std::size_t seed = 1;  // randomized property sweeps in the test suite

  // --- LNA -----------------------------------------------------------------
  double lna_l1_h = 1.375e-9;
  double lna_c1_f = 1.08e-12;
  double lna_l2_h = 3e-9;
  double lna_c2_f = 0.1e-12;
  double lna_lg_h = 0.2e-9;
  double lna_ls_h = 1e-9;
  double lna_c_pad_f = 0.5e-12;  // interior-node pad/ESD loading
  double lna_gm_s = 0.079;
  double lna_cgs_f = 0.2e-12;
  double lna_cp_f = 1.38e-12;
  double lna_ld_h = 1.75e-9;
  double lna_rd_ohm = 40.0;
  double lna_cout_f = 0.3e-12;
  double lna_rs_ohm = 50.0;
  double lna_gain_db = 9.0;            // budget gain in "fixed" mode
  std::string lna_gain_mode = "fixed"; // fixed | computed
  // Measured noise profile as (f_hz, nf_db) breakpoints.
  std::vector<std::pair<double, double>> lna_nf_table = {
      {2.0e9, 2.5}, {2.1e9, 2.5}, {6.7e9, 5.0}};

  // --- sweep grid ----------------------------------------------------------
  double grid_start_hz = 2e9;
  double grid_stop_hz = 6e9;
  std::size_t grid_points = 4001;
  std::string grid_spacing = "linear";  // linear | log

  // --- oscillator ----------------------------------------------------------
  double dco_l_h = 2e-9;
  double dco_q = 10.0;
  double dco_idc_a = 0.0;  // 0 = back-solve from dco_amplitude_v
  double dco_amplitude_v = 1.1;
  std::vector<double> dco_bank_f;  // empty = solve from targets
  std::vector<double> dco_targets_hz = {2e9, 4e9, 6e9};
  double dco_cmin_f = 50e-15;
  double dco_cmax_f = 150e-15;
  std::vector<double> dco_cgd_f = {10e-15, 10e-15, 10e-15, 10e-15};
  std::vector<double> dco_cgs_f = {20e-15, 20e-15, 20e-15, 20e-15};
  double dco_hd2_dbc = -60.0;
  double dco_hd3_dbc = -38.0;
  std::size_t dco_code = 2;
  double dco_vfine = 0.5;

  // --- phase noise ---------------------------------------------------------
  double pn_q = 10.0;
  double pn_psig_w = 3e-3;
  double pn_corner_hz = 10e3;
  double pn_noise_factor = 0.0;  // 0 = calibrate to the target below
  double pn_target_dbc = -128.0;
  double pn_target_offset_hz = 1e6;

  // --- pulse shaper --------------------------------------------------------
  double pulse_width_s = 5e-9;
  double pulse_corner_hz = 400e6;  // "inf" bypasses the shaper
  int pulse_stages = 3;
  double pulse_amplitude_v = 0.25;
  double pulse_sample_rate_hz = 16e9;

  // --- mixer ---------------------------------------------------------------
  double mixer_gain_db = 1.2;
  double mixer_nf_db = 11.2;
  std::string mixer_lo_model = "hard_switching";
  double mixer_a3 = -1.0;  // < 0 = calibrate from sfdr target at rated drive
  double mixer_sfdr_db = 23.0;
  double mixer_drive_v = 1.0;
  double mixer_if_hz = 300e6;
  double mixer_lo_hz = 6e9;
  double mixer_sample_rate_hz = 51.2e9;

  // --- transmit chain ------------------------------------------------------
  double tx_sample_rate_hz = 48e9;
  std::size_t tx_samples = std::size_t(1) << 20;
  std::size_t tx_code = 2;
  double tx_vfine = 0.5;
  std::string tx_mask = "builtin";  // builtin | path to a mask file

  // --- spectrum analysis ---------------------------------------------------
  std::string psd_window = "hann";
  std::size_t psd_fft_size = std::size_t(1) << 16;
  std::size_t psd_averages = 4;

  // --- power budget --------------------------------------------------------
  double power_dco_mw = 6.0;
  double power_mixer_mw = 12.0;
  double power_lna_mw = 11.0;
  double power_total_mw = 50.0;

  // --- builders ------------------------------------------------------------
  LnaDesign build_lna() const;
  NoiseProfile build_nf_profile() const;
  FrequencyGrid build_grid(std::size_t points_override = 0) const;
  TankConfig build_tank() const;
  PhaseNoiseModel build_phase_noise() const;  // calibrated if requested
  PulseShaperConfig build_pulse() const;
  GilbertMixerConfig build_mixer() const;
  PsdConfig build_psd(SpectrumReference ref) const;
  TxChainConfig build_tx() const;
  std::vector<PowerEntry> build_power_blocks() const;
};

// Applies `key = value` lines (with # comments) on top of `cfg`.
// Unknown keys and unparsable values raise config_error with the line number.
void apply_config_text(RunConfig& cfg, const std::string& text,
                       const std::string& origin);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

// Canonical dump: every key in schema order with exact (round-trippable)
// values.  Reapplying the dump reproduces the configuration.
std::string dump_config(const RunConfig& cfg);

RunConfig default_profile();

}  // namespace chainlab

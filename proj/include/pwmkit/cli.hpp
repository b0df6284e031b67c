#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwmkit/command.hpp"
#include "pwmkit/duty.hpp"
#include "pwmkit/io.hpp"
#include "pwmkit/simulate.hpp"
#include "pwmkit/spectrum.hpp"
#include "pwmkit/svg.hpp"
#include "pwmkit/timing.hpp"

namespace pwmkit::cli {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;      // bad arguments or config
inline constexpr int exit_unsupported = 3;  // technique / phase-count combo

// Everything one run needs, resolved from config file plus flag overrides.
// Exactly one of polar / voltage may be supplied by the caller.
struct RunManifest {
  DriveConfig drive{};
  CarrierConfig carrier{};
  Technique technique = Technique::spwm;
  std::optional<PolarCommand> polar;
  std::optional<VoltageCommand> voltage;
  Frame frame = Frame::phase;
  int polarity = +1;
  int samples = 3600;
  int cycles = 1;
  std::vector<double> m_sweep;
  std::string out_dir = ".";
  std::string format = "csv";

  PolarCommand resolve_polar() const {
    if (polar) return *polar;
    if (voltage) return to_polar(*voltage);
    throw std::invalid_argument(
        "no command given: use --m (with optional --delta-rad) or "
        "--vd/--vq/--vdc");
  }
};

namespace detail {

inline void apply_config_file(const std::string& path, DriveConfig& drive,
                              CarrierConfig& carrier) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read config file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error: " + std::string(e.what()));
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config must be a JSON object");
  }
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_phases") {
        drive.n_phases = value.get<int>();
      } else if (key == "m_l") {
        drive.m_l = value.get<double>();
      } else if (key == "m_h") {
        drive.m_h = value.get<double>();
      } else if (key == "d_o") {
        drive.d_o = value.get<double>();
      } else if (key == "blend_swap") {
        drive.blend_swap = value.get<bool>();
      } else if (key == "carrier") {
        if (!value.is_object()) {
          throw std::invalid_argument("config: carrier must be an object");
        }
        for (const auto& [ckey, cval] : value.items()) {
          if (ckey == "f_ratio") {
            carrier.f_ratio = cval.get<int>();
          } else if (ckey == "samples_per_period") {
            carrier.samples_per_period = cval.get<int>();
          } else if (ckey == "v_dc") {
            carrier.v_dc = cval.get<double>();
          } else if (ckey == "t_p_s") {
            carrier.timebase.t_p_nominal = cval.get<double>();
          } else if (ckey == "dither_s") {
            carrier.timebase.dither_amplitude = cval.get<double>();
          } else if (ckey == "seed") {
            carrier.timebase.seed = cval.get<std::uint64_t>();
          } else {
            throw std::invalid_argument("config: unknown carrier key: " + ckey);
          }
        }
      } else {
        throw std::invalid_argument("config: unknown key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config type error: " + std::string(e.what()));
  }
}

// Raw flag holders; presence is read back through CLI11 after parsing.
struct RawArgs {
  std::string technique;
  double m = 0.0;
  double delta_rad = 0.0;
  double vd = 0.0, vq = 0.0, vdc = 0.0;
  int phases = 3;
  double ml = 0.4, mh = 0.6, doff = 0.05;
  bool blend_swap = false;
  std::string frame = "phase";
  std::string polarity = "+1";
  int f_ratio = 21;
  int samples = 0;
  double tp_s = 50e-6;
  double dither_s = 0.0;
  std::uint64_t seed = 0;
  double vdc_link = 1.0;
  int cycles = 1;
  std::string out_dir = ".";
  std::string format = "csv";
  std::string config_path;
  std::string m_list;
  double m_min = 0.0, m_max = 1.0;
  int m_count = 11;
};

inline void add_common_flags(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--technique", raw.technique,
                  "spwm|thpwm|dpwm|dpwm-offset|cpwm|apwm");
  cmd->add_option("--m", raw.m, "modulation index");
  cmd->add_option("--delta-rad", raw.delta_rad, "phase advance in radians");
  cmd->add_option("--vd", raw.vd, "d-axis voltage command");
  cmd->add_option("--vq", raw.vq, "q-axis voltage command");
  cmd->add_option("--vdc", raw.vdc, "DC-link voltage estimate");
  cmd->add_option("--phases", raw.phases, "number of phases (>= 3)");
  cmd->add_option("--ml", raw.ml, "lower ramp breakpoint m_l");
  cmd->add_option("--mh", raw.mh, "upper ramp breakpoint m_h");
  cmd->add_option("--do", raw.doff, "commutation offset magnitude d_o");
  cmd->add_flag("--blend-swap", raw.blend_swap,
                "swap the APWM blend direction");
  cmd->add_option("--frame", raw.frame, "angle frame: phase|line")
      ->check(CLI::IsMember({"phase", "line"}));
  cmd->add_option("--polarity", raw.polarity, "rotation polarity: +1|-1")
      ->check(CLI::IsMember({"+1", "-1", "1"}));
  cmd->add_option("--f-ratio", raw.f_ratio, "PWM periods per electrical cycle");
  cmd->add_option("--samples", raw.samples,
                  "duty: grid points per revolution; simulate/report: "
                  "samples per PWM period");
  cmd->add_option("--tp-s", raw.tp_s, "nominal PWM period in seconds");
  cmd->add_option("--dither-s", raw.dither_s,
                  "period dither half-width in seconds");
  cmd->add_option("--seed", raw.seed, "dither RNG seed");
  cmd->add_option("--vdc-link", raw.vdc_link,
                  "DC-link voltage used for synthesis");
  cmd->add_option("--cycles", raw.cycles, "electrical cycles to synthesize");
  cmd->add_option("--out", raw.out_dir, "output directory");
  cmd->add_option("--format", raw.format, "csv|json|svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  cmd->add_option("--config", raw.config_path, "JSON config file");
}

inline void add_sweep_flags(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--m-list", raw.m_list,
                  "comma-separated modulation indices to sweep");
  cmd->add_option("--m-min", raw.m_min, "sweep start (default 0)");
  cmd->add_option("--m-max", raw.m_max, "sweep end (default 1)");
  cmd->add_option("--m-count", raw.m_count, "sweep point count (default 11)");
}

inline int parse_polarity(const std::string& text) {
  return text == "-1" ? -1 : +1;
}

// Builds the manifest: config file first, then every explicitly given flag
// on top.
inline RunManifest build_manifest(const CLI::App* sub, const RawArgs& raw,
                                  bool wants_polar) {
  RunManifest mf;
  if (sub->count("--config")) {
    apply_config_file(raw.config_path, mf.drive, mf.carrier);
  }

  if (sub->count("--phases")) mf.drive.n_phases = raw.phases;
  if (sub->count("--ml")) mf.drive.m_l = raw.ml;
  if (sub->count("--mh")) mf.drive.m_h = raw.mh;
  if (sub->count("--do")) mf.drive.d_o = raw.doff;
  if (sub->count("--blend-swap")) mf.drive.blend_swap = true;
  if (sub->count("--f-ratio")) mf.carrier.f_ratio = raw.f_ratio;
  if (sub->count("--tp-s")) mf.carrier.timebase.t_p_nominal = raw.tp_s;
  if (sub->count("--dither-s")) {
    mf.carrier.timebase.dither_amplitude = raw.dither_s;
  }
  if (sub->count("--seed")) mf.carrier.timebase.seed = raw.seed;
  if (sub->count("--vdc-link")) mf.carrier.v_dc = raw.vdc_link;
  if (sub->count("--cycles")) mf.cycles = raw.cycles;

  const ConfigCheck check = validate_config(mf.drive);
  if (!check.ok()) {
    throw std::invalid_argument("invalid drive config: " + check.message());
  }

  if (sub->count("--technique")) {
    mf.technique = technique_from_name(raw.technique);
  } else if (sub->get_name() != "convert") {
    throw std::invalid_argument("--technique is required");
  }

  mf.frame = raw.frame == "line" ? Frame::line : Frame::phase;
  mf.polarity = parse_polarity(raw.polarity);
  mf.out_dir = raw.out_dir;
  mf.format = raw.format;

  const bool m_given = sub->count("--m") > 0;
  const int v_parts = static_cast<int>(sub->count("--vd")) +
                      static_cast<int>(sub->count("--vq")) +
                      static_cast<int>(sub->count("--vdc"));
  if (wants_polar) {
    if (m_given && v_parts > 0) {
      throw std::invalid_argument(
          "give either --m or --vd/--vq/--vdc, not both");
    }
    if (!m_given && v_parts > 0 && v_parts < 3) {
      throw std::invalid_argument(
          "a voltage command needs all of --vd, --vq, --vdc");
    }
    if (m_given) {
      mf.polar = PolarCommand{raw.m, raw.delta_rad};
    } else if (v_parts == 3) {
      if (sub->count("--delta-rad")) {
        throw std::invalid_argument(
            "--delta-rad only applies with --m; a voltage command carries "
            "its own phase");
      }
      mf.voltage = VoltageCommand{raw.vd, raw.vq, raw.vdc};
    } else {
      throw std::invalid_argument(
          "no command given: use --m (with optional --delta-rad) or "
          "--vd/--vq/--vdc");
    }
  }
  return mf;
}

inline std::filesystem::path prepare_out_dir(const RunManifest& mf) {
  const std::filesystem::path dir(mf.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_manifest_fields(JsonWriter& w, const RunManifest& mf,
                                  const PolarCommand* polar) {
  w.key("technique").value(technique_name(mf.technique));
  w.key("n_phases").value(mf.drive.n_phases);
  if (polar) {
    w.key("m").value(polar->m);
    w.key("delta_rad").value(polar->delta);
  }
  w.key("m_l").value(mf.drive.m_l);
  w.key("m_h").value(mf.drive.m_h);
  w.key("d_o").value(mf.drive.d_o);
  w.key("blend_swap").value(mf.drive.blend_swap);
  w.key("f_ratio").value(mf.carrier.f_ratio);
  w.key("samples_per_period").value(mf.carrier.samples_per_period);
  w.key("v_dc").value(mf.carrier.v_dc);
  w.key("t_p_s").value(mf.carrier.timebase.t_p_nominal);
  w.key("dither_s").value(mf.carrier.timebase.dither_amplitude);
  w.key("seed").value(static_cast<unsigned long long>(
      mf.carrier.timebase.seed));
}

// Grid angle in the manifest frame, converted to the phase frame the duty
// evaluation requires.
inline ElectricalAngle manifest_angle(const RunManifest& mf, double theta) {
  if (mf.frame == Frame::line) {
    return line_to_phase(ElectricalAngle::line(theta, mf.polarity),
                         mf.drive.n_phases);
  }
  return ElectricalAngle::phase(theta, mf.polarity);
}

}  // namespace detail

// Tabulates duties over one electrical revolution.
inline int cmd_duty(const RunManifest& mf, std::ostream& err) {
  if (mf.format == "json") {
    throw std::invalid_argument("duty emits csv (optionally svg); "
                                "use --format csv or --format svg");
  }
  if (mf.samples < 2) {
    throw std::invalid_argument("duty needs --samples >= 2");
  }
  const PolarCommand polar = mf.resolve_polar();
  if (polar.m > 1.0) {
    err << "warning: m > 1 (overmodulation); duties may leave [0, 1]\n";
  }

  std::vector<std::string> columns{"theta_rad"};
  for (int r = 1; r <= mf.drive.n_phases; ++r) {
    columns.push_back("d_" + std::to_string(r));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(mf.samples));
  for (int j = 0; j < mf.samples; ++j) {
    const double theta = two_pi * j / mf.samples;
    const DutyVector dv =
        duty(mf.technique, detail::manifest_angle(mf, theta), polar, mf.drive);
    std::vector<double> row{theta};
    row.insert(row.end(), dv.duties.begin(), dv.duties.end());
    rows.push_back(std::move(row));
  }

  const auto dir = detail::prepare_out_dir(mf);
  write_text_file(dir / "duty.csv", csv_table(columns, rows));

  if (mf.format == "svg") {
    std::vector<PlotSeries> series(static_cast<std::size_t>(mf.drive.n_phases));
    for (int r = 0; r < mf.drive.n_phases; ++r) {
      auto& s = series[static_cast<std::size_t>(r)];
      s.label = columns[static_cast<std::size_t>(r) + 1];
      for (const auto& row : rows) {
        s.x.push_back(row[0]);
        s.y.push_back(row[static_cast<std::size_t>(r) + 1]);
      }
    }
    write_text_file(dir / "duty.svg",
                    line_chart_svg(std::string(technique_name(mf.technique)) +
                                       " duty cycles",
                                   "theta_rad", "duty", series));
  }
  return exit_ok;
}

// Runs the carrier comparison and writes the traces plus a JSON summary.
inline int cmd_simulate(const RunManifest& mf, std::ostream& err) {
  const PolarCommand polar = mf.resolve_polar();
  if (polar.m > 1.0) {
    err << "warning: m > 1 (overmodulation); duties saturate at the "
           "timing boundary\n";
  }
  const SwitchedWaveform wf =
      synthesize(mf.technique, polar, mf.drive, mf.carrier, mf.cycles);
  const auto pairs = line_to_line(wf);
  const auto pair_names = line_pair_names(wf.n_phases);

  const auto dir = detail::prepare_out_dir(mf);

  if (mf.format != "json") {
    std::vector<std::string> columns{"t_s"};
    for (int r = 0; r < wf.n_phases; ++r) {
      columns.push_back(std::string("v_") + static_cast<char>('a' + r));
    }
    for (const auto& name : pair_names) columns.push_back("v_" + name);

    std::string csv;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) csv += ',';
      csv += columns[c];
    }
    csv += '\n';
    for (std::size_t n = 0; n < wf.t.size(); ++n) {
      csv += format_g17(wf.t[n]);
      for (int r = 0; r < wf.n_phases; ++r) {
        csv += ',';
        csv += format_g17(wf.v_pg[static_cast<std::size_t>(r)][n]);
      }
      for (const auto& trace : pairs) {
        csv += ',';
        csv += format_g17(trace[n]);
      }
      csv += '\n';
    }
    write_text_file(dir / "waveform.csv", csv);
  }

  const double f_switch = 1.0 / wf.t_p_nominal;
  const Spectrum spec = analyze(pairs.front(), 1.0 / wf.dt);
  const BandPeak dominant = dominant_switching_component(spec, f_switch, 1, 3);

  JsonWriter w;
  w.begin_object();
  detail::write_manifest_fields(w, mf, &polar);
  w.key("cycles").value(mf.cycles);
  w.key("fundamental_hz").value(wf.fundamental_freq);
  w.key("utilization");
  if (polar.m > 0.0) {
    w.value(utilization_report(mf.technique, polar, mf.drive, mf.carrier));
  } else {
    w.null();
  }
  const auto counts = switching_count(wf);
  double total_count = 0.0;
  w.key("switch_transitions_per_phase").begin_array();
  for (double c : counts) {
    w.value(c);
    total_count += c;
  }
  w.end_array();
  w.key("switch_transitions_total").value(total_count);
  w.key("dominant_component").begin_object();
  w.key("multiple").value(dominant.multiple);
  w.key("freq_hz").value(dominant.freq_hz);
  w.key("amplitude").value(dominant.amplitude);
  w.end_object();
  const auto means = period_averages(wf);
  w.key("period_averages").begin_array();
  for (const auto& period : means) {
    w.begin_array();
    for (double v : period) w.value(v);
    w.end_array();
  }
  w.end_array();
  w.key("warnings").begin_array();
  if (wf.saturated) {
    w.value("duty saturation: commanded duty outside [0, 1] was clamped "
            "at the switching boundary");
  }
  w.end_array();
  w.end_object();
  write_text_file(dir / "summary.json", w.take() + "\n");

  if (mf.format == "svg") {
    std::vector<PlotSeries> series(static_cast<std::size_t>(wf.n_phases));
    for (int r = 0; r < wf.n_phases; ++r) {
      auto& s = series[static_cast<std::size_t>(r)];
      s.label = std::string("v_") + static_cast<char>('a' + r);
      s.x = wf.t;
      s.y = wf.v_pg[static_cast<std::size_t>(r)];
    }
    write_text_file(dir / "waveform.svg",
                    line_chart_svg(std::string(technique_name(mf.technique)) +
                                       " phase voltages",
                                   "t_s", "v", series));
  }
  return exit_ok;
}

// Sweeps m and tabulates the ramps, utilization and dominant switching
// component.
inline int cmd_report(const RunManifest& mf, std::ostream& err) {
  (void)err;
  std::vector<double> sweep = mf.m_sweep;
  for (double m : sweep) {
    if (m < 0.0 || m > 1.0) {
      throw std::invalid_argument("report sweep bounds must lie in [0, 1]");
    }
  }

  struct Row {
    double m, f, b;
    std::optional<double> utilization;
    std::optional<BandPeak> dominant;
  };
  std::vector<Row> rows;
  const double delta = mf.polar ? mf.polar->delta : 0.0;
  const double f_switch = 1.0 / mf.carrier.timebase.t_p_nominal;
  for (double m : sweep) {
    Row row{m, commutation_offset(m, mf.drive), blend_factor(m, mf.drive),
            std::nullopt, std::nullopt};
    if (m > 0.0) {
      const PolarCommand polar{m, delta};
      row.utilization =
          utilization_report(mf.technique, polar, mf.drive, mf.carrier);
      const SwitchedWaveform wf =
          synthesize(mf.technique, polar, mf.drive, mf.carrier, 1);
      const Spectrum spec = analyze(line_to_line(wf).front(), 1.0 / wf.dt);
      row.dominant = dominant_switching_component(spec, f_switch, 1, 3);
    }
    rows.push_back(row);
  }

  const auto dir = detail::prepare_out_dir(mf);

  JsonWriter w;
  w.begin_object();
  detail::write_manifest_fields(w, mf, nullptr);
  w.key("delta_rad").value(delta);
  w.key("rows").begin_array();
  for (const auto& row : rows) {
    w.begin_object();
    w.key("m").value(row.m);
    w.key("f").value(row.f);
    w.key("b").value(row.b);
    w.key("utilization");
    if (row.utilization) w.value(*row.utilization); else w.null();
    w.key("dominant_multiple");
    if (row.dominant) w.value(row.dominant->multiple); else w.null();
    w.key("dominant_freq_hz");
    if (row.dominant) w.value(row.dominant->freq_hz); else w.null();
    w.key("dominant_amplitude");
    if (row.dominant) w.value(row.dominant->amplitude); else w.null();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  write_text_file(dir / "report.json", w.take() + "\n");

  if (mf.format == "csv") {
    std::string csv =
        "m,f,b,utilization,dominant_multiple,dominant_freq_hz,"
        "dominant_amplitude\n";
    for (const auto& row : rows) {
      csv += format_g17(row.m);
      csv += ',';
      csv += format_g17(row.f);
      csv += ',';
      csv += format_g17(row.b);
      csv += ',';
      if (row.utilization) csv += format_g17(*row.utilization);
      csv += ',';
      if (row.dominant) csv += std::to_string(row.dominant->multiple);
      csv += ',';
      if (row.dominant) csv += format_g17(row.dominant->freq_hz);
      csv += ',';
      if (row.dominant) csv += format_g17(row.dominant->amplitude);
      csv += '\n';
    }
    write_text_file(dir / "report.csv", csv);
  }

  if (mf.format == "svg") {
    PlotSeries f_series{"f(m)", {}, {}};
    PlotSeries b_series{"b(m)", {}, {}};
    PlotSeries u_series{"utilization", {}, {}};
    for (const auto& row : rows) {
      f_series.x.push_back(row.m);
      f_series.y.push_back(row.f);
      b_series.x.push_back(row.m);
      b_series.y.push_back(row.b);
      if (row.utilization) {
        u_series.x.push_back(row.m);
        u_series.y.push_back(*row.utilization);
      }
    }
    std::vector<PlotSeries> series{f_series, b_series};
    if (!u_series.x.empty()) series.push_back(u_series);
    write_text_file(dir / "report.svg",
                    line_chart_svg(std::string(technique_name(mf.technique)) +
                                       " modulation sweep",
                                   "m", "value", series));
  }
  return exit_ok;
}

// Prints the polar form of a voltage command to stdout.
inline int cmd_convert(const RunManifest& mf, std::ostream& out) {
  if (!mf.voltage) {
    throw std::invalid_argument("convert needs --vd, --vq and --vdc");
  }
  const PolarCommand polar = to_polar(*mf.voltage);
  JsonWriter w;
  w.begin_object();
  w.key("m").value(polar.m);
  w.key("delta_rad").value(polar.delta);
  w.end_object();
  out << w.take() << "\n";
  return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"inverter commutation toolkit"};
  app.require_subcommand(1);

  detail::RawArgs raw;
  CLI::App* duty_cmd =
      app.add_subcommand("duty", "tabulate duty cycles over one revolution");
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "synthesize switched waveforms and summarize them");
  CLI::App* report_cmd =
      app.add_subcommand("report", "sweep m and tabulate ramps/utilization");
  CLI::App* convert_cmd =
      app.add_subcommand("convert", "convert a voltage command to polar form");
  for (CLI::App* cmd : {duty_cmd, simulate_cmd, report_cmd, convert_cmd}) {
    detail::add_common_flags(cmd, raw);
  }
  detail::add_sweep_flags(report_cmd, raw);

  std::vector<std::string> argv_like{"pwm"};
  argv_like.insert(argv_like.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_like.size());
  for (auto& a : argv_like) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const bool wants_polar = sub == duty_cmd || sub == simulate_cmd;
    if (sub == report_cmd &&
        (sub->count("--m") || sub->count("--vd") || sub->count("--vq") ||
         sub->count("--vdc"))) {
      throw std::invalid_argument(
          "report sweeps m; use --m-list or --m-min/--m-max/--m-count");
    }

    RunManifest mf = detail::build_manifest(sub, raw, wants_polar);
    if (sub->count("--samples")) {
      if (sub == duty_cmd) {
        mf.samples = raw.samples;
      } else {
        mf.carrier.samples_per_period = raw.samples;
      }
    }
    if (sub == convert_cmd) {
      const int v_parts = static_cast<int>(sub->count("--vd")) +
                          static_cast<int>(sub->count("--vq")) +
                          static_cast<int>(sub->count("--vdc"));
      if (v_parts != 3) {
        throw std::invalid_argument("convert needs --vd, --vq and --vdc");
      }
      mf.voltage = VoltageCommand{raw.vd, raw.vq, raw.vdc};
      return cmd_convert(mf, out);
    }
    if (mf.frame == Frame::line && mf.drive.n_phases != 3) {
      throw unsupported_error(
          "line-frame input is only defined for three-phase drives");
    }
    if (sub == report_cmd) {
      if (sub->count("--m-list")) {
        mf.m_sweep.clear();
        std::string token;
        std::istringstream stream(raw.m_list);
        while (std::getline(stream, token, ',')) {
          mf.m_sweep.push_back(std::stod(token));
        }
        if (mf.m_sweep.empty()) {
          throw std::invalid_argument("--m-list is empty");
        }
      } else {
        if (raw.m_count < 2 || raw.m_max <= raw.m_min) {
          throw std::invalid_argument(
              "sweep needs --m-count >= 2 and --m-max > --m-min");
        }
        for (int i = 0; i < raw.m_count; ++i) {
          mf.m_sweep.push_back(raw.m_min + (raw.m_max - raw.m_min) * i /
                                               (raw.m_count - 1));
        }
      }
      return cmd_report(mf, err);
    }
    if (sub == duty_cmd) return cmd_duty(mf, err);
    return cmd_simulate(mf, err);
  } catch (const unsupported_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_unsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace pwmkit::cli

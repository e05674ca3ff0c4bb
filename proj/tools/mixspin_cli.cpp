// mixspin: command-line front end for the mixed spin-(s,1/2) Cayley-tree toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 numeric/domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixspin/mixspin.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string s_list = "5";
  int k = mixspin::kDefaultBranching;
  std::optional<double> phi;
  std::optional<double> phi_min;
  std::optional<double> phi_max;
  std::size_t points = 101;
  std::string scale = "log";
  std::string format = "csv";
  std::string out;
  double tol = mixspin::kThresholdTol;
};

mixspin::OutputFormat output_format(const CommonOptions& o) {
  return o.format == "json" ? mixspin::OutputFormat::Json : mixspin::OutputFormat::Csv;
}

std::vector<int> spin_list(const CommonOptions& o) {
  try {
    return mixspin::parse_spin_list(o.s_list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--s: ") + e.what());
  }
}

int single_spin(const CommonOptions& o) {
  const auto list = spin_list(o);
  if (list.size() != 1) throw UsageError("--s must name a single spin value for this command");
  return list.front();
}

std::vector<double> requested_phis(const CommonOptions& o) {
  if (o.phi) return {*o.phi};
  if (!o.phi_min || !o.phi_max) throw UsageError("give --phi or both --phi-min and --phi-max");
  const auto scale = o.scale == "linear" ? mixspin::GridScale::Linear : mixspin::GridScale::Log;
  return mixspin::phi_grid(*o.phi_min, *o.phi_max, o.points, scale);
}

void emit(const CommonOptions& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file " + o.out);
  file << text;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool grid) {
  cmd->add_option("--s", o.s_list, "spin value, list (1,3,5) or range (1-5)");
  cmd->add_option("--k", o.k, "branching number")->capture_default_str();
  auto* phi = cmd->add_option("--phi", o.phi, "single thermal parameter phi");
  if (grid) {
    auto* lo = cmd->add_option("--phi-min", o.phi_min, "grid lower end");
    auto* hi = cmd->add_option("--phi-max", o.phi_max, "grid upper end");
    cmd->add_option("--points", o.points, "grid size")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--scale", o.scale, "grid spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    phi->excludes(lo)->excludes(hi);
  }
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "output path (default: standard output)");
  cmd->add_option("--tol", o.tol, "bisection tolerance for thresholds")->capture_default_str()->check(CLI::PositiveNumber);
}

std::string run_sweep(const CommonOptions& o, bool entropy_only) {
  const auto spins = spin_list(o);
  const auto phis = requested_phis(o);
  std::vector<mixspin::SweepRecord> rows;
  rows.reserve(spins.size() * phis.size());
  for (int s : spins) {
    const auto base = mixspin::make_params(s, o.k, 1.0);
    std::optional<mixspin::RegimeThresholds> thresholds;
    if (!entropy_only) thresholds = mixspin::regime_thresholds(s, o.k, o.tol);
    for (double phi : phis) {
      const auto params = base.with_phi(phi);
      if (entropy_only) {
        const auto e = mixspin::entropy_record(params);
        mixspin::SweepRecord r;
        r.s = s;
        r.k = o.k;
        r.phi = phi;
        r.h_psi = e.h_psi;
        r.h_phi = e.h_phi;
        rows.push_back(r);
      } else {
        rows.push_back(mixspin::make_sweep_record(params, *thresholds));
      }
    }
  }
  std::ostringstream os;
  mixspin::write_sweep(os, rows, output_format(o), entropy_only);
  return os.str();
}

std::string run_thresholds(const CommonOptions& o, const std::string& criterion) {
  struct Row {
    int s;
    std::string name;
    mixspin::ThresholdPair pair;
  };
  std::vector<Row> rows;
  for (int s : spin_list(o)) {
    mixspin::make_params(s, o.k, 1.0);
    auto guarded = [&](const std::string& name, auto&& compute) {
      try {
        rows.push_back({s, name, compute()});
      } catch (const mixspin::Error& e) {
        throw mixspin::Error(e.code(), "s=" + std::to_string(s) + " criterion=" + name + ": " + e.what());
      }
    };
    if (criterion == "all" || criterion == "stability")
      guarded("stability", [&] { return mixspin::stability_thresholds(s, o.k, o.tol); });
    if (criterion == "all" || criterion == "dobrushin")
      guarded("dobrushin", [&] { return mixspin::criterion_thresholds(s, o.k, mixspin::Criterion::Dobrushin, o.tol); });
    if (criterion == "all" || criterion == "ks")
      guarded("ks", [&] { return mixspin::criterion_thresholds(s, o.k, mixspin::Criterion::KestenStigum, o.tol); });
  }

  std::ostringstream os;
  if (output_format(o) == mixspin::OutputFormat::Csv) {
    os << "s,k,criterion,phi_low,phi_high\n";
    for (const auto& r : rows) {
      os << r.s << ',' << o.k << ',' << r.name << ',' << mixspin::format_double(r.pair.low) << ','
         << mixspin::format_double(r.pair.high) << '\n';
    }
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["s"] = r.s;
      j["k"] = o.k;
      j["criterion"] = r.name;
      j["phi_low"] = r.pair.low;
      j["phi_high"] = r.pair.high;
      arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
  }
  return os.str();
}

std::string run_classify(const CommonOptions& o) {
  if (!o.phi) throw UsageError("classify needs --phi");
  const int s = single_spin(o);
  const auto params = mixspin::make_params(s, o.k, *o.phi);
  const auto t = mixspin::regime_thresholds(s, o.k, o.tol);
  const auto label = mixspin::to_string(mixspin::classify_regime(t, params.phi()));

  std::ostringstream os;
  if (output_format(o) == mixspin::OutputFormat::Csv) {
    os << "s,k,phi,regime,stability_low,stability_high,dobrushin_low,dobrushin_high,ks_low,ks_high\n";
    os << s << ',' << o.k << ',' << mixspin::format_double(params.phi()) << ',' << label;
    for (const auto& pair : {t.stability, t.dobrushin, t.ks}) {
      os << ',' << mixspin::format_double(pair.low) << ',' << mixspin::format_double(pair.high);
    }
    os << '\n';
  } else {
    nlohmann::ordered_json j;
    j["s"] = s;
    j["k"] = o.k;
    j["phi"] = params.phi();
    j["regime"] = label;
    j["stability"] = {t.stability.low, t.stability.high};
    j["dobrushin"] = {t.dobrushin.low, t.dobrushin.high};
    j["ks"] = {t.ks.low, t.ks.high};
    os << j.dump(2) << '\n';
  }
  return os.str();
}

struct FixedPointOptions {
  double z_min = 1e-4;
  double z_max = 1e4;
  std::size_t grid = mixspin::kDefaultFixedPointGrid;
  std::optional<std::size_t> root;
};

std::string run_fixed_points(const CommonOptions& o, const FixedPointOptions& f) {
  if (!o.phi) throw UsageError("fixed-points needs --phi");
  if (!(f.z_min > 0.0) || !(f.z_max > f.z_min)) throw UsageError("need 0 < --z-min < --z-max");
  if (f.grid < 2) throw UsageError("--grid must be at least 2");
  const auto params = mixspin::make_params(single_spin(o), o.k, *o.phi);
  const auto roots = mixspin::find_scalar_fixed_points(params, f.z_min, f.z_max, f.grid);
  const std::size_t selected = f.root.value_or(roots.size() - 1);
  if (selected >= roots.size()) throw UsageError("--root index out of range");
  const auto lifted = mixspin::lift_scalar_fixed_point(params, roots[selected].z_star);

  std::ostringstream os;
  if (output_format(o) == mixspin::OutputFormat::Csv) {
    os << "index,z_star,derivative_abs,stability\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      os << i << ',' << mixspin::format_double(roots[i].z_star) << ','
         << mixspin::format_double(roots[i].derivative_abs) << ',' << mixspin::to_string(roots[i].stability) << '\n';
    }
    os << '\n' << "component,value\n";
    for (int i = -params.s(); i <= params.s(); ++i) {
      if (i == 0) continue;
      os << "X_" << i << ',' << mixspin::format_double(lifted.x(i)) << '\n';
    }
    os << "Z," << mixspin::format_double(lifted.z()) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["s"] = params.s();
    j["k"] = params.k();
    j["phi"] = params.phi();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : roots) {
      nlohmann::ordered_json row;
      row["z_star"] = r.z_star;
      row["derivative_abs"] = r.derivative_abs;
      row["stability"] = std::string(mixspin::to_string(r.stability));
      arr.push_back(row);
    }
    j["fixed_points"] = arr;
    j["selected"] = selected;
    nlohmann::ordered_json state;
    for (int i = -params.s(); i <= params.s(); ++i) {
      if (i != 0) state["X_" + std::to_string(i)] = lifted.x(i);
    }
    state["Z"] = lifted.z();
    j["lifted_state"] = state;
    os << j.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed spin-(s,1/2) Ising model on a Cayley tree: recursions, stability, extremality, entropy"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "tabulate every per-phi quantity over a grid");
  add_common(sweep, sweep_opts, true);

  CommonOptions entropy_opts;
  auto* entropy = app.add_subcommand("entropy", "entropy-rate columns of sweep");
  add_common(entropy, entropy_opts, true);

  CommonOptions thr_opts;
  thr_opts.s_list = "1-5";
  std::string criterion = "all";
  auto* thresholds = app.add_subcommand("thresholds", "reciprocal threshold pairs per spin value");
  add_common(thresholds, thr_opts, false);
  thresholds->add_option("--criterion", criterion, "which threshold")
      ->check(CLI::IsMember({"all", "stability", "dobrushin", "ks"}))
      ->capture_default_str();

  CommonOptions cls_opts;
  auto* classify = app.add_subcommand("classify", "regime label for one (s, phi)");
  add_common(classify, cls_opts, false);

  CommonOptions fp_opts;
  FixedPointOptions fp_extra;
  auto* fixed = app.add_subcommand("fixed-points", "fixed points of the scalar map F(Z)");
  add_common(fixed, fp_opts, false);
  fixed->add_option("--z-min", fp_extra.z_min, "scan lower end")->capture_default_str();
  fixed->add_option("--z-max", fp_extra.z_max, "scan upper end")->capture_default_str();
  fixed->add_option("--grid", fp_extra.grid, "log-spaced scan points")->capture_default_str();
  fixed->add_option("--root", fp_extra.root, "index of the root to lift (default: largest)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sweep) emit(sweep_opts, run_sweep(sweep_opts, false));
    if (*entropy) emit(entropy_opts, run_sweep(entropy_opts, true));
    if (*thresholds) emit(thr_opts, run_thresholds(thr_opts, criterion));
    if (*classify) emit(cls_opts, run_classify(cls_opts));
    if (*fixed) emit(fp_opts, run_fixed_points(fp_opts, fp_extra));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mixspin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}

#pragma once

// Row records and emitters behind the command-line front end.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <stdexcept>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "mixspin/channels.hpp"
#include "mixspin/criteria.hpp"
#include "mixspin/detail/roots.hpp"
#include "mixspin/entropy.hpp"
#include "mixspin/error.hpp"
#include "mixspin/model.hpp"
#include "mixspin/recursion.hpp"
#include "mixspin/stability.hpp"

namespace mixspin {

enum class GridScale { Linear, Log };
enum class OutputFormat { Csv, Json };

struct SweepRecord {
  int s = 0;
  int k = 0;
  double phi = 0.0;
  double tau_p = 0.0;
  double tau_q = 0.0;
  double dobrushin = 0.0;
  double lambda2 = 0.0;
  double ks = 0.0;
  double lambda_max = 0.0;
  double fprime1 = 0.0;
  double h_psi = 0.0;
  double h_phi = 0.0;
  std::string regime;
};

inline constexpr std::array<std::string_view, 13> kSweepColumns = {
    "s", "k", "phi", "tau_p", "tau_q", "dobrushin", "lambda2", "ks", "lambda_max", "fprime1", "h_psi", "h_phi", "regime"};

inline constexpr std::array<std::string_view, 5> kEntropyColumns = {"s", "k", "phi", "h_psi", "h_phi"};

/// Criterion values are recomputed from the row's own tau/lambda fields so
/// the emitted columns are self-consistent.
inline SweepRecord make_sweep_record(const ModelParams& params, const RegimeThresholds& thresholds) {
  SweepRecord r;
  r.s = params.s();
  r.k = params.k();
  r.phi = params.phi();
  const TauPair tau = tau_closed_forms(params);
  r.tau_p = tau.tau_p;
  r.tau_q = tau.tau_q;
  r.dobrushin = r.k * r.tau_p * r.tau_q - 1.0;
  r.lambda2 = second_eigenvalue_psi(params);
  r.ks = r.k * r.lambda2 * r.lambda2 - 1.0;
  r.lambda_max = lambda_max_closed_form(params);
  r.fprime1 = scalar_map_derivative_at_one(params);
  r.h_psi = entropy_rate_psi(params);
  r.h_phi = entropy_rate_phi(params);
  r.regime = std::string(to_string(classify_regime(thresholds, r.phi)));
  return r;
}

inline std::vector<double> phi_grid(double lo, double hi, std::size_t points, GridScale scale) {
  if (points == 0) throw Error(ErrorCode::DomainError, "need at least one grid point");
  if (!(lo > 0.0) || hi < lo) throw Error(ErrorCode::DomainError, "need 0 < phi-min <= phi-max");
  if (points > 1 && !(hi > lo)) throw Error(ErrorCode::DomainError, "need phi-min < phi-max for a grid");
  return scale == GridScale::Log ? detail::log_grid(lo, hi, points) : detail::linear_grid(lo, hi, points);
}

/// Accepts "5", "1-5", "1,3,5" and mixtures such as "1-3,5".
/// Throws std::invalid_argument on malformed input.
inline std::vector<int> parse_spin_list(std::string_view text) {
  auto parse_int = [](std::string_view tok) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad spin value '" + std::string(tok) + "'");
    }
    return v;
  };
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const std::size_t dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(parse_int(item));
    } else {
      const int a = parse_int(item.substr(0, dash));
      const int b = parse_int(item.substr(dash + 1));
      if (b < a) throw std::invalid_argument("descending range '" + std::string(item) + "'");
      for (int v = a; v <= b; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty spin list");
  return out;
}

/// Shortest decimal text that round-trips to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

namespace detail {

template <class Range>
void write_csv_line(std::ostream& os, const Range& cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

inline std::vector<std::string> sweep_cells(const SweepRecord& r, bool entropy_only) {
  if (entropy_only) {
    return {std::to_string(r.s), std::to_string(r.k), format_double(r.phi), format_double(r.h_psi),
            format_double(r.h_phi)};
  }
  return {std::to_string(r.s),        std::to_string(r.k),       format_double(r.phi),
          format_double(r.tau_p),     format_double(r.tau_q),    format_double(r.dobrushin),
          format_double(r.lambda2),   format_double(r.ks),       format_double(r.lambda_max),
          format_double(r.fprime1),   format_double(r.h_psi),    format_double(r.h_phi),
          r.regime};
}

inline nlohmann::ordered_json sweep_json(const SweepRecord& r, bool entropy_only) {
  nlohmann::ordered_json j;
  j["s"] = r.s;
  j["k"] = r.k;
  j["phi"] = r.phi;
  if (!entropy_only) {
    j["tau_p"] = r.tau_p;
    j["tau_q"] = r.tau_q;
    j["dobrushin"] = r.dobrushin;
    j["lambda2"] = r.lambda2;
    j["ks"] = r.ks;
    j["lambda_max"] = r.lambda_max;
    j["fprime1"] = r.fprime1;
  }
  j["h_psi"] = r.h_psi;
  j["h_phi"] = r.h_phi;
  if (!entropy_only) j["regime"] = r.regime;
  return j;
}

}  // namespace detail

inline void write_sweep(std::ostream& os, const std::vector<SweepRecord>& rows, OutputFormat format,
                        bool entropy_only = false) {
  if (format == OutputFormat::Csv) {
    if (entropy_only) {
      detail::write_csv_line(os, kEntropyColumns);
    } else {
      detail::write_csv_line(os, kSweepColumns);
    }
    for (const auto& r : rows) detail::write_csv_line(os, detail::sweep_cells(r, entropy_only));
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(detail::sweep_json(r, entropy_only));
  os << arr.dump(2) << '\n';
}

}  // namespace mixspin

#include "toric/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <set>

namespace toric::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::NonPrimitiveRay:
    case ErrorKind::NonMaximalCone:
    case ErrorKind::WallCountViolation:
    case ErrorKind::OverlappingCones:
    case ErrorKind::UnusedRay:
      return 1;
    case ErrorKind::CertificateViolation:
    case ErrorKind::InterpolationMismatch:
      return 3;
    default:
      return 2;
  }
}

namespace {

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ToricError& e) {
    return {exit_code_for(e.kind()), "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {3, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

Json divisor_json(const ToricDivisor& d, bool from_input) {
  const Polytope p = polytope_of_divisor(d);
  const Rational vol = volume(p);
  Json j;
  j["source"] = from_input ? "input" : "anticanonical";
  j["coefficients"] = Json::array();
  for (const auto& b : d.coeffs()) j["coefficients"].push_back(to_json(b));
  j["vertices"] = Json::array();
  for (const auto& u : p.vertices()) j["vertices"].push_back(to_json(u));
  j["volume"] = to_json(vol);
  j["degree"] = to_json(factorial(d.rank()) * vol);
  return j;
}

std::vector<ToricValuation> valuations_of(const InputDocument& in) {
  std::vector<ToricValuation> out;
  for (const auto& v : in.valuations) out.emplace_back(*in.fan, v);
  return out;
}

// Breakpoints plus `per_piece - 1` equally spaced interior points of every piece.
std::vector<Rational> sample_grid(const PiecewisePolynomial& g, int per_piece) {
  std::vector<Rational> ts;
  const auto& bp = g.breakpoints();
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const Rational step = (bp[k + 1] - bp[k]) / per_piece;
    for (int j = 0; j < per_piece; ++j) ts.push_back(bp[k] + j * step);
  }
  ts.push_back(bp.back());
  return ts;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ToricError(ErrorKind::Usage, "cannot write " + path.string());
  f << text;
}

std::string csv_row(const Rational& a, const Rational& b) {
  return to_string(a) + "," + to_string(b) + "," + to_decimal(a) + "," + to_decimal(b) + "\n";
}

std::string slice_csv(const SliceVolumeFunction& s) {
  std::string text = "t,G,t_decimal,G_decimal\n";
  for (const auto& t : sample_grid(s.G, 8)) text += csv_row(t, s.G(t));
  return text;
}

// One row per jumping number, so repeated locations appear repeatedly.
std::string measure_csv(const JumpingSpectrum& spec, std::size_t rank) {
  Rational weight = 1;
  for (std::size_t i = 0; i < rank; ++i) weight /= spec.m;
  std::string text = "location,weight,location_decimal,weight_decimal\n";
  for (const auto& a : spec.values) text += csv_row(a / spec.m, weight);
  return text;
}

Json polynomial_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

Json bundle_json(const ToricDivisor& d, const ToricValuation& v, std::int64_t m_lo, std::int64_t m_hi) {
  const Fan& fan = d.fan();
  Json j;
  j["v"] = to_json(v.vector());
  j["log_discrepancy"] = to_json(log_discrepancy(fan, v));
  j["S"] = to_json(S_of(d, v));
  j["S_via_integral"] = to_json(S_via_integral(d, v));
  j["T"] = to_json(T_of(d, v));
  const auto slice = slice_volume_function(d, v);
  Json pieces = Json::array();
  for (const auto& p : slice.G.pieces()) pieces.push_back(polynomial_json(p));
  j["slice_volume"] = {{"breakpoints", to_json(RationalVector(slice.G.breakpoints()))}, {"pieces", pieces}};
  j["limit_moments"] = {to_json(slice.limit_moment(1)), to_json(slice.limit_moment(2))};
  bool interior = false;
  for (std::size_t k = 0; k < fan.max_cones.size() && !interior; ++k) interior = cone_interior_contains(fan, k, v.vector());
  j["interior"] = interior;
  if (interior) {
    j["volume"] = to_json(valuation_volume(fan, v));
    j["normalized_volume"] = to_json(normalized_volume(fan, v));
  }
  j["levels"] = Json::array();
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const auto spec = jumping_spectrum(d, v, m);
    j["levels"].push_back({{"m", m},
                           {"N_m", spec.count},
                           {"S_m", to_json(Sm_of(d, v, m))},
                           {"T_m", to_json(Tm_of(d, v, m))},
                           {"alpha_m", to_json(toric_alpha_m(d, m))},
                           {"delta_m", to_json(toric_delta_m(d, m))}});
  }
  return j;
}

}  // namespace

RationalVector parse_vector_option(const std::string& text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      c.push_back(parse_rational(part));
    } catch (const ToricError& e) {
      throw ToricError(ErrorKind::Usage, "--v: " + e.detail());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RationalVector(std::move(c));
}

CommandResult cmd_validate(const std::filesystem::path& input) {
  return guarded([&] {
    InputDocument in;
    try {
      in = load_input(input);
    } catch (const ToricError& e) {
      // Polytope-mode inputs fail here when the polytope is not full-dimensional.
      return CommandResult{1, "", std::string("error: ") + e.what() + "\n"};
    }
    Json doc;
    doc["input"] = in.echo;
    doc["mode"] = in.polytope_mode ? "polytope" : "fan";
    if (in.polytope_mode) doc["derived_fan"] = fan_to_json(*in.fan, in.divisor);
    const auto diag = validate_fan(*in.fan);
    doc["validation"] = to_json(diag);
    bool ok = diag.ok();
    std::string err;
    if (!ok) err = "error: " + std::string(to_string(diag.items.front().kind)) + ": " + diag.items.front().message + "\n";
    if (ok && in.divisor) {
      const ToricDivisor d(in.fan, *in.divisor);
      try {
        const auto cert = is_ample(d);
        doc["ample"] = {{"ample", cert.ample}, {"reason", cert.reason}};
        if (!cert.ample) {
          ok = false;
          err = "error: NotAmple: " + cert.reason + "\n";
        }
      } catch (const ToricError& e) {
        doc["ample"] = {{"ample", false}, {"reason", e.what()}};
        ok = false;
        err = std::string("error: ") + e.what() + "\n";
      }
    }
    doc["ok"] = ok;
    return CommandResult{ok ? 0 : 1, render(doc), err};
  });
}

CommandResult cmd_thresholds(const std::filesystem::path& input) {
  return guarded([&] {
    const auto in = load_input(input);
    require_valid(*in.fan);
    const auto d = chosen_divisor(in);
    Json doc;
    doc["input"] = in.echo;
    doc["divisor"] = divisor_json(d, in.divisor.has_value());
    doc["thresholds"] = to_json(threshold_report(d, valuations_of(in)));
    return CommandResult{0, render(doc), ""};
  });
}

CommandResult cmd_kstability(const std::filesystem::path& input) {
  return guarded([&] {
    const auto in = load_input(input);
    require_valid(*in.fan);
    Json doc;
    doc["input"] = in.echo;
    doc["kstability"] = to_json(kstability_report(in.fan, in.valuations));
    return CommandResult{0, render(doc), ""};
  });
}

CommandResult cmd_measure(const std::filesystem::path& input, const CommandOptions& opts) {
  return guarded([&] {
    if (!opts.v) throw ToricError(ErrorKind::Usage, "measure needs --v a,b,...");
    const std::int64_t m = opts.m.value_or(1);
    if (m < 1) throw ToricError(ErrorKind::Usage, "--m must be a positive integer, got " + std::to_string(m));
    const auto in = load_input(input);
    require_valid(*in.fan);
    const auto vec = parse_vector_option(*opts.v);
    if (vec.size() != in.fan->rank)
      throw ToricError(ErrorKind::Usage, "--v has " + std::to_string(vec.size()) + " coordinates, lattice rank is " +
                                             std::to_string(in.fan->rank));
    const auto d = chosen_divisor(in);
    const ToricValuation v(*in.fan, vec);
    const auto slice = slice_volume_function(d, v);
    const auto spec = jumping_spectrum(d, v, m);

    const auto dir = opts.out.value_or(".");
    std::filesystem::create_directories(dir);
    write_file(dir / "G.csv", slice_csv(slice));
    write_file(dir / "mu.csv", measure_csv(spec, d.rank()));

    Json doc;
    doc["v"] = to_json(vec);
    doc["m"] = m;
    doc["T"] = to_json(slice.T());
    doc["breakpoints"] = to_json(RationalVector(slice.G.breakpoints()));
    doc["atoms"] = spec.count;
    doc["mass"] = to_json(mu_m(d, v, m).total_mass());
    doc["files"] = {{"G", "G.csv"}, {"mu", "mu.csv"}};
    return CommandResult{0, render(doc), ""};
  });
}

CommandResult cmd_report(const std::filesystem::path& input, const CommandOptions& opts) {
  return guarded([&] {
    const auto in = load_input(input);
    Json doc;
    doc["input"] = in.echo;
    const auto diag = validate_fan(*in.fan);
    doc["validation"] = to_json(diag);
    if (!diag.ok()) {
      const auto& first = diag.items.front();
      return CommandResult{1, render(doc), "error: " + std::string(to_string(first.kind)) + ": " + first.message + "\n"};
    }
    const auto d = chosen_divisor(in);
    doc["divisor"] = divisor_json(d, in.divisor.has_value());

    std::vector<ToricValuation> vals = valuations_of(in);
    if (vals.empty())
      for (const auto& r : in.fan->rays) vals.emplace_back(*in.fan, to_rational(r));
    doc["thresholds"] = to_json(threshold_report(d, vals));

    const auto verdict = is_q_fano(in.fan);
    if (verdict.q_fano)
      doc["kstability"] = to_json(kstability_report(in.fan, in.valuations));
    else
      doc["kstability"] = {{"q_fano", false}, {"reason", verdict.reason}};

    doc["valuations"] = Json::array();
    Json artifacts = Json::array();
    for (std::size_t k = 0; k < vals.size(); ++k) {
      doc["valuations"].push_back(bundle_json(d, vals[k], in.m_lo, in.m_hi));
      if (opts.out) {
        std::filesystem::create_directories(*opts.out);
        const std::string g = "G_" + std::to_string(k) + ".csv";
        const std::string mu = "mu_" + std::to_string(k) + "_m" + std::to_string(in.m_hi) + ".csv";
        write_file(*opts.out / g, slice_csv(slice_volume_function(d, vals[k])));
        write_file(*opts.out / mu, measure_csv(jumping_spectrum(d, vals[k], in.m_hi), d.rank()));
        artifacts.push_back({{"valuation", k}, {"G", g}, {"mu", mu}});
      }
    }
    doc["artifacts"] = artifacts;
    return CommandResult{0, render(doc), ""};
  });
}

CommandResult run_command(const std::string& command, const std::filesystem::path& input, const CommandOptions& opts) {
  if (command == "validate") return cmd_validate(input);
  if (command == "thresholds") return cmd_thresholds(input);
  if (command == "kstability") return cmd_kstability(input);
  if (command == "measure") return cmd_measure(input, opts);
  if (command == "report") return cmd_report(input, opts);
  return {exit_code_for(ErrorKind::Usage), "", "error: unknown command '" + command + "'\n"};
}

}  // namespace toric::cli

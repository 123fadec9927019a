#include "fraclap/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include "fraclap/errors.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/nls.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kRational = "builtin:rational";
constexpr const char* kErf = "builtin:erf";
constexpr const char* kGaussian = "builtin:gaussian";

struct RawOptions {
  std::string command;
  std::string alpha = "1.3";
  std::string N = "1024";
  std::string r = "4";
  double L = 1.0;
  std::string input;
  std::string output = "-";
  std::string format = "csv";
  double dt = 0.01;
  double t_end = 1.0;
  std::int64_t snapshot_every = 100;
  std::string snapshot_prefix;
};

void build_app(CLI::App& app, RawOptions& o) {
  app.add_option("--command", o.command, "apply | sweep | nls")
      ->required()
      ->check(CLI::IsMember({"apply", "sweep", "nls"}));
  app.add_option("--alpha", o.alpha, "order, comma-separated list for sweep");
  app.add_option("--N", o.N, "output nodes, comma-separated list for sweep");
  app.add_option("--r", o.r, "refinement factor, comma-separated list for sweep");
  app.add_option("--L", o.L, "map scale x = L cot(s)");
  app.add_option("--input", o.input, "builtin:rational | builtin:erf | builtin:gaussian | samples file");
  app.add_option("--output", o.output, "output path, - for stdout");
  app.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--dt", o.dt, "time step (nls)");
  app.add_option("--t-end", o.t_end, "final time (nls)");
  app.add_option("--snapshot-every", o.snapshot_every, "steps between snapshots (nls)");
  app.add_option("--snapshot-prefix", o.snapshot_prefix,
                 "snapshot file prefix (nls); defaults to the output path");
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T value{};
    if (!(is >> value) || !(is >> std::ws).eof()) {
      throw ParameterError(fmt::format("{}: cannot parse '{}'", flag, item));
    }
    out.push_back(value);
  }
  if (out.empty()) throw ParameterError(fmt::format("{}: empty list", flag));
  return out;
}

RunConfig to_config(const RawOptions& o) {
  RunConfig cfg;
  cfg.command = o.command == "sweep" ? Command::kSweep : o.command == "nls" ? Command::kNls : Command::kApply;
  cfg.alpha = parse_list<double>(o.alpha, "--alpha");
  cfg.N = parse_list<std::int64_t>(o.N, "--N");
  cfg.r = parse_list<std::int64_t>(o.r, "--r");
  cfg.L = o.L;
  cfg.input = !o.input.empty() ? o.input : cfg.command == Command::kNls ? kGaussian : kRational;
  cfg.output = o.output;
  cfg.format = o.format == "json" ? Format::kJson : Format::kCsv;
  cfg.dt = o.dt;
  cfg.t_end = o.t_end;
  cfg.snapshot_every = o.snapshot_every;
  cfg.snapshot_prefix = o.snapshot_prefix;
  return cfg;
}

RunConfig parse_with(CLI::App& app, RawOptions& raw, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  return to_config(raw);
}

bool is_builtin(const std::string& input) { return input.rfind("builtin:", 0) == 0; }

std::string num(double v) { return fmt::format("{:.17g}", v); }

// Owns a file stream when the target is a path, else forwards to fallback.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish(const std::string& path) {
    out_->flush();
    if (!*out_) throw InputError("write to '" + path + "' failed");
  }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json error_json(const ErrorReport& e) {
  return {{"l2", e.l2}, {"linf", e.linf}, {"l2_euclidean", e.l2_euclidean},
          {"N", e.N},   {"r", e.r},       {"alpha", e.alpha}};
}

ComplexVector initial_samples(const std::string& name, const GridSpec& g) {
  ComplexVector out(static_cast<std::size_t>(g.N()));
  for (std::int64_t j = 0; j < g.N(); ++j) {
    const double x = map_to_real(pi_fraction(2 * j + 1, 2 * g.N()), g.L());
    if (name == kErf) {
      out[j] = std::erf(x);
    } else if (name == kGaussian) {
      out[j] = std::exp(-x * x);
    } else {
      out[j] = rational_u(x);
    }
  }
  return out;
}

std::optional<double> log2_ratio(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return std::nullopt;
  return std::log2(coarse / fine);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"fraclap"};
  RawOptions raw;
  build_app(app, raw);
  try {
    return parse_with(app, raw, args);
  } catch (const CLI::Error& e) {
    throw ParameterError(e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.command != Command::kSweep && (cfg.alpha.size() != 1 || cfg.N.size() != 1 || cfg.r.size() != 1)) {
    throw ParameterError("lists of alpha, N or r are only accepted by sweep");
  }
  if (cfg.command == Command::kSweep && !is_builtin(cfg.input)) {
    throw ParameterError("sweep needs a builtin input with an exact solution");
  }
  if (cfg.command == Command::kSweep && cfg.input == kGaussian) {
    throw ParameterError("builtin:gaussian has no exact solution to sweep against");
  }
  if (is_builtin(cfg.input) && cfg.input != kRational && cfg.input != kErf && cfg.input != kGaussian) {
    throw ParameterError("unknown builtin input '" + cfg.input + "'");
  }
  for (double a : cfg.alpha) {
    for (std::int64_t n : cfg.N) {
      for (std::int64_t r : cfg.r) FracLapParams(a, GridSpec(n, r, cfg.L));
    }
  }
  if (cfg.command == Command::kNls) {
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ParameterError("--dt must be a finite number > 0");
    nls::step_count(cfg.dt, cfg.t_end);
    if (cfg.snapshot_every < 1) throw ParameterError("--snapshot-every must be >= 1");
  }
}

ComplexVector read_samples(const std::string& path, std::int64_t N) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read samples file '" + path + "'");
  ComplexVector out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream is(line);
    double re = 0.0;
    double im = 0.0;
    if (!(is >> re >> im) || !(is >> std::ws).eof()) {
      throw InputError(fmt::format("{}:{}: expected 're im'", path, line_no));
    }
    out.emplace_back(re, im);
  }
  if (in.bad()) throw InputError("error while reading '" + path + "'");
  if (static_cast<std::int64_t>(out.size()) != N) {
    throw ShapeError(fmt::format("{} holds {} samples, N = {}", path, out.size(), N));
  }
  return out;
}

Evaluation evaluate_builtin(const std::string& name, const FracLapParams& p) {
  const GridSpec& g = p.grid();
  Evaluation ev;
  if (name == kRational) {
    ev.values = apply(f_from_x_derivative([](double x) { return rational_uxx(x); }, g), p);
  } else if (name == kErf || name == kGaussian) {
    ev.values = apply(f_from_samples(initial_samples(name, g), g), p);
  } else {
    throw ParameterError("unknown builtin input '" + name + "'");
  }
  if (name == kGaussian) return ev;

  ComplexVector exact(static_cast<std::size_t>(g.N()));
  for (std::int64_t j = 0; j < g.N(); ++j) {
    const double x = map_to_real(pi_fraction(2 * j + 1, 2 * g.N()), g.L());
    exact[j] = name == kRational ? exact_rational_at(p.alpha(), x) : Complex{exact_erf(p.alpha(), x), 0.0};
  }
  ev.exact = std::move(exact);
  return ev;
}

int cmd_apply(const RunConfig& cfg, std::ostream& out) {
  const FracLapParams p(cfg.alpha.front(), GridSpec(cfg.N.front(), cfg.r.front(), cfg.L));
  const GridSpec& g = p.grid();
  Evaluation ev;
  if (is_builtin(cfg.input)) {
    ev = evaluate_builtin(cfg.input, p);
  } else {
    ev.values = apply(f_from_samples(read_samples(cfg.input, g.N()), g), p);
  }
  std::optional<ErrorReport> report;
  if (ev.exact) report = error_norms(ev.values, *ev.exact, g.r(), p.alpha());

  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::kCsv) {
    os << "j,s_j,x_j,re,im\n";
    for (std::int64_t j = 0; j < g.N(); ++j) {
      const double s = pi_fraction(2 * j + 1, 2 * g.N());
      fmt::print(os, "{},{},{},{},{}\n", j, num(s), num(map_to_real(s, g.L())), num(ev.values[j].real()),
                 num(ev.values[j].imag()));
    }
    if (report) {
      fmt::print(os, "# error l2={} linf={} l2_euclidean={} N={} r={} alpha={}\n", num(report->l2),
                 num(report->linf), num(report->l2_euclidean), report->N, report->r, num(report->alpha));
    }
  } else {
    json doc = {{"command", "apply"}, {"alpha", p.alpha()}, {"N", g.N()},      {"r", g.r()},
                {"L", g.L()},         {"input", cfg.input}, {"nodes", json::array()}};
    for (std::int64_t j = 0; j < g.N(); ++j) {
      const double s = pi_fraction(2 * j + 1, 2 * g.N());
      doc["nodes"].push_back({{"j", j},
                              {"s", s},
                              {"x", map_to_real(s, g.L())},
                              {"re", ev.values[j].real()},
                              {"im", ev.values[j].imag()}});
    }
    if (report) doc["error"] = error_json(*report);
    os << doc.dump(1) << '\n';
  }
  sink.finish(cfg.output);
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    double alpha;
    std::int64_t N;
    std::int64_t r;
    ErrorReport err;
    double runtime_ms;
    std::optional<double> order_r;
    std::optional<double> order_N;
  };
  std::vector<Row> rows;
  std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>, double> l2_by_key;

  for (std::size_t ai = 0; ai < cfg.alpha.size(); ++ai) {
    for (std::int64_t n : cfg.N) {
      for (std::int64_t r : cfg.r) {
        const auto start = std::chrono::steady_clock::now();
        const FracLapParams p(cfg.alpha[ai], GridSpec(n, r, cfg.L));
        const Evaluation ev = evaluate_builtin(cfg.input, p);
        const ErrorReport err = error_norms(ev.values, *ev.exact, r, cfg.alpha[ai]);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rows.push_back({cfg.alpha[ai], n, r, err, ms, std::nullopt, std::nullopt});
        l2_by_key[{ai, n, r}] = err.l2;
      }
    }
  }
  // log2(E_N^r / E_N^{2r}) and log2(E_N^r / E_{2N}^r), filled in on the finer row.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Row& row = rows[i];
    const std::size_t ai = i / (cfg.N.size() * cfg.r.size());
    if (row.r % 2 == 0) {
      if (auto it = l2_by_key.find({ai, row.N, row.r / 2}); it != l2_by_key.end()) {
        row.order_r = log2_ratio(it->second, row.err.l2);
      }
    }
    if (row.N % 2 == 0) {
      if (auto it = l2_by_key.find({ai, row.N / 2, row.r}); it != l2_by_key.end()) {
        row.order_N = log2_ratio(it->second, row.err.l2);
      }
    }
  }

  Sink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string{}; };
  if (cfg.format == Format::kCsv) {
    os << "alpha,N,r,l2,linf,runtime_ms,order_r,order_N\n";
    for (const Row& row : rows) {
      fmt::print(os, "{},{},{},{},{},{:.3f},{},{}\n", num(row.alpha), row.N, row.r, num(row.err.l2),
                 num(row.err.linf), row.runtime_ms, opt(row.order_r), opt(row.order_N));
    }
  } else {
    json doc = {{"command", "sweep"}, {"input", cfg.input}, {"L", cfg.L}, {"rows", json::array()}};
    for (const Row& row : rows) {
      json j = {{"alpha", row.alpha},     {"N", row.N},       {"r", row.r},
                {"l2", row.err.l2},       {"linf", row.err.linf}, {"runtime_ms", row.runtime_ms},
                {"order_r", nullptr},     {"order_N", nullptr}};
      if (row.order_r) j["order_r"] = *row.order_r;
      if (row.order_N) j["order_N"] = *row.order_N;
      doc["rows"].push_back(std::move(j));
    }
    os << doc.dump(1) << '\n';
  }
  sink.finish(cfg.output);
  return kOk;
}

int cmd_nls(const RunConfig& cfg, std::ostream& out) {
  const FracLapParams p(cfg.alpha.front(), GridSpec(cfg.N.front(), cfg.r.front(), cfg.L));
  const GridSpec& g = p.grid();
  ComplexVector psi0 = is_builtin(cfg.input) ? initial_samples(cfg.input, g) : read_samples(cfg.input, g.N());

  std::string prefix = cfg.snapshot_prefix;
  if (prefix.empty() && cfg.output != "-") prefix = cfg.output;
  const char* ext = cfg.format == Format::kCsv ? "csv" : "json";

  nls::SnapshotSink sink;
  if (!prefix.empty()) {
    sink = [&](const nls::Snapshot& snap) {
      const auto step = static_cast<std::int64_t>(std::llround(snap.t / cfg.dt));
      const std::string path = fmt::format("{}.snapshot_{:06d}.{}", prefix, step, ext);
      std::ofstream f(path);
      if (!f) throw InputError("cannot open snapshot file '" + path + "'");
      if (cfg.format == Format::kCsv) {
        fmt::print(f, "# t={} M={}\n", num(snap.t), num(snap.mass));
        f << "j,x_j,re,im,abs\n";
        for (std::size_t j = 0; j < snap.psi.size(); ++j) {
          const double x = map_to_real(pi_fraction(2 * static_cast<std::int64_t>(j) + 1, 2 * g.N()), g.L());
          fmt::print(f, "{},{},{},{},{}\n", j, num(x), num(snap.psi[j].real()), num(snap.psi[j].imag()),
                     num(std::abs(snap.psi[j])));
        }
      } else {
        json doc = {{"t", snap.t}, {"M", snap.mass}, {"nodes", json::array()}};
        for (std::size_t j = 0; j < snap.psi.size(); ++j) {
          const double x = map_to_real(pi_fraction(2 * static_cast<std::int64_t>(j) + 1, 2 * g.N()), g.L());
          doc["nodes"].push_back({{"j", j},
                                  {"x", x},
                                  {"re", snap.psi[j].real()},
                                  {"im", snap.psi[j].imag()},
                                  {"abs", std::abs(snap.psi[j])}});
        }
        f << doc.dump(1) << '\n';
      }
      if (!f) throw InputError("write to '" + path + "' failed");
    };
  }

  const nls::SimulationResult result =
      nls::simulate(std::move(psi0), p, cfg.dt, cfg.t_end, cfg.snapshot_every, sink);
  const double m0 = result.energy.front().mass;
  double max_drift = 0.0;
  for (const auto& rec : result.energy) max_drift = std::max(max_drift, std::abs(rec.mass - m0));

  Sink log(cfg.output, out);
  std::ostream& os = log.stream();
  if (cfg.format == Format::kCsv) {
    os << "t,M,drift\n";
    for (const auto& rec : result.energy) {
      fmt::print(os, "{},{},{}\n", num(rec.t), num(rec.mass), num(std::abs(rec.mass - m0)));
    }
    fmt::print(os, "# max_drift={} steps={}\n", num(max_drift), result.energy.size() - 1);
  } else {
    json doc = {{"command", "nls"}, {"alpha", p.alpha()}, {"N", g.N()},       {"r", g.r()},
                {"L", g.L()},       {"dt", cfg.dt},       {"t_end", cfg.t_end}, {"max_drift", max_drift},
                {"energy", json::array()}};
    for (const auto& rec : result.energy) {
      doc["energy"].push_back({{"t", rec.t}, {"M", rec.mass}, {"drift", std::abs(rec.mass - m0)}});
    }
    os << doc.dump(1) << '\n';
  }
  log.finish(cfg.output);
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Laplacian on the real line via the map x = L cot(s)"};
  RawOptions raw;
  build_app(app, raw);
  try {
    const RunConfig cfg = parse_with(app, raw, args);
    validate(cfg);
    switch (cfg.command) {
      case Command::kApply: return cmd_apply(cfg, out);
      case Command::kSweep: return cmd_sweep(cfg, out);
      case Command::kNls: return cmd_nls(cfg, out);
    }
    return kConfigError;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kConfigError;
  } catch (const ParameterError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kConfigError;
  } catch (const ShapeError& e) {
    fmt::print(err, "input-shape error: {}\n", e.what());
    return kShapeError;
  } catch (const BlowUpError& e) {
    fmt::print(err, "blow-up: {} (node {}, t = {})\n", e.what(), e.index(), num(e.time()));
    return kBlowUp;
  } catch (const InputError& e) {
    fmt::print(err, "i/o error: {}\n", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    fmt::print(err, "numeric failure: {}\n", e.what());
    return kNumericError;
  }
}

}  // namespace fraclap::cli

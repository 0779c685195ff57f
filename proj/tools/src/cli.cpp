#include "rlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rlab/analysis.hpp"
#include "rlab/corpus.hpp"
#include "rlab/embeddings.hpp"
#include "rlab/error.hpp"
#include "rlab/io.hpp"
#include "rlab/norms.hpp"
#include "rlab/rearrange.hpp"

namespace rlab::cli {
namespace {

using io::format_double;
using io::json;

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": cannot parse \"" + item + "\" as a number");
    }
  }
  if (out.empty()) throw ValidationError(std::string(what) + ": empty list");
  return out;
}

// Options shared by every verb.
struct Common {
  std::string out_path;
  std::optional<std::size_t> grid;
  std::string format;

  EpsGridOptions grid_options() const {
    EpsGridOptions g;
    g.grid_size = grid ? *grid : default_grid_size();
    return g;
  }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--out,-o", c.out_path, "Write the result to this file instead of stdout");
  cmd->add_option("--grid", c.grid, "ε-grid size (default 2048 or $RLAB_GRID)")->check(CLI::Range(4, 10000000));
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

class Emitter {
 public:
  Emitter(const Common& c, std::ostream& fallback) : fallback_(fallback) {
    if (!c.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(c.out_path, std::ios::binary);
      if (!*file_) throw ValidationError("cannot write " + c.out_path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
};

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

StepFunction read_function(const std::string& arg) { return io::step_from_json(io::read_arg(arg)); }

MeasureDensity read_measure(const std::string& arg) {
  if (arg.empty()) return MeasureDensity::lebesgue();
  return io::measure_from_json(io::read_arg(arg));
}

Weight read_weight(const std::string& arg) { return io::weight_from_json(io::read_arg(arg)); }

void csv_header(std::ostream& os, const Common& c, const std::vector<std::pair<std::string, std::string>>& extra) {
  os << "# grid=" << c.grid_options().grid_size << '\n';
  for (const auto& [k, v] : extra) os << "# " << k << '=' << v << '\n';
}

struct NormArgs {
  Common common;
  std::string spec;
  std::string fn;
};

void run_norm(const NormArgs& a, std::ostream& out) {
  const auto spec = io::spec_from_json(io::read_arg(a.spec));
  const auto f = read_function(a.fn);
  const auto grid = a.common.grid_options();
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "json") {
    json j{{"spec", io::to_json(spec)}};
    if (is_grand(spec.kind) && !spec.fixed_eps && !(spec.kind == SpaceKind::grand_lorentz_pq && std::isinf(spec.q))) {
      const auto r = eps_profile(f, spec, grid.grid_size);
      j["value"] = io::number(r.value);
      j["eps_star"] = r.eps_star ? io::number(*r.eps_star) : json(nullptr);
      j["endpoint_limit"] = r.endpoint_limit;
      j["grid"] = grid.grid_size;
    } else {
      j["value"] = io::number(evaluate_norm(f, spec, grid));
    }
    write_json(os, j);
  } else {
    os << format_double(evaluate_norm(f, spec, grid)) << '\n';
  }
}

struct RearrangeArgs {
  Common common;
  std::string fn;
  std::string measure;
  bool average = false;
};

void run_rearrange(const RearrangeArgs& a, std::ostream& out) {
  const auto f = read_function(a.fn);
  const auto mu = read_measure(a.measure);
  const auto star = rearrangement(f, mu);
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "csv") {
    csv_header(os, a.common, {{"domain_end", format_double(star.domain_end())}});
    os << "t_lo,t_hi,value\n";
    for (std::size_t i = 0; i < star.segments(); ++i)
      os << format_double(star.breakpoints()[i]) << ',' << format_double(star.breakpoints()[i + 1]) << ','
         << format_double(star.values()[i]) << '\n';
    return;
  }
  if (a.average) {
    json j{{"rearrangement", io::to_json(star)}, {"average", io::to_json(average(star))}};
    write_json(os, j);
  } else {
    write_json(os, io::to_json(star));
  }
}

struct MaximalArgs {
  Common common;
  std::string fn;
  std::string xs;
  int samples = 101;
};

void run_maximal(const MaximalArgs& a, std::ostream& out) {
  const auto f = read_function(a.fn);
  std::vector<double> xs;
  if (!a.xs.empty()) {
    xs = parse_list(a.xs, "--x");
  } else {
    if (a.samples < 2) throw ValidationError("--samples must be at least 2");
    for (int i = 0; i < a.samples; ++i) xs.push_back(static_cast<double>(i) / (a.samples - 1));
  }
  const auto mf = maximal(f);
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "json") {
    json rows = json::array();
    for (double x : xs) rows.push_back({io::number(x), io::number(mf(x))});
    write_json(os, {{"samples", rows}});
    return;
  }
  os << "x,maximal\n";
  for (double x : xs) os << format_double(x) << ',' << format_double(mf(x)) << '\n';
}

struct CheckArgs {
  Common common;
  std::string condition = "empirical";
  double p = 2.0;
  double q = 2.0;
  std::string weight;
  std::string weight2;
  std::string mu;
  std::string nu;
  std::string source;
  std::string target;
  int corpus = 100;
  std::uint64_t seed = 1;
};

void run_embed_check(const CheckArgs& a, std::ostream& out) {
  const auto grid = a.common.grid_options();
  EmbeddingVerdict v;
  auto weight_or_unit = [](const std::string& s) { return s.empty() ? Weight::unit() : read_weight(s); };
  if (a.condition == "wholds") {
    v = wholds_check(a.p, a.q, weight_or_unit(a.weight), grid);
  } else if (a.condition == "cross") {
    v = cross_weight_check(a.p, a.q, weight_or_unit(a.weight), weight_or_unit(a.weight2), grid);
  } else if (a.condition == "downward") {
    v = downward_check(a.p, a.q, weight_or_unit(a.weight), weight_or_unit(a.weight2), grid);
  } else if (a.condition == "domination") {
    const auto mu = read_measure(a.mu);
    const auto nu = read_measure(a.nu);
    v.condition_value = domination_constant(mu, nu);
    v.holds = std::isfinite(v.condition_value);
    v.witness = mutual_ac(mu, nu) ? "mutually absolutely continuous" : "not mutually absolutely continuous";
  } else {
    if (a.source.empty() || a.target.empty()) throw ValidationError("empirical check needs --source and --target");
    EmpiricalOptions opts;
    opts.grid = grid;
    v = empirical_constant(io::spec_from_json(io::read_arg(a.source)), io::spec_from_json(io::read_arg(a.target)),
                           a.corpus, a.seed, opts);
  }
  Emitter emit(a.common, out);
  auto j = io::to_json(v);
  j["grid"] = grid.grid_size;
  if (a.condition == "empirical") j["corpus"] = kCorpusVersion;
  write_json(emit.stream(), j);
}

struct ProbeArgs {
  Common common;
  double p = 2, q = 2, r = 4, s = 4;
  std::string a_list = "1e-1,1e-2,1e-3";
};

void run_embed_probe(const ProbeArgs& a, std::ostream& out) {
  const auto grid = a.common.grid_options();
  const auto as = parse_list(a.a_list, "--a-list");
  const auto rows = shrinking_probe(a.p, a.q, a.r, a.s, as, grid);
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "json") {
    json j = json::array();
    for (const auto& row : rows)
      j.push_back({{"a", row.a}, {"source_norm", row.source_norm}, {"target_norm", row.target_norm}, {"ratio", row.ratio}});
    write_json(os, j);
    return;
  }
  csv_header(os, a.common,
             {{"p", format_double(a.p)}, {"q", format_double(a.q)}, {"r", format_double(a.r)}, {"s", format_double(a.s)}});
  os << "a,source_norm,target_norm,ratio\n";
  for (const auto& row : rows)
    os << format_double(row.a) << ',' << format_double(row.source_norm) << ',' << format_double(row.target_norm)
       << ',' << format_double(row.ratio) << '\n';
}

struct SweepArgs {
  Common common;
  std::string fn;
  std::string kernel = R"({"kind":"box"})";
  std::string spec;
  std::string t_list = "0.2,0.1,0.05,0.025,0.0125";
  int n = 4096;
  bool drift = false;
};

void run_sweep(const SweepArgs& a, std::ostream& out) {
  const auto f = read_function(a.fn);
  const auto phi = io::kernel_from_json(io::read_arg(a.kernel));
  const auto spec = io::spec_from_json(io::read_arg(a.spec));
  const auto ts = parse_list(a.t_list, "--t-list");
  for (double t : ts)
    if (!(t > 0.0)) throw ValidationError("--t-list values must be positive");
  SweepOptions opts;
  opts.n = a.n;
  opts.measure_drift = a.drift;
  opts.grid = a.common.grid_options();
  const auto rows = convergence_sweep(f, phi, ts, spec, opts);
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json row{{"t", r.t}, {"err", r.err}, {"conv_norm", r.conv_norm}, {"maximal_norm", r.maximal_norm}, {"ratio", r.ratio}};
      if (a.drift) row["drift"] = r.drift;
      j.push_back(row);
    }
    write_json(os, j);
    return;
  }
  csv_header(os, a.common, {{"n", std::to_string(a.n)}});
  os << "t,err,conv_norm,maximal_norm,ratio" << (a.drift ? ",drift" : "") << '\n';
  for (const auto& r : rows) {
    os << format_double(r.t) << ',' << format_double(r.err) << ',' << format_double(r.conv_norm) << ','
       << format_double(r.maximal_norm) << ',' << format_double(r.ratio);
    if (a.drift) os << ',' << format_double(r.drift);
    os << '\n';
  }
}

struct ProfileArgs {
  Common common;
  std::string fn;
  std::string spec;
};

void run_eps_profile(const ProfileArgs& a, std::ostream& out) {
  const auto spec = io::spec_from_json(io::read_arg(a.spec));
  const auto f = read_function(a.fn);
  const auto r = eps_profile(f, spec, a.common.grid_options().grid_size);
  Emitter emit(a.common, out);
  auto& os = emit.stream();
  if (a.common.format == "json") {
    auto j = io::to_json(r);
    j["grid"] = a.common.grid_options().grid_size;
    write_json(os, j);
    return;
  }
  csv_header(os, a.common,
             {{"value", format_double(r.value)},
              {"eps_star", r.eps_star ? format_double(*r.eps_star) : "none"},
              {"endpoint_limit", r.endpoint_limit ? "true" : "false"}});
  os << "eps,value\n";
  for (const auto& s : r.profile) os << format_double(s.eps) << ',' << format_double(s.value) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rearrangements, Lorentz-type norms and maximal operators on step functions"};
  app.name("rlab");
  app.require_subcommand(1);

  NormArgs norm;
  auto* c_norm = app.add_subcommand("norm", "Evaluate a norm given a space spec");
  add_common(c_norm, norm.common, "text");
  c_norm->add_option("--spec", norm.spec, "SpaceSpec JSON (inline or file)")->required();
  c_norm->add_option("--fn", norm.fn, "Step function JSON (inline or file)")->required();

  RearrangeArgs rea;
  auto* c_rea = app.add_subcommand("rearrange", "Decreasing rearrangement f*");
  add_common(c_rea, rea.common, "json");
  c_rea->add_option("--fn", rea.fn, "Step function JSON")->required();
  c_rea->add_option("--measure", rea.measure, "Measure density JSON (default Lebesgue)");
  c_rea->add_flag("--average", rea.average, "Also emit the average function f**");

  MaximalArgs mx;
  auto* c_mx = app.add_subcommand("maximal", "Centered Hardy-Littlewood maximal function");
  add_common(c_mx, mx.common, "csv");
  c_mx->add_option("--fn", mx.fn, "Step function JSON")->required();
  c_mx->add_option("--x", mx.xs, "Comma-separated evaluation points");
  c_mx->add_option("--samples", mx.samples, "Number of equally spaced points on [0,1]");

  CheckArgs chk;
  auto* c_chk = app.add_subcommand("embed-check", "Check an inclusion condition or estimate an embedding constant");
  add_common(c_chk, chk.common, "json");
  c_chk->add_option("--condition", chk.condition, "Which check to run")
      ->check(CLI::IsMember({"empirical", "wholds", "cross", "downward", "domination"}));
  c_chk->add_option("--p", chk.p, "Exponent p");
  c_chk->add_option("--q", chk.q, "Exponent q");
  c_chk->add_option("--weight", chk.weight, "Weight ω JSON");
  c_chk->add_option("--weight2", chk.weight2, "Second weight ϑ JSON");
  c_chk->add_option("--mu", chk.mu, "Measure μ JSON");
  c_chk->add_option("--nu", chk.nu, "Measure ν JSON");
  c_chk->add_option("--source", chk.source, "Source SpaceSpec JSON");
  c_chk->add_option("--target", chk.target, "Target SpaceSpec JSON");
  c_chk->add_option("--corpus", chk.corpus, "Corpus size")->check(CLI::PositiveNumber);
  c_chk->add_option("--seed", chk.seed, "Corpus seed");

  ProbeArgs probe;
  auto* c_probe = app.add_subcommand("embed-probe", "Norm ratios along shrinking indicators");
  add_common(c_probe, probe.common, "csv");
  c_probe->add_option("--p", probe.p, "Source exponent p");
  c_probe->add_option("--q", probe.q, "Source exponent q");
  c_probe->add_option("--r", probe.r, "Target exponent r");
  c_probe->add_option("--s", probe.s, "Target exponent s");
  c_probe->add_option("--a-list", probe.a_list, "Comma-separated set measures");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("mollify-sweep", "Norm convergence of mollified functions");
  add_common(c_sweep, sweep.common, "csv");
  c_sweep->add_option("--fn", sweep.fn, "Step function JSON")->required();
  c_sweep->add_option("--kernel", sweep.kernel, "Kernel JSON");
  c_sweep->add_option("--spec", sweep.spec, "SpaceSpec JSON")->required();
  c_sweep->add_option("--t-list", sweep.t_list, "Comma-separated scales t");
  c_sweep->add_option("--n", sweep.n, "Cells of the step approximation")->check(CLI::Range(2, 1 << 24));
  c_sweep->add_flag("--drift", sweep.drift, "Add the n vs 2n refinement drift column");

  ProfileArgs prof;
  auto* c_prof = app.add_subcommand("eps-profile", "Full ε-profile of a grand norm");
  add_common(c_prof, prof.common, "csv");
  c_prof->add_option("--fn", prof.fn, "Step function JSON")->required();
  c_prof->add_option("--spec", prof.spec, "SpaceSpec JSON (grand kind)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rlab: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (c_norm->parsed()) run_norm(norm, out);
    if (c_rea->parsed()) run_rearrange(rea, out);
    if (c_mx->parsed()) run_maximal(mx, out);
    if (c_chk->parsed()) run_embed_check(chk, out);
    if (c_probe->parsed()) run_embed_probe(probe, out);
    if (c_sweep->parsed()) run_sweep(sweep, out);
    if (c_prof->parsed()) run_eps_profile(prof, out);
  } catch (const ValidationError& e) {
    err << "rlab: " << e.what() << '\n';
    return kValidation;
  } catch (const ComputationError& e) {
    err << "rlab: computation failed: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    err << "rlab: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}

}  // namespace rlab::cli

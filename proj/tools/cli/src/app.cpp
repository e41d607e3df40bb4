#include "critorbit/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "critorbit/cli/json_io.hpp"
#include "critorbit/cli/output.hpp"
#include "critorbit/cli/parse.hpp"

namespace critorbit::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string map;
  std::string field = "1";
  std::string field_den = "1";
  std::size_t critical = 0;
  std::size_t n = 1000;
  double escape_radius = 0.0;
  double tol = 1e-12;
  std::size_t window = 32;
  int max_degree = 4;
  double threshold = 0.0;
  int period = 1;
  std::size_t seeds = 500;
  std::uint64_t seed = 1;
  std::string point;
  std::string lambda = "0.1";
  int steps = 10;
  double fd_step = 1e-4;
  std::string region = "-2,0.5,-1.25,1.25";
  int nx = 64;
  int ny = 64;
  std::string path;
  int d = 2;
  unsigned workers = 1;
  int max_iter = 256;
  std::string plane = "parameter";
  std::string julia_c = "0";
  std::string format;
  std::string output;
};

struct OptionDef;
using Binder = std::function<CLI::Option*(CLI::App&, Options&, const OptionDef&)>;

struct OptionDef {
  const char* flags;
  const char* key;
  const char* help;
  Binder bind;
};

template <auto Member>
Binder bind() {
  return [](CLI::App& app, Options& o, const OptionDef& def) {
    return app.add_option(def.flags, o.*Member, def.help)->capture_default_str();
  };
}

// The single source for flags, their defaults and --help.
const std::vector<OptionDef>& option_table() {
  static const std::vector<OptionDef> table{
      {"--map", "map", "map text: unicritical:d,c or rational:<num>/<den> (coefficients lowest degree first)",
       bind<&Options::map>()},
      {"--field", "field", "vector field numerator, a sum of terms c*z^j", bind<&Options::field>()},
      {"--field-den", "field-den", "vector field denominator", bind<&Options::field_den>()},
      {"--critical", "critical", "index into the map's sorted critical points", bind<&Options::critical>()},
      {"--n", "n", "orbit length (iterations)", bind<&Options::n>()},
      {"--escape-radius", "escape-radius", "escape radius; 0 disables (scan/render: per-parameter default)",
       bind<&Options::escape_radius>()},
      {"--tol", "tol", "absolute tolerance on the series tail", bind<&Options::tol>()},
      {"--window", "window", "trailing window for the summability ratio test", bind<&Options::window>()},
      {"--max-degree", "max-degree", "highest moment degree", bind<&Options::max_degree>()},
      {"--threshold", "threshold", "minimum moment norm for a witness", bind<&Options::threshold>()},
      {"--period", "period", "cycle period", bind<&Options::period>()},
      {"--seeds", "seeds", "number of Newton seeds for cycle search", bind<&Options::seeds>()},
      {"--seed", "seed", "random seed for cycle search seeds", bind<&Options::seed>()},
      {"--point", "point", "approximate point of the cycle (complex a+bi)", bind<&Options::point>()},
      {"--lambda", "lambda", "continuation target for R + lambda v (complex)", bind<&Options::lambda>()},
      {"--steps", "steps", "initial continuation steps", bind<&Options::steps>()},
      {"--fd-step", "fd-step", "finite-difference step for check-motion", bind<&Options::fd_step>()},
      {"--region", "region", "re_min,re_max,im_min,im_max", bind<&Options::region>()},
      {"--nx", "nx", "grid columns", bind<&Options::nx>()},
      {"--ny", "ny", "grid rows", bind<&Options::ny>()},
      {"--path", "path", "semicolon-separated parameters; replaces the region grid", bind<&Options::path>()},
      {"--d", "d", "degree of the unicritical family z^d + c", bind<&Options::d>()},
      {"--workers", "workers", "worker threads, 0 = all cores (env CRITORBIT_WORKERS)",
       [](CLI::App& app, Options& o, const OptionDef& def) {
         return app.add_option(def.flags, o.workers, def.help)->capture_default_str()->envname(kWorkersEnv);
       }},
      {"--max-iter", "max-iter", "escape-time iteration cap", bind<&Options::max_iter>()},
      {"--plane", "plane", "parameter or dynamical",
       [](CLI::App& app, Options& o, const OptionDef& def) {
         return app.add_option(def.flags, o.plane, def.help)
             ->capture_default_str()
             ->check(CLI::IsMember({"parameter", "dynamical"}));
       }},
      {"--julia-c", "julia-c", "parameter c for the dynamical plane", bind<&Options::julia_c>()},
      {"--format", "format", "json, csv or ppm (default depends on the command)", bind<&Options::format>()},
      {"-o,--output", "output", "output file (default: standard output)", bind<&Options::output>()},
  };
  return table;
}

using Handler = std::function<void(const Options&, const std::string& format, std::ostream& out)>;

struct CommandDef {
  const char* name;
  const char* summary;
  std::vector<std::string_view> options;
  std::vector<std::string> formats;  // first is the default
  Handler run;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

MapSpec map_of(const Options& o) {
  if (o.map.empty()) throw UsageError("--map is required for " + o.command);
  return parse_map(o.map);
}

VectorFieldSpec field_of(const Options& o) { return parse_field(o.field, o.field_den); }

Complex critical_of(const Options& o, const MapSpec& m) {
  const auto& cps = m.critical_points();
  if (o.critical >= cps.size()) {
    throw UsageError("--critical " + std::to_string(o.critical) + " out of range; the map has " +
                     std::to_string(cps.size()) + " finite critical points");
  }
  return cps[o.critical];
}

OrbitRecord orbit_of(const Options& o, const MapSpec& m, OrbitOptions opts = {}) {
  return iterate_orbit(m, critical_of(o, m), o.n, o.escape_radius, opts);
}

Cycle cycle_near(const MapSpec& m, const Options& o) {
  if (o.point.empty()) throw UsageError("--point is required for " + o.command);
  const auto found = find_cycles(m, o.period, {parse_complex(o.point)});
  if (found.empty()) {
    throw InvalidCycleError("no cycle of exact period " + std::to_string(o.period) + " found from " + o.point);
  }
  return found.front();
}

ScanConfig scan_config(const Options& o) {
  ScanConfig cfg;
  const auto r = parse_real_list(o.region);
  if (r.size() != 4) throw UsageError("--region needs four values re_min,re_max,im_min,im_max");
  cfg.region = {r[0], r[1], r[2], r[3]};
  if (!o.path.empty()) cfg.path = parse_path(o.path);
  cfg.d = o.d;
  cfg.nx = o.nx;
  cfg.ny = o.ny;
  cfg.orbit_length = o.n;
  cfg.field = field_of(o);
  cfg.escape_radius = o.escape_radius;
  cfg.worker_count = o.workers;
  cfg.plane = o.plane == "dynamical" ? RenderPlane::dynamical : RenderPlane::parameter;
  cfg.julia_c = parse_complex(o.julia_c);
  return cfg;
}

const std::vector<CommandDef>& command_table() {
  using V = std::vector<std::string_view>;
  static const std::vector<CommandDef> table{
      {"orbit", "critical orbit with derivative cocycle and partial sums",
       V{"map", "critical", "n", "escape-radius"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         emit(out, orbit_of(o, map_of(o), {.throw_on_relation = false}));
       }},
      {"summability", "ratio-test evidence for sum 1/|DR^k(R(c))|",
       V{"map", "critical", "n", "escape-radius", "window"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         emit(out, summability_report(orbit_of(o, map_of(o)), o.window));
       }},
      {"mu", "the functional mu(v) = sum v(x_k) / DR^k(R(c))",
       V{"map", "field", "field-den", "critical", "n", "escape-radius", "tol"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         emit(out, mu_functional(orbit_of(o, map_of(o)), field_of(o), o.tol));
       }},
      {"moments", "mu(z^j) for j = 0..max-degree",
       V{"map", "critical", "n", "escape-radius", "tol", "max-degree"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         emit(out, json{{"moments", moment_vector(orbit_of(o, map_of(o)), o.max_degree, o.tol)}});
       }},
      {"witness", "unit-norm polynomial field maximizing |mu|",
       V{"map", "critical", "n", "escape-radius", "tol", "max-degree", "threshold"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         const auto m = moment_vector(orbit_of(o, map_of(o)), o.max_degree, o.tol);
         emit(out, find_witness_field(m, o.threshold));
       }},
      {"obstruction", "obstruction sequence b_n and its growth exponent",
       V{"map", "field", "field-den", "critical", "n", "escape-radius"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         emit(out, obstruction_sequence(orbit_of(o, map_of(o)), field_of(o), o.n));
       }},
      {"cycles", "cycles of exact period by Newton from seeds", V{"map", "period", "seeds", "seed"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         const MapSpec m = map_of(o);
         emit(out, json{{"cycles", find_cycles(m, o.period, default_cycle_seeds(m, o.seeds, o.seed))}});
       }},
      {"alpha", "solve v = alpha o R - DR alpha on cycles (all non-parabolic cycles unless --point)",
       V{"map", "field", "field-den", "period", "point", "seeds", "seed"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         const MapSpec m = map_of(o);
         const VectorFieldSpec v = field_of(o);
         json entries = json::array();
         if (!o.point.empty()) {
           const Cycle c = cycle_near(m, o);
           entries.push_back({{"cycle", c}, {"solution", solve_alpha_on_cycle(m, c, v)}});
         } else {
           for (const Cycle& c : find_cycles(m, o.period, default_cycle_seeds(m, o.seeds, o.seed))) {
             if (std::abs(1.0 - c.multiplier) <= kParabolicTolerance) continue;
             entries.push_back({{"cycle", c}, {"solution", solve_alpha_on_cycle(m, c, v)}});
           }
         }
         emit(out, json{{"cycles", entries}});
       }},
      {"continue", "continue a repelling cycle along R + lambda v",
       V{"map", "field", "field-den", "period", "point", "lambda", "steps"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         const MapSpec m = map_of(o);
         emit(out, continue_cycle(m, field_of(o), cycle_near(m, o), parse_complex(o.lambda), o.steps));
       }},
      {"check-motion", "compare alpha with the finite-difference cycle velocity",
       V{"map", "field", "field-den", "period", "point", "fd-step"}, {"json"},
       [](const Options& o, const std::string&, std::ostream& out) {
         const MapSpec m = map_of(o);
         emit(out, motion_velocity_check(m, field_of(o), cycle_near(m, o), o.fd_step));
       }},
      {"scan", "classify parameters of z^d + c and fit obstruction growth",
       V{"region", "nx", "ny", "path", "d", "n", "field", "field-den", "escape-radius", "workers"}, {"csv", "json"},
       [](const Options& o, const std::string& format, std::ostream& out) {
         const auto rows = scan_parameters(scan_config(o));
         if (format == "csv") {
           write_scan_csv(out, rows);
         } else {
           emit(out, json{{"rows", rows}});
         }
       }},
      {"render", "escape-time image of the parameter or dynamical plane",
       V{"region", "nx", "ny", "path", "d", "escape-radius", "workers", "max-iter", "plane", "julia-c"},
       {"ppm", "json"},
       [](const Options& o, const std::string& format, std::ostream& out) {
         const EscapeGrid g = render_escape(scan_config(o), o.max_iter);
         if (format == "ppm") {
           write_ppm(out, g);
         } else {
           emit(out, g);
         }
       }},
  };
  return table;
}

std::string commands_footer() {
  std::ostringstream s;
  s << "Commands:\n";
  for (const CommandDef& c : command_table()) {
    s << "  " << c.name << ": " << c.summary << "\n    options:";
    for (auto k : c.options) s << " --" << k;
    s << "\n    formats:";
    for (const auto& f : c.formats) s << ' ' << f;
    s << '\n';
  }
  s << "\nExit status: 0 success, 1 domain error, 2 usage error.";
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Critical orbit series, obstruction sequences and cycle linearization for rational maps",
               "critorbit"};
  std::vector<std::string> names;
  for (const CommandDef& c : command_table()) names.emplace_back(c.name);
  app.add_option("command", o.command, "command to run")->required()->check(CLI::IsMember(names));
  std::vector<std::pair<std::string_view, CLI::Option*>> bound;
  for (const OptionDef& def : option_table()) bound.emplace_back(def.key, def.bind(app, o, def));
  app.set_config("--config", "", "flat key=value file with option names as keys; command-line flags win");
  // Values such as map text contain commas; keep each line's value whole.
  app.get_config_formatter_base()->arrayDelimiter('\0');
  app.footer(commands_footer());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsageError;
  }

  const CommandDef& cmd = *std::find_if(command_table().begin(), command_table().end(),
                                        [&](const CommandDef& c) { return o.command == c.name; });
  for (const auto& [key, opt] : bound) {
    if (key == "format" || key == "output") continue;
    if (opt->count() == 0) continue;
    if (std::find(cmd.options.begin(), cmd.options.end(), key) == cmd.options.end()) {
      err << "error: --" << key << " does not apply to " << cmd.name << "\n\n" << app.help();
      return kExitUsageError;
    }
  }
  const std::string format = o.format.empty() ? cmd.formats.front() : o.format;
  if (std::find(cmd.formats.begin(), cmd.formats.end(), format) == cmd.formats.end()) {
    err << "error: format '" << format << "' is not available for " << cmd.name << '\n';
    return kExitUsageError;
  }

  try {
    std::ostringstream buffer;
    cmd.run(o, format, buffer);
    if (o.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "error: cannot write " << o.output << '\n';
        return kExitDomainError;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace critorbit::cli

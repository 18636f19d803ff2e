#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "frobcov/bridge.hpp"
#include "frobcov/common.hpp"
#include "frobcov/covering.hpp"
#include "frobcov/frobenius.hpp"
#include "frobcov/intvec.hpp"
#include "frobcov/lattice.hpp"
#include "frobcov/parallel.hpp"
#include "frobcov/randlat.hpp"
#include "frobcov/stats.hpp"

namespace frobcov::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  IntVec a;
  bool table = false;
  int dim = 3;
  Int T = 100;
  bool T_given = false;
  std::string domain;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> against_seed;
  int grid = 0;
  bool exact = false;
  std::string variant = "shifted";
  std::string out;
  std::string format = "csv";
  std::string basis;
  std::string method = "haar2d";
  std::string source = "haar2d";
  std::string against = "haar2d";
  Int norm = 100000;
  std::string frame = "gram-schmidt";
  std::optional<std::string> against_frame;
  double r_min = 0.0;
  double r_max = 4.0;
  int r_steps = 401;
  Int Q = 10;
  bool floor2 = false;
  bool list = false;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(std::span<const Int> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Metadata carried by every CSV/JSON output.
struct Meta {
  std::string command;
  std::uint64_t seed = 1;
  std::vector<std::pair<std::string, std::string>> params;

  void add(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }

  void write_csv(std::ostream& os) const {
    os << "# frobcov " << kVersion << "\n";
    os << "# command: " << command << "\n";
    os << "# seed: " << seed << "\n";
    for (const auto& [k, v] : params) os << "# " << k << ": " << v << "\n";
  }

  Json json() const {
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return Json{{"version", kVersion}, {"command", command}, {"seed", seed}, {"params", p}};
  }
};

// Writes to --out when given, otherwise to the command's stdout stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw PreconditionError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Box domain_for(const Options& o, int d) {
  if (o.domain.empty()) return Box::unit_cube(static_cast<std::size_t>(d));
  Box b = Box::parse(o.domain);
  if (b.dim() != static_cast<std::size_t>(d)) {
    throw PreconditionError("--domain has " + std::to_string(b.dim()) + " intervals but --dim is " +
                            std::to_string(d));
  }
  return b;
}

Json basis_json(const FloatBasis& b) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.row(i));
  return rows;
}

template <class S>
Json scalar_json(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return to_string(v);
  } else {
    return v;
  }
}

template <class S>
Json vec_json(const std::vector<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

template <class S>
Json covering_json(const CoveringResult<S>& r, const LatticeBasis<S>& basis) {
  Json j;
  j["flavor"] = std::is_same_v<S, Rational> ? "exact" : "floating";
  j["rho"] = scalar_json(r.rho);
  j["rho_value"] = ScalarTraits<S>::to_double(r.rho);
  j["zeta"] = vec_json(r.zeta);
  Json w = Json::array();
  for (const auto& p : r.witnesses) w.push_back(vec_json(p));
  j["witnesses"] = w;
  j["boundary_degenerate"] = r.boundary_degenerate;
  j["search_bound"] = scalar_json(r.search_bound);
  j["retries"] = r.retries;
  const CoveringCheck check = verify_covering(basis, r);
  j["verified"] = check.ok;
  if (!check.ok) throw InternalError("covering certificate failed re-verification: " + check.failure);
  return j;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  const FrobeniusResult r = frobenius(o.a);
  Sink sink(o.out, out);
  if (!o.table) {
    *sink << r.F << "\n";
    return kExitOk;
  }
  Meta m{"frobenius", o.seed, {}};
  m.add("a", join(o.a, " "));
  m.add("F", std::to_string(r.F));
  m.add("modulus", std::to_string(r.modulus));
  m.write_csv(*sink);
  *sink << "r,N_r\n";
  for (std::size_t i = 0; i < r.N.size(); ++i) *sink << i << "," << r.N[i] << "\n";
  return kExitOk;
}

int cmd_bridge(const Options& o, std::ostream& out) {
  const Statistic stat = parse_statistic(o.variant);
  Sink sink(o.out, out);
  if (!o.a.empty()) {
    const BridgeResult b = o.grid > 0 ? bridge(o.a, o.grid) : bridge(o.a);
    Meta m{"bridge", o.seed, {}};
    m.add("a", join(o.a, " "));
    Json j;
    j["meta"] = m.json();
    j["a"] = b.a;
    j["F"] = b.F;
    j["rho_w"] = b.rho_w ? Json(*b.rho_w) : Json(nullptr);
    if (b.quality == BridgeQuality::GridLowerBound) j["rho_w_lower"] = b.rho_w_lower;
    j["scaled_raw"] = b.scaled_raw;
    j["scaled_shifted"] = b.scaled_shifted;
    j["quality"] = to_string(b.quality);
    j["normalized_basis"] = basis_json(b.normalized);
    *sink << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!o.T_given) throw PreconditionError("bridge needs either a vector a1 ... ad or --T for a batch");
  const Box dom = domain_for(o, o.dim);
  const std::vector<IntVec> pts = enumerate_primitive(dom, o.T, /*floor2=*/true);
  std::vector<BridgeResult> res(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { res[i] = o.grid > 0 ? bridge(pts[i], o.grid) : bridge(pts[i]); });

  Meta m{"bridge", o.seed, {}};
  m.add("dim", std::to_string(o.dim));
  m.add("T", std::to_string(o.T));
  m.add("domain", dom.to_string());
  m.add("variant", to_string(stat));
  m.add("rows", std::to_string(res.size()));
  m.write_csv(*sink);
  for (int i = 1; i <= o.dim; ++i) *sink << "a" << i << ",";
  *sink << "F,rho_w,scaled\n";
  for (const auto& b : res) {
    *sink << join(b.a, ",") << "," << b.F << ",";
    if (b.rho_w) *sink << *b.rho_w;
    *sink << "," << num(stat == Statistic::Shifted ? b.scaled_shifted : b.scaled_raw) << "\n";
  }
  return kExitOk;
}

int cmd_rho(const Options& o, std::ostream& out) {
  const ExactBasis exact = parse_basis(o.basis);
  const FloatBasis floating = to_float(exact);
  const std::size_t n = exact.dim();
  Meta m{"rho", o.seed, {}};
  m.add("basis", o.basis);
  if (o.grid > 0) m.add("grid", std::to_string(o.grid));
  m.add("exact", o.exact ? "true" : "false");
  Json j;
  j["meta"] = m.json();
  j["dim"] = n;
  if (n == 1) {
    const Rational g = abs(exact(0, 0));
    if (o.exact) {
      j["covering"] = covering_json(covering_result_1d(g), exact);
    } else {
      j["covering"] = covering_json(covering_result_1d(g.get_d()), floating);
    }
  } else if (n == 2) {
    if (o.exact) {
      j["covering"] = covering_json(covering_radius_exact_2d(exact), exact);
    } else {
      j["covering"] = covering_json(covering_radius_exact_2d(floating), floating);
    }
  } else if (o.grid <= 0) {
    throw PreconditionError("exact covering radius is available for n <= 2 only; pass --grid N");
  }
  if (o.grid > 0) {
    const GridResult g = covering_radius_grid(floating, o.grid);
    j["grid"] = Json{{"value", g.value},
                     {"grid_n", g.grid_n},
                     {"lipschitz", g.lipschitz},
                     {"gap_bound", g.gap_bound},
                     {"zeta", g.zeta}};
  }
  Sink sink(o.out, out);
  *sink << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const LatticeSource src = parse_lattice_source(o.method);
  const FrameMethod fm = parse_frame_method(o.frame);
  const int n = o.dim;
  if (src == LatticeSource::Haar2D && n != 2) throw PreconditionError("haar2d samples 2-D lattices only (--dim 2)");
  if (src == LatticeSource::Schmidt && n < 2) throw PreconditionError("schmidt needs --dim >= 2");
  Meta m{"sample-lattice", o.seed, {}};
  m.add("method", to_string(src));
  m.add("dim", std::to_string(n));
  m.add("count", std::to_string(o.count));
  if (src == LatticeSource::Schmidt) {
    m.add("N", std::to_string(o.norm));
    m.add("frame", to_string(fm));
  }
  Sink sink(o.out, out);
  m.write_csv(*sink);
  *sink << "index";
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) *sink << ",b" << i << k;
  }
  if (src == LatticeSource::Haar2D) {
    *sink << ",x,y,theta";
  } else {
    for (int i = 1; i <= n + 1; ++i) *sink << ",a" << i;
  }
  *sink << "\n";
  for (std::size_t s = 0; s < o.count; ++s) {
    CounterRng rng(o.seed, s);
    *sink << s;
    if (src == LatticeSource::Haar2D) {
      const HaarSample2D h = sample_haar_2d(rng);
      for (double v : h.basis.entries()) *sink << "," << num(v);
      *sink << "," << num(h.x) << "," << num(h.y) << "," << num(h.theta);
    } else {
      const SchmidtSample sm = sample_schmidt(n + 1, o.norm, rng, fm);
      for (double v : sm.basis.entries()) *sink << "," << num(v);
      *sink << "," << join(sm.a, ",");
    }
    *sink << "\n";
  }
  return kExitOk;
}

ExperimentReport run_source(const Options& o, const std::string& source, std::uint64_t seed,
                            const std::string& frame) {
  ExperimentReport r;
  r.source = source;
  r.d = o.dim;
  r.seed = seed;
  if (source == "frobenius") {
    const Statistic stat = parse_statistic(o.variant);
    const Box dom = domain_for(o, o.dim);
    FrobeniusPsi p = psi_from_frobenius(o.dim, o.T, dom, stat);
    r.T = o.T;
    r.domain = dom.to_string();
    r.statistic = to_string(stat);
    r.sample_count = p.count;
    r.primitive_count = p.count;
    r.density = p.density;
    r.density_reference = p.density_reference;
    r.corner_fraction = p.corner_fraction;
    r.curve = std::move(p.curve);
    return r;
  }
  LatticePsiOptions lo;
  lo.d = o.dim;
  lo.count = o.count;
  lo.source = parse_lattice_source(source);
  lo.seed = seed;
  lo.schmidt_norm = o.norm;
  lo.frame = parse_frame_method(frame);
  LatticePsi p = psi_from_lattices(lo);
  r.sample_count = o.count;
  if (lo.source == LatticeSource::Schmidt) {
    r.schmidt_norm = o.norm;
    r.frame = frame;
  }
  r.boundary_degenerate = p.boundary_degenerate;
  r.curve = std::move(p.curve);
  return r;
}

void add_report_params(Meta& m, const ExperimentReport& r, const std::string& prefix) {
  m.add(prefix + "source", r.source);
  m.add(prefix + "dim", std::to_string(r.d));
  if (r.source == "frobenius") {
    m.add(prefix + "T", std::to_string(r.T));
    m.add(prefix + "domain", r.domain);
    m.add(prefix + "variant", r.statistic);
  } else {
    // the unprefixed seed is the metadata seed itself
    if (!prefix.empty()) m.add(prefix + "seed", std::to_string(r.seed));
    m.add(prefix + "count", std::to_string(r.sample_count));
  }
  if (!r.frame.empty()) {
    m.add(prefix + "N", std::to_string(r.schmidt_norm));
    m.add(prefix + "frame", r.frame);
  }
}

Json report_json(const ExperimentReport& r) {
  Json j;
  j["source"] = r.source;
  j["d"] = r.d;
  if (r.source == "frobenius") {
    j["T"] = r.T;
    j["domain"] = r.domain;
    j["statistic"] = r.statistic;
    j["primitive_count"] = r.primitive_count;
    j["density"] = r.density;
    j["density_reference"] = r.density_reference;
    j["corner_fraction"] = r.corner_fraction;
  } else {
    j["seed"] = r.seed;
    if (!r.frame.empty()) {
      j["schmidt_norm"] = r.schmidt_norm;
      j["frame"] = r.frame;
    }
    j["boundary_degenerate"] = r.boundary_degenerate;
  }
  j["sample_count"] = r.sample_count;
  const auto s = r.curve.samples();
  j["min"] = s.front();
  j["max"] = s.back();
  j["max_atom"] = continuity_smoke(r.curve);
  if (r.ks_against) j["ks_against"] = *r.ks_against;
  return j;
}

std::vector<double> r_grid(const Options& o) {
  if (o.r_steps < 1) throw PreconditionError("--r-steps must be >= 1");
  if (!(o.r_max >= o.r_min)) throw PreconditionError("--r-max must be >= --r-min");
  std::vector<double> g(static_cast<std::size_t>(o.r_steps));
  for (int i = 0; i < o.r_steps; ++i) {
    g[static_cast<std::size_t>(i)] =
        o.r_steps == 1 ? o.r_min : o.r_min + (o.r_max - o.r_min) * i / static_cast<double>(o.r_steps - 1);
  }
  return g;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const ExperimentReport r = run_source(o, o.source, o.seed, o.frame);
  Meta m{"psi", o.seed, {}};
  add_report_params(m, r, "");
  m.add("r_grid", num(o.r_min) + ":" + num(o.r_max) + ":" + std::to_string(o.r_steps));
  const std::vector<double> grid = r_grid(o);
  Sink sink(o.out, out);
  if (o.format == "json") {
    Json j;
    j["meta"] = m.json();
    j["report"] = report_json(r);
    Json c = Json::array();
    for (double R : grid) c.push_back(Json{{"R", R}, {"survival", r.curve(R)}});
    j["curve"] = c;
    *sink << j.dump(2) << "\n";
    return kExitOk;
  }
  m.add("sample_count", std::to_string(r.sample_count));
  if (r.source == "frobenius") {
    m.add("density", num(r.density));
    m.add("density_reference", num(r.density_reference));
    m.add("corner_fraction", num(r.corner_fraction));
  } else {
    m.add("boundary_degenerate", std::to_string(r.boundary_degenerate));
  }
  m.write_csv(*sink);
  *sink << "R,survival\n";
  for (double R : grid) *sink << num(R) << "," << num(r.curve(R)) << "\n";
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  ExperimentReport a = run_source(o, o.source, o.seed, o.frame);
  const ExperimentReport b =
      run_source(o, o.against, o.against_seed.value_or(o.seed), o.against_frame.value_or(o.frame));
  const double ks = ks_distance(a.curve, b.curve);
  a.ks_against = ks;
  Sink sink(o.out, out);
  if (o.format == "json") {
    Meta m{"compare", o.seed, {}};
    add_report_params(m, a, "");
    add_report_params(m, b, "against_");
    Json j;
    j["meta"] = m.json();
    j["ks"] = ks;
    j["report"] = report_json(a);
    j["against"] = report_json(b);
    *sink << j.dump(2) << "\n";
    return kExitOk;
  }
  *sink << num(ks) << "\n";
  return kExitOk;
}

int cmd_farey(const Options& o, std::ostream& out) {
  Meta m{"farey", o.seed, {}};
  m.add("Q", std::to_string(o.Q));
  m.add("dim", std::to_string(o.dim));
  m.add("asymptotic_size", num(farey_asymptotic_size(o.Q, o.dim)));
  Sink sink(o.out, out);
  m.write_csv(*sink);
  for (int i = 1; i < o.dim; ++i) *sink << "p" << i << ",";
  *sink << "q\n";
  for_each_farey(o.Q, o.dim, [&](const FareyPoint& f) { *sink << join(f.p, ",") << "," << f.q << "\n"; });
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Box dom = domain_for(o, o.dim);
  Meta m{"count-primitive", o.seed, {}};
  m.add("dim", std::to_string(o.dim));
  m.add("T", std::to_string(o.T));
  m.add("domain", dom.to_string());
  m.add("floor2", o.floor2 ? "true" : "false");
  Sink sink(o.out, out);
  if (o.list) {
    m.write_csv(*sink);
    for (int i = 1; i <= o.dim; ++i) *sink << (i > 1 ? "," : "") << "a" << i;
    *sink << "\n";
    for_each_primitive(dom, o.T, o.floor2, [&](std::span<const Int> a) { *sink << join(a, ",") << "\n"; });
    return kExitOk;
  }
  const std::size_t count = count_primitive(dom, o.T, o.floor2);
  const double density = primitive_density(dom, o.T);
  const double reference = 1.0 / zeta(o.dim);
  if (o.format == "json") {
    Json j;
    j["meta"] = m.json();
    j["count"] = count;
    j["density"] = density;
    j["density_reference"] = reference;
    *sink << j.dump(2) << "\n";
    return kExitOk;
  }
  m.write_csv(*sink);
  *sink << "count,density,density_reference\n";
  *sink << count << "," << num(density) << "," << num(reference) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frobenius numbers, simplex covering radii and their limiting distribution", "frobcov"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  const std::vector<std::string> lattice_sources{"haar2d", "schmidt"};
  const std::vector<std::string> sources{"frobenius", "haar2d", "schmidt"};
  const std::vector<std::string> frames{"gram-schmidt", "gram-schmidt-reversed"};
  const std::vector<std::string> variants{"shifted", "raw"};
  const std::vector<std::string> formats{"csv", "json"};

  auto add_common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Write output to this file instead of stdout");
    s->add_option("--seed", o.seed, "Random seed (recorded in the output metadata)");
  };

  auto* f = app.add_subcommand("frobenius", "Frobenius number of a1 ... ad");
  f->add_option("a", o.a, "Coordinates of a primitive vector, each >= 2")->required()->expected(2, -1);
  f->add_flag("--table", o.table, "Emit the residue table N_r as CSV");
  add_common(f);

  auto* b = app.add_subcommand("bridge", "Frobenius number vs weighted covering radius");
  b->add_option("a", o.a, "Coordinates of a primitive vector (omit for a batch over --T)")->expected(0, -1);
  b->add_option("--dim", o.dim, "Dimension d of the batch")->check(CLI::Range(2, 12));
  b->add_option("--T", o.T, "Batch scale: all primitive a >= 2 in T * domain")->check(CLI::PositiveNumber);
  b->add_option("--domain", o.domain, "Box \"l1,u1;l2,u2;...\" (default unit cube)");
  b->add_option("--variant", o.variant, "Statistic in the batch column 'scaled'")->check(CLI::IsMember(variants));
  b->add_option("--grid", o.grid, "Grid resolution for d >= 4")->check(CLI::PositiveNumber);
  add_common(b);

  auto* r = app.add_subcommand("rho", "Covering radius of the standard simplex for a lattice basis");
  r->add_option("--basis", o.basis, "Rows \"b11,b12;b21,b22\" (entries p, p/q or decimals)")->required();
  r->add_option("--grid", o.grid, "Also report the grid lower bound at this resolution")->check(CLI::PositiveNumber);
  r->add_flag("--exact", o.exact, "Exact rational arithmetic");
  add_common(r);

  auto* s = app.add_subcommand("sample-lattice", "Random unit-covolume lattices");
  s->add_option("--dim", o.dim, "Lattice dimension n")->check(CLI::Range(1, 12));
  s->add_option("--method", o.method, "haar2d or schmidt")->check(CLI::IsMember(lattice_sources));
  s->add_option("--count", o.count, "Number of lattices")->check(CLI::NonNegativeNumber);
  s->add_option("--N", o.norm, "Norm scale of the Schmidt sampler")->check(CLI::Range(Int{1000}, Int{1} << 30));
  s->add_option("--frame", o.frame, "Frame completion of the Schmidt sampler")->check(CLI::IsMember(frames));
  add_common(s);

  auto add_psi_options = [&](CLI::App* p) {
    p->add_option("--source", o.source, "frobenius, haar2d or schmidt")->check(CLI::IsMember(sources));
    p->add_option("--dim", o.dim, "Dimension d (lattices have dimension d - 1)")->check(CLI::Range(2, 12));
    p->add_option("--T", o.T, "Scale of the Frobenius source")->check(CLI::PositiveNumber);
    p->add_option("--domain", o.domain, "Box of the Frobenius source (default unit cube)");
    p->add_option("--variant", o.variant, "shifted or raw")->check(CLI::IsMember(variants));
    p->add_option("--count", o.count, "Number of random lattices")->check(CLI::PositiveNumber);
    p->add_option("--N", o.norm, "Norm scale of the Schmidt sampler")->check(CLI::Range(Int{1000}, Int{1} << 30));
    p->add_option("--frame", o.frame, "Frame completion of the Schmidt sampler")->check(CLI::IsMember(frames));
    p->add_option("--format", o.format, "csv or json")->check(CLI::IsMember(formats));
    add_common(p);
  };

  auto* p = app.add_subcommand("psi", "Empirical survival curve of the covering radius");
  add_psi_options(p);
  p->add_option("--r-min", o.r_min, "First R of the output grid");
  p->add_option("--r-max", o.r_max, "Last R of the output grid");
  p->add_option("--r-steps", o.r_steps, "Number of R values")->check(CLI::PositiveNumber);

  auto* c = app.add_subcommand("compare", "Kolmogorov-Smirnov distance between two sources");
  add_psi_options(c);
  c->add_option("--against", o.against, "Second source")->check(CLI::IsMember(sources));
  c->add_option("--against-seed", o.against_seed, "Seed of the second source (default --seed)");
  c->add_option("--against-frame", o.against_frame, "Frame of the second source (default --frame)")
      ->check(CLI::IsMember(frames));

  auto* fa = app.add_subcommand("farey", "Multidimensional Farey sequence");
  fa->add_option("--Q", o.Q, "Largest denominator")->required()->check(CLI::PositiveNumber);
  fa->add_option("--dim", o.dim, "Dimension d (points live in [0,1)^(d-1))")->required()->check(CLI::Range(2, 12));
  add_common(fa);

  auto* cp = app.add_subcommand("count-primitive", "Count primitive points of T * domain");
  cp->add_option("--T", o.T, "Scale")->required()->check(CLI::PositiveNumber);
  cp->add_option("--dim", o.dim, "Dimension d")->required()->check(CLI::Range(1, 12));
  cp->add_option("--domain", o.domain, "Box (default unit cube)");
  cp->add_flag("--floor2", o.floor2, "Only points with every coordinate >= 2");
  cp->add_flag("--list", o.list, "List the points instead of counting");
  cp->add_option("--format", o.format, "csv or json")->check(CLI::IsMember(formats));
  add_common(cp);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.T_given = b->count("--T") > 0;

  try {
    if (f->parsed()) return cmd_frobenius(o, out);
    if (b->parsed()) return cmd_bridge(o, out);
    if (r->parsed()) return cmd_rho(o, out);
    if (s->parsed()) return cmd_sample(o, out);
    if (p->parsed()) return cmd_psi(o, out);
    if (c->parsed()) return cmd_compare(o, out);
    if (fa->parsed()) return cmd_farey(o, out);
    if (cp->parsed()) return cmd_count(o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const BoundExceededError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace frobcov::cli

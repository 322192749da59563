#pragma once

#include "kimura/cli/report.hpp"
#include "kimura/cli/spec_file.hpp"
#include "kimura/cli/suites.hpp"
#include "kimura/errors.hpp"
#include "kimura/karoubi.hpp"
#include "kimura/motives.hpp"
#include "kimura/symgroup.hpp"

#include <chrono>
#include <charconv>
#include <optional>
#include <string>

namespace kimura::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSize = 3;

/// "2,1", "(2,1)" or "" (the empty partition).
inline symgroup::Partition parse_partition(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') s.erase(0, 1);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end) throw std::invalid_argument("partition: bad part in '" + text + "'");
    parts.push_back(v);
    pos = end + 1;
  }
  return symgroup::Partition(std::move(parts));
}

inline Report cmd_chars(int n) {
  Report rep("chars");
  rep.config()["n"] = n;
  const auto parts = symgroup::partitions(n);
  const auto table = symgroup::character_table(n);
  const auto classes = symgroup::class_order(n);
  Json labels = Json::array(), class_labels = Json::array();
  for (const auto& l : parts) labels.push_back(l.str());
  for (const auto& c : classes) class_labels.push_back(c.str());
  rep.results()["partitions"] = labels;
  rep.results()["classes"] = class_labels;
  Json rows = Json::array();
  for (const auto& r : table) rows.push_back(r);
  rep.results()["table"] = rows;
  const std::int64_t nf = symgroup::factorial(n);
  bool ortho = true, degree = true;
  std::int64_t squares = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < parts.size(); ++c) s += symgroup::class_size(classes[c]) * table[a][c] * table[b][c];
      ortho = ortho && s == (a == b ? nf : 0);
    }
    const std::int64_t dim = symgroup::hook_dimension(parts[a]);
    degree = degree && table[a].front() == dim;
    squares += dim * dim;
  }
  rep.check("row-orthogonality", ortho, "sum over classes of |C| chi_lambda chi_mu = n! delta");
  rep.check("degree-column", degree, "chi_lambda(identity) = hook dimension");
  rep.check("sum-of-squares", squares == nf, "sum of squared dimensions = " + std::to_string(squares));
  return rep;
}

inline Report cmd_schur(const symgroup::Partition& lambda, int p, int q, int k, std::uint64_t seed, std::size_t cap) {
  Report rep("schur");
  rep.config()["lambda"] = lambda.str();
  rep.config()["p"] = p;
  rep.config()["q"] = q;
  rep.config()["k"] = k;
  rep.config()["seed"] = seed;
  rep.config()["cap"] = cap;
  if (p < 0 || q < 0) throw std::invalid_argument("schur: p and q must be nonnegative");
  if (k < 1 || k > kMaxOrder) throw std::invalid_argument("schur: k must lie in [1, " + std::to_string(kMaxOrder) + "]");
  const karoubi::KaroubiObject x = karoubi::perturbed_object(p, q, k, seed);
  const karoubi::KaroubiObject s = karoubi::schur_apply(lambda, x, cap);
  const TruncatedScalar tr = supercat::trace(s.idempotent());
  const bool trace_constant = tr.is_constant();
  rep.results()["ambient_dimension"] = s.ambient().dimension();
  rep.results()["super_dimension"] = tr[0].str();
  rep.results()["classical_rank"] = s.classical_rank();
  rep.results()["even_rank"] = s.even_rank();
  rep.results()["odd_rank"] = s.odd_rank();
  rep.results()["zero"] = s.is_zero();
  const Rational formula = suites::schur_dimension_formula(lambda, Rational(p - q));
  rep.results()["character_formula_dimension"] = formula.str();
  rep.check("idempotent", s.idempotent().is_idempotent(), "D_lambda * D_lambda = D_lambda");
  rep.check("trace-epsilon-free", trace_constant, "trace = " + tr.str());
  rep.check("two-way-dimension", trace_constant && tr[0] == formula,
            "trace(D_lambda) against (dim V/n!) sum_sigma chi(sigma) (p-q)^c(sigma)");
  rep.check("zero-iff-rank-zero", s.is_zero() == (s.classical_rank() == 0));
  return rep;
}

inline Report cmd_verify(const std::string& suite, const SuiteConfig& cfg) {
  const auto& all = all_suites();
  const auto it = all.find(suite);
  if (it == all.end()) throw std::invalid_argument("unknown suite '" + suite + "'; available suites: " + suite_names());
  Report rep("verify");
  rep.config()["suite"] = suite;
  Json grid = Json::object();
  for (const auto& [key, v] : cfg.grid.bounds()) grid[key] = v;
  rep.config()["grid"] = grid;
  if (cfg.seeds) rep.config()["seeds"] = *cfg.seeds;
  rep.config()["seed"] = cfg.seed;
  rep.config()["cap"] = cfg.cap;
  rep.results()["description"] = it->second.description;
  it->second.run(cfg, rep);
  return rep;
}

inline Report cmd_surface(const motives::MotiveSpec& spec, std::size_t cap = supercat::kDefaultDimensionCap) {
  Report rep("surface");
  rep.config()["spec"] = spec.str();
  rep.config()["t"] = spec.t;
  rep.config()["finite"] = spec.finite;
  if (spec.kind != motives::Kind::surface) throw std::invalid_argument("surface: spec kind must be 'surface'");
  const int d = spec.transcendental_rank();

  const auto fam = motives::chow_kunneth(spec, motives::Perturbation::isometric);
  const auto chk = lifting::check_family(fam);
  Json ck = Json::object();
  Json ranks = Json::array();
  for (const auto& m : fam.members) ranks.push_back(static_cast<int>(supercat::trace(m)[0].to_int64()));
  ck["labels"] = fam.labels;
  ck["super_ranks"] = ranks;
  rep.results()["chow_kunneth"] = ck;
  rep.check("chow-kunneth-family", chk.ok(), "complete orthogonal idempotents", chk.detail);

  const auto rel = motives::surface_projector_relations(spec, fam);
  std::string failed;
  for (const auto& c : rel.checks)
    if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.name + " defect " + c.defect;
  rep.check("projector-relations", rel.ok(), "pi3 = pi1^t - pi1 pi1^t and pi2 by subtraction", failed);

  const motives::ChowModel cm = motives::murre_filtration(spec, spec.t);
  rep.results()["filtration"] = {{"F", cm.filtration}, {"graded", cm.graded}};
  rep.check("filtration-F3-zero", cm.filtration.back() == 0);
  rep.check("graded-dims", cm.graded == std::vector<int>{1, spec.q, spec.t});
  Rng rng(spec.seed + 1);
  bool zero = true;
  for (const auto& m : motives::graded_action(spec, cm, random::hom_trivial(fam.ambient, rng))) zero = zero && m.is_zero();
  rep.check("graded-action-hom-trivial", zero, "a homologically trivial correspondence acts as 0 on gradeds");

  const motives::M2Split m2 = motives::split_M2(spec, cap);
  rep.results()["m2_split"] = {{"rho", spec.rho},
                               {"dim_N", m2.n.dimension().str()},
                               {"kind_N", karoubi::to_string(m2.n_report.kind)},
                               {"kim_N", m2.n_report.kim_plus}};
  rep.check("m2-split", m2.relations_exact && m2.n_report.kind == karoubi::FiniteDimKind::even &&
                            m2.n_report.kim_plus == d && m2.n.dimension() == Rational(d),
            "M2 = rho L + N with N evenly finite dimensional of dimension b2 - rho");

  const bool t_ok = !spec.finite || spec.t <= d;
  rep.check("t-bound", t_ok, spec.finite ? "finite dimensional model requires t <= b2 - rho" : "no bound without the finite flag");
  const int t_eff = std::min(spec.t, d);
  std::vector<std::vector<Rational>> cycles(static_cast<std::size_t>(t_eff + 1),
                                            std::vector<Rational>(static_cast<std::size_t>(t_eff)));
  for (auto& c : cycles)
    for (auto& v : c) v = Rational(rng.uniform(-3, 3));
  const bool vanishes = motives::albanese_wedge(cycles, t_eff).is_zero();
  rep.results()["albanese_wedge"] = {{"t_part", t_eff}, {"cycles", t_eff + 1}, {"vanishes", vanishes}};
  rep.check("albanese-wedge-vanishing", vanishes, "wedge of dim(T) + 1 cycles");

  const motives::PgZeroVerdict v = motives::pg_zero_conclusion(spec, spec.t);
  Json pg = {{"applicable", v.applicable}, {"consistent", v.consistent}, {"message", v.message}};
  if (v.shape) pg["shape"] = *v.shape;
  rep.results()["pg_zero"] = pg;
  if (v.applicable) rep.check("pg-zero", v.consistent, v.message);
  return rep;
}

struct RunConfig {
  std::string command;
  int n = 0;
  std::string lambda;
  int p = 0;
  int q = 0;
  int k = 1;
  std::uint64_t seed = 0;
  std::string spec_path;
  std::string suite;
  std::string grid;
  std::optional<int> seeds;
  Format format = Format::pretty;
  std::size_t cap = supercat::kDefaultDimensionCap;
  bool timing = false;
};

struct Outcome {
  std::string output;  ///< rendered report (empty on error)
  std::string error;   ///< diagnostic for stderr
  int exit_code = kExitPass;
};

/// Runs one command and maps failures to exit codes: verification failure 1,
/// usage or parse error 2, size cap 3.
inline Outcome run(const RunConfig& cfg) {
  Outcome out;
  try {
    if (cfg.cap == 0) throw std::invalid_argument("--cap must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Report> rep;
    if (cfg.command == "chars") rep = cmd_chars(cfg.n);
    else if (cfg.command == "schur") rep = cmd_schur(parse_partition(cfg.lambda), cfg.p, cfg.q, cfg.k, cfg.seed, cfg.cap);
    else if (cfg.command == "verify") {
      SuiteConfig sc;
      sc.grid = Grid::parse(cfg.grid);
      sc.seeds = cfg.seeds;
      sc.seed = cfg.seed;
      sc.cap = cfg.cap;
      rep = cmd_verify(cfg.suite, sc);
    } else if (cfg.command == "surface") rep = cmd_surface(load_spec(cfg.spec_path), cfg.cap);
    else throw std::invalid_argument("unknown command '" + cfg.command + "'");
    if (cfg.timing)
      rep->set_timing_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    out.output = rep->render(cfg.format);
    out.exit_code = rep->all_pass() ? kExitPass : kExitFail;
  } catch (const size_error& e) {
    out.error = std::string("size error: ") + e.what();
    out.exit_code = kExitSize;
  } catch (const parse_error& e) {
    out.error = std::string("parse error: ") + e.what();
    out.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    out.error = std::string("error: ") + e.what();
    out.exit_code = kExitUsage;
  }
  return out;
}

}  // namespace kimura::cli

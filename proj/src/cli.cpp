#include "flagcoh/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagcoh/coinv.hpp"
#include "flagcoh/divdiff.hpp"
#include "flagcoh/errors.hpp"
#include "flagcoh/io.hpp"
#include "flagcoh/morse.hpp"
#include "flagcoh/verify.hpp"

namespace flagcoh::cli {
namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string custom;
  int m = 0;
  std::string mult_table;
  std::string x0;
  int cap = -1;
  std::string format = "text";
  std::uint64_t seed = 1;

  std::string word;
  std::string poly;
  int degree = -1;
  std::string stabilizer;
  std::vector<std::string> extra;
  bool list = false;
  bool with_repetition = false;
};

// Everything a subcommand needs, built once from the config.
struct Context {
  std::unique_ptr<WeylGroup> group;
  std::optional<MultiplicityTable> mult;
  std::optional<RationalVector> x0;
};

template <class T>
json str(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return to_string(v);
  } else {
    return std::to_string(v);
  }
}

template <class V>
json str_list(const V& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

json word_json(const Word& w) {
  json a = json::array();
  for (int i : w) a.push_back(std::to_string(i + 1));
  return a;
}

std::string csv(const auto& v) {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : v) {
    if (!first) s << ',';
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      s << to_string(x);
    } else {
      s << x;
    }
  }
  return s.str();
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  IntVector one_based(w.begin(), w.end());
  for (auto& i : one_based) ++i;
  return csv(one_based);
}

Context build_context(const RunConfig& cfg) {
  const bool has_type = !cfg.type.empty();
  const bool has_custom = !cfg.custom.empty();
  if (has_type == has_custom) throw InputError("exactly one of --type and --custom is required");
  if (!cfg.mult_table.empty() && cfg.m != 0) throw InputError("--m and --mult-table are exclusive");

  Context ctx;
  std::optional<MultiplicityTable> from_file;
  std::optional<RootSystem> rs;
  if (has_type) {
    if (cfg.rank > 0) {
      rs = RootSystem::build(CartanType::parse(cfg.type, cfg.rank));
    } else {
      rs = RootSystem::build(CartanType::parse(cfg.type));
    }
  } else {
    if (cfg.rank > 0) throw InputError("--rank is only meaningful with --type");
    auto custom = load_custom_system(cfg.custom);
    rs = std::move(custom.roots);
    from_file = std::move(custom.multiplicities);
  }
  if (cfg.m != 0) {
    ctx.mult = MultiplicityTable::uniform(*rs, cfg.m);
  } else if (!cfg.mult_table.empty()) {
    ctx.mult = load_multiplicities(*rs, cfg.mult_table);
  } else {
    ctx.mult = std::move(from_file);
  }
  if (!cfg.x0.empty()) {
    ctx.x0 = parse_rational_list(cfg.x0);
    if (static_cast<int>(ctx.x0->size()) != rs->rank())
      throw InputError("--x0 has " + std::to_string(ctx.x0->size()) + " entries, rank is " +
                       std::to_string(rs->rank()));
  }
  ctx.group = std::make_unique<WeylGroup>(std::move(*rs));
  return ctx;
}

const MultiplicityTable& require_mult(const Context& ctx) {
  if (!ctx.mult) throw InputError("multiplicities required (--m or --mult-table)");
  return *ctx.mult;
}

RationalVector x0_or_regular(const Context& ctx) {
  return ctx.x0 ? *ctx.x0 : RationalVector(ctx.group->rank(), 1);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- roots ----

int cmd_roots(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const RootSystem& rs = ctx.group->roots();
  if (cfg.format == "json") {
    json j;
    j["type"] = rs.type().name();
    j["rank"] = str(rs.rank());
    j["num_positive"] = str(rs.num_positive());
    j["reduced"] = rs.is_reduced() ? "true" : "false";
    json cartan = json::array(), gram = json::array(), roots = json::array();
    for (const auto& row : rs.cartan()) cartan.push_back(str_list(row));
    for (const auto& row : rs.gram()) gram.push_back(str_list(row));
    for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
      json e;
      e["root"] = str_list(rs.positive_roots()[r]);
      e["height"] = str(RootSystem::height(rs.positive_roots()[r]));
      e["orbit"] = str(rs.root_orbit()[r]);
      e["indivisible"] = rs.is_indivisible(r) ? "true" : "false";
      if (ctx.mult) e["m"] = str(ctx.mult->of_root(r));
      roots.push_back(e);
    }
    j["cartan"] = cartan;
    j["gram"] = gram;
    j["positive_roots"] = roots;
    j["degrees"] = str_list(rs.degrees());
    emit(out, j);
    return kExitOk;
  }
  out << "type " << rs.type().name() << "  rank " << rs.rank() << "  N " << rs.num_positive()
      << (rs.is_reduced() ? "" : "  (non-reduced)") << '\n';
  out << "cartan\n";
  for (const auto& row : rs.cartan()) out << "  " << csv(row) << '\n';
  out << "degrees " << csv(rs.degrees()) << '\n';
  out << "positive roots (" << rs.positive_roots().size() << ")\n";
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    out << "  [" << csv(rs.positive_roots()[r]) << "]  height " << RootSystem::height(rs.positive_roots()[r])
        << "  orbit " << rs.root_orbit()[r];
    if (!rs.is_indivisible(r)) out << "  divisible";
    if (ctx.mult) out << "  m " << ctx.mult->of_root(r);
    out << '\n';
  }
  return kExitOk;
}

// ---- weyl ----

int cmd_weyl(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const Series census = length_census(g);
  if (cfg.format == "json") {
    json j;
    j["type"] = g.roots().type().name();
    j["order"] = str(g.order());
    j["longest_word"] = word_json(g[g.longest()].word);
    j["length_census"] = str_list(census);
    if (cfg.list) {
      json elems = json::array();
      for (std::size_t w = 0; w < g.order(); ++w) {
        json e;
        e["word"] = word_json(g[w].word);
        e["length"] = str(g[w].length());
        e["matrix"] = str_list(g[w].matrix);
        elems.push_back(e);
      }
      j["elements"] = elems;
    }
    emit(out, j);
    return kExitOk;
  }
  out << "order " << g.order() << '\n';
  out << "longest element " << word_text(g[g.longest()].word) << "  length " << g[g.longest()].length() << '\n';
  out << "length census " << csv(census) << '\n';
  if (cfg.list)
    for (std::size_t w = 0; w < g.order(); ++w) out << "  " << g[w].length() << "  " << word_text(g[w].word) << '\n';
  return kExitOk;
}

// ---- divdiff ----

Word parse_word(const std::string& text, int rank) {
  Word w;
  if (text.empty() || text == "e") return w;
  for (int i : parse_int_list(text)) {
    if (i < 1 || i > rank) throw InputError("--word entry " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    w.push_back(i - 1);
  }
  return w;
}

int cmd_divdiff_apply(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const Word word = parse_word(cfg.word, g.rank());
  const Polynomial f = Polynomial::parse(cfg.poly, g.rank());
  const DividedDifferences dd(g);
  const Polynomial r = dd.along_word(word, f);
  if (cfg.format == "json") {
    json j;
    j["word"] = word_json(word);
    j["input"] = f.to_string();
    j["result"] = r.to_string();
    emit(out, j);
  } else {
    out << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_divdiff_check(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  const WeylGroup& g = *ctx.group;
  const DividedDifferences dd(g);
  const int cap = cfg.cap >= 0 ? cfg.cap : static_cast<int>(g.roots().num_positive());
  OperatorCheck wd, comp;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const auto r = dd.well_defined(w, cap);
    wd.cases += r.cases;
    if (!r.ok && wd.ok) wd = {false, wd.cases, r.detail};
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto r = dd.composition_check(a, b, cap);
      comp.cases += r.cases;
      if (!r.ok && comp.ok) comp = {false, comp.cases, r.detail};
    }
  const bool ok = wd.ok && comp.ok;
  if (cfg.format == "json") {
    json j;
    j["degree_cap"] = str(cap);
    j["well_defined"] = {{"pass", wd.ok ? "true" : "false"}, {"cases", str(wd.cases)}, {"detail", wd.detail}};
    j["composition"] = {{"pass", comp.ok ? "true" : "false"}, {"cases", str(comp.cases)}, {"detail", comp.detail}};
    j["pass"] = ok ? "true" : "false";
    emit(out, j);
  } else {
    out << "degree cap " << cap << '\n';
    out << "well-defined  " << (wd.ok ? "pass" : "FAIL") << "  " << wd.cases << " comparisons" << '\n';
    if (!wd.ok) out << "  " << wd.detail << '\n';
    out << "composition   " << (comp.ok ? "pass" : "FAIL") << "  " << comp.cases << " comparisons" << '\n';
    if (!comp.ok) out << "  " << comp.detail << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

// ---- coinv ----

int cmd_coinv_series(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const DividedDifferences dd(g);
  const CoinvariantAlgebra coinv(g, dd, cfg.cap);
  const Series census = coinv.poincare_series();
  const Series product = degree_product_series(g.roots().degrees());
  const Series lengths = length_census(g);
  const bool ok = census == product && census == lengths;
  if (cfg.format == "json") {
    json j;
    j["type"] = g.roots().type().name();
    j["series"] = str_list(census);
    j["degree_product"] = str_list(product);
    j["length_census"] = str_list(lengths);
    j["pass"] = ok ? "true" : "false";
    emit(out, j);
  } else {
    out << csv(census) << '\n';
    if (!ok) out << "mismatch: degree product " << csv(product) << ", length census " << csv(lengths) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_coinv_basis(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const int n = static_cast<int>(g.roots().num_positive());
  if (cfg.degree < 0 || cfg.degree > n) throw InputError("--degree must lie in 0.." + std::to_string(n));
  const DividedDifferences dd(g);
  const CoinvariantAlgebra coinv(g, dd, cfg.cap);
  const auto index = coinv.harmonic_index(cfg.degree);
  const auto basis = coinv.harmonic_basis(cfg.degree);
  if (cfg.format == "json") {
    json j;
    j["degree"] = str(cfg.degree);
    j["top_constant"] = str(coinv.top_constant());
    json a = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) a.push_back({{"w", word_json(g[index[i]].word)}, {"poly", basis[i].to_string()}});
    j["basis"] = a;
    emit(out, j);
  } else {
    out << "degree " << cfg.degree << "  dimension " << basis.size() << '\n';
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << "  Delta[" << word_text(g[index[i]].word) << "] d = " << basis[i].to_string() << '\n';
  }
  return kExitOk;
}

int cmd_coinv_invariants(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  Subgroup h;
  if (!cfg.stabilizer.empty()) {
    std::vector<int> gens;
    if (cfg.stabilizer != "none")
      for (int i : parse_int_list(cfg.stabilizer)) {
        if (i < 1 || i > g.rank()) throw InputError("--stabilizer entry outside 1.." + std::to_string(g.rank()));
        gens.push_back(i - 1);
      }
    h = g.generated_by(gens);
  } else {
    h = g.stabilizer(x0_or_regular(ctx));
  }
  const DividedDifferences dd(g);
  const CoinvariantAlgebra coinv(g, dd, cfg.cap);
  const Series q = coinv.invariant_quotient_series(h);
  std::int64_t total = 0;
  for (auto c : q) total += c;
  const std::size_t expected = g.order() / h.order();
  const bool ok = total == static_cast<std::int64_t>(expected);
  IntVector gens(h.generators.begin(), h.generators.end());
  for (auto& i : gens) ++i;
  if (cfg.format == "json") {
    json j;
    j["stabilizer_generators"] = str_list(gens);
    j["stabilizer_order"] = str(h.order());
    j["series"] = str_list(q);
    j["dimension"] = str(total);
    j["expected_dimension"] = str(expected);
    j["pass"] = ok ? "true" : "false";
    emit(out, j);
  } else {
    out << "stabilizer generated by {" << csv(gens) << "}  order " << h.order() << '\n';
    out << "invariant series " << csv(q) << '\n';
    out << "dimension " << total << "  expected |W|/|H| = " << expected << (ok ? "" : "  MISMATCH") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_coinv_hiller(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const DividedDifferences dd(g);
  const CoinvariantAlgebra coinv(g, dd, cfg.cap);
  std::vector<Polynomial> extra;
  for (const auto& text : cfg.extra) {
    Polynomial p = Polynomial::parse(text, g.rank());
    if (!p.is_homogeneous() || p.degree() < 1) throw InputError("--extra generators must be homogeneous of positive degree");
    extra.push_back(std::move(p));
  }
  const auto r = coinv.hiller_criterion(extra);
  if (cfg.format == "json") {
    json j;
    json gens = json::array();
    for (const auto& p : extra) gens.push_back(p.to_string());
    j["extra_generators"] = gens;
    j["d"] = coinv.weyl_vector_product().to_string();
    j["d_in_ideal"] = r.d_in_ideal ? "true" : "false";
    j["equals_coinvariant_ideal"] = r.equals_coinvariant_ideal() ? "true" : "false";
    emit(out, j);
  } else {
    out << "d = " << coinv.weyl_vector_product().to_string() << '\n';
    out << "d in I: " << (r.d_in_ideal ? "yes" : "no") << "  so I "
        << (r.equals_coinvariant_ideal() ? "=" : "!=") << " I_W\n";
  }
  return kExitOk;
}

// ---- morse ----

json point_json(const OrbitPoint& p, const WeylGroup& g) {
  return {{"point", str_list(p.simple_values)}, {"w", word_json(g[p.representative].word)}, {"index", str(p.index)}};
}

int cmd_morse_betti(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const auto& mult = require_mult(ctx);
  const auto counting = cfg.with_repetition ? OrbitCounting::WithRepetition : OrbitCounting::DistinctPoints;
  const MorseProfile prof = betti_numbers(g, mult, x0_or_regular(ctx), counting);
  if (cfg.format == "json") {
    json j;
    j["x0"] = str_list(prof.x0);
    j["counting"] = cfg.with_repetition ? "with_repetition" : "distinct_points";
    j["orbit_size"] = str(prof.orbit.size());
    j["stabilizer_order"] = str(prof.stabilizer_order);
    json pts = json::array();
    for (const auto& p : prof.orbit) pts.push_back(point_json(p, g));
    j["indices"] = pts;
    j["betti"] = str_list(prof.betti);
    j["euler_characteristic"] = str(prof.euler_characteristic());
    emit(out, j);
  } else {
    out << "x0 " << csv(prof.x0) << "  orbit " << prof.orbit.size() << "  stabilizer " << prof.stabilizer_order
        << (cfg.with_repetition ? "  (with repetition)" : "") << '\n';
    for (const auto& p : prof.orbit)
      out << "  index " << p.index << "  point " << csv(p.simple_values) << "  w " << word_text(g[p.representative].word)
          << '\n';
    out << "betti " << csv(prof.betti) << '\n';
    out << "euler characteristic " << prof.euler_characteristic() << '\n';
  }
  return kExitOk;
}

int cmd_morse_verify(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const auto& mult = require_mult(ctx);
  const RationalVector x0 = x0_or_regular(ctx);
  const DividedDifferences dd(g);
  const CoinvariantAlgebra coinv(g, dd, cfg.cap);
  const auto r = verify_coinvariant_agreement(coinv, mult, x0);
  const MorseProfile prof = betti_numbers(g, mult, x0);
  if (cfg.format == "json") {
    json j;
    j["x0"] = str_list(x0);
    j["m"] = str(r.m);
    j["orbit_size"] = str(r.orbit_size);
    json idx = json::array();
    for (const auto& p : prof.orbit) idx.push_back(point_json(p, g));
    j["indices"] = idx;
    j["betti"] = str_list(r.morse_series);
    j["coinvariant_series"] = str_list(r.quotient_series);
    j["stretched_series"] = str_list(r.stretched_quotient);
    j["expected_total"] = str(r.expected_total);
    j["euler_characteristic"] = str(r.euler_characteristic);
    j["pass"] = r.pass() ? "true" : "false";
    emit(out, j);
  } else {
    out << "x0 " << csv(x0) << "  m " << r.m << "  orbit " << r.orbit_size << "  expected |W|/|W_x0| "
        << r.expected_total << '\n';
    out << "betti              " << csv(r.morse_series) << '\n';
    out << "coinvariant series " << csv(r.quotient_series) << '\n';
    out << "stretched by m     " << csv(r.stretched_quotient) << '\n';
    out << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  return r.pass() ? kExitOk : kExitFailed;
}

int cmd_morse_perfect(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  const WeylGroup& g = *ctx.group;
  const auto& mult = require_mult(ctx);
  const auto r = perfectness_witness(g, mult, x0_or_regular(ctx));
  if (cfg.format == "json") {
    json j;
    j["hypothesis_holds"] = r.hypothesis_holds ? "true" : "false";
    j["pairs_checked"] = str(r.pairs_checked);
    json v = json::array();
    for (const auto& x : r.violations)
      v.push_back({{"p", str(x.p)}, {"q", str(x.q)}, {"root", str_list(x.root)}, {"index_p", str(x.index_p)},
                   {"index_q", str(x.index_q)}});
    j["adjacent_pairs"] = v;
    j["pass"] = r.pass() ? "true" : "false";
    emit(out, j);
  } else {
    out << "pairs checked " << r.pairs_checked << "  adjacent " << r.violations.size()
        << (r.hypothesis_holds ? "" : "  (some m = 1, gap not expected)") << '\n';
    for (const auto& x : r.violations)
      out << "  points " << x.p << "," << x.q << "  root " << csv(x.root) << "  indices " << x.index_p << ","
          << x.index_q << '\n';
    out << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  return r.pass() ? kExitOk : kExitFailed;
}

// ---- verify ----

int cmd_verify_all(const RunConfig& cfg, const Context& ctx, std::ostream& out) {
  VerifyOptions opt;
  opt.multiplicities = ctx.mult;
  opt.x0 = ctx.x0;
  opt.seed = cfg.seed;
  const auto report = verify_all(*ctx.group, opt);
  if (cfg.format == "json") {
    json j;
    j["type"] = ctx.group->roots().type().name();
    j["seed"] = str(cfg.seed);
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"status", to_string(c.status)},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"certifies", c.certifies},
                        {"note", c.note}});
    j["checks"] = checks;
    j["pass"] = report.pass() ? "true" : "false";
    emit(out, j);
  } else {
    for (const auto& c : report.checks) {
      out << '[' << to_string(c.status) << "] " << c.name << '\n';
      out << "    expected " << c.expected << '\n' << "    computed " << c.computed << '\n';
      if (!c.note.empty()) out << "    note     " << c.note << '\n';
    }
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
    out << passed << '/' << report.checks.size() << " checks pass" << (report.pass() ? "" : ", FAILED") << '\n';
  }
  return report.pass() ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root system, coinvariant and Morse index computations", "flagcoh"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--type", cfg.type, "Cartan type, e.g. A2 or B (with --rank)");
  app.add_option("--rank", cfg.rank, "rank when --type gives only the family")->check(CLI::PositiveNumber);
  app.add_option("--custom", cfg.custom, "JSON root system file");
  app.add_option("--m", cfg.m, "uniform multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--mult-table", cfg.mult_table, "JSON multiplicity table");
  app.add_option("--x0", cfg.x0, "simple-root values of the base point, comma separated");
  app.add_option("--cap", cfg.cap, "degree cap")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  using Handler = int (*)(const RunConfig&, const Context&, std::ostream&);
  Handler handler = nullptr;
  auto leaf = [&](CLI::App* sub, Handler h) {
    sub->fallthrough();
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  auto group = [](CLI::App* sub) {
    sub->fallthrough();
    sub->require_subcommand(1);
    return sub;
  };

  leaf(app.add_subcommand("roots", "root system data"), cmd_roots);
  auto* weyl = leaf(app.add_subcommand("weyl", "Weyl group summary"), cmd_weyl);
  weyl->add_flag("--list", cfg.list, "list every element");

  auto* divdiff = group(app.add_subcommand("divdiff", "divided difference operators"));
  auto* apply = leaf(divdiff->add_subcommand("apply", "apply Delta along a word"), cmd_divdiff_apply);
  apply->add_option("--word", cfg.word, "1-based simple reflection indices, applied right to left")->required();
  apply->add_option("--poly", cfg.poly, "polynomial in g1..gl")->required();
  leaf(divdiff->add_subcommand("check", "reduced-word independence and composition rule"), cmd_divdiff_check);

  auto* coinv = group(app.add_subcommand("coinv", "coinvariant algebra"));
  leaf(coinv->add_subcommand("series", "Poincare series of S/I_W"), cmd_coinv_series);
  auto* basis = leaf(coinv->add_subcommand("basis", "harmonic basis Delta_w(d) in one degree"), cmd_coinv_basis);
  basis->add_option("--degree", cfg.degree, "degree k")->required();
  auto* inv = leaf(coinv->add_subcommand("invariants", "invariants of a parabolic subgroup in S/I_W"),
                   cmd_coinv_invariants);
  inv->add_option("--stabilizer", cfg.stabilizer, "1-based generating simple reflections, or none");
  auto* hiller = leaf(coinv->add_subcommand("hiller", "test d against an enlarged ideal"), cmd_coinv_hiller);
  hiller->add_option("--extra", cfg.extra, "additional homogeneous generators");

  auto* morse = group(app.add_subcommand("morse", "Morse indices of the height function"));
  auto* betti = leaf(morse->add_subcommand("betti", "critical points and Betti numbers"), cmd_morse_betti);
  betti->add_flag("--with-repetition", cfg.with_repetition, "count each point once per group element");
  leaf(morse->add_subcommand("verify", "compare with the coinvariant algebra"), cmd_morse_verify);
  leaf(morse->add_subcommand("perfect", "scan for adjacent indices"), cmd_morse_perfect);

  auto* verify = group(app.add_subcommand("verify", "verification suite"));
  leaf(verify->add_subcommand("all", "run every check"), cmd_verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Context ctx = build_context(cfg);
    return handler(cfg, ctx, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace flagcoh::cli

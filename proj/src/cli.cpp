#include "koszul_lift/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "koszul_lift/error.hpp"
#include "koszul_lift/io.hpp"
#include "koszul_lift/parallel.hpp"

namespace koszul_lift {

namespace {

struct Options {
  std::string ring_file;
  std::string complex_file;
  std::string presentation_file;
  std::optional<int> level;
  std::optional<int> degree_bound;
  std::optional<int> dim_q;
  int length = 3;
  std::string format = "text";
  bool verify = false;
  std::string example;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string where;
};

/// Collected output of one command: checks, a JSON result and its text form.
struct Report {
  std::string command;
  std::vector<Check> checks;
  Json result = Json::object();
  std::string text;

  void add(std::string name, bool pass, std::string where = {}) {
    checks.push_back({std::move(name), pass, std::move(where)});
  }
  void add(std::string name, const Verdict& v) { add(std::move(name), v.pass, v.where); }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct Input {
  std::shared_ptr<const GradedRing> ring;
  FreeComplex cbar;  // over R
  FreeComplex lift;  // over Q
};

std::shared_ptr<const GradedRing> load_ring(const Options& o) {
  if (o.ring_file.empty()) throw Error(Errc::parse, "--ring is required");
  return ring_from_json(read_json_file(o.ring_file));
}

/// Reads --complex and produces both the R-complex and its Q-lift. A genuine
/// Q-complex is base-changed; an R-complex keeps its representatives.
Input load_complex(const Options& o) {
  auto ring = load_ring(o);
  if (o.complex_file.empty()) throw Error(Errc::parse, "--complex is required");
  Json doc = read_json_file(o.complex_file);
  // Accept a resolve report directly.
  if (doc.is_object() && doc.contains("schema") && doc.contains("result") &&
      doc["result"].is_object() && doc["result"].contains("complex"))
    doc = doc["result"]["complex"];
  FreeComplex c = complex_from_json(ring, doc);
  if (c.over() == Base::R) return {ring, c, lift_to_Q(c)};
  return {ring, base_change_to_R(c), c.relabeled(Base::Q, true)};
}

int max_twist(const FreeComplex& c) {
  int m = 0;
  bool any = false;
  for (int n = c.lo(); n <= c.hi(); ++n)
    for (int t : c.twists(n)) {
      m = any ? std::max(m, t) : t;
      any = true;
    }
  return m;
}

int min_twist(const FreeComplex& c) {
  int m = 0;
  bool any = false;
  for (int n = c.lo(); n <= c.hi(); ++n)
    for (int t : c.twists(n)) {
      m = any ? std::min(m, t) : t;
      any = true;
    }
  return m;
}

std::string family_text(const HomotopyFamily& h) {
  std::ostringstream os;
  for (const auto& [alpha, positions] : h.maps()) {
    if (alpha.is_one()) continue;
    for (const auto& [n, m] : positions) {
      os << "t^" << alpha.to_string() << "_" << n << " : F_" << n << " -> F_"
         << n - alpha.degree() - 1 << "\n";
      os << render_matrix(h.ring(), m);
    }
  }
  return os.str();
}

void relation_checks(const HomotopyFamily& h, Report& r) {
  for (const auto& gamma : koszul_basis(h.ring().codim()))
    r.add("relation " + gamma.to_string(), verify_relation(h, gamma));
}

/// Compares dim H_n(P)_d over Q with dim H_n(C)_d over R at every position
/// of the product window and every degree up to the bound.
Verdict homology_equality(const ProductComplex& p, const FreeComplex& cbar, int degree_bound,
                          Json& table) {
  std::vector<std::pair<int, int>> cells;
  const int dmin = std::min(min_twist(p.complex), min_twist(cbar));
  for (int n = p.complex.lo(); n <= p.complex.hi(); ++n)
    for (int d = dmin; d <= degree_bound; ++d) cells.emplace_back(n, d);
  std::vector<long> hp(cells.size()), hc(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    hp[i] = homology_dim(p.complex, cells[i].first, cells[i].second);
    hc[i] = homology_dim(cbar, cells[i].first, cells[i].second);
  });
  Verdict v;
  table = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (hp[i] != 0 || hc[i] != 0)
      table.push_back({{"n", cells[i].first}, {"d", cells[i].second}, {"product", hp[i]},
                       {"input", hc[i]}});
    if (v.pass && hp[i] != hc[i])
      v = Verdict::fail("n=" + std::to_string(cells[i].first) + " d=" +
                        std::to_string(cells[i].second) + ": " + std::to_string(hp[i]) +
                        " != " + std::to_string(hc[i]));
  }
  return v;
}

Json rank_json(const RankReport& rr) {
  Json rows = Json::array();
  for (const auto& row : rr.rows) {
    Json j = {{"n", row.n}, {"rank", row.rank}, {"predicted", row.predicted}};
    if (row.binomial_premise) j["binomial_premise"] = *row.binomial_premise;
    if (row.binomial_conclusion) j["binomial_conclusion"] = *row.binomial_conclusion;
    rows.push_back(j);
  }
  Json j = {{"rows", rows},
            {"total_product", rr.total_product},
            {"total_input", rr.total_input},
            {"total_ok", rr.total_ok}};
  if (rr.transfer)
    j["transfer"] = {{"dim_q", rr.transfer->dim_q},
                     {"premise", rr.transfer->premise},
                     {"conclusion", rr.transfer->conclusion}};
  return j;
}

Json minimality_json(const MinimalityReport& m) {
  return {{"minimal", m.minimal},
          {"lifts", m.lifts},
          {"periodic", m.periodic},
          {"matrix_factorization", m.matrix_factorization}};
}

std::string minimality_text(const MinimalityReport& m) {
  std::string s = std::string("assembly ") + (m.minimal ? "MINIMAL" : "NOT MINIMAL") + ", " +
                  (m.lifts ? "LIFTS" : "NOT LIFTS");
  if (m.matrix_factorization) s += ", MATRIX_FACTORIZATION";
  return s + "\n";
}

Report cmd_lift(const Options& o) {
  Report r;
  r.command = "lift";
  Input in = load_complex(o);
  const int c = static_cast<int>(in.ring->codim());
  const int level = o.level.value_or(c);
  if (level < 0 || level > c) throw Error(Errc::invalid_input, "--level must lie in [0, c]");
  r.add("check_complex", check_complex(in.cbar));
  if (!r.checks.back().pass) return r;
  HomotopyFamily h = solve_homotopies(in.lift, level);
  r.result["lift"] = complex_to_json(in.lift);
  r.result["homotopies"] = family_to_json(h);
  r.text = "lift F:\n" + render_complex(in.lift) + family_text(h);
  return r;
}

Report cmd_assemble(const Options& o) {
  Report r;
  r.command = "assemble";
  Input in = load_complex(o);
  const int c = static_cast<int>(in.ring->codim());
  r.add("check_complex", check_complex(in.cbar));
  if (!r.checks.back().pass) return r;
  HomotopyFamily h = solve_homotopies(in.lift, o.level.value_or(c));
  ProductComplex p = assemble(h);
  r.add("d^2 = 0", check_complex(p.complex));
  r.result["product"] = product_to_json(p);
  std::ostringstream os;
  os << "window [" << p.complex.lo() << ", " << p.complex.hi() << "], complete on ["
     << p.complete_lo << ", " << p.complete_hi << "]\n"
     << render_product(p, false);
  r.text = os.str();
  return r;
}

Report cmd_verify(const Options& o) {
  Report r;
  r.command = "verify";
  Input in = load_complex(o);
  const int c = static_cast<int>(in.ring->codim());
  r.add("check_complex", check_complex(in.cbar));
  if (!r.checks.back().pass) return r;

  HomotopyFamily h = solve_homotopies(in.lift, c);
  relation_checks(h, r);
  ProductComplex p = assemble(h);
  r.add("d^2 = 0", check_complex(p.complex));

  const int bound = o.degree_bound.value_or(max_twist(p.complex));
  Json table;
  r.add("homology", homology_equality(p, in.cbar, bound, table));

  const RankReport rr = rank_report(p, in.cbar, o.dim_q);
  std::string where;
  if (!rr.per_degree_ok) where = "per-degree rank";
  else if (!rr.total_ok) where = "total rank";
  else if (!rr.pass()) where = "binomial bounds";
  r.add("rank identities", rr.pass(), where);

  r.add("epsilon chain map", epsilon_C(p, in.cbar).chain_map);
  if (c >= 1) {
    const EisenbudReport er = eisenbud_operator_checks(h);
    for (const auto& v : er.chain_maps) r.add(v.name, v.verdict);
    for (const auto& v : er.commutators) r.add(v.name, v.verdict);
  }
  const MinimalityReport mr = minimality_and_lifting_report(p, h);

  r.result["degree_bound"] = bound;
  r.result["homology"] = table;
  r.result["ranks"] = rank_json(rr);
  r.result["minimality"] = minimality_json(mr);
  std::ostringstream os;
  os << "homology compared for internal degrees <= " << bound << "\n";
  os << "total rank " << rr.total_product << " = 2^" << c << " * " << rr.total_input << "\n";
  os << minimality_text(mr);
  r.text = os.str();
  return r;
}

Report cmd_resolve(const Options& o) {
  Report r;
  r.command = "resolve";
  auto ring = load_ring(o);
  if (o.presentation_file.empty()) throw Error(Errc::parse, "--presentation is required");
  Presentation m = presentation_from_json(*ring, read_json_file(o.presentation_file));
  int bound = o.degree_bound.value_or(8);
  Resolution res = resolve_over_R(ring, m, o.length, bound);
  r.add("check_complex", check_complex(res.complex));
  r.add("minimal", is_minimal(res.complex), "unit entry in a differential");
  Json betti = Json::array();
  for (int n = 0; n <= res.complex.hi(); ++n) betti.push_back(res.complex.rank(n));
  r.result["complex"] = complex_to_json(res.complex);
  r.result["betti"] = betti;
  r.result["exact_up_to_degree"] = res.exact_up_to_degree;
  std::ostringstream os;
  os << "betti";
  for (const auto& b : betti) os << " " << b.get<std::size_t>();
  os << " (exact up to degree " << res.exact_up_to_degree << ")\n" << render_complex(res.complex);
  r.text = os.str();
  return r;
}

Report cmd_regularity(const Options& o) {
  Report r;
  r.command = "regularity";
  auto ring = load_ring(o);
  const RegularityReport rep = check_regular_up_to(ring, o.degree_bound.value_or(8));
  std::string where;
  if (rep.first_failure)
    where = "H_" + std::to_string(rep.first_failure->first) + "(K) nonzero in degree " +
            std::to_string(rep.first_failure->second);
  r.add("regular sequence", rep.pass, where);
  r.result["degree_bound"] = rep.degree_bound;
  Json dims = Json::array();
  for (const auto& [key, dim] : rep.dims)
    if (dim != 0) dims.push_back({{"i", key.first}, {"d", key.second}, {"dim", dim}});
  r.result["nonzero_koszul_homology"] = dims;
  r.text = "Koszul homology checked up to degree " + std::to_string(rep.degree_bound) + "\n";
  return r;
}

// Built-in worked example: Q = k[x,y]/(x^2), f = y^2, and a window of a complete
// resolution over R = Q/(f), with the homotopies and TC printed by hand.
struct WorkedExample {
  std::shared_ptr<const GradedRing> ring =
      std::make_shared<const GradedRing>(GradedRing::from_strings(Field::rationals(), {"x", "y"},
                                                                  {"x^2"}, {"y^2"}));

  PolyMatrix m(std::vector<std::vector<std::string>> rows) const {
    PolyMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) out.at(i, j) = ring->parse(rows[i][j]);
    return out;
  }

  FreeComplex complex() const {
    std::map<int, std::vector<int>> twists = {
        {2, {2, 2, 2}}, {1, {1, 1}}, {0, {0}}, {-1, {-2}}, {-2, {-3, -3}}};
    std::map<int, PolyMatrix> diffs;
    diffs.emplace(2, m({{"x", "0", "-y"}, {"0", "y", "x"}}));
    diffs.emplace(1, m({{"x", "y"}}));
    diffs.emplace(0, m({{"x*y"}}));
    diffs.emplace(-1, m({{"x"}, {"y"}}));
    return FreeComplex(ring, Base::R, false, -2, 2, twists, diffs);
  }

  std::map<int, PolyMatrix> homotopies() const {
    std::map<int, PolyMatrix> t;
    t.emplace(2, m({{"0", "-1", "0"}}));
    t.emplace(1, m({{"0", "-x"}}));
    t.emplace(0, m({{"0"}, {"-x"}}));
    return t;
  }

  // Blocks listed (K_1 | K_0), as displayed.
  std::map<int, PolyMatrix> tc() const {
    std::map<int, PolyMatrix> d;
    d.emplace(2, m({{"x", "y", "0", "-1", "0"}, {"-y^2", "0", "x", "0", "-y"},
                    {"0", "-y^2", "0", "y", "x"}}));
    d.emplace(1, m({{"x*y", "0", "x"}, {"y^2", "x", "y"}}));
    d.emplace(0, m({{"x", "0"}, {"y", "-x"}, {"-y^2", "x*y"}}));
    return d;
  }
};

Report cmd_example(const Options& o) {
  Report r;
  r.command = "example";
  if (o.example != "paper-5-2")
    throw Error(Errc::parse, "unknown example \"" + o.example + "\" (available: paper-5-2)");
  WorkedExample ex;
  const GradedRing& ring = *ex.ring;
  const FreeComplex cbar = ex.complex();
  const HomotopyFamily h = solve_homotopies(lift_to_Q(cbar), 1);
  const ProductComplex p = assemble_codim1(h);
  const EpsilonMap eps = epsilon_C(p, cbar);
  const KoszulIndex e1 = KoszulIndex::generator(1);

  std::ostringstream os;
  os << "Q = QQ[x,y]/(x^2), f = y^2, window [" << cbar.lo() << ", " << cbar.hi() << "]\n";
  Json tj = Json::object();
  for (int n = cbar.hi(); n >= cbar.lo(); --n) {
    const PolyMatrix t = h.map(e1, n);
    if (t.rows() == 0 || t.cols() == 0) continue;
    os << "t_" << n << " = " << to_inline_string(ring, t) << "\n";
    tj[std::to_string(n)] = matrix_to_json(ring, t);
  }
  os << "TC, generators listed K_1 | K_0:\n";
  Json tcj = Json::object(), epsj = Json::object();
  for (int n = p.complete_hi; n > p.complete_lo; --n) {
    const PolyMatrix d = displayed_differential(p, n);
    os << "d_" << n << " : F_" << n - 1 << " + F_" << n << " -> F_" << n - 2 << " + F_" << n - 1
       << "\n"
       << render_matrix(ring, d, {cbar.rank(n - 2), cbar.rank(n - 1)},
                        {cbar.rank(n - 1), cbar.rank(n)});
    tcj[std::to_string(n)] = matrix_to_json(ring, d);
  }
  for (int n = p.complete_hi; n >= p.complete_lo; --n) {
    const auto order = descending_koszul_order(p, n);
    std::vector<std::size_t> rows(cbar.rank(n));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    const PolyMatrix e = eps.maps.at(n).permuted(rows, order);
    os << "eps_" << n << " = " << to_inline_string(ring, e) << "\n";
    epsj[std::to_string(n)] = matrix_to_json(ring, e);
  }
  r.result["ring"] = ring_to_json(ring);
  r.result["complex"] = complex_to_json(cbar);
  r.result["t"] = tj;
  r.result["generator_order"] = "koszul degree descending";
  r.result["tc"] = tcj;
  r.result["epsilon"] = epsj;
  r.text = os.str();

  if (o.verify) {
    for (const auto& [n, t] : ex.homotopies())
      r.add("t_" + std::to_string(n), h.map(e1, n) == t,
            "got " + to_inline_string(ring, h.map(e1, n)) + ", displayed " +
                to_inline_string(ring, t));
    for (const auto& [n, d] : ex.tc())
      r.add("TC d_" + std::to_string(n), displayed_differential(p, n) == d,
            "got " + to_inline_string(ring, displayed_differential(p, n)));
    const ProductComplex general = assemble(h);
    bool same = true;
    for (int n = general.complex.lo() + 1; n <= general.complex.hi(); ++n)
      same = same && general.complex.differential(n) == p.complex.differential(n);
    r.add("general assembly agrees", same, "block formulas differ");
    relation_checks(h, r);
    r.add("d^2 = 0", check_complex(p.complex));
    r.add("epsilon chain map", eps.chain_map);
  }
  return r;
}

int emit(const Report& r, const Options& o, std::ostream& out) {
  const Check* fail = r.first_failure();
  if (o.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["command"] = r.command;
    j["status"] = fail ? "FAIL" : "PASS";
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json cj = {{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}};
      if (!c.pass && !c.where.empty()) cj["where"] = c.where;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["result"] = r.result;
    out << j.dump(2) << "\n";
  } else {
    out << r.text;
    for (const auto& c : r.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.pass || c.where.empty() ? "" : ": ")
          << (c.pass ? "" : c.where) << "\n";
    if (fail)
      out << "FAIL(" << fail->name << ")" << (fail->where.empty() ? "" : ": " + fail->where) << "\n";
    else
      out << "PASS\n";
  }
  return fail ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Higher homotopies and the Koszul product complex over graded rings",
               "koszul-lift"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool complex_input) {
    sub->add_option("--ring", o.ring_file, "Ring JSON file");
    if (complex_input) sub->add_option("--complex", o.complex_file, "Complex JSON file");
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto* lift = app.add_subcommand("lift", "Lift to Q and solve for the homotopies t^alpha");
  common(lift, true);
  lift->add_option("--level", o.level, "Largest |alpha| to solve for (default c)");
  auto* assemble_cmd = app.add_subcommand("assemble", "Build the product complex F (x) K");
  common(assemble_cmd, true);
  assemble_cmd->add_option("--level", o.level, "Homotopy level (must be c)");
  auto* verify = app.add_subcommand("verify", "Run every structural check");
  common(verify, true);
  verify->add_option("--degree-bound", o.degree_bound, "Largest internal degree for homology");
  verify->add_option("--dim-q", o.dim_q, "Krull dimension of Q for the rank bounds");
  auto* resolve = app.add_subcommand("resolve", "Minimal free resolution over R");
  common(resolve, false);
  resolve->add_option("--presentation", o.presentation_file, "Presentation JSON file");
  resolve->add_option("--length", o.length, "Homological length N")->check(CLI::PositiveNumber);
  resolve->add_option("--degree-bound", o.degree_bound, "Internal degree bound D");
  auto* example = app.add_subcommand("example", "Built-in worked example");
  example->add_option("name", o.example, "Example name (paper-5-2)")->required();
  example->add_flag("--verify", o.verify, "Compare with the displayed matrices");
  example->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* regularity = app.add_subcommand("regularity", "Probe Koszul homology of the sequence");
  common(regularity, false);
  regularity->add_option("--degree-bound", o.degree_bound, "Largest internal degree");

  std::vector<const char*> argv{"koszul-lift"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    if (*lift) r = cmd_lift(o);
    else if (*assemble_cmd) r = cmd_assemble(o);
    else if (*verify) r = cmd_verify(o);
    else if (*resolve) r = cmd_resolve(o);
    else if (*example) r = cmd_example(o);
    else r = cmd_regularity(o);
    return emit(r, o, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace koszul_lift

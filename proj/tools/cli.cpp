#include "cli.hpp"

#include "plesken/acceptance.hpp"
#include "plesken/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace plesken::cli {

namespace {

struct Options {
  bool json = false;
  std::string output;

  std::string preset;
  long n = 0;
  std::vector<std::string> perms;

  std::string group, algebra, alpha, beta, ext, ext1, ext2, rep, rep1, rep2, f, delta, sigma, section;

  std::size_t max_group_order = 24;
  std::uint64_t seed = 7;
};

// One command's result: a JSON document plus its aligned text rendering.
struct Result {
  Json doc;
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> extra;  // free-form lines after the table
  std::string text_override;       // when set, printed verbatim instead of rows
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string vector_text(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ", " : "") + vector_text(m.row(r));
  return s + "]";
}

LieAlgebra load_algebra(const std::string& path) { return io::algebra_from_json(io::read_file(path)); }
BilinearForm load_form(const std::string& path) { return io::form_from_json(io::read_file(path)); }
CentralExtension load_extension(const std::string& path) { return io::extension_from_json(io::read_file(path)); }
LinearFunctional load_functional(const std::string& path) { return io::functional_from_json(io::read_file(path)); }

// Rep files do not carry the algebra; without -L an abelian algebra of the
// right dimension stands in (only the matrix identities are checked then).
ProjectiveRep load_rep(const std::string& path, const std::optional<LieAlgebra>& L) {
  Json j = io::read_file(path);
  if (L) return io::rep_from_json(j, *L);
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_unsigned()) {
    throw Error("BadJson", "missing field 'dim'");
  }
  return io::rep_from_json(j, abelian_algebra(j.at("dim").get<std::size_t>()));
}

Permutation parse_perm(const std::string& text) {
  Permutation p;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(token, &used);
      if (v < 0) throw std::invalid_argument("negative");
      p.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error("BadPermutation", "permutation images must be comma-separated non-negative integers",
                  {{"text", text}});
    }
  }
  return p;
}

void group_rows(Result& r, const FiniteGroup& G) {
  r.rows = {{"order", std::to_string(G.order())},
            {"identity", G.label(G.identity())},
            {"abelian", yes_no(G.is_abelian())},
            {"self-inverse", std::to_string(self_inverse_count(G))}};
}

void algebra_rows(Result& r, const LieAlgebra& L) {
  r.rows = {{"dim", std::to_string(L.dim())},
            {"center dim", std::to_string(center(L).dim())},
            {"derived dim", std::to_string(derived_subalgebra(L).dim())},
            {"abelian", yes_no(L.is_abelian())},
            {"semisimple", yes_no(is_semisimple(L))}};
}

Result cmd_group_make(const Options& o) {
  FiniteGroup G = [&] {
    if (!o.perms.empty()) {
      std::vector<Permutation> gens;
      for (const auto& p : o.perms) gens.push_back(parse_perm(p));
      return from_permutation_generators(gens);
    }
    return preset(o.preset, o.n);
  }();
  Result r;
  r.doc = io::group_to_json(G);
  group_rows(r, G);
  return r;
}

Result cmd_group_info(const Options& o) {
  FiniteGroup G = io::group_from_json(io::read_file(o.group));
  Result r;
  r.doc = io::group_to_json(G);
  group_rows(r, G);
  return r;
}

Result cmd_algebra_plesken(const Options& o) {
  FiniteGroup G = io::group_from_json(io::read_file(o.group));
  LieAlgebra L = plesken_algebra(G).algebra;
  Result r;
  r.doc = io::algebra_to_json(L);
  algebra_rows(r, L);
  return r;
}

Result cmd_algebra_make(const Options& o) {
  LieAlgebra L = algebra_preset(o.preset, o.n);
  Result r;
  r.doc = io::algebra_to_json(L);
  algebra_rows(r, L);
  return r;
}

Result cmd_algebra_info(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  Result r;
  r.doc = io::algebra_to_json(L);
  algebra_rows(r, L);
  return r;
}

Result cmd_h2(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  SecondCohomology c = h2(L);
  Result r;
  r.doc["dim_z2"] = c.dim_z2;
  r.doc["dim_b2"] = c.dim_b2;
  r.doc["dim_h2"] = c.dim;
  Json reps = Json::array();
  for (const auto& rep : c.representatives) reps.push_back(io::form_to_json(rep));
  r.doc["representatives"] = std::move(reps);
  std::ostringstream os;
  os << "Z2=" << c.dim_z2 << " B2=" << c.dim_b2 << " H2=" << c.dim << "\n";
  for (std::size_t k = 0; k < c.representatives.size(); ++k) {
    os << "  rep " << k << ": " << vector_text(c.representatives[k].upper()) << "\n";
  }
  r.text_override = os.str();
  return r;
}

Result cmd_check(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  BilinearForm a = load_form(o.alpha);
  CocycleCheck c = is_cocycle(L, a);
  Result r;
  r.doc["cocycle"] = c.ok;
  r.rows = {{"cocycle", yes_no(c.ok)}};
  if (c.witness) {
    r.doc["witness"] = *c.witness;
    r.rows.push_back({"failing triple", "(" + std::to_string((*c.witness)[0]) + ", " +
                                            std::to_string((*c.witness)[1]) + ", " +
                                            std::to_string((*c.witness)[2]) + ")"});
  }
  return r;
}

Result cmd_compare(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  auto sigma = are_cohomologous(L, load_form(o.alpha), load_form(o.beta));
  Result r;
  r.doc["cohomologous"] = sigma.has_value();
  r.rows = {{"cohomologous", yes_no(sigma.has_value())}};
  if (sigma) {
    r.doc["sigma"] = io::functional_to_json(*sigma);
    r.rows.push_back({"sigma", vector_text(sigma->values)});
  }
  return r;
}

Result cmd_ext_build(const Options& o) {
  CentralExtension e = extension_from_cocycle(load_algebra(o.algebra), load_form(o.alpha));
  Result r;
  r.doc = io::extension_to_json(e);
  r.rows = {{"base dim", std::to_string(e.base.dim())},
            {"total dim", std::to_string(e.total.dim())},
            {"f", vector_text(e.injection)}};
  return r;
}

Result cmd_ext_cocycle(const Options& o) {
  CentralExtension e = load_extension(o.ext);
  Matrix s = o.section.empty() ? section_of(e) : io::matrix_file_from_json(io::read_file(o.section));
  BilinearForm a = cocycle_from_extension(e, s);
  Result r;
  r.doc = io::form_to_json(a);
  r.rows = {{"alpha", vector_text(a.upper())}, {"section", matrix_text(s)}};
  return r;
}

Result cmd_ext_equiv(const Options& o) {
  CentralExtension e1 = load_extension(o.ext1);
  CentralExtension e2 = load_extension(o.ext2);
  auto phi = equivalence_map(e1, e2);
  Result r;
  r.doc["equivalent"] = phi.has_value();
  r.rows = {{"equivalent", yes_no(phi.has_value())}};
  if (phi) {
    r.doc["phi"] = io::to_json(*phi);
    r.rows.push_back({"phi", matrix_text(*phi)});
  }
  return r;
}

Result cmd_ext_split(const Options& o) {
  SplitResult s = is_split(load_extension(o.ext));
  Result r;
  r.doc["split"] = s.split;
  r.rows = {{"split", yes_no(s.split)}};
  if (s.homomorphic_section) {
    r.doc["section"] = io::to_json(*s.homomorphic_section);
    r.rows.push_back({"section", matrix_text(*s.homomorphic_section)});
  }
  return r;
}

Result cmd_ext_verify(const Options& o) {
  auto failures = verify_central_extension(load_extension(o.ext));
  Result r;
  r.doc["valid"] = failures.empty();
  r.doc["failures"] = failures;
  r.rows = {{"valid", yes_no(failures.empty())}};
  for (const auto& f : failures) r.extra.push_back("  " + f);
  return r;
}

Result cmd_rep_cocycle(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  ProjectiveRep rep = load_rep(o.rep, L);
  BilinearForm a = cocycle_from_rep(rep);
  Result r;
  r.doc = io::form_to_json(a);
  r.rows = {{"degree", std::to_string(rep.degree())}, {"alpha", vector_text(a.upper())}};
  return r;
}

Result cmd_rep_verify_equiv(const Options& o) {
  std::optional<LieAlgebra> L;
  if (!o.algebra.empty()) L = load_algebra(o.algebra);
  ProjectiveRep r1 = load_rep(o.rep1, L);
  ProjectiveRep r2 = load_rep(o.rep2, L);
  Matrix f = io::matrix_file_from_json(io::read_file(o.f));
  LinearFunctional delta = o.delta.empty() ? LinearFunctional::zero(r1.matrices.size()) : load_functional(o.delta);
  auto report = verify_projective_equivalence(r1, r2, f, delta);
  Result r;
  r.doc["equivalent"] = report.ok();
  r.doc["linear"] = report.ok() && report.linear;
  Json bad = Json::array();
  for (const auto& [k, residual] : report.failures) bad.push_back({{"index", k}, {"residual", io::to_json(residual)}});
  r.doc["failures"] = std::move(bad);
  r.rows = {{"equivalent", yes_no(report.ok())}, {"linear", yes_no(report.ok() && report.linear)}};
  if (report.ok() && L) {
    LinearFunctional w = cohomologous_witness_from_equivalence(r1, r2, f, delta);
    r.doc["witness"] = io::functional_to_json(w);
    r.rows.push_back({"alpha2 - alpha1 = d", vector_text(w.values)});
  }
  for (const auto& [k, residual] : report.failures) {
    r.extra.push_back("  basis " + std::to_string(k) + ": residual " + matrix_text(residual));
  }
  return r;
}

Result cmd_rep_twist(const Options& o) {
  LieAlgebra L = load_algebra(o.algebra);
  ProjectiveRep rep = load_rep(o.rep, L);
  if (!rep.cocycle) rep.cocycle = cocycle_from_rep(rep);
  ProjectiveRep t = twist(rep, load_functional(o.sigma));
  Result r;
  r.doc = io::rep_to_json(t);
  r.rows = {{"degree", std::to_string(t.degree())}, {"alpha", vector_text(t.cocycle->upper())}};
  return r;
}

Result cmd_verify_all(const Options& o) {
  AcceptanceReport report = run_acceptance({o.max_group_order, o.seed});
  Result r;
  r.doc = report_to_json(report);
  r.text_override = report_to_text(report);
  return r;
}

void print(const Result& r, const Options& o, std::ostream& out) {
  if (!o.output.empty()) io::write_file(o.output, r.doc);
  if (o.json) {
    out << io::dump(r.doc);
    return;
  }
  if (!r.text_override.empty()) {
    out << r.text_override;
  } else {
    std::size_t width = 0;
    for (const auto& [k, v] : r.rows) width = std::max(width, k.size() + 1);
    for (const auto& [k, v] : r.rows) out << std::left << std::setw(static_cast<int>(width)) << k + ":" << " " << v << "\n";
    for (const auto& line : r.extra) out << line << "\n";
  }
  if (!o.output.empty()) out << "wrote " << o.output << "\n";
}

// "-e1" style flags are single-dash long names; CLI11 wants "--e1".
std::vector<std::string> normalize(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a == "-e1" || a == "-e2" || a == "-r1" || a == "-r2") a = "-" + a;
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<Result(const Options&)> action;

  CLI::App app{"Exact computations with Plesken Lie algebras, cohomology, extensions and projective reps", "plesken"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* c, Result (*fn)(const Options&)) {
    c->add_flag("--json", o.json, "Print the JSON document instead of text");
    c->add_option("-o,--output", o.output, "Also write the JSON document to this file");
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  CLI::App* group = app.add_subcommand("group", "Finite groups")->require_subcommand(1);
  {
    auto* make = common(group->add_subcommand("make", "Build a group from a preset or permutations"), cmd_group_make);
    auto* p = make->add_option("--preset", o.preset, "cyclic, dihedral, symmetric, quaternion8, heisenberg_p, elementary_abelian_p2");
    make->add_option("--n,-n", o.n, "Preset parameter");
    auto* g = make->add_option("--perm", o.perms, "Generator as comma-separated images, e.g. 1,2,0");
    p->excludes(g);
    make->callback([&] {
      if (o.preset.empty() && o.perms.empty()) throw CLI::RequiredError("--preset or --perm");
      action = cmd_group_make;
    });
    auto* info = common(group->add_subcommand("info", "Summarize a group file"), cmd_group_info);
    info->add_option("-g,--group", o.group, "Group JSON")->required();
  }

  CLI::App* algebra = app.add_subcommand("algebra", "Lie algebras")->require_subcommand(1);
  {
    auto* pl = common(algebra->add_subcommand("plesken", "Plesken Lie algebra of a group"), cmd_algebra_plesken);
    pl->add_option("-g,--group", o.group, "Group JSON")->required();
    auto* make = common(algebra->add_subcommand("make", "Preset algebra: abelian (with --n), heis3, sl2"), cmd_algebra_make);
    make->add_option("--preset", o.preset)->required();
    make->add_option("--n,-n", o.n);
    auto* info = common(algebra->add_subcommand("info", "Structural summary of an algebra file"), cmd_algebra_info);
    info->add_option("-L,--algebra", o.algebra, "Algebra JSON")->required();
  }

  CLI::App* coh = app.add_subcommand("cohomology", "Second cohomology")->require_subcommand(1);
  {
    auto* h = common(coh->add_subcommand("h2", "Dimensions of Z2, B2, H2 and class representatives"), cmd_h2);
    h->add_option("-L,--algebra", o.algebra)->required();
    auto* c = common(coh->add_subcommand("check", "Test the cocycle condition"), cmd_check);
    c->add_option("-L,--algebra", o.algebra)->required();
    c->add_option("--alpha", o.alpha, "Form JSON")->required();
    auto* cmp = common(coh->add_subcommand("compare", "Decide whether two cocycles are cohomologous"), cmd_compare);
    cmp->add_option("-L,--algebra", o.algebra)->required();
    cmp->add_option("--alpha", o.alpha)->required();
    cmp->add_option("--beta", o.beta)->required();
  }

  CLI::App* ext = app.add_subcommand("extension", "One-dimensional central extensions")->require_subcommand(1);
  {
    auto* b = common(ext->add_subcommand("build", "Extension defined by a cocycle"), cmd_ext_build);
    b->add_option("-L,--algebra", o.algebra)->required();
    b->add_option("--alpha", o.alpha)->required();
    auto* c = common(ext->add_subcommand("cocycle", "Cocycle of an extension for a section"), cmd_ext_cocycle);
    c->add_option("-e,--extension", o.ext)->required();
    c->add_option("--section", o.section, "Matrix JSON; defaults to the stored or canonical section");
    auto* eq = common(ext->add_subcommand("equiv", "Equivalence map between two extensions"), cmd_ext_equiv);
    eq->add_option("--e1", o.ext1)->required();
    eq->add_option("--e2", o.ext2)->required();
    auto* s = common(ext->add_subcommand("split", "Decide whether an extension splits"), cmd_ext_split);
    s->add_option("-e,--extension", o.ext)->required();
    auto* v = common(ext->add_subcommand("verify", "Check the extension axioms"), cmd_ext_verify);
    v->add_option("-e,--extension", o.ext)->required();
  }

  CLI::App* rep = app.add_subcommand("rep", "Projective representations")->require_subcommand(1);
  {
    auto* c = common(rep->add_subcommand("cocycle", "Cocycle of a projective rep"), cmd_rep_cocycle);
    c->add_option("-L,--algebra", o.algebra)->required();
    c->add_option("-r,--rep", o.rep)->required();
    auto* v = common(rep->add_subcommand("verify-equiv", "Check Phi2 = f Phi1 f^-1 + delta I"), cmd_rep_verify_equiv);
    v->add_option("-L,--algebra", o.algebra, "Algebra JSON; enables the cohomology witness");
    v->add_option("--r1", o.rep1)->required();
    v->add_option("--r2", o.rep2)->required();
    v->add_option("--f", o.f, "Matrix JSON")->required();
    v->add_option("--delta", o.delta, "Functional JSON; zero when omitted");
    auto* t = common(rep->add_subcommand("twist", "Phi - sigma I"), cmd_rep_twist);
    t->add_option("-L,--algebra", o.algebra)->required();
    t->add_option("-r,--rep", o.rep)->required();
    t->add_option("--sigma", o.sigma, "Functional JSON")->required();
  }

  CLI::App* verify = app.add_subcommand("verify", "Verification suite")->require_subcommand(1);
  {
    auto* all = common(verify->add_subcommand("all", "Run every acceptance criterion"), cmd_verify_all);
    all->add_option("--max-group-order", o.max_group_order, "Skip fixture groups larger than this");
    all->add_option("--seed", o.seed, "Seed for randomized sweeps");
  }

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (!action) {
    err << "usage error: no command\n";
    return 2;
  }

  try {
    print(action(o), o, out);
    return 0;
  } catch (const Error& e) {
    if (o.json) {
      Json j;
      j["error"] = e.code();
      j["message"] = e.what();
      j["witness"] = e.witness();
      out << io::dump(j);
    }
    err << "error " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (o.json) {
      Json j;
      j["error"] = "DomainError";
      j["message"] = e.what();
      j["witness"] = nullptr;
      out << io::dump(j);
    }
    err << "error DomainError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace plesken::cli

#include "plesken/acceptance.hpp"

#include "plesken/fixtures.hpp"
#include "plesken/json_io.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace plesken {

namespace {

using fixtures::random_element;
using fixtures::random_invertible;
using fixtures::random_vector;

class Tally {
 public:
  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && failure_.empty()) failure_ = what;
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t checks_ = 0;
  std::string failure_;
};

CriterionResult run_criterion(int id, std::string name, const std::function<std::string(Tally&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  Tally tally;
  std::string summary;
  try {
    summary = body(tally);
  } catch (const Error& e) {
    tally.expect(false, std::string("error ") + e.what());
  } catch (const std::exception& e) {
    tally.expect(false, std::string("exception: ") + e.what());
  }
  r.passed = tally.ok();
  r.checks = tally.checks();
  r.detail = tally.ok() ? summary : tally.failure();
  return r;
}

GroupAlgebraElement hat_or_zero(const FiniteGroup& G, std::size_t g) { return GroupAlgebraElement::hat(G, g); }

// --- independent rank oracle -------------------------------------------
// Dense elimination that scans columns from the right and picks the last
// nonzero row as pivot; shares no code with rref().
std::size_t oracle_rank(std::vector<Vector> rows, std::size_t cols) {
  std::size_t rank = 0;
  std::size_t live = rows.size();
  for (std::size_t col = cols; col-- > 0 && live > 0;) {
    std::size_t pivot = live;
    for (std::size_t r = live; r-- > 0;) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == live) continue;
    std::swap(rows[pivot], rows[live - 1]);
    const Vector& p = rows[live - 1];
    for (std::size_t r = 0; r + 1 < live; ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] / p[col];
      for (std::size_t c = 0; c <= col; ++c) rows[r][c] -= factor * p[c];
    }
    --live;
    ++rank;
  }
  return rank;
}

struct OracleDims {
  std::size_t z2, b2;
};

OracleDims oracle_dims(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  auto coord = [n](std::size_t a, std::size_t b) { return a * n - a * (a + 1) / 2 + (b - a - 1); };
  const std::size_t coords = n < 2 ? 0 : n * (n - 1) / 2;
  // residual of the elementary form E_ab (E(a,b) = 1, E(b,a) = -1) on one
  // term E([x_i,x_j], x_k) is c_a [b == k] - c_b [a == k]
  std::vector<Vector> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector row(coords);
        const std::array<std::array<std::size_t, 3>, 3> terms{{{i, j, k}, {j, k, i}, {k, i, j}}};
        for (const auto& t : terms) {
          Vector c = L.bracket_basis(t[0], t[1]);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
              if (b == t[2]) row[coord(a, b)] += c[a];
              if (a == t[2]) row[coord(a, b)] -= c[b];
            }
          }
        }
        constraints.push_back(std::move(row));
      }
    }
  }
  std::vector<Vector> images;
  for (std::size_t k = 0; k < n; ++k) {
    Vector img(coords);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) img[coord(a, b)] = -L.bracket_basis(a, b)[k];
    }
    images.push_back(std::move(img));
  }
  return {coords - oracle_rank(std::move(constraints), coords), oracle_rank(std::move(images), coords)};
}

BilinearForm random_cocycle(std::mt19937_64& rng, const LieAlgebra& L, const Subspace& z2) {
  return BilinearForm::from_upper(L.dim(), random_element(rng, z2));
}

// --- criteria -------------------------------------------------------------

std::string criterion_plesken(Tally& t, const AcceptanceOptions& opt) {
  std::size_t groups = 0;
  for (const auto& [name, G] : fixtures::groups(opt.max_group_order)) {
    ++groups;
    auto [L, basis] = plesken_algebra(G);
    t.expect(2 * L.dim() == G.order() - self_inverse_count(G), name + ": dimension formula");
    t.expect(verify_lie_axioms(L).empty(), name + ": Jacobi");
    const std::size_t n = L.dim();
    std::vector<GroupAlgebraElement> hats;
    for (const auto& p : basis.pairs) hats.push_back(GroupAlgebraElement::hat(G, p.first));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        GroupAlgebraElement oracle = group_algebra_commutator(G, hats[i], hats[j]);
        GroupAlgebraElement expanded;
        Vector c = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& [g, a] : hats[k].terms()) expanded.add(g, c[k] * a);
        }
        t.expect(oracle == expanded, name + ": structure constant mismatch");
        std::size_t g = basis.pairs[i].first, h = basis.pairs[j].first;
        std::size_t gi = G.inverse(g), hi = G.inverse(h);
        GroupAlgebraElement closed = hat_or_zero(G, G.mul(g, h));
        closed += hat_or_zero(G, G.mul(gi, hi));
        closed -= hat_or_zero(G, G.mul(g, hi));
        closed -= hat_or_zero(G, G.mul(gi, h));
        t.expect(closed == oracle, name + ": closed bracket identity");
      }
    }
  }
  return std::to_string(groups) + " groups";
}

std::string criterion_whitehead(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  LieAlgebra L = plesken_algebra(preset("quaternion8", 0)).algebra;
  t.expect(!determinant(killing_form(L)).is_zero(), "L(Q8): Killing form degenerate");
  t.expect(is_semisimple(L), "L(Q8): not semisimple");
  auto cohomology = h2(L);
  t.expect(cohomology.dim == 0, "L(Q8): H^2 nonzero");
  Subspace z2 = z2_basis(L);
  std::vector<BilinearForm> cocycles{BilinearForm::zero(L.dim())};
  for (const auto& b : z2.basis()) cocycles.push_back(BilinearForm::from_upper(L.dim(), b));
  for (int k = 0; k < 10; ++k) cocycles.push_back(random_cocycle(rng, L, z2));
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    const auto& alpha = cocycles[k];
    auto sigma = are_cohomologous(L, alpha, BilinearForm::zero(L.dim()));
    t.expect(sigma.has_value(), "L(Q8): cocycle not trivialized");
    if (k <= z2.dim()) {
      CentralExtension ext = extension_from_cocycle(L, alpha);
      t.expect(verify_central_extension(ext).empty(), "L(Q8): invalid extension");
      t.expect(is_split(ext).split, "L(Q8): extension not split");
    }
  }
  // projective reps are linear up to twisting: detwist a twisted adjoint rep
  ProjectiveRep ad = adjoint_rep(L);
  for (int k = 0; k < 5; ++k) {
    ProjectiveRep twisted = twist(ad, {random_vector(rng, L.dim())});
    BilinearForm alpha = cocycle_from_rep(twisted);
    auto sigma = are_cohomologous(L, alpha, BilinearForm::zero(L.dim()));
    t.expect(sigma.has_value(), "L(Q8): rep cocycle not trivial");
    if (!sigma) continue;
    ProjectiveRep linear = twist(twisted, -*sigma);
    bool lifted = true;
    try {
      lift_linear(L, linear.matrices);
    } catch (const Error&) {
      lifted = false;
    }
    t.expect(lifted, "L(Q8): detwisted rep is not linear");
  }
  return "dim Z2 = " + std::to_string(cohomology.dim_z2) + ", dim H2 = 0";
}

std::string criterion_abelian(Tally& t, const AcceptanceOptions& opt) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LieAlgebra L = abelian_algebra(n);
    auto c = h2(L);
    auto o = oracle_dims(L);
    t.expect(c.dim == n * (n - 1) / 2, "abelian" + std::to_string(n) + ": dim H2");
    t.expect(o.z2 - o.b2 == c.dim && o.z2 == c.dim_z2 && o.b2 == c.dim_b2,
             "abelian" + std::to_string(n) + ": oracle disagrees");
  }
  for (const auto& [name, L] : fixtures::algebras(opt.max_group_order)) {
    auto c = h2(L);
    auto o = oracle_dims(L);
    t.expect(o.z2 == c.dim_z2 && o.b2 == c.dim_b2, name + ": oracle disagrees");
    t.expect(c.representatives.size() == c.dim, name + ": representative count");
  }
  return "n = 1..4 plus fixture cross-check";
}

std::string criterion_onto(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 4);
  std::size_t cocycles = 0;
  for (const auto& [name, L] : fixtures::algebras(opt.max_group_order)) {
    Subspace z2 = z2_basis(L);
    std::vector<BilinearForm> sweep;
    for (const auto& b : z2.basis()) sweep.push_back(BilinearForm::from_upper(L.dim(), b));
    for (int k = 0; k < 50; ++k) sweep.push_back(random_cocycle(rng, L, z2));
    for (std::size_t k = 0; k < sweep.size(); ++k) {
      const auto& alpha = sweep[k];
      CentralExtension ext = extension_from_cocycle(L, alpha);
      if (k < z2.dim() + 3) t.expect(verify_central_extension(ext).empty(), name + ": invalid extension");
      t.expect(find_section(ext) == *ext.section, name + ": canonical section");
      t.expect(cocycle_from_extension(ext, *ext.section) == alpha, name + ": round trip changed the cocycle");
      ++cocycles;
    }
  }
  return std::to_string(cocycles) + " cocycles";
}

std::string criterion_one_one(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 5);
  for (const auto& [name, L] : fixtures::algebras(opt.max_group_order)) {
    Subspace z2 = z2_basis(L);
    for (int k = 0; k < 25; ++k) {
      BilinearForm alpha = random_cocycle(rng, L, z2);
      BilinearForm beta = alpha + coboundary(L, {random_vector(rng, L.dim())});
      CentralExtension e1 = extension_from_cocycle(L, alpha);
      CentralExtension e2 = extension_from_cocycle(L, beta);
      if (k % 2 == 1) e2 = change_total_basis(e2, random_invertible(rng, L.dim() + 1));
      auto phi = equivalence_map(e1, e2);
      t.expect(phi.has_value(), name + ": cohomologous pair not equivalent");
      if (phi) t.expect(verify_equivalence_map(e1, e2, *phi).empty(), name + ": equivalence map fails");
    }
  }
  std::size_t negatives = 0;
  for (const LieAlgebra& L : {abelian_algebra(2), heisenberg_algebra()}) {
    Subspace z2 = z2_basis(L);
    auto reps = h2(L).representatives;
    for (int k = 0; k < 25; ++k) {
      BilinearForm alpha = random_cocycle(rng, L, z2);
      BilinearForm gamma = BilinearForm::zero(L.dim());
      for (std::size_t r = 0; r < reps.size(); ++r) {
        Scalar c = fixtures::random_scalar(rng);
        if (r == 0 && c.is_zero()) c = 1;
        gamma = gamma + c * reps[r];
      }
      BilinearForm beta = alpha + gamma + coboundary(L, {random_vector(rng, L.dim())});
      CentralExtension e1 = extension_from_cocycle(L, alpha);
      CentralExtension e2 = change_total_basis(extension_from_cocycle(L, beta), random_invertible(rng, L.dim() + 1));
      t.expect(!equivalence_map(e1, e2).has_value(), "non-cohomologous pair reported equivalent");
      ++negatives;
    }
  }
  return std::to_string(negatives) + " non-cohomologous pairs rejected";
}

std::string criterion_sections(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 6);
  std::vector<std::pair<std::string, CentralExtension>> exts;
  exts.emplace_back("heis3 over plane", fixtures::heisenberg_extension());
  for (const auto& [name, L] : fixtures::algebras(opt.max_group_order)) {
    auto reps = h2(L).representatives;
    BilinearForm alpha = reps.empty() ? BilinearForm::zero(L.dim()) : reps.front();
    exts.emplace_back(name, change_total_basis(extension_from_cocycle(L, alpha), random_invertible(rng, L.dim() + 1)));
  }
  for (const auto& [name, ext] : exts) {
    Matrix s0 = find_section(ext);
    std::vector<BilinearForm> cocycles;
    for (int k = 0; k < 20; ++k) {
      Vector sigma = random_vector(rng, ext.base.dim());
      Matrix s = s0;
      for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) s(r, c) += ext.injection[r] * sigma[c];
      }
      cocycles.push_back(cocycle_from_extension(ext, s));
    }
    for (std::size_t a = 0; a < cocycles.size(); ++a) {
      for (std::size_t b = a + 1; b < cocycles.size(); ++b) {
        t.expect(are_cohomologous(ext.base, cocycles[a], cocycles[b]).has_value(),
                 name + ": sections give non-cohomologous cocycles");
      }
    }
  }
  return std::to_string(exts.size()) + " extensions x 20 sections";
}

std::string criterion_vanishing(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 7);
  std::vector<std::pair<LieAlgebra, Subspace>> pool;
  for (const auto& [name, L] : fixtures::algebras(opt.max_group_order)) {
    Subspace z2 = z2_basis(L);
    if (z2.dim() > 0) pool.emplace_back(L, std::move(z2));
  }
  for (int k = 0; k < 200; ++k) {
    const auto& [L, z2] = pool[static_cast<std::size_t>(k) % pool.size()];
    BilinearForm alpha = random_cocycle(rng, L, z2);
    Vector x = random_vector(rng, L.dim());
    Vector zero = zero_vector(L.dim());
    t.expect(alpha.evaluate(x, x).is_zero(), "alpha(x,x) != 0");
    t.expect(alpha.evaluate(x, zero).is_zero(), "alpha(x,0) != 0");
    t.expect(alpha.evaluate(zero, x).is_zero(), "alpha(0,x) != 0");
  }
  return "200 samples over " + std::to_string(pool.size()) + " algebras";
}

std::string criterion_dihedral(Tally& t, const AcceptanceOptions&) {
  auto pair = fixtures::dihedral_pair();
  LinearFunctional zero = LinearFunctional::zero(1);
  auto report = verify_projective_equivalence(pair.first, pair.second, pair.f, zero);
  t.expect(report.ok(), "dihedral pair does not verify");
  t.expect(report.linear, "dihedral pair not flagged linear");
  t.expect(cohomologous_witness_from_equivalence(pair.first, pair.second, pair.f, zero) == zero, "witness nonzero");
  t.expect(cocycle_from_rep(pair.first) == BilinearForm::zero(1), "alpha1 nonzero");
  t.expect(cocycle_from_rep(pair.second) == BilinearForm::zero(1), "alpha2 nonzero");

  auto fails = [&](const Matrix& phi1, const Matrix& phi2, const Matrix& f) {
    ProjectiveRep r1{pair.algebra, {phi1}, std::nullopt};
    ProjectiveRep r2{pair.algebra, {phi2}, std::nullopt};
    try {
      return !verify_projective_equivalence(r1, r2, f, zero).ok();
    } catch (const Error& e) {
      return e.code() == "SingularF";
    }
  };
  std::size_t perturbations = 0;
  for (int which = 0; which < 3; ++which) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (const Scalar& bump : {Scalar(1), Scalar::imag_unit()}) {
          Matrix phi1 = pair.first.matrices[0], phi2 = pair.second.matrices[0], f = pair.f;
          Matrix& target = which == 0 ? phi1 : which == 1 ? phi2 : f;
          target(r, c) += bump;
          t.expect(fails(phi1, phi2, f), "perturbation not detected");
          ++perturbations;
        }
      }
    }
  }
  return std::to_string(perturbations) + " perturbations rejected";
}

std::string criterion_twist(Tally& t, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed + 9);
  std::size_t count = 0;
  for (const auto& [name, rep] : fixtures::reps(opt.max_group_order)) {
    const LieAlgebra& L = rep.algebra;
    const std::size_t d = rep.degree();
    BilinearForm alpha = cocycle_from_rep(rep);
    for (int k = 0; k < 20; ++k) {
      LinearFunctional sigma{random_vector(rng, L.dim())};
      ProjectiveRep twisted = twist(ProjectiveRep{L, rep.matrices, alpha}, sigma);
      BilinearForm alpha2 = cocycle_from_rep(twisted);
      t.expect(alpha - alpha2 == coboundary(L, sigma), name + ": cocycle shift is not the coboundary");
      t.expect(twisted.cocycle && *twisted.cocycle == alpha2, name + ": stored cocycle stale");
      t.expect(validate_alpha_rep(L, twisted.matrices, alpha2).empty(), name + ": not an alpha-rep");
      auto report = verify_projective_equivalence(rep, twisted, Matrix::identity(d), -sigma);
      t.expect(report.ok(), name + ": f = I, delta = -sigma does not verify");
      t.expect(cohomologous_witness_from_equivalence(rep, twisted, Matrix::identity(d), -sigma) == -sigma,
               name + ": witness mismatch");
      ++count;
    }
  }
  return std::to_string(count) + " twists";
}

std::string criterion_heisenberg(Tally& t, const AcceptanceOptions&) {
  CentralExtension ext = fixtures::heisenberg_extension();
  auto failures = verify_central_extension(ext);
  t.expect(failures.empty(), failures.empty() ? "" : failures.front());
  t.expect(center(ext.total) == Subspace(3, {ext.injection}), "f(C) is not the center");
  t.expect(!is_split(ext).split, "heis3 extension reported split");
  BilinearForm alpha = BilinearForm::from_upper(2, Vector{1});
  t.expect(extension_from_cocycle(ext.base, alpha).total.same_structure(ext.total),
           "cocycle construction does not reproduce heis3");
  t.expect(cocycle_from_extension(ext, find_section(ext)) == alpha, "extracted cocycle differs");
  return "exactness, homomorphisms, centrality; not split";
}

}  // namespace

bool AcceptanceReport::all_passed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return !criteria.empty();
}

AcceptanceReport run_core_criteria(const AcceptanceOptions& opt) {
  AcceptanceReport report{opt, {}};
  auto add = [&](int id, std::string name, std::string (*body)(Tally&, const AcceptanceOptions&)) {
    report.criteria.push_back(run_criterion(id, std::move(name), [&](Tally& t) { return body(t, opt); }));
  };
  add(1, "Plesken construction", criterion_plesken);
  add(2, "Whitehead corollary for L(Q8)", criterion_whitehead);
  add(3, "Abelian scaling law", criterion_abelian);
  add(4, "Extension correspondence: onto", criterion_onto);
  add(5, "Extension correspondence: one-one", criterion_one_one);
  add(6, "Section independence", criterion_sections);
  add(7, "Cocycles vanish on the diagonal and at zero", criterion_vanishing);
  add(8, "Dihedral linear equivalence", criterion_dihedral);
  add(9, "Twist round trip", criterion_twist);
  add(10, "Heisenberg central extension", criterion_heisenberg);
  return report;
}

AcceptanceReport run_acceptance(const AcceptanceOptions& opt) {
  AcceptanceReport first = run_core_criteria(opt);
  const std::string once = io::dump(report_to_json(first));
  first.criteria.push_back(run_criterion(11, "Deterministic report", [&](Tally& t) {
    const std::string twice = io::dump(report_to_json(run_core_criteria(opt)));
    t.expect(once == twice, "re-run produced a different report");
    return std::string("re-run identical");
  }));
  return first;
}

Json report_to_json(const AcceptanceReport& report) {
  Json j;
  j["max_group_order"] = report.options.max_group_order;
  j["seed"] = report.options.seed;
  Json list = Json::array();
  for (const auto& c : report.criteria) {
    Json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["checks"] = c.checks;
    e["detail"] = c.detail;
    list.push_back(std::move(e));
  }
  j["criteria"] = std::move(list);
  j["all_passed"] = report.all_passed();
  return j;
}

std::string report_to_text(const AcceptanceReport& report) {
  std::ostringstream os;
  for (const auto& c : report.criteria) {
    os << (c.passed ? "PASS" : "FAIL") << "  [" << (c.id < 10 ? " " : "") << c.id << "] " << c.name << " ("
       << c.checks << " checks) - " << c.detail << "\n";
  }
  os << (report.all_passed() ? "all criteria passed" : "some criteria FAILED") << "\n";
  return os.str();
}

}  // namespace plesken

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ctow/bmw.hpp"
#include "ctow/diagrams.hpp"
#include "ctow/framework.hpp"
#include "ctow/hecke.hpp"

using namespace ctow;

namespace {

using Tower = std::shared_ptr<const TowerSpec>;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

struct Bound {
  Tower tower;
  int top;
};

// The bounds used by the cell datum, branching and axiom criteria.
std::vector<Bound> standard_bounds(bool with_hecke) {
  std::vector<Bound> out{{brauer_tower(), 3}, {tl_tower(), 3}, {partition_tower(), 4}, {bmw_tower(), 3}};
  if (with_hecke) out.insert(out.begin(), {hecke_tower(), 4});
  return out;
}

int top_cell_element(const CellDatum& D) {
  int best = -1;
  for (int k = 0; k < static_cast<int>(D.elements.size()); ++k) {
    const Vertex& v = D.vertices[D.labels[k].vertex];
    if (best < 0 || vertex_gt(v, D.vertices[D.labels[best].vertex])) best = k;
  }
  return best;
}

bool located_at(const std::vector<Counterexample>& fs, int k) {
  for (const auto& f : fs)
    if (f.where.find("element " + std::to_string(k) + " ") != std::string::npos) return true;
  return false;
}

FVec hecke_field(const HeckeElement& x) {
  FVec v;
  for (const auto& [k, c] : x.coeffs()) v.emplace(k, RationalFunction(c));
  return v;
}

void dimension_identities(Outcome& o) {
  struct Row {
    Tower tower;
    int from, to;
    std::function<std::int64_t(int)> expected;
  };
  std::vector<Row> rows{{brauer_tower(), 1, 4, [](int n) { return double_factorial_odd(n); }},
                        {tl_tower(), 1, 6, [](int n) { return catalan(n); }},
                        {partition_tower(), 2, 6, [](int n) { return bell(n); }},
                        {bmw_tower(), 1, 3, [](int n) { return double_factorial_odd(n); }},
                        {hecke_tower(), 1, 5, [](int n) { return factorial(n); }}};
  int checked = 0;
  for (const auto& r : rows) {
    Framework F(r.tower);
    for (int n = r.from; n <= r.to; ++n) {
      std::int64_t sq = F.path_square_sum(n);
      std::int64_t dim = r.tower->dim(n);
      std::int64_t basis = static_cast<std::int64_t>(F.cellular_basis(n).elements.size());
      if (sq != r.expected(n) || dim != sq || basis != sq)
        o.fail(r.tower->name() + " n=" + std::to_string(n) + ": paths^2=" + std::to_string(sq) +
               " dim=" + std::to_string(dim) + " expected=" + std::to_string(r.expected(n)));
      ++checked;
    }
  }
  o.note << checked << " levels";
}

void basis_freeness(Outcome& o) {
  std::vector<Bound> bounds{{brauer_tower(), 4}, {tl_tower(), 6}, {partition_tower(), 5},
                            {bmw_tower(), 3}, {hecke_tower(), 5}};
  int checked = 0;
  for (const auto& b : bounds) {
    Framework F(b.tower);
    for (int n = 1; n <= b.top; ++n) {
      int bad = F.freeness_certificate(F.cellular_basis(n));
      if (bad >= 0) o.fail(b.tower->name() + " n=" + std::to_string(n) + " dependent at element " + std::to_string(bad));
      ++checked;
    }
  }
  // The Murphy transition matrix is unitriangular up to powers of q.
  for (int n = 1; n <= 4; ++n) {
    const MurphyBasis& mb = murphy_basis(n);
    std::vector<FVec> rows;
    for (int k = 0; k < mb.size(); ++k) rows.push_back(hecke_field(mb.element(k)));
    RationalFunction det = det_exact(rows, mb.size());
    if (!det.is_laurent() || !det.num().is_unit())
      o.fail("Murphy determinant at n=" + std::to_string(n) + " is " + det.num().str());
    else if (n == 4)
      o.note << "det(n=4)=" << det.num().str() << ", ";
  }
  o.note << checked << " bases certified";
}

void cell_datum(Outcome& o) {
  int elements = 0;
  for (const auto& b : standard_bounds(true)) {
    Framework F(b.tower);
    for (int n = 1; n <= b.top; ++n) {
      auto D = F.cellular_basis(n);
      auto rep = F.verify_cell_datum(D);
      if (!rep.ok()) o.fail(b.tower->name() + " n=" + std::to_string(n) + ": " + rep.to_json().dump());
      elements += static_cast<int>(D.elements.size());
    }
  }
  o.note << elements << " basis elements";
}

void branching_agreement(Outcome& o) {
  int edges = 0;
  for (const auto& b : standard_bounds(true)) {
    Framework F(b.tower);
    const BranchingDiagram& A = F.diagram(b.top);
    for (int level = 1; level <= b.top; ++level)
      for (int a = 0; a < static_cast<int>(A.level(level - 1).size()); ++a)
        for (int t : A.successors(level - 1, a)) {
          const Vertex& from = A.level(level - 1)[a];
          const Vertex& to = A.level(level)[t];
          for (Coefficient kind : {Coefficient::D, Coefficient::U}) {
            auto x = F.branching_closed_form(level, from, to, kind);
            auto y = F.branching_recursive(level, from, to, kind);
            if (!b.tower->equal(x.value, y.value))
              o.fail(b.tower->name() + " level " + std::to_string(level) + " " + from.str() + " -> " + to.str());
          }
          ++edges;
        }
  }
  o.note << edges << " edges, both coefficients";
}

void framework_axioms(Outcome& o) {
  int levels = 0;
  for (const auto& b : standard_bounds(false)) {
    Framework F(b.tower);
    for (int n = 1; n <= b.top; ++n) {
      auto rep = F.verify_framework_axioms(n);
      if (!rep.ok()) o.fail(b.tower->name() + " n=" + std::to_string(n) + ": " + rep.to_json().dump());
      ++levels;
    }
  }
  o.note << levels << " levels";
}

void hecke_filtrations(Outcome& o) {
  int shapes = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto rep = restriction_filtration(lam);
      if (!(rep.stable && rep.ranks && rep.isomorphic && rep.order_preserving))
        o.fail("lambda=" + lam.str() + ": " + rep.failure);
      if (rep.steps.size() != removable_nodes(lam).size()) o.fail("lambda=" + lam.str() + ": wrong number of steps");
      ++shapes;
    }
  o.note << shapes << " partitions";
}

void hecke_induction(Outcome& o) {
  int edges = 0, modules = 0;
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions_of(n))
      for (const Node& beta : addable_nodes(mu)) {
        Partition nu = add_node(mu, beta);
        int a = addable_ab(mu, beta).first;
        HeckeElement T = HeckeElement::T_range(n + 1, n + 1, a + 1);
        HeckeElement Tinv = HeckeElement::one(n + 1);
        for (int k = a + 1; k <= n; ++k) Tinv = Tinv * HeckeElement::T_gen_inverse(n + 1, k);
        HeckeElement rhs = Tinv * m_lambda(mu).embed(n + 1) * T * D_beta(mu, beta);
        if (m_lambda(nu) != rhs) o.fail("m_nu mismatch " + mu.str() + " -> " + nu.str());
        HeckeElement u = u_branching_H(mu, nu);
        if (u != q_pow(n - a) * (T * D_beta(mu, beta)) ||
            m_lambda(mu).embed(n + 1) * u != q_pow(n - a) * (T * m_lambda(nu)))
          o.fail("u coefficient mismatch " + mu.str() + " -> " + nu.str());
        ++edges;
      }
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto rep = permutation_module_filtration(mu);
      std::int64_t expected = factorial(n);
      for (int part : mu.parts) expected /= factorial(part);
      if (!(rep.basis && rep.stable && rep.isomorphic) || rep.rank != expected)
        o.fail("M^" + mu.str() + ": rank " + std::to_string(rep.rank) + " " + rep.failure);
      ++modules;
    }
  o.note << edges << " edges, " << modules << " permutation modules";
}

void bmw_sweep(Outcome& o) {
  auto rel = bmw_relation_sweep(3);
  auto assoc = bmw_associativity_sweep(3);
  auto spec = bmw_specialisation_sweep(3, 100, 7);
  for (const auto* r : {&rel, &assoc, &spec})
    if (!r->ok()) o.fail(r->failures.empty() ? std::string("failure") : r->failures.front());
  o.note << rel.checked << " relations, " << assoc.checked << " triples, " << spec.checked << " pairs";
}

void murphy_reproduction(Outcome& o) {
  Framework F(hecke_tower());
  const BranchingDiagram& Y = F.diagram(4);
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    auto D = F.cellular_basis(n);
    for (int k = 0; k < static_cast<int>(D.elements.size()); ++k) {
      const BasisLabel& lab = D.labels[k];
      Tableau s = path_to_tableau(Y, D.paths[lab.vertex][lab.s]);
      Tableau t = path_to_tableau(Y, D.paths[lab.vertex][lab.t]);
      if (D.elements[k] != murphy_element(s, t).coeffs()) o.fail("n=" + std::to_string(n) + " element " + std::to_string(k));
      ++checked;
    }
  }
  o.note << checked << " elements";
}

void negative_controls(Outcome& o) {
  int controls = 0;
  // A perturbed top-cell element breaks the cell datum at that element.
  for (const auto& b : standard_bounds(true)) {
    Framework F(b.tower);
    int n = std::min(b.top, 3);
    auto D = F.cellular_basis(n);
    int k = top_cell_element(D);
    axpy(D.elements[k], LaurentPoly(1), b.tower->one(n));
    auto rep = F.verify_cell_datum(D);
    if (rep.ok() || !located_at(rep.failures, k))
      o.fail(b.tower->name() + " corrupted element " + std::to_string(k) + " not located");
    ++controls;
  }
  // A perturbed idempotent breaks the tower axioms.
  for (const auto& b : standard_bounds(false)) {
    Framework F(perturbed_idempotent(b.tower, 2));
    auto rep = F.verify_framework_axioms(2);
    if (rep.ok() || rep.failures.empty()) o.fail(b.tower->name() + " perturbed idempotent passes the axioms");
    ++controls;
  }
  // A perturbed branching coefficient no longer matches its recursion.
  {
    Framework F(brauer_tower());
    const BranchingDiagram& A = F.diagram(3);
    bool caught = true;
    for (int a = 0; a < static_cast<int>(A.level(2).size()); ++a)
      for (int t : A.successors(2, a)) {
        auto x = F.branching_closed_form(3, A.level(2)[a], A.level(3)[t], Coefficient::U);
        axpy(x.value, LaurentPoly(1), F.spec().one(3));
        auto y = F.branching_recursive(3, A.level(2)[a], A.level(3)[t], Coefficient::U);
        caught = caught && !F.spec().equal(x.value, y.value);
      }
    if (!caught) o.fail("perturbed branching coefficient not detected");
    ++controls;
  }
  // A perturbed Murphy element is detected at its position.
  {
    const MurphyBasis& mb = murphy_basis(3);
    int k = mb.size() / 2;
    int found = -1;
    for (int j = 0; j < mb.size() && found < 0; ++j) {
      const MurphyLabel& lab = mb.label(j);
      HeckeElement x = mb.element(j);
      if (j == k) x = x + HeckeElement::one(3);
      const auto& ts = mb.tableaux(lab.shape);
      if (x != murphy_element(ts[lab.s], ts[lab.t])) found = j;
    }
    if (found != k) o.fail("perturbed Murphy element reported at " + std::to_string(found));
    ++controls;
  }
  // A duplicated element fails the freeness certificate at the copy.
  for (const auto& b : standard_bounds(true)) {
    Framework F(b.tower);
    auto D = F.cellular_basis(3);
    int k = static_cast<int>(D.elements.size()) - 1;
    D.elements[k] = D.elements[0];
    int bad = F.freeness_certificate(D);
    if (bad != k) o.fail(b.tower->name() + " duplicate reported at " + std::to_string(bad));
    ++controls;
  }
  o.note << controls << " controls caught";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "dimension identities", dimension_identities},
      {2, "basis freeness", basis_freeness},
      {3, "cell datum axioms", cell_datum},
      {4, "branching closed form equals recursion", branching_agreement},
      {5, "tower axioms", framework_axioms},
      {6, "Hecke restriction filtrations", hecke_filtrations},
      {7, "Hecke induction data", hecke_induction},
      {8, "BMW presentation sweep", bmw_sweep},
      {9, "Murphy basis from paths", murphy_reproduction},
      {10, "negative controls", negative_controls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << o.note.str() << "; "
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

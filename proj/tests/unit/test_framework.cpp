#include "ctow/bmw.hpp"
#include "ctow/diagrams.hpp"
#include "ctow/framework.hpp"
#include "ctow/hecke.hpp"
#include "doctest.h"

using namespace ctow;

namespace {

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

void check_agreement(const Framework& F, int top) {
  const BranchingDiagram& A = F.diagram(top);
  for (int level = 1; level <= top; ++level)
    for (int a = 0; a < static_cast<int>(A.level(level - 1).size()); ++a)
      for (int b : A.successors(level - 1, a)) {
        const Vertex& from = A.level(level - 1)[a];
        const Vertex& to = A.level(level)[b];
        for (Coefficient kind : {Coefficient::D, Coefficient::U}) {
          INFO(F.spec().name() << " level " << level << " " << from.str() << " -> " << to.str());
          auto x = F.branching_closed_form(level, from, to, kind);
          auto y = F.branching_recursive(level, from, to, kind);
          CHECK(F.spec().equal(x.value, y.value));
        }
      }
}

}  // namespace

TEST_CASE("e powers and c elements") {
  Framework F(brauer_tower());
  const TowerSpec& S = F.spec();
  CHECK(F.e_power(3, 0) == S.one(3));
  CHECK(F.e_power(3, 2).empty());
  LVec e13 = S.mul(4, S.embed(2, 4, S.e(1)), S.e(3));
  CHECK(F.e_power(4, 2) == e13);
  CHECK(F.c_lambda_l({P({}), 1}, 2) == S.e(1));
  CHECK_THROWS_AS(F.c_lambda_l({P({2}), 1}, 2), std::domain_error);
}

TEST_CASE("dimension identities") {
  Framework brauer(brauer_tower()), tl(tl_tower()), part(partition_tower()), bmw(bmw_tower()), hecke(hecke_tower());
  for (int n = 1; n <= 4; ++n) CHECK(brauer.path_square_sum(n) == double_factorial_odd(n));
  for (int n = 1; n <= 6; ++n) CHECK(tl.path_square_sum(n) == catalan(n));
  for (int k = 2; k <= 6; ++k) CHECK(part.path_square_sum(k) == bell(k));
  for (int n = 1; n <= 3; ++n) CHECK(bmw.path_square_sum(n) == double_factorial_odd(n));
  for (int n = 1; n <= 5; ++n) CHECK(hecke.path_square_sum(n) == factorial(n));
  for (int k = 0; k <= 6; ++k) CHECK(part.path_square_sum(k) == part.spec().dim(k));
}

TEST_CASE("cellular basis sizes") {
  Framework brauer(brauer_tower()), tl(tl_tower());
  CHECK(brauer.cellular_basis(2).elements.size() == 3);
  auto d3 = brauer.cellular_basis(3);
  CHECK(d3.elements.size() == 15);
  CHECK(d3.vertices.size() == 4);
  CHECK(tl.cellular_basis(4).elements.size() == 14);
  CHECK(brauer.freeness_certificate(d3) == -1);
}

TEST_CASE("closed form and recursion agree") {
  check_agreement(Framework(brauer_tower()), 4);
  check_agreement(Framework(tl_tower()), 4);
  check_agreement(Framework(partition_tower()), 5);
  check_agreement(Framework(bmw_tower()), 3);
  check_agreement(Framework(hecke_tower()), 4);
}

TEST_CASE("explicit coefficients") {
  Framework tl(tl_tower());
  const BranchingDiagram& A = tl.diagram(5);
  for (int level = 1; level <= 5; ++level)
    for (int a = 0; a < static_cast<int>(A.level(level - 1).size()); ++a)
      for (int b : A.successors(level - 1, a)) {
        const Vertex& from = A.level(level - 1)[a];
        CHECK(tl.branching_closed_form(level, from, A.level(level)[b], Coefficient::D).value ==
              tl.spec().embed(level - 1, level, tl.e_power(level - 1, from.l)));
      }
  Framework part(partition_tower());
  const BranchingDiagram& B = part.diagram(5);
  for (int i = 1; 2 * i + 1 <= 5; ++i)
    for (const Vertex& v : B.level(2 * i))
      if (B.has_edge(2 * i, v, v))
        CHECK(part.branching_closed_form(2 * i + 1, v, v, Coefficient::D).value ==
              part.spec().embed(2 * i, 2 * i + 1, part.e_power(2 * i, v.l)));
  CHECK_THROWS_AS(tl.branching_closed_form(2, {P({}), 0}, {P({}), 2}, Coefficient::D), std::domain_error);
}

TEST_CASE("Hecke paths give the Murphy basis") {
  Framework F(hecke_tower());
  const BranchingDiagram& Y = F.diagram(4);
  for (int n = 1; n <= 4; ++n) {
    auto D = F.cellular_basis(n);
    for (int k = 0; k < static_cast<int>(D.elements.size()); ++k) {
      const BasisLabel& lab = D.labels[k];
      Tableau s = path_to_tableau(Y, D.paths[lab.vertex][lab.s]);
      Tableau t = path_to_tableau(Y, D.paths[lab.vertex][lab.t]);
      CHECK(D.elements[k] == murphy_element(s, t).coeffs());
    }
  }
}

TEST_CASE("quotient of paths at l = 0") {
  Framework F(bmw_tower());
  Framework Y(hecke_tower());
  const BranchingDiagram& A = F.diagram(3);
  const BranchingDiagram& young = Y.diagram(3);
  for (int v = 0; v < static_cast<int>(A.level(3).size()); ++v) {
    if (A.level(3)[v].l != 0) continue;
    for (const Path& p : paths_to(A, 3, v)) {
      bool stays = true;
      std::vector<int> idx;
      for (int k = 0; k <= 3; ++k) {
        const Vertex& x = A.level(k)[p.idx[k]];
        stays = stays && x.l == 0;
        idx.push_back(young.index_of(k, {x.lambda, 0}));
      }
      if (!stays) continue;
      Tableau t = path_to_tableau(young, Path{idx});
      LVec image = F.spec().quotient(3, F.path_element(p));
      CHECK(F.spec().equal(image, d_path(t).coeffs()));
    }
  }
}

TEST_CASE("cell datum verification") {
  for (const auto& [tower, top] : std::vector<std::pair<std::shared_ptr<const TowerSpec>, int>>{
           {brauer_tower(), 3}, {tl_tower(), 3}, {partition_tower(), 4}, {bmw_tower(), 3}, {hecke_tower(), 4}}) {
    Framework F(tower);
    for (int n = 1; n <= top; ++n) {
      auto rep = F.verify_cell_datum(F.cellular_basis(n));
      INFO(tower->name() << " n=" << n << " " << rep.to_json().dump());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("corrupted basis element is located") {
  Framework F(brauer_tower());
  auto D = F.cellular_basis(3);
  // e_1-type elements live in the top cell; adding the identity breaks it.
  int k = 0;
  for (int j = 0; j < static_cast<int>(D.elements.size()); ++j)
    if (D.vertices[D.labels[j].vertex].l == 1) k = j;
  axpy(D.elements[k], LaurentPoly(1), F.spec().one(3));
  auto rep = F.verify_cell_datum(D);
  CHECK(!rep.ok());
  REQUIRE(!rep.failures.empty());
  INFO(rep.to_json().dump());
  bool located = false;
  for (const auto& f : rep.failures) located = located || f.where.find("element " + std::to_string(k) + " ") != std::string::npos;
  CHECK(located);
}

TEST_CASE("tower axioms") {
  for (const auto& [tower, top] : std::vector<std::pair<std::shared_ptr<const TowerSpec>, int>>{
           {brauer_tower(), 3}, {tl_tower(), 3}, {partition_tower(), 4}, {bmw_tower(), 3}}) {
    Framework F(tower);
    for (int n = 1; n <= top; ++n) {
      auto rep = F.verify_framework_axioms(n);
      INFO(tower->name() << " n=" << n << " " << rep.to_json().dump());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("perturbed idempotent breaks the axioms") {
  Framework F(perturbed_idempotent(brauer_tower(), 2));
  auto rep = F.verify_framework_axioms(2);
  CHECK(!rep.ok());
  CHECK(!rep.failures.empty());
  CHECK(!rep.absorb);
}

TEST_CASE("restriction filtrations") {
  for (const auto& [tower, top] : std::vector<std::pair<std::shared_ptr<const TowerSpec>, int>>{
           {brauer_tower(), 3}, {tl_tower(), 4}, {partition_tower(), 4}, {bmw_tower(), 3}, {hecke_tower(), 4}}) {
    Framework F(tower);
    for (int n = 1; n <= top; ++n)
      for (const Vertex& v : F.diagram(n).level(n)) {
        auto rep = F.restriction_filtration(v, n);
        INFO(tower->name() << " n=" << n << " " << rep.to_json().dump());
        CHECK(rep.ok());
        CHECK(rep.steps.size() == F.diagram(n).predecessors(n, F.diagram(n).index_of(n, v)).size());
      }
  }
  Framework B(brauer_tower());
  auto rep = B.restriction_filtration({P({}), 1}, 2);
  REQUIRE(rep.steps.size() == 1);
  CHECK(rep.steps[0].label == Vertex{P({1}), 0});
  CHECK(rep.steps[0].rank == 1);
}

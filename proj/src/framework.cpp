#include "ctow/framework.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctow {

std::string vertex_label(const Vertex& v) { return v.str(); }

int CellDatum::position(int vertex, int s, int t) const {
  for (int k = 0; k < static_cast<int>(labels.size()); ++k)
    if (labels[k].vertex == vertex && labels[k].s == s && labels[k].t == t) return k;
  return -1;
}

nlohmann::json Counterexample::to_json() const {
  return {{"check", check}, {"where", where}, {"detail", detail}};
}

namespace {

constexpr std::size_t kMaxFailures = 20;

void record(std::vector<Counterexample>& out, bool& flag, std::string check, std::string where, std::string detail) {
  flag = false;
  if (out.size() < kMaxFailures) out.push_back({std::move(check), std::move(where), std::move(detail)});
}

nlohmann::json failures_json(const std::vector<Counterexample>& fs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : fs) j.push_back(f.to_json());
  return j;
}

LVec unit(int k) { return LVec{{k, LaurentPoly(1)}}; }

LVec minus(LVec a, const LVec& b) {
  axpy(a, LaurentPoly(-1), b);
  return a;
}

std::string fvec_str(const FVec& v) {
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += ", ";
    s += std::to_string(k) + ": " + c.str();
  }
  return "{" + s + "}";
}

// Coordinates with respect to the elements of a cell datum.
class Expressor {
 public:
  Expressor(const TowerSpec& spec, const CellDatum& datum) : spec_(spec), datum_(datum) {
    for (int k = 0; k < static_cast<int>(datum.elements.size()); ++k)
      if (!span_.add(spec.field(datum.elements[k])) && first_dependent_ < 0) first_dependent_ = k;
  }
  int first_dependent() const { return first_dependent_; }
  bool complete() const { return first_dependent_ < 0 && span_.rank() == spec_.dim(datum_.n); }

  // Coefficients over element positions; throws if x is outside the span.
  FVec express(const LVec& x) const {
    FVec coeffs;
    FVec rem = span_.reduce(spec_.field(x), &coeffs);
    if (!rem.empty()) throw StructuralError("element outside the span of the cellular basis");
    return coeffs;
  }

  // The part of an expression supported on one vertex, together with a
  // description of any support that is neither on that vertex nor above it.
  FVec project(const FVec& coeffs, int vertex, std::string* stray) const {
    FVec out;
    const Vertex& v = datum_.vertices[vertex];
    for (const auto& [k, c] : coeffs) {
      const BasisLabel& lab = datum_.labels[k];
      if (lab.vertex == vertex) {
        out.emplace(k, c);
      } else if (!vertex_gt(datum_.vertices[lab.vertex], v) && stray && stray->empty()) {
        *stray = "coefficient " + c.str() + " on element " + std::to_string(k) + " with label " +
                 datum_.vertices[lab.vertex].str();
      }
    }
    return out;
  }

 private:
  const TowerSpec& spec_;
  const CellDatum& datum_;
  EchelonSpan span_;
  int first_dependent_ = -1;
};

std::string element_where(const CellDatum& d, int k) {
  const BasisLabel& lab = d.labels[k];
  return "element " + std::to_string(k) + " " + d.vertices[lab.vertex].str() + " s=" + std::to_string(lab.s) +
         " t=" + std::to_string(lab.t);
}

}  // namespace

Framework::Framework(std::shared_ptr<const TowerSpec> spec) : spec_(std::move(spec)) {}

const BranchingDiagram& Framework::diagram(int depth) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (depth > spec_->max_level())
    throw std::domain_error(spec_->name() + ": level " + std::to_string(depth) + " exceeds the bound " +
                            std::to_string(spec_->max_level()));
  if (!diagram_) {
    int top = spec_->max_level();
    BranchingDiagram h = spec_->h_diagram(top);
    diagram_ = spec_->has_idempotents() ? reflect_branching(h, top) : h;
  }
  return *diagram_;
}

LVec Framework::e_power(int n, int l) const {
  if (n < 0 || l < 0) throw std::domain_error("e_power: negative argument");
  if (l == 0) return spec_->one(n);
  if (2 * l > n) return {};
  LVec x = spec_->one(n);
  for (int j = n - 2 * l + 1; j <= n - 1; j += 2) x = spec_->mul(n, x, spec_->embed(j + 1, n, spec_->e(j)));
  return x;
}

LVec Framework::c_lambda_l(const Vertex& v, int n) const {
  if (diagram(n).index_of(n, v) < 0) throw std::domain_error("vertex " + v.str() + " is not at level " + std::to_string(n));
  int k = n - 2 * v.l;
  LVec c = spec_->embed(k, n, spec_->c0(k, v.lambda));
  if (v.l == 0) return c;
  return spec_->mul(n, c, e_power(n, v.l));
}

BranchingCoefficient Framework::branching_closed_form(int level, const Vertex& from, const Vertex& to,
                                                      Coefficient kind) const {
  int n = level - 1;
  if (n < 0 || !diagram(level).has_edge(n, from, to))
    throw std::domain_error("invalid edge " + from.str() + " -> " + to.str() + " at level " + std::to_string(level));
  const TowerSpec& S = *spec_;
  BranchingCoefficient b{level, from, to, kind, {}};
  int l = from.l;
  if (to.l == l) {
    int k = level - 2 * l;
    if (kind == Coefficient::D) {
      b.value = S.mul(level, S.embed(k, level, S.dbar(k, from.lambda, to.lambda)), S.embed(n, level, e_power(n, l)));
    } else {
      b.value = S.mul(level, S.embed(k, level, S.ubar(k, from.lambda, to.lambda)), e_power(level, l));
    }
  } else if (to.l == l + 1) {
    int k = n - 2 * l;
    if (kind == Coefficient::D) {
      b.value = S.mul(level, S.embed(k, level, S.ubar(k, to.lambda, from.lambda)), S.embed(n, level, e_power(n, l)));
    } else {
      b.value = S.mul(level, S.embed(k, level, S.dbar(k, to.lambda, from.lambda)), e_power(level, l + 1));
    }
  } else {
    throw std::domain_error("no closed form for edge " + from.str() + " -> " + to.str());
  }
  return b;
}

LVec Framework::recursive(int level, int from, int to, Coefficient kind) const {
  auto key = std::make_tuple(level, from, to, kind == Coefficient::D ? 0 : 1, 0);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = recursive_cache_.find(key);
    if (it != recursive_cache_.end()) return it->second;
  }
  const BranchingDiagram& A = diagram(level);
  const TowerSpec& S = *spec_;
  int n = level - 1;
  const Vertex& a = A.level(n).at(from);
  const Vertex& b = A.level(level).at(to);
  LVec value;
  if (a.l == 0 && b.l == 0) {
    value = kind == Coefficient::D ? S.dbar(level, a.lambda, b.lambda) : S.ubar(level, a.lambda, b.lambda);
  } else {
    // The edge (mu, m-1) -> (lambda, l) one level down.
    Vertex down{b.lambda, b.l - 1};
    int di = A.index_of(n - 1, down);
    if (di < 0 || !A.has_edge(n - 1, down, a))
      throw StructuralError("recursion leaves the reflected diagram at " + down.str() + " -> " + a.str());
    if (kind == Coefficient::D) {
      value = S.embed(n, level, recursive(n, di, from, Coefficient::U));
    } else {
      value = S.mul(level, S.embed(n, level, recursive(n, di, from, Coefficient::D)), S.e(n));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  recursive_cache_.emplace(key, value);
  return value;
}

BranchingCoefficient Framework::branching_recursive(int level, const Vertex& from, const Vertex& to,
                                                    Coefficient kind) const {
  int n = level - 1;
  if (n < 0 || !diagram(level).has_edge(n, from, to))
    throw std::domain_error("invalid edge " + from.str() + " -> " + to.str() + " at level " + std::to_string(level));
  const BranchingDiagram& A = diagram(level);
  return {level, from, to, kind, recursive(level, A.index_of(n, from), A.index_of(level, to), kind)};
}

LVec Framework::path_element(const Path& t) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = path_cache_.find(t.idx);
    if (it != path_cache_.end()) return it->second;
  }
  int k = t.length();
  LVec value;
  if (k <= 0) {
    value = spec_->one(0);
  } else {
    Path prefix{std::vector<int>(t.idx.begin(), t.idx.end() - 1)};
    LVec below = path_element(prefix);
    const BranchingDiagram& A = diagram(k);
    const Vertex& from = A.level(k - 1).at(t.idx[k - 1]);
    const Vertex& to = A.level(k).at(t.idx[k]);
    LVec d = branching_closed_form(k, from, to, Coefficient::D).value;
    value = spec_->mul(k, d, spec_->embed(k - 1, k, below));
  }
  std::lock_guard<std::mutex> lock(mu_);
  path_cache_.emplace(t.idx, value);
  return value;
}

CellDatum Framework::cellular_basis(int n) const { return *datum(n); }

std::shared_ptr<CellDatum> Framework::datum(int n) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = datum_cache_.find(n);
    if (it != datum_cache_.end()) return it->second;
  }
  const BranchingDiagram& A = diagram(n);
  const TowerSpec& S = *spec_;
  auto D = std::make_shared<CellDatum>();
  D->n = n;
  D->vertices = A.level(n);
  for (int v = 0; v < static_cast<int>(D->vertices.size()); ++v) {
    D->paths.push_back(paths_to(A, n, v));
    D->c.push_back(c_lambda_l(D->vertices[v], n));
    std::vector<LVec> ds;
    for (const Path& p : D->paths.back()) ds.push_back(path_element(p));
    int f = static_cast<int>(ds.size());
    std::vector<LVec> left(f);
    for (int s = 0; s < f; ++s) left[s] = S.mul(n, S.star(n, ds[s]), D->c.back());
    for (int s = 0; s < f; ++s)
      for (int t = 0; t < f; ++t) {
        D->labels.push_back({v, s, t});
        D->elements.push_back(S.mul(n, left[s], ds[t]));
      }
    D->d.push_back(std::move(ds));
  }
  std::lock_guard<std::mutex> lock(mu_);
  datum_cache_.emplace(n, D);
  return D;
}

std::int64_t Framework::path_square_sum(int n) const {
  const BranchingDiagram& A = diagram(n);
  std::int64_t total = 0;
  for (int v = 0; v < static_cast<int>(A.level(n).size()); ++v) {
    std::int64_t f = count_paths(A, n, v);
    total += f * f;
  }
  return total;
}

int Framework::freeness_certificate(const CellDatum& datum) const {
  int cols = spec_->dim(datum.n);
  int first = -1;
  // A dependency seen at one point might be accidental; it is reported only
  // when it persists at a second point.
  for (unsigned seed : {1u, 2u}) {
    auto at = spec_->eval_point(seed);
    ModMatrix rows = eval_rows(datum.elements, cols, at);
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<int> pivots;
    first = -1;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      std::vector<std::uint64_t> v = rows[r];
      for (std::size_t k = 0; k < echelon.size(); ++k) {
        std::uint64_t c = v[pivots[k]];
        if (!c) continue;
        for (int j = 0; j < cols; ++j)
          if (echelon[k][j]) v[j] = (v[j] + kPrime - mul_mod(c, echelon[k][j], kPrime)) % kPrime;
      }
      int piv = -1;
      for (int j = 0; j < cols; ++j)
        if (v[j]) {
          piv = j;
          break;
        }
      if (piv < 0) {
        first = r;
        break;
      }
      std::uint64_t inv = inv_mod(v[piv], kPrime);
      for (auto& x : v) x = mul_mod(x, inv, kPrime);
      echelon.push_back(std::move(v));
      pivots.push_back(piv);
    }
    if (first < 0) return static_cast<int>(rows.size()) == cols ? -1 : static_cast<int>(rows.size());
  }
  return first;
}

nlohmann::json CellDatumReport::to_json() const {
  return {{"free", free},
          {"independence", independence},
          {"involution", involution},
          {"ideal", ideal},
          {"cyclic", cyclic},
          {"c_symmetric", c_symmetric},
          {"ok", ok()},
          {"failures", failures_json(failures)}};
}

CellDatumReport Framework::verify_cell_datum(const CellDatum& datum) const {
  const TowerSpec& S = *spec_;
  int n = datum.n;
  CellDatumReport rep;
  Expressor ex(S, datum);
  if (!ex.complete()) {
    int k = ex.first_dependent();
    record(rep.failures, rep.free, "free", k >= 0 ? element_where(datum, k) : "basis",
           k >= 0 ? "element depends on earlier elements"
                  : "only " + std::to_string(datum.elements.size()) + " elements for dimension " +
                        std::to_string(S.dim(n)));
    return rep;
  }
  auto gens = S.generators(n);
  int N = static_cast<int>(datum.elements.size());

  // Right action: support and independence of the coefficients from s.
  std::map<std::tuple<int, int, int>, FVec> reference;
  for (int k = 0; k < N; ++k) {
    const BasisLabel& lab = datum.labels[k];
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      FVec coeffs = ex.express(S.mul(n, datum.elements[k], gens[g].second));
      std::string stray;
      FVec same = ex.project(coeffs, lab.vertex, &stray);
      std::string where = element_where(datum, k) + " times " + gens[g].first;
      if (!stray.empty()) record(rep.failures, rep.ideal, "ideal", where, "support below the cell: " + stray);
      FVec r;
      for (const auto& [j, c] : same) {
        const BasisLabel& lj = datum.labels[j];
        if (lj.s != lab.s) {
          record(rep.failures, rep.independence, "independence", where,
                 "coefficient " + c.str() + " on " + element_where(datum, j) + " changes the row path");
        } else {
          r.emplace(lj.t, c);
        }
      }
      auto key = std::make_tuple(lab.vertex, lab.t, g);
      auto it = reference.find(key);
      if (it == reference.end()) {
        reference.emplace(key, r);
      } else if (it->second != r) {
        record(rep.failures, rep.independence, "independence", where,
               "coefficients " + fvec_str(r) + " differ from " + fvec_str(it->second) + " for s=0");
      }
    }
  }

  // Involution.
  for (int k = 0; k < N; ++k) {
    const BasisLabel& lab = datum.labels[k];
    FVec coeffs = ex.express(S.star(n, datum.elements[k]));
    std::string stray;
    FVec same = ex.project(coeffs, lab.vertex, &stray);
    int target = datum.position(lab.vertex, lab.t, lab.s);
    FVec expect{{target, RationalFunction(1)}};
    if (!stray.empty() || same != expect)
      record(rep.failures, rep.involution, "involution", element_where(datum, k),
             stray.empty() ? "star has cell part " + fvec_str(same) : "star has support " + stray);
  }

  // Left multiplication keeps the ideals.
  for (int k = 0; k < N; ++k) {
    const BasisLabel& lab = datum.labels[k];
    for (const auto& [name, a] : gens) {
      std::string stray;
      ex.project(ex.express(S.mul(n, a, datum.elements[k])), lab.vertex, &stray);
      if (!stray.empty())
        record(rep.failures, rep.ideal, "ideal", name + " times " + element_where(datum, k), "support below the cell: " + stray);
    }
  }

  // Cyclic generation and symmetry of c.
  int dim = S.dim(n);
  for (int v = 0; v < static_cast<int>(datum.vertices.size()); ++v) {
    EchelonSpan cyc;
    const LVec& c = datum.c[v];
    for (int x = 0; x < dim; ++x) {
      std::string stray;
      FVec same = ex.project(ex.express(S.mul(n, c, unit(x))), v, &stray);
      if (!stray.empty())
        record(rep.failures, rep.cyclic, "cyclic", "c" + datum.vertices[v].str() + " times native " + std::to_string(x),
               "support below the cell: " + stray);
      cyc.add(same);
    }
    int f = static_cast<int>(datum.paths[v].size());
    if (cyc.rank() != f)
      record(rep.failures, rep.cyclic, "cyclic", "c" + datum.vertices[v].str(),
             "rank " + std::to_string(cyc.rank()) + ", expected " + std::to_string(f));
    std::string stray;
    FVec same = ex.project(ex.express(minus(S.star(n, c), c)), v, &stray);
    if (!same.empty() || !stray.empty())
      record(rep.failures, rep.c_symmetric, "c_symmetric", "c" + datum.vertices[v].str(),
             "c* - c has cell part " + fvec_str(same) + (stray.empty() ? "" : ", " + stray));
  }
  return rep;
}

nlohmann::json AxiomReport::to_json() const {
  return {{"n", n},
          {"self_adjoint", self_adjoint},
          {"quotient", quotient},
          {"commute", commute},
          {"compress", compress},
          {"absorb", absorb},
          {"generate", generate},
          {"ok", ok()},
          {"failures", failures_json(failures)}};
}

AxiomReport Framework::verify_framework_axioms(int n) const {
  const TowerSpec& S = *spec_;
  AxiomReport rep;
  rep.n = n;
  if (!S.has_idempotents()) throw std::domain_error(S.name() + " has no idempotents");
  if (n < 1 || n + 1 > S.max_level()) throw std::domain_error("level out of range for the tower axioms");
  int m = n + 1;
  LVec en = S.e(n);

  if (!S.equal(S.star(m, en), en))
    record(rep.failures, rep.self_adjoint, "self_adjoint", "e" + std::to_string(n), "e* differs from e");

  // A_n / A_n e_{n-1} A_n is H_n through pi_n.
  int dimA = S.dim(n), dimH = S.dim_H(n);
  EchelonSpan image;
  for (int x = 0; x < dimA; ++x) image.add(S.field(S.quotient(n, unit(x))));
  if (image.rank() != dimH)
    record(rep.failures, rep.quotient, "quotient", "level " + std::to_string(n),
           "pi has rank " + std::to_string(image.rank()) + ", expected " + std::to_string(dimH));
  int rankJ = 0;
  if (n >= 2) {
    LVec e1 = S.e(n - 1);
    if (!S.equal(S.star(n, e1), e1))
      record(rep.failures, rep.self_adjoint, "self_adjoint", "e" + std::to_string(n - 1), "e* differs from e");
    EchelonSpan J;
    for (int x = 0; x < dimA; ++x) {
      LVec xe = S.mul(n, unit(x), e1);
      if (xe.empty()) continue;
      for (int y = 0; y < dimA; ++y) {
        LVec v = S.mul(n, xe, unit(y));
        if (!S.field(S.quotient(n, v)).empty())
          record(rep.failures, rep.quotient, "quotient", "native " + std::to_string(x) + " e" + std::to_string(n - 1) +
                 " native " + std::to_string(y), "pi does not vanish on the ideal");
        J.add(S.field(v));
      }
    }
    rankJ = J.rank();
  }
  if (dimA - rankJ != dimH)
    record(rep.failures, rep.quotient, "quotient", "level " + std::to_string(n),
           "ideal has rank " + std::to_string(rankJ) + " in dimension " + std::to_string(dimA) + ", quotient should be " +
               std::to_string(dimH));

  // e_n commutes with A_{n-1}.
  for (const auto& [name, a] : S.generators(n - 1)) {
    LVec x = S.embed(n - 1, m, a);
    if (!S.equal(S.mul(m, x, en), S.mul(m, en, x)))
      record(rep.failures, rep.commute, "commute", name, "does not commute with e" + std::to_string(n));
  }

  // e_n A_n e_n inside A_{n-1} e_n.
  EchelonSpan lower;
  for (int x = 0; x < S.dim(n - 1); ++x) lower.add(S.field(S.mul(m, S.embed(n - 1, m, unit(x)), en)));
  for (int y = 0; y < dimA; ++y) {
    LVec v = S.mul(m, S.mul(m, en, S.embed(n, m, unit(y))), en);
    if (!lower.contains(S.field(v)))
      record(rep.failures, rep.compress, "compress", "native " + std::to_string(y), "e y e is not in A_{n-1} e");
  }

  // A_{n+1} e_n = A_n e_n, with x -> x e_n injective on A_n.
  EchelonSpan mid;
  for (int x = 0; x < dimA; ++x) mid.add(S.field(S.mul(m, S.embed(n, m, unit(x)), en)));
  if (mid.rank() != dimA)
    record(rep.failures, rep.absorb, "absorb", "level " + std::to_string(n),
           "x -> x e has rank " + std::to_string(mid.rank()) + " on dimension " + std::to_string(dimA));
  for (int y = 0; y < S.dim(m); ++y) {
    if (!mid.contains(S.field(S.mul(m, unit(y), en))))
      record(rep.failures, rep.absorb, "absorb", "native " + std::to_string(y) + " of level " + std::to_string(m),
             "y e is not in A_n e");
  }

  // e_{n-1} = e_{n-1} e_n e_{n-1} exhibits e_{n-1} in the ideal of e_n.
  if (n >= 2) {
    LVec e1 = S.embed(n, m, S.e(n - 1));
    if (!S.equal(S.mul(m, S.mul(m, e1, en), e1), e1))
      record(rep.failures, rep.generate, "generate", "e" + std::to_string(n - 1), "e_{n-1} e_n e_{n-1} differs from e_{n-1}");
  }
  return rep;
}

nlohmann::json FiltrationReportA::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) steps_json.push_back({{"label", s.label.str()}, {"rank", s.rank}, {"expected", s.expected}});
  return {{"top", top.str()},       {"n", n},
          {"steps", steps_json},    {"stable", stable},
          {"ranks", ranks},         {"isomorphic", isomorphic},
          {"order_preserving", order_preserving},
          {"exhaustive", exhaustive},
          {"ok", ok()},             {"failures", failures_json(failures)}};
}

FiltrationReportA Framework::restriction_filtration(const Vertex& top, int n) const {
  const TowerSpec& S = *spec_;
  FiltrationReportA rep;
  rep.top = top;
  rep.n = n;
  if (n < 1) throw std::domain_error("restriction needs level at least 1");
  const BranchingDiagram& A = diagram(n);
  int vi = A.index_of(n, top);
  if (vi < 0) throw std::domain_error("vertex " + top.str() + " is not at level " + std::to_string(n));
  auto upper = datum(n);
  auto lower = datum(n - 1);
  Expressor ex(S, *upper), ex_low(S, *lower);
  if (!ex.complete() || !ex_low.complete()) throw StructuralError("cellular basis is not free");
  auto gens = S.generators(n - 1);

  auto project = [&](const LVec& x, const std::string& where) {
    std::string stray;
    FVec p = ex.project(ex.express(x), vi, &stray);
    if (!stray.empty()) record(rep.failures, rep.stable, "stable", where, "support below the cell: " + stray);
    return p;
  };

  std::vector<int> preds = A.predecessors(n, vi);
  std::sort(preds.begin(), preds.end(), [&](int a, int b) { return A.level(n - 1)[b] < A.level(n - 1)[a]; });

  EchelonSpan M;  // M_{j-1}, then M_j
  const LVec& c = upper->c[vi];
  for (int j = 0; j < static_cast<int>(preds.size()); ++j) {
    int p = preds[j];
    const Vertex& label = A.level(n - 1)[p];
    std::string where = "subquotient " + std::to_string(j + 1) + " " + label.str();
    EchelonSpan prev = M;
    LVec gen = S.mul(n, c, branching_closed_form(n, label, top, Coefficient::D).value);
    const auto& dts = lower->d[p];
    int f = static_cast<int>(dts.size());
    std::vector<LVec> elems(f);
    std::vector<FVec> vecs(f);
    for (int t = 0; t < f; ++t) {
      elems[t] = S.mul(n, gen, S.embed(n - 1, n, dts[t]));
      vecs[t] = project(elems[t], where);
      M.add(vecs[t]);
    }
    int rank = M.rank() - prev.rank();
    rep.steps.push_back({label, rank, f});
    if (rank != f)
      record(rep.failures, rep.ranks, "ranks", where, "rank " + std::to_string(rank) + ", expected " + std::to_string(f));

    for (int t = 0; t < f; ++t) {
      for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        const auto& [name, a] = gens[g];
        FVec image = project(S.mul(n, elems[t], S.embed(n - 1, n, a)), where);
        if (!M.contains(image))
          record(rep.failures, rep.stable, "stable", where + " t=" + std::to_string(t) + " times " + name,
                 "leaves the span");
        // Compare with the action on the cell module of A_{n-1}.
        int pos = lower->position(p, 0, t);
        FVec coeffs = ex_low.express(S.mul(n - 1, lower->elements[pos], a));
        FVec expected;
        for (const auto& [k, r] : coeffs) {
          const BasisLabel& lab = lower->labels[k];
          if (lab.vertex == p && lab.s == 0) axpy(expected, r, vecs[lab.t]);
        }
        FVec diff = image;
        axpy(diff, RationalFunction(-1), expected);
        if (!prev.contains(diff))
          record(rep.failures, rep.isomorphic, "isomorphic", where + " t=" + std::to_string(t) + " times " + name,
                 "action differs from the cell module of " + label.str());
      }
    }
    for (int i = 0; i < j; ++i)
      if (vertex_gt(label, rep.steps[i].label))
        record(rep.failures, rep.order_preserving, "order_preserving", where,
               label.str() + " lies above the earlier label " + rep.steps[i].label.str());
  }
  int f = static_cast<int>(upper->paths[vi].size());
  if (M.rank() != f)
    record(rep.failures, rep.exhaustive, "exhaustive", top.str(),
           "filtration reaches rank " + std::to_string(M.rank()) + " of " + std::to_string(f));
  return rep;
}

nlohmann::json Framework::datum_json(const CellDatum& datum) const {
  const TowerSpec& S = *spec_;
  const BranchingDiagram& A = diagram(datum.n);
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(datum.vertices.size()); ++v) {
    nlohmann::json above = nlohmann::json::array();
    for (int w = 0; w < static_cast<int>(datum.vertices.size()); ++w)
      if (vertex_gt(datum.vertices[w], datum.vertices[v])) above.push_back(datum.vertices[w].str());
    nlohmann::json paths = nlohmann::json::array();
    for (const Path& p : datum.paths[v]) paths.push_back(path_json(A, p));
    verts.push_back({{"label", datum.vertices[v].str()},
                     {"lambda", datum.vertices[v].lambda.parts},
                     {"l", datum.vertices[v].l},
                     {"above", above},
                     {"paths", paths}});
  }
  nlohmann::json elems = nlohmann::json::array();
  for (int k = 0; k < static_cast<int>(datum.elements.size()); ++k) {
    const BasisLabel& lab = datum.labels[k];
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [x, c] : datum.elements[k]) coeffs.push_back({{"native", x}, {"coeff", S.to_field(c).str()}});
    elems.push_back({{"vertex", datum.vertices[lab.vertex].str()}, {"s", lab.s}, {"t", lab.t}, {"coeffs", coeffs}});
  }
  nlohmann::json native = nlohmann::json::array();
  for (int x = 0; x < S.dim(datum.n); ++x) native.push_back(S.native_json(datum.n, x));
  return {{"algebra", S.name()},
          {"n", datum.n},
          {"dimension", S.dim(datum.n)},
          {"size", datum.elements.size()},
          {"vertices", verts},
          {"native_basis", native},
          {"elements", elems}};
}

}  // namespace ctow

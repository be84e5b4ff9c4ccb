#include "ctow/coeff.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ctow {

const char* sym_name(int s) {
  static const char* names[kNumSyms] = {"q", "z", "δ"};
  if (s < 0 || s >= kNumSyms) throw StructuralError("unknown symbol index");
  return names[s];
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Exp{0, 0, 0}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Exp{0, 0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, const Exp& e) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::var(Sym s, int power) {
  Exp e{0, 0, 0};
  e[s] = power;
  return monomial(1, e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    mpz_class c = terms_[i].second;
    while (j < terms_.size() && terms_[j].first == terms_[i].first) c += terms_[j++].second;
    if (c != 0) {
      terms_[out].first = terms_[i].first;
      terms_[out].second = c;
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exp{0, 0, 0});
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentPoly::involves(Sym s) const {
  for (const auto& t : terms_)
    if (t.first[s] != 0) return true;
  return false;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (int e : t.first)
      if (e < 0) return false;
  return true;
}

Exp LaurentPoly::min_exp() const {
  if (terms_.empty()) return Exp{0, 0, 0};
  Exp m = terms_[0].first;
  for (const auto& t : terms_)
    for (int s = 0; s < kNumSyms; ++s) m[s] = std::min(m[s], t.first[s]);
  return m;
}

Exp LaurentPoly::max_exp() const {
  if (terms_.empty()) return Exp{0, 0, 0};
  Exp m = terms_[0].first;
  for (const auto& t : terms_)
    for (int s = 0; s < kNumSyms; ++s) m[s] = std::max(m[s], t.first[s]);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, sign > 0 ? b[j].second : mpz_class(-b[j].second)});
      ++j;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].second + b[j].second) : mpz_class(a[i].second - b[j].second);
      if (c != 0) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Exp add_exp(const Exp& a, const Exp& b) { return Exp{a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& o = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_)
      r.terms_.push_back({add_exp(t.first, m.terms_[0].first), t.second * m.terms_[0].second});
    return r;  // monomial shift keeps order and nonzero coefficients
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({add_exp(x.first, y.first), x.second * y.second});
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return false;
}

LaurentPoly LaurentPoly::shifted(const Exp& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = add_exp(t.first, e);
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) throw DivisionError("negative power of a non-unit Laurent polynomial");
    const auto& t = terms_[0];
    Exp e{-t.first[0] * -k, -t.first[1] * -k, -t.first[2] * -k};
    mpz_class c = (t.second == -1 && (k % 2 != 0)) ? -1 : 1;
    return monomial(c, e);
  }
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

mpz_class LaurentPoly::coeff(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exp& x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class LaurentPoly::eval_int(const std::array<long, kNumSyms>& at) const {
  mpz_class total = 0;
  for (const auto& t : terms_) {
    mpz_class v = t.second;
    for (int s = 0; s < kNumSyms; ++s) {
      int e = t.first[s];
      if (e == 0) continue;
      if (e < 0) {
        if (at[s] != 1 && at[s] != -1) throw DivisionError("negative exponent at a non-unit integer");
        e = -e;
      }
      mpz_class b = at[s], pw;
      mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
      v *= pw;
    }
    total += v;
  }
  return total;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionError("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t p, const std::array<std::uint64_t, kNumSyms>& at) const {
  std::uint64_t total = 0;
  for (const auto& t : terms_) {
    mpz_class c = t.second % mpz_class(static_cast<unsigned long>(p));
    if (c < 0) c += static_cast<unsigned long>(p);
    std::uint64_t v = c.get_ui();
    for (int s = 0; s < kNumSyms; ++s) {
      int e = t.first[s];
      if (e == 0) continue;
      std::uint64_t b = e < 0 ? inv_mod(at[s], p) : at[s] % p;
      v = mul_mod(v, pow_mod(b, static_cast<std::uint64_t>(e < 0 ? -e : e), p), p);
    }
    total = (total + v) % p;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    bool is_const = it->first == Exp{0, 0, 0};
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || is_const) {
      os << c.get_str();
      wrote = true;
    }
    for (int s = 0; s < kNumSyms; ++s) {
      int e = it->first[s];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << sym_name(s);
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_)
    terms.push_back({{"exp", {t.first[0], t.first[1], t.first[2]}}, {"coef", t.second.get_str()}});
  return {{"vars", {"q", "z", "δ"}}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  std::vector<int> slot;
  for (const auto& v : j.at("vars")) {
    std::string name = v.get<std::string>();
    int found = -1;
    for (int s = 0; s < kNumSyms; ++s)
      if (name == sym_name(s)) found = s;
    if (found < 0) throw StructuralError("unknown indeterminate '" + name + "'");
    slot.push_back(found);
  }
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& ex = t.at("exp");
    if (ex.size() != slot.size()) throw StructuralError("exponent vector length mismatch");
    Exp e{0, 0, 0};
    for (std::size_t i = 0; i < slot.size(); ++i) e[slot[i]] += ex[i].get<int>();
    terms.push_back({e, mpz_class(t.at("coef").get<std::string>())});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------- gcd

namespace {

int degree_in(const LaurentPoly& a, int x) {
  int d = 0;
  for (const auto& t : a.terms()) d = std::max(d, t.first[x]);
  return d;
}

// Coefficient of x^k, as a polynomial free of x.
LaurentPoly coeff_in(const LaurentPoly& a, int x, int k) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : a.terms())
    if (t.first[x] == k) {
      Exp e = t.first;
      e[x] = 0;
      out.push_back({e, t.second});
    }
  return LaurentPoly::from_terms(std::move(out));
}

std::map<int, LaurentPoly> split_in(const LaurentPoly& a, int x) {
  std::map<int, std::vector<LaurentPoly::Term>> parts;
  for (const auto& t : a.terms()) {
    Exp e = t.first;
    e[x] = 0;
    parts[t.first[x]].push_back({e, t.second});
  }
  std::map<int, LaurentPoly> out;
  for (auto& [k, v] : parts) out[k] = LaurentPoly::from_terms(std::move(v));
  return out;
}

LaurentPoly positive_leading(const LaurentPoly& a) {
  if (!a.is_zero() && a.leading().second < 0) return -a;
  return a;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly gcd_prs(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& a, int x) {
  LaurentPoly g;
  for (auto& [k, c] : split_in(a, x)) {
    g = gcd_rec(g, c);
    if (g == LaurentPoly(1)) break;
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in x.
LaurentPoly prem_in(LaurentPoly r, const LaurentPoly& b, int x) {
  int db = degree_in(b, x);
  LaurentPoly lb = coeff_in(b, x, db);
  int steps = degree_in(r, x) - db + 1;
  while (!r.is_zero() && degree_in(r, x) >= db) {
    int dr = degree_in(r, x);
    LaurentPoly lr = coeff_in(r, x, dr);
    Exp sh{0, 0, 0};
    sh[x] = dr - db;
    r = lb * r - (lr * b).shifted(sh);
    --steps;
  }
  if (steps > 0 && !r.is_zero()) r *= lb.pow(steps);
  return r;
}

LaurentPoly gcd_prs(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g = a.content();
    mpz_class h = b.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return LaurentPoly(g);
  }
  int x = -1;
  for (int s = kNumSyms - 1; s >= 0; --s)
    if (a.involves(static_cast<Sym>(s)) || b.involves(static_cast<Sym>(s))) {
      x = s;
      break;
    }
  if (!a.involves(static_cast<Sym>(x))) return gcd_rec(a, content_in(b, x));
  if (!b.involves(static_cast<Sym>(x))) return gcd_rec(content_in(a, x), b);
  LaurentPoly ca = content_in(a, x), cb = content_in(b, x);
  LaurentPoly g = gcd_rec(ca, cb);
  LaurentPoly pa = exact_div(a, ca), pb = exact_div(b, cb);
  if (degree_in(pa, x) < degree_in(pb, x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    LaurentPoly r = prem_in(pa, pb, x);
    pa = pb;
    if (r.is_zero()) {
      pb = LaurentPoly();
    } else if (degree_in(r, x) == 0) {
      pa = LaurentPoly(1);
      pb = LaurentPoly();
    } else {
      pb = exact_div(r, content_in(r, x));
    }
  }
  if (degree_in(pa, x) > 0) pa = exact_div(pa, content_in(pa, x));
  return positive_leading(g * pa);
}

mpz_class max_norm(const LaurentPoly& a) {
  mpz_class m = 0;
  for (const auto& t : a.terms()) {
    mpz_class v = abs(t.second);
    if (v > m) m = v;
  }
  return m;
}

LaurentPoly eval_at(const LaurentPoly& a, int x, const mpz_class& xi) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Exp e = t.first;
    e[x] = 0;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.first[x]));
    out.push_back({e, t.second * pw});
  }
  return LaurentPoly::from_terms(std::move(out));
}

// Inverse of eval_at using balanced xi-adic digits.
LaurentPoly interpolate(LaurentPoly h, int x, const mpz_class& xi) {
  std::vector<LaurentPoly::Term> out;
  mpz_class half = xi / 2;
  for (int k = 0; !h.is_zero(); ++k) {
    std::vector<LaurentPoly::Term> rest;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.second.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Exp e = t.first;
        e[x] = k;
        out.push_back({e, r});
      }
      mpz_class qv = (t.second - r) / xi;
      if (qv != 0) rest.push_back({t.first, qv});
    }
    h = LaurentPoly::from_terms(std::move(rest));
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly primitive(const LaurentPoly& h) {
  if (h.is_zero()) return h;
  mpz_class c = h.content();
  std::vector<LaurentPoly::Term> t = h.terms();
  for (auto& x : t) x.second /= c;
  return positive_leading(LaurentPoly::from_terms(std::move(t)));
}

// Divisibility in the polynomial ring (monomials are not units here).
bool pdivides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient = nullptr) {
  LaurentPoly qt;
  if (!divides(b, a, &qt) || !qt.is_polynomial()) return false;
  if (quotient) *quotient = qt;
  return true;
}

// Heuristic gcd by evaluation at a large integer; f and g are primitive
// over Z. Any returned candidate has been checked by trial division.
bool heu_gcd(const LaurentPoly& f, const LaurentPoly& g, int x, LaurentPoly* out) {
  mpz_class fn = max_norm(f), gn = max_norm(g);
  mpz_class B = 2 * (fn < gn ? fn : gn) + 29;
  mpz_class sq;
  mpz_sqrt(sq.get_mpz_t(), B.get_mpz_t());
  mpz_class xi = B < 99 * sq ? B : mpz_class(99 * sq);
  mpz_class lf = abs(f.leading().second), lg = abs(g.leading().second);
  mpz_class alt = 2 * ((fn / lf) < (gn / lg) ? fn / lf : gn / lg) + 2;
  if (alt > xi) xi = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentPoly ff = eval_at(f, x, xi), gg = eval_at(g, x, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      LaurentPoly hh = gcd_rec(ff, gg);
      LaurentPoly h = primitive(interpolate(hh, x, xi));
      if (!h.is_zero() && pdivides(h, f) && pdivides(h, g)) {
        *out = h;
        return true;
      }
      LaurentPoly cf;
      if (pdivides(hh, ff, &cf)) {
        LaurentPoly c = primitive(interpolate(cf, x, xi)), hq;
        if (!c.is_zero() && pdivides(c, f, &hq) && pdivides(hq, g)) {
          *out = primitive(hq);
          return true;
        }
      }
      if (pdivides(hh, gg, &cf)) {
        LaurentPoly c = primitive(interpolate(cf, x, xi)), hq;
        if (!c.is_zero() && pdivides(c, g, &hq) && pdivides(hq, f)) {
          *out = primitive(hq);
          return true;
        }
      }
    }
    mpz_class r4;
    mpz_sqrt(r4.get_mpz_t(), xi.get_mpz_t());
    mpz_sqrt(r4.get_mpz_t(), r4.get_mpz_t());
    xi = xi * 73794 * r4 / 27011;
  }
  return false;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return LaurentPoly(cg);
  LaurentPoly f = primitive(a), g = primitive(b);
  if (f == g) return f.scaled(cg);
  int x = -1;
  for (int s = kNumSyms - 1; s >= 0; --s)
    if (f.involves(static_cast<Sym>(s)) && g.involves(static_cast<Sym>(s))) {
      x = s;
      break;
    }
  if (x < 0) {
    // Some variable occurs in only one argument: reduce to contents.
    for (int s = kNumSyms - 1; s >= 0; --s) {
      if (f.involves(static_cast<Sym>(s))) return positive_leading(gcd_rec(content_in(f, s), g).scaled(cg));
      if (g.involves(static_cast<Sym>(s))) return positive_leading(gcd_rec(f, content_in(g, s)).scaled(cg));
    }
  }
  LaurentPoly h;
  if (heu_gcd(f, g, x, &h)) return h.scaled(cg);
  return gcd_prs(f, g).scaled(cg);
}

}  // namespace

bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient) {
  if (b.is_zero()) throw DivisionError("division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = LaurentPoly();
    return true;
  }
  // Work with polynomials free of monomial factors, then shift back.
  Exp ma = a.min_exp(), mb = b.min_exp();
  Exp na{-ma[0], -ma[1], -ma[2]}, nb{-mb[0], -mb[1], -mb[2]};
  LaurentPoly r = a.shifted(na);
  LaurentPoly d = b.shifted(nb);
  const auto& lt = d.leading();
  std::vector<LaurentPoly::Term> q;
  while (!r.is_zero()) {
    const auto& rt = r.leading();
    Exp e;
    for (int s = 0; s < kNumSyms; ++s) {
      e[s] = rt.first[s] - lt.first[s];
      if (e[s] < 0) return false;
    }
    if (!mpz_divisible_p(rt.second.get_mpz_t(), lt.second.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rt.second.get_mpz_t(), lt.second.get_mpz_t());
    q.push_back({e, c});
    r -= (d * LaurentPoly::monomial(c, e));
  }
  if (quotient) {
    Exp sh{ma[0] - mb[0], ma[1] - mb[1], ma[2] - mb[2]};
    *quotient = LaurentPoly::from_terms(std::move(q)).shifted(sh);
  }
  return true;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!divides(b, a, &q)) throw DivisionError("inexact polynomial division");
  return q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw StructuralError("poly_gcd expects nonnegative exponents");
  return gcd_rec(a, b);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw DivisionError("zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_unit()) {
    // Dividing by +-monomial keeps the numerator a Laurent polynomial.
    num_ *= den_.pow(-1);
    den_ = LaurentPoly(1);
    return;
  }
  Exp mn = num_.min_exp(), md = den_.min_exp();
  LaurentPoly n = num_.shifted(Exp{-mn[0], -mn[1], -mn[2]});
  LaurentPoly d = den_.shifted(Exp{-md[0], -md[1], -md[2]});
  Exp sh{mn[0] - md[0], mn[1] - md[1], mn[2] - md[2]};
  if (d.is_constant()) {
    mpz_class g = n.content();
    mpz_class dc = d.leading().second;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
    if (dc < 0) g = -g;
    mpz_class dd = dc / g;
    std::vector<LaurentPoly::Term> t = n.terms();
    for (auto& x : t) x.second /= g;
    n = LaurentPoly::from_terms(std::move(t));
    d = LaurentPoly(dd);
  } else {
    LaurentPoly g = poly_gcd(n, d);
    if (g != LaurentPoly(1)) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
    if (d.leading().second < 0) {
      n = -n;
      d = -d;
    }
  }
  num_ = n.shifted(sh);
  den_ = d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionError("division by zero");
  return *this *= o.inverse();
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

std::uint64_t RationalFunction::eval_mod(std::uint64_t p, const std::array<std::uint64_t, kNumSyms>& at) const {
  std::uint64_t d = den_.eval_mod(p, at);
  if (d == 0) throw DivisionError("denominator vanishes at evaluation point");
  return mul_mod(num_.eval_mod(p, at), inv_mod(d, p), p);
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

nlohmann::json RationalFunction::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

RationalFunction RationalFunction::from_json(const nlohmann::json& j) {
  return RationalFunction(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

// ---------------------------------------------------------------- specialization

RationalFunction specialize(const LaurentPoly& p, const std::map<int, RationalFunction>& assignment) {
  for (const auto& [s, v] : assignment)
    if (s < 0 || s >= kNumSyms) throw StructuralError("assignment to unknown symbol");
  // Accumulate over a common denominator: each term is c * prod val_s^e_s.
  RationalFunction total;
  std::map<std::pair<int, int>, RationalFunction> cache;
  auto power = [&](int s, int e) -> const RationalFunction& {
    auto key = std::make_pair(s, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto a = assignment.find(s);
    RationalFunction base = a == assignment.end() ? RationalFunction(LaurentPoly::var(static_cast<Sym>(s))) : a->second;
    if (e < 0 && base.is_zero()) throw DivisionError(std::string("specialization sends ") + sym_name(s) + " to zero");
    return cache.emplace(key, base.pow(e)).first->second;
  };
  // Group terms by the exponents of assigned symbols to limit rational work.
  std::map<Exp, LaurentPoly> groups;
  for (const auto& t : p.terms()) {
    Exp assigned{0, 0, 0}, kept = t.first;
    for (const auto& [s, v] : assignment) {
      assigned[s] = t.first[s];
      kept[s] = 0;
    }
    groups[assigned] += LaurentPoly::monomial(t.second, kept);
  }
  for (const auto& [e, rest] : groups) {
    RationalFunction term(rest);
    for (int s = 0; s < kNumSyms; ++s)
      if (e[s] != 0) term *= power(s, e[s]);
    total += term;
  }
  return total;
}

RationalFunction specialize(const RationalFunction& f, const std::map<int, RationalFunction>& assignment) {
  RationalFunction d = specialize(f.den(), assignment);
  if (d.is_zero()) throw DivisionError("specialization makes the denominator vanish");
  return specialize(f.num(), assignment) / d;
}

const RationalFunction& delta_in_field() {
  static const RationalFunction d = [] {
    LaurentPoly num = z_pow(-1) - z_pow(1);
    LaurentPoly den = q_pow(-1) - q_pow(1);
    return RationalFunction(num, den) + RationalFunction(1);
  }();
  return d;
}

RationalFunction delta_eliminate(const LaurentPoly& p) {
  if (!p.involves(SymDelta)) return RationalFunction(p);
  // delta = N/D with N = z^-1 - z + q^-1 - q and D = q^-1 - q; clear D^K.
  static const LaurentPoly N = z_pow(-1) - z_pow(1) + q_pow(-1) - q_pow(1);
  static const LaurentPoly D = q_pow(-1) - q_pow(1);
  std::map<int, LaurentPoly> parts;
  for (const auto& t : p.terms()) {
    if (t.first[SymDelta] < 0) throw DivisionError("negative power of delta");
    Exp e = t.first;
    e[SymDelta] = 0;
    parts[t.first[SymDelta]] += LaurentPoly::monomial(t.second, e);
  }
  int K = parts.rbegin()->first;
  std::vector<LaurentPoly> npow(K + 1, LaurentPoly(1)), dpow(K + 1, LaurentPoly(1));
  for (int k = 1; k <= K; ++k) {
    npow[k] = npow[k - 1] * N;
    dpow[k] = dpow[k - 1] * D;
  }
  LaurentPoly num;
  for (const auto& [k, c] : parts) num += c * npow[k] * dpow[K - k];
  return RationalFunction(num, dpow[K]);
}

RationalFunction delta_eliminate(const RationalFunction& f) {
  return delta_eliminate(f.num()) / delta_eliminate(f.den());
}

}  // namespace ctow

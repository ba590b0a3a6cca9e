#include "monofock/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "monofock/errors.hpp"
#include "monofock/measure.hpp"

namespace monofock {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::constant(BigInt c) {
  return IntPoly(std::vector<BigInt>{std::move(c)});
}

IntPoly IntPoly::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
  return IntPoly(std::move(out));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  BigInt c = content();
  if (c == 0 || c == 1) return *this;
  std::vector<BigInt> out = coeffs_;
  for (auto& x : out) x /= c;
  return IntPoly(std::move(out));
}

BigRational IntPoly::evaluate(const BigRational& x) const {
  BigRational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * x + BigRational(*it);
  return r;
}

BigFloat IntPoly::evaluate(const BigFloat& x) const {
  BigFloat r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * x + static_cast<BigFloat>(*it);
  return r;
}

int IntPoly::sign_at(const BigRational& x) const {
  if (is_zero()) return 0;
  const BigInt a = numerator(x);
  const BigInt b = denominator(x);  // > 0 by mpq canonical form
  // p(a/b) * b^deg computed by homogeneous Horner.
  BigInt r = coeffs_.back();
  BigInt bp = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bp *= b;
    r = r * a + coeffs_[i] * bp;
  }
  return r.sign();
}

bool IntPoly::has_only_even_terms() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool IntPoly::is_palindromic() const {
  if (is_zero()) return false;
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

namespace {

/// Sign-corrected pseudo-remainder: returns a positive multiple of
/// rem(f, g) over Q, so the sign pattern matches the rational remainder.
IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
  IntPoly r = f;
  const BigInt lg = g.leading();
  int scalings = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int k = r.degree() - g.degree();
    IntPoly shifted = IntPoly::monomial(k, r.leading()) * g;
    std::vector<BigInt> scaled(r.coefficients());
    for (auto& c : scaled) c *= lg;
    r = IntPoly(std::move(scaled)) - shifted;
    ++scalings;
  }
  if (lg < 0 && (scalings % 2) == 1) r = -r;
  return r;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p.primitive_part());
  IntPoly d = p.derivative().primitive_part();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain[chain.size() - 1];
    IntPoly r = signed_prem(a, b);
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  return chain;
}

int variations_at(const std::vector<IntPoly>& chain, const BigRational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at_minus_inf(const std::vector<IntPoly>& chain) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.leading().sign();
    if (q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at_plus_inf(const std::vector<IntPoly>& chain) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.leading().sign();
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

/// Cauchy bound rounded up to a power of two.
BigRational root_bound(const IntPoly& p) {
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p[i]));
  BigRational bound = 1 + BigRational(m, abs(p.leading()));
  BigInt b = 2;
  while (b < bound) b *= 2;
  return BigRational(b);
}

struct Isolator {
  std::shared_ptr<const IntPoly> p;
  const std::vector<IntPoly>& chain;
  std::vector<RootInterval> found;

  // number of roots in the open interval (a, b); p(a), p(b) nonzero
  int count_open(const BigRational& a, const BigRational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  }

  void isolate(const BigRational& a, const BigRational& b, int roots) {
    if (roots == 0) return;
    if (roots == 1) {
      found.push_back(RootInterval{p, a, b, p->sign_at(b)});
      return;
    }
    BigRational m = (a + b) / 2;
    if (p->sign_at(m) == 0) {
      // Exact rational root at the midpoint; shrink a hole around it.
      BigRational d = (b - a) / 4;
      while (p->sign_at(m - d) == 0 || p->sign_at(m + d) == 0 ||
             count_open(m - d, m + d) != 1)
        d /= 2;
      found.push_back(RootInterval{p, m, m, 0});
      isolate(a, m - d, count_open(a, m - d));
      isolate(m + d, b, count_open(m + d, b));
      return;
    }
    isolate(a, m, count_open(a, m));
    isolate(m, b, roots - count_open(a, m));
  }
};

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = signed_prem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

int sturm_root_count(const IntPoly& p) {
  auto chain = sturm_chain(p);
  return variations_at_minus_inf(chain) - variations_at_plus_inf(chain);
}

std::vector<RootInterval> sturm_isolate(const IntPoly& p) {
  if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() > 0)
    throw StructureError("sturm_isolate: input is not squarefree");
  auto chain = sturm_chain(p);
  BigRational b = root_bound(p);
  Isolator iso{std::make_shared<IntPoly>(p), chain, {}};
  iso.isolate(-b, b, iso.count_open(-b, b));
  std::sort(iso.found.begin(), iso.found.end(),
            [](const RootInterval& x, const RootInterval& y) {
              return x.lo < y.lo;
            });
  return iso.found;
}

RootInterval refine_interval(RootInterval ri, unsigned bits) {
  if (ri.is_exact()) return ri;
  BigRational width = ri.hi - ri.lo;
  const BigRational target = BigRational(1, BigInt(1) << bits);
  int sign_hi = ri.poly->sign_at(ri.hi);
  while (width > target) {
    BigRational m = (ri.lo + ri.hi) / 2;
    int sm = ri.poly->sign_at(m);
    if (sm == 0) {
      ri.lo = ri.hi = m;
      return ri;
    }
    if (sm == sign_hi)
      ri.hi = m;
    else
      ri.lo = m;
    width = ri.hi - ri.lo;
  }
  return ri;
}

BigFloat refine_root(const RootInterval& ri, unsigned bits) {
  RootInterval r = refine_interval(ri, bits);
  return static_cast<BigFloat>(r.midpoint());
}

RationalFn mgf_pair(int m, int cap) {
  if (m < 1) throw Error("mgf_pair requires m >= 1");
  if (m > cap)
    throw CapError("mgf_pair cap exceeded: m = " + std::to_string(m));
  IntPoly p(std::vector<BigInt>{1, 0, -1});  // 1 - t^2
  IntPoly q = IntPoly::constant(1);
  const IntPoly t2 = IntPoly::monomial(2);
  for (int k = 1; k < m; ++k) {
    IntPoly q_next = q * p;
    IntPoly p_next = p * p - t2 * q * q;
    q = std::move(q_next);
    p = std::move(p_next);
  }
  return RationalFn{q, p};
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s;
  s.coeffs.assign(order + 1, BigRational(0));
  s.coeffs[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& o) const {
  TruncatedSeries out = *this;
  for (std::size_t i = 0; i < out.coeffs.size() && i < o.coeffs.size(); ++i)
    out.coeffs[i] += o.coeffs[i];
  return out;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& o) const {
  TruncatedSeries out = *this;
  for (std::size_t i = 0; i < out.coeffs.size() && i < o.coeffs.size(); ++i)
    out.coeffs[i] -= o.coeffs[i];
  return out;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
  TruncatedSeries out;
  out.coeffs.assign(coeffs.size(), BigRational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j + i < coeffs.size() && j < o.coeffs.size(); ++j)
      if (o.coeffs[j] != 0) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs.empty() || coeffs[0] == 0)
    throw Error("series inverse requires a nonzero constant term");
  TruncatedSeries out;
  out.coeffs.assign(coeffs.size(), BigRational(0));
  out.coeffs[0] = 1 / coeffs[0];
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    BigRational acc = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (i < coeffs.size()) acc += coeffs[i] * out.coeffs[n - i];
    out.coeffs[n] = -acc / coeffs[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::shift(int by) const {
  TruncatedSeries out;
  out.coeffs.assign(coeffs.size(), BigRational(0));
  for (std::size_t i = 0; i + by < coeffs.size(); ++i)
    out.coeffs[i + by] = coeffs[i];
  return out;
}

TruncatedSeries TruncatedSeries::substitute_t_squared(int order) const {
  TruncatedSeries out;
  out.coeffs.assign(order + 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs.size() && 2 * i <= static_cast<std::size_t>(order); ++i)
    out.coeffs[2 * i] = coeffs[i];
  return out;
}

TruncatedSeries series_of(const RationalFn& rf, int K) {
  if (rf.denominator.is_zero() || rf.denominator.constant_term() == 0)
    throw Error("series_of: denominator constant term must be nonzero");
  const BigRational p0(rf.denominator.constant_term());
  TruncatedSeries out;
  out.coeffs.assign(K + 1, BigRational(0));
  for (int n = 0; n <= K; ++n) {
    BigRational qn =
        n <= rf.numerator.degree() ? BigRational(rf.numerator[n]) : BigRational(0);
    BigRational acc = qn;
    for (int i = 1; i <= std::min(n, rf.denominator.degree()); ++i)
      acc -= BigRational(rf.denominator[i]) * out.coeffs[n - i];
    out.coeffs[n] = acc / p0;
  }
  return out;
}

bool t_recurrence_check(int m, int K) {
  if (m > 8 || K > 64) throw CapError("t_recurrence_check caps: m <= 8, K <= 64");
  // Route 1: T_k = 1 / (1 - t - t * sum_{j=2}^{k} T_{j-1})
  std::vector<TruncatedSeries> T;
  for (int k = 1; k <= m; ++k) {
    TruncatedSeries denom = TruncatedSeries::one(K);
    TruncatedSeries t_term = TruncatedSeries::one(K).shift(1);  // t
    denom = denom.sub(t_term);
    TruncatedSeries acc;
    acc.coeffs.assign(K + 1, BigRational(0));
    for (int j = 2; j <= k; ++j) acc = acc.add(T[j - 2]);
    denom = denom.sub(acc.shift(1));
    T.push_back(denom.inverse());
  }
  // Route 2: T_{k+1} = T_k / (1 - t T_k^2)
  TruncatedSeries one_minus_t = TruncatedSeries::one(K).sub(TruncatedSeries::one(K).shift(1));
  TruncatedSeries t2 = one_minus_t.inverse();  // T_1
  for (int k = 1; k < m; ++k) {
    TruncatedSeries denom =
        TruncatedSeries::one(K).sub(t2.mul(t2).shift(1));
    t2 = t2.mul(denom.inverse());
  }
  if (!(T.back() == t2)) return false;
  // Route 3: substituting t -> t^2 reproduces the M_m series.
  TruncatedSeries mm = series_of(mgf_pair(m), 2 * K);
  TruncatedSeries subst = T.back().substitute_t_squared(2 * K);
  return mm == subst;
}

bool structure_check(int n, int cap) {
  if (n > cap) throw CapError("structure_check cap exceeded");
  RationalFn rf = mgf_pair(n + 1);
  const IntPoly& p = rf.denominator;
  return p.is_monic() && p.constant_term() == 1 && p.has_only_even_terms() &&
         p.degree() == (1 << (n + 1));
}

namespace {

/// Positive roots only, as refined disjoint intervals sorted ascending.
std::vector<RootInterval> positive_roots(const IntPoly& p) {
  auto roots = sturm_isolate(p);
  std::vector<RootInterval> pos;
  for (auto& r : roots) {
    if (r.is_exact()) {
      if (r.lo > 0) pos.push_back(r);
      continue;
    }
    if (r.hi <= 0) continue;
    if (r.lo < 0) {
      // 0 is never a root of P_n or Q_n (constant term 1); split there.
      int s0 = p.sign_at(BigRational(0));
      if (s0 == r.sign_change) continue;  // root is left of 0
      r.lo = 0;
    }
    pos.push_back(r);
  }
  return pos;
}

/// Refine until all intervals in the merged list are pairwise disjoint,
/// then return a strict-order comparison key (interval lows).
void make_disjoint(std::vector<RootInterval>& a, std::vector<RootInterval>& b) {
  unsigned bits = 16;
  for (;;) {
    std::vector<std::pair<BigRational, BigRational>> spans;
    for (auto& r : a) spans.emplace_back(r.lo, r.hi);
    for (auto& r : b) spans.emplace_back(r.lo, r.hi);
    std::sort(spans.begin(), spans.end());
    bool overlap = false;
    for (std::size_t i = 1; i < spans.size(); ++i)
      if (spans[i].first < spans[i - 1].second) {
        overlap = true;
        break;
      }
    if (!overlap) return;
    for (auto& r : a) r = refine_interval(std::move(r), bits);
    for (auto& r : b) r = refine_interval(std::move(r), bits);
    bits *= 2;
    if (bits > 1 << 16)
      throw PrecisionError("interlacing refinement did not separate roots");
  }
}

}  // namespace

bool interlacing_check(int n, int cap) {
  if (n > cap) throw CapError("interlacing_check cap exceeded");
  RationalFn next = mgf_pair(n + 1);
  RationalFn cur = mgf_pair(n);
  if (poly_gcd(next.denominator, next.numerator).degree() != 0) return false;
  if (poly_gcd(cur.denominator, cur.numerator).degree() != 0) return false;

  auto proots = positive_roots(next.denominator);
  auto qroots = positive_roots(next.numerator);
  if (static_cast<int>(proots.size()) != (1 << n)) return false;
  if (static_cast<int>(qroots.size()) != (1 << n) - 1) return false;

  make_disjoint(proots, qroots);
  // Merge by interval order and check the alternation p q p q ... p.
  std::vector<std::pair<BigRational, char>> merged;
  for (const auto& r : proots) merged.emplace_back(r.lo, 'p');
  for (const auto& r : qroots) merged.emplace_back(r.lo, 'q');
  std::sort(merged.begin(), merged.end());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    char expect = (i % 2 == 0) ? 'p' : 'q';
    if (merged[i].second != expect) return false;
  }
  return true;
}

AtomicMeasure measure_from_polys(int m, int cap) {
  if (m > cap) throw CapError("measure_from_polys cap exceeded");
  RationalFn rf = mgf_pair(m);
  const IntPoly& p = rf.denominator;
  const IntPoly dp = p.derivative();

  const unsigned bits = working_precision() + 32;
  auto roots = sturm_isolate(p);
  if (static_cast<int>(roots.size()) != (1 << m))
    throw StructureError("measure_from_polys: root count != 2^m");

  if (m >= 2 && !p.is_palindromic())
    throw StructureError("measure_from_polys: P_m is not palindromic");

  std::vector<BigFloat> refined(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k)
    refined[k] = refine_root(roots[k], bits);

  // Roots sorted ascending; the palindrome pairs root index k (within its
  // sign class) with the mirrored index, its exact reciprocal.
  const int half = static_cast<int>(roots.size()) / 2;
  for (int k = 0; k < half; ++k)
    if (refined[k] >= 0 || refined[half + k] <= 0)
      throw StructureError("measure_from_polys: roots not split by sign");

  auto partner = [&](int k) {
    if (k < half) return half - 1 - k;       // negatives reversed
    return half + (half - 1 - (k - half));   // positives reversed
  };

  std::vector<BigFloat> atoms(roots.size()), weights(roots.size());
  for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
    atoms[k] = refined[k];
    const BigFloat t = refined[partner(k)];  // exact reciprocal of atom k
    BigFloat w = -rf.numerator.evaluate(t) / (t * dp.evaluate(t));
    if (w <= 0)
      throw PrecisionError("measure_from_polys: nonpositive residue");
    weights[k] = w;
  }
  // Residues of high-degree pairs cancel many leading bits when evaluated
  // near the largest roots; certify only half the working precision.
  const unsigned certified = std::max(53u, working_precision() / 2);
  return make_atomic_measure(std::move(atoms), std::move(weights), certified,
                             "poly:" + std::to_string(m));
}

std::string poly_to_json(const IntPoly& p, bool exact) {
  std::ostringstream os;
  os << "{\"degree\":" << (p.is_zero() ? 0 : p.degree())
     << ",\"coefficients\":[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << ",";
    if (exact)
      os << '"' << p[i].str() << '"';
    else
      os << p[i].str();
  }
  os << "]}";
  return os.str();
}

}  // namespace monofock

#include "monofock/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "monofock/errors.hpp"

namespace monofock {

std::pair<BigFloat, BigFloat> children_atoms(const BigFloat& a) {
  BigFloat disc = sqrt(a * a + 4);
  return {(a - disc) / 2, (a + disc) / 2};
}

BigFloat child_weight(const BigFloat& w_parent, const BigFloat& r_child) {
  if (r_child == 0) throw Error("child_weight requires a nonzero atom");
  BigFloat r2 = r_child * r_child;
  return w_parent * r2 / (1 + r2);
}

std::pair<BigFloat, BigFloat> endpoint_bounds(int n) {
  if (n < 1) throw Error("endpoint_bounds requires n >= 1");
  BigFloat two_n = 2 * BigFloat(n);
  return {sqrt(two_n - sqrt(two_n)), sqrt(two_n)};
}

BigFloat max_atom_chain(int n) {
  if (n < 1) throw Error("max_atom_chain requires n >= 1");
  // The increasing branch a -> (a + sqrt(a^2+4))/2 maps the generation
  // maximum to the next generation maximum.
  BigFloat a = 1;
  for (int k = 2; k <= n; ++k) a = (a + sqrt(a * a + 4)) / 2;
  return a;
}

bool max_atom_ratio_inequality(int n) {
  BigFloat r = max_atom_chain(n);
  BigFloat lhs = (2 / sqrt(BigFloat(n)) - 1 / sqrt(BigFloat(n + 1))) * r;
  BigFloat rhs = sqrt((r * r + 4) / (n + 1));
  return lhs < rhs;
}

namespace {

int effective_cap(int cap) { return std::min(cap, 30); }

constexpr int kHighPrecisionLimit = 20;

unsigned certified_bits() {
  const unsigned wp = working_precision();
  return wp > 48 ? wp - 24 : wp;
}

BinomialLawRecord make_record(int n, std::vector<BigFloat> atoms,
                              std::vector<BigFloat> weights, unsigned bits) {
  BinomialLawRecord rec;
  rec.n = n;
  rec.measure = make_atomic_measure(std::move(atoms), std::move(weights), bits,
                                    "mu_" + std::to_string(n));
  rec.max_atom = rec.measure.atoms.back();
  auto [lo, hi] = endpoint_bounds(n);
  rec.lower_bound = lo;
  rec.upper_bound = hi;
  return rec;
}

}  // namespace

void binomial_sequence(
    int max_n, const std::function<void(const BinomialLawRecord&)>& visit,
    int cap) {
  if (max_n < 1) throw Error("binomial_sequence requires n >= 1");
  if (max_n > effective_cap(cap))
    throw CapError("binomial cap exceeded: n = " + std::to_string(max_n));

  if (max_n <= kHighPrecisionLimit) {
    std::vector<BigFloat> atoms{BigFloat(-1), BigFloat(1)};
    std::vector<BigFloat> weights{BigFloat(1) / 2, BigFloat(1) / 2};
    visit(make_record(1, atoms, weights, certified_bits()));
    for (int n = 2; n <= max_n; ++n) {
      std::vector<BigFloat> next_atoms, next_weights;
      next_atoms.reserve(atoms.size() * 2);
      next_weights.reserve(atoms.size() * 2);
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        auto [lo, hi] = children_atoms(atoms[k]);
        next_atoms.push_back(lo);
        next_weights.push_back(child_weight(weights[k], lo));
        next_atoms.push_back(hi);
        next_weights.push_back(child_weight(weights[k], hi));
      }
      atoms = std::move(next_atoms);
      weights = std::move(next_weights);
      visit(make_record(n, atoms, weights, certified_bits()));
    }
    return;
  }

  // Above the high-precision limit the recurrence runs in doubles; the
  // records declare 53-bit precision.
  std::vector<double> atoms{-1.0, 1.0};
  std::vector<double> weights{0.5, 0.5};
  auto emit = [&](int n) {
    std::vector<BigFloat> a(atoms.size()), w(atoms.size());
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      a[k] = BigFloat(atoms[k]);
      w[k] = BigFloat(weights[k]);
    }
    visit(make_record(n, std::move(a), std::move(w), 53));
  };
  emit(1);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<double> na, nw;
    na.reserve(atoms.size() * 2);
    nw.reserve(atoms.size() * 2);
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      double disc = std::sqrt(atoms[k] * atoms[k] + 4.0);
      for (double r : {(atoms[k] - disc) / 2.0, (atoms[k] + disc) / 2.0}) {
        na.push_back(r);
        nw.push_back(weights[k] * r * r / (1.0 + r * r));
      }
    }
    atoms = std::move(na);
    weights = std::move(nw);
    emit(n);
  }
}

BinomialLawRecord binomial_measure(int n, int cap) {
  BinomialLawRecord out;
  binomial_sequence(
      n, [&](const BinomialLawRecord& rec) {
        if (rec.n == n) out = rec;
      },
      cap);
  return out;
}

BigFloat paper_weight_formula(std::size_t k,
                              const std::vector<BigFloat>& atoms_n,
                              const std::vector<BigFloat>& atoms_prev) {
  if (atoms_n.size() != 2 * atoms_prev.size() || atoms_prev.empty())
    throw Error("paper_weight_formula: generation sizes must be 2^n, 2^(n-1)");
  if (k >= atoms_n.size()) throw Error("paper_weight_formula: index range");
  const BigFloat& rk = atoms_n[k];
  BigFloat num = 1;
  for (const auto& rp : atoms_prev) {
    if (rk == rp) throw Error("paper_weight_formula: duplicate atom");
    num *= rk - rp;
  }
  BigFloat den = 2;
  for (std::size_t h = 0; h < atoms_n.size(); ++h) {
    if (h == k) continue;
    if (rk == atoms_n[h]) throw Error("paper_weight_formula: duplicate atom");
    den *= rk - atoms_n[h];
  }
  return num / den;
}

std::vector<CltRow> clt_table(int max_n, int cap) {
  if (max_n > effective_cap(cap))
    throw CapError("clt cap exceeded: n = " + std::to_string(max_n));
  ArcsineLaw law;

  // One streaming double-precision pass for the distances.
  std::vector<double> atoms{-1.0, 1.0};
  std::vector<double> weights{0.5, 0.5};
  std::vector<double> distances;
  auto record_distance = [&](int n) {
    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
    const double scale = std::sqrt(static_cast<double>(n));
    double cum = 0.0, dist = 0.0;
    for (std::size_t k : order) {
      const double f = law.cdf(atoms[k] / scale);
      dist = std::max(dist, std::abs(f - cum));
      cum += weights[k];
      dist = std::max(dist, std::abs(f - cum));
    }
    distances.push_back(dist);
  };
  record_distance(1);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<double> na, nw;
    na.reserve(atoms.size() * 2);
    nw.reserve(atoms.size() * 2);
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      double disc = std::sqrt(atoms[k] * atoms[k] + 4.0);
      for (double r : {(atoms[k] - disc) / 2.0, (atoms[k] + disc) / 2.0}) {
        na.push_back(r);
        nw.push_back(weights[k] * r * r / (1.0 + r * r));
      }
    }
    atoms = std::move(na);
    weights = std::move(nw);
    record_distance(n);
  }

  std::vector<CltRow> rows;
  BigFloat a = 1;  // max-atom chain at working precision
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) a = (a + sqrt(a * a + 4)) / 2;
    CltRow row;
    row.n = n;
    row.max_atom = static_cast<double>(a);
    row.ratio = static_cast<double>(a / sqrt(BigFloat(n)));
    row.ks_distance = distances[n - 1];
    rows.push_back(row);
  }
  return rows;
}

std::string clt_csv(const std::vector<CltRow>& rows) {
  std::ostringstream os;
  os << "n,max_atom,ratio,ks_distance\n";
  for (const auto& r : rows)
    os << r.n << ',' << format_significant(r.max_atom) << ','
       << format_significant(r.ratio) << ','
       << format_significant(r.ks_distance) << '\n';
  return os.str();
}

}  // namespace monofock

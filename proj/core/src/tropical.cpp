#include "valmat/tropical.hpp"

#include <algorithm>

#include "valmat/graph.hpp"
#include "valmat/induction.hpp"

namespace valmat {

Puiseux Puiseux::monomial(const Rat& coeff, const Rat& exponent) {
  Puiseux p;
  if (coeff != 0) p.terms_.push_back({coeff, exponent});
  return p;
}

Puiseux operator+(const Puiseux& a, const Puiseux& b) {
  Puiseux out;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->second > ib->second)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->second > ia->second) {
      out.terms_.push_back(*ib++);
    } else {
      Rat c = ia->first + ib->first;
      if (c != 0) out.terms_.push_back({c, ia->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Puiseux operator*(const Puiseux& a, const Puiseux& b) {
  std::map<Rat, Rat> acc;  // exponent -> coefficient
  for (const auto& [ca, ea] : a.terms_)
    for (const auto& [cb, eb] : b.terms_) acc[ea + eb] += ca * cb;
  Puiseux out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.terms_.push_back({it->second, it->first});
  return out;
}

std::string Puiseux::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [c, e] : terms_) {
    std::string cs = rat_to_string(c);
    if (!s.empty() && cs[0] != '-') s += "+";
    s += cs + "t^" + rat_to_string(e);
  }
  return s;
}

Puiseux Puiseux::parse(const std::string& text) {
  if (text == "0") return Puiseux();
  Puiseux out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t tpos = text.find("t^", pos);
    if (tpos == std::string::npos) throw std::invalid_argument("malformed puiseux term in: " + text);
    std::string coeff = text.substr(pos, tpos - pos);
    if (coeff.empty()) coeff = "1";
    if (negative) coeff = "-" + coeff;
    pos = tpos + 2;
    std::size_t end = pos;
    if (end < text.size() && (text[end] == '-')) ++end;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string expo = text.substr(pos, end - pos);
    Rat c(coeff);
    c.canonicalize();
    Rat e(expo);
    e.canonicalize();
    out += Puiseux::monomial(c, e);
    pos = end;
  }
  return out;
}

int expvec_degree(const ExpVec& a) {
  int d = 0;
  for (int x : a) d += x;
  return d;
}

bool expvec_multiaffine(const ExpVec& a) {
  for (int x : a)
    if (x > 1) return false;
  return true;
}

ElemSet expvec_support(const ExpVec& a) {
  ElemSet s;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] > 0) s.insert(i);
  return s;
}

std::vector<ExpVec> simplex_points(int k, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(k, 0);
  // lexicographic enumeration of compositions of d into k parts
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == k - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  if (k > 0)
    rec(0, d);
  else if (d == 0)
    out.push_back({});
  return out;
}

bool is_mconvex(const std::vector<ExpVec>& b) {
  if (b.empty()) return false;
  for (const ExpVec& x : b)
    for (const ExpVec& y : b) {
      const int n = static_cast<int>(x.size());
      for (int i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool ok = false;
        for (int j = 0; j < n && !ok; ++j) {
          if (x[j] >= y[j]) continue;
          ExpVec x2 = x, y2 = y;
          --x2[i];
          ++x2[j];
          ++y2[i];
          --y2[j];
          if (std::find(b.begin(), b.end(), x2) != b.end() && std::find(b.begin(), b.end(), y2) != b.end()) ok = true;
        }
        if (!ok) return false;
      }
    }
  return true;
}

void TropPoly::set(const ExpVec& a, Puiseux c) {
  if (static_cast<int>(a.size()) != vars_) throw std::invalid_argument("exponent vector arity mismatch");
  for (int x : a)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (expvec_degree(a) != degree_) throw std::invalid_argument("monomial degree mismatch");
  if (c.is_zero())
    coeffs_.erase(a);
  else
    coeffs_[a] = std::move(c);
}

Puiseux TropPoly::at(const ExpVec& a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? Puiseux() : it->second;
}

bool TropPoly::multiaffine() const {
  for (const auto& [a, c] : coeffs_)
    if (!expvec_multiaffine(a)) return false;
  return true;
}

bool TropPoly::nonneg_coeffs() const {
  for (const auto& [a, c] : coeffs_)
    if (!c.nonnegative()) return false;
  return true;
}

DiscreteFn tropicalize(const TropPoly& p) {
  DiscreteFn f;
  f.vars = p.vars();
  f.degree = p.degree();
  for (const auto& [a, c] : p.coeffs()) {
    ExtRat d = c.deg();
    if (d.finite()) f.values[a] = d.value();
  }
  return f;
}

ValMat discrete_to_valmat(const DiscreteFn& f) {
  ValMat out(f.vars, f.degree);
  for (const auto& [a, v] : f.values) {
    if (!expvec_multiaffine(a)) continue;
    out.set(expvec_support(a), ExtRat(v));
  }
  return out;
}

namespace {

Rat factorial(int k) {
  Rat r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

TropPoly generating_function(int vars, const std::vector<ExpVec>& mconvex_set) {
  if (!is_mconvex(mconvex_set)) throw std::invalid_argument("support is not M-convex");
  int d = expvec_degree(mconvex_set.front());
  TropPoly q(vars, d);
  for (const ExpVec& a : mconvex_set) {
    Rat denom = 1;
    for (int x : a) denom *= factorial(x);
    q.set(a, Puiseux::constant(Rat(1) / denom));
  }
  return q;
}

TropPoly matrix_action(const std::vector<std::vector<Puiseux>>& a, const TropPoly& p) {
  const int n = p.vars();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("matrix row count must match variable count");
  const int k = n == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("ragged matrix");
    for (const Puiseux& entry : row)
      if (!entry.nonnegative()) throw std::invalid_argument("matrix entries must be nonnegative Puiseux scalars");
  }

  TropPoly out(k, p.degree());
  std::map<ExpVec, Puiseux> acc;
  for (const auto& [alpha, c] : p.coeffs()) {
    // expand c * prod_i (sum_j a_ij v_j)^{alpha_i}
    std::map<ExpVec, Puiseux> partial;
    partial[ExpVec(k, 0)] = c;
    for (int i = 0; i < n; ++i)
      for (int rep = 0; rep < alpha[i]; ++rep) {
        std::map<ExpVec, Puiseux> next;
        for (const auto& [beta, coeff] : partial)
          for (int j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            ExpVec b2 = beta;
            ++b2[j];
            Puiseux term = coeff * a[i][j];
            auto it = next.find(b2);
            if (it == next.end())
              next.emplace(std::move(b2), std::move(term));
            else
              it->second += term;
            if (next.size() > 1000000) throw capacity_error("symbolic expansion exceeds term bound");
          }
        partial = std::move(next);
      }
    for (const auto& [beta, coeff] : partial) {
      auto it = acc.find(beta);
      if (it == acc.end())
        acc.emplace(beta, coeff);
      else
        it->second += coeff;
    }
  }
  for (const auto& [beta, coeff] : acc) out.set(beta, coeff);
  return out;
}

TropPoly map_part(const TropPoly& p) {
  TropPoly out(p.vars(), p.degree());
  for (const auto& [a, c] : p.coeffs())
    if (expvec_multiaffine(a)) out.set(a, c);
  return out;
}

TropPoly poly_delete(const TropPoly& p, int i) {
  TropPoly out(p.vars(), p.degree());
  for (const auto& [a, c] : p.coeffs())
    if (a[i] == 0) out.set(a, c);
  return out;
}

TropPoly poly_contract(const TropPoly& p, int i) {
  if (p.degree() < 1) throw std::domain_error("contraction needs degree >= 1");
  TropPoly out(p.vars(), p.degree() - 1);
  for (const auto& [a, c] : p.coeffs()) {
    if (a[i] == 0) continue;
    ExpVec b = a;
    --b[i];
    out.set(b, c * Puiseux::constant(a[i]));
  }
  return out;
}

namespace {

// All nonnegative integer matrices with given row sums, column sums taken
// freely; reports deg-weight of each matrix via callback with its column
// sum vector.
void degree_matchings(const std::vector<std::vector<ExtRat>>& edge_deg, const ExpVec& rows, int k, int row,
                      ExpVec& cols, const ExtRat& acc, const std::function<void(const ExpVec&, const ExtRat&)>& fn) {
  if (row == static_cast<int>(rows.size())) {
    fn(cols, acc);
    return;
  }
  // distribute rows[row] units over columns
  std::function<void(int, int, ExtRat)> dist = [&](int col, int rest, ExtRat cur) {
    if (!cur.finite()) return;
    if (col == k - 1) {
      if (rest > 0 && !edge_deg[row][col].finite()) return;
      ExtRat nxt = cur;
      for (int t = 0; t < rest; ++t) nxt = nxt + edge_deg[row][col];
      cols[col] += rest;
      degree_matchings(edge_deg, rows, k, row + 1, cols, nxt, fn);
      cols[col] -= rest;
      return;
    }
    for (int take = 0; take <= rest; ++take) {
      if (take > 0 && !edge_deg[row][col].finite()) break;
      ExtRat nxt = cur;
      for (int t = 0; t < take; ++t) nxt = nxt + edge_deg[row][col];
      cols[col] += take;
      dist(col + 1, rest - take, nxt);
      cols[col] -= take;
    }
  };
  if (k == 0) {
    if (rows[row] == 0) degree_matchings(edge_deg, rows, k, row + 1, cols, acc, fn);
    return;
  }
  dist(0, rows[row], acc);
}

}  // namespace

DiscreteFn transform_by_graph(const std::vector<std::vector<ExtRat>>& edge_deg, const DiscreteFn& g, int out_vars) {
  DiscreteFn out;
  out.vars = out_vars;
  out.degree = g.degree;
  for (const auto& [alpha, galpha] : g.values) {
    ExpVec cols(out_vars, 0);
    degree_matchings(edge_deg, alpha, out_vars, 0, cols, ExtRat(0), [&](const ExpVec& beta, const ExtRat& w) {
      ExtRat v = w + ExtRat(galpha);
      if (!v.finite()) return;
      auto it = out.values.find(beta);
      if (it == out.values.end() || it->second < v.value()) out.values[beta] = v.value();
    });
  }
  return out;
}

CommutationReport check_commutation(const std::vector<std::vector<Puiseux>>& a, const TropPoly& q) {
  CommutationReport rep;
  if (!q.nonneg_coeffs()) throw std::invalid_argument("commutation checks require nonnegative coefficients");
  const int n = q.vars();
  const int k = n == 0 ? 0 : static_cast<int>(a.empty() ? 0 : a[0].size());

  std::vector<std::vector<ExtRat>> edge_deg(n, std::vector<ExtRat>(k, ExtRat::neg_inf()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) edge_deg[i][j] = a[i][j].deg();

  TropPoly aq = matrix_action(a, q);
  DiscreteFn trop_q = tropicalize(q);

  // Full version: trop(A act q) = transformation of trop(q) by deg(A).
  DiscreteFn lhs_full = tropicalize(aq);
  DiscreteFn rhs_full = transform_by_graph(edge_deg, trop_q, k);
  rep.full_checked = true;
  if (!(lhs_full == rhs_full)) {
    for (const ExpVec& beta : simplex_points(k, q.degree()))
      if (lhs_full.at(beta) != rhs_full.at(beta)) {
        std::string b;
        for (int x : beta) b += std::to_string(x) + ",";
        rep.diffs.push_back("full transform differs at beta=(" + b + ") trop=" + lhs_full.at(beta).to_string() +
                            " transform=" + rhs_full.at(beta).to_string());
      }
  }

  // Multi-affine version: trop(MAP(A act q)) = induction of trop(q).
  if (q.multiaffine()) {
    rep.multiaffine_checked = true;
    ValMat lhs = discrete_to_valmat(tropicalize(map_part(aq)));
    WeightedBipGraph g(k, n);  // left = new variables, right = old
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        if (edge_deg[i][j].finite()) g.add_edge(j, i, edge_deg[i][j].value());
    ValMat rhs = induce_bipartite(g, discrete_to_valmat(trop_q));
    if (!(lhs == rhs)) rep.diffs.push_back("multi-affine commutation differs");
  }
  return rep;
}

}  // namespace valmat

#include "ktoric/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace ktoric {
namespace groebner {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Poly normalize_lead(Poly p) {
  if (!p.is_zero()) {
    Rat c = p.terms.front().coeff;
    for (auto& t : p.terms) t.coeff /= c;
  }
  return p;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Poly make_poly(int num_vars, std::vector<Term> terms) {
  std::map<Monomial, Rat> combined;
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.size()) != num_vars)
      throw std::invalid_argument("make_poly: arity mismatch");
    combined[t.mono] += t.coeff;
  }
  Poly out;
  for (auto& [m, c] : combined)
    if (c != 0) out.terms.push_back({m, c});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const Term& x, const Term& y) {
              return monomial_less(y.mono, x.mono);
            });
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out;
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() &&
         monomial_less(b.terms[j].mono, a.terms[i].mono))) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() ||
               monomial_less(a.terms[i].mono, b.terms[j].mono)) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rat c = a.terms[i].coeff + b.terms[j].coeff;
      if (c != 0) out.terms.push_back({a.terms[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly scale(const Poly& a, const Monomial& m, const Rat& c) {
  Poly out;
  if (c == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const Term& t : a.terms) {
    Monomial prod(t.mono.size());
    for (size_t i = 0; i < prod.size(); ++i) prod[i] = t.mono[i] + m[i];
    out.terms.push_back({std::move(prod), t.coeff * c});
  }
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const Term& t : b.terms) out = add(out, scale(a, t.mono, t.coeff));
  return out;
}

Poly normal_form(const Poly& a, const std::vector<Poly>& basis) {
  Poly rest = a;
  Poly result;
  while (!rest.is_zero()) {
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.lead().mono, rest.lead().mono)) {
        Rat factor = -rest.lead().coeff / g.lead().coeff;
        rest = add(rest,
                   scale(g, quotient(rest.lead().mono, g.lead().mono), factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.terms.push_back(rest.lead());
      rest.terms.erase(rest.terms.begin());
    }
  }
  return result;
}

std::vector<Poly> buchberger(std::vector<Poly> generators, int num_vars,
                             long long max_pairs) {
  std::vector<Poly> basis;
  for (auto& g : generators)
    if (!g.is_zero()) basis.push_back(normalize_lead(g));

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  long long processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs)
      throw std::runtime_error("buchberger: pair budget exceeded");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial &mi = basis[i].lead().mono, &mj = basis[j].lead().mono;
    if (coprime(mi, mj)) continue;
    Monomial l = lcm(mi, mj);
    Poly s = add(scale(basis[i], quotient(l, mi), 1),
                 scale(basis[j], quotient(l, mj), -1));
    Poly r = normal_form(s, basis);
    if (r.is_zero()) continue;
    r = normalize_lead(r);
    for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
    (void)num_vars;
  }
  return basis;
}

std::optional<long long> quotient_dimension(const std::vector<Poly>& basis,
                                            int num_vars) {
  if (num_vars == 0) {
    for (const Poly& g : basis)
      if (!g.is_zero()) return 0;  // a nonzero constant generator
    return 1;
  }
  std::vector<Monomial> leads;
  for (const Poly& g : basis)
    if (!g.is_zero()) leads.push_back(g.lead().mono);

  // A finite quotient needs a pure power of every variable among the
  // leading terms; the minimal ones bound the search box.
  std::vector<int> bound(num_vars, -1);
  for (const Monomial& m : leads) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < num_vars; ++i)
      if (m[i] > 0) {
        if (var >= 0) { pure = false; break; }
        var = i;
      }
    if (pure && var >= 0 && (bound[var] < 0 || m[var] < bound[var]))
      bound[var] = m[var];
    if (pure && var < 0) return 0;  // constant leading term
  }
  for (int i = 0; i < num_vars; ++i)
    if (bound[i] < 0) return std::nullopt;

  long long count = 0;
  Monomial current(num_vars, 0);
  auto rec = [&](auto&& self, int var) -> void {
    if (var == num_vars) {
      for (const Monomial& m : leads)
        if (divides(m, current)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      current[var] = e;
      self(self, var + 1);
    }
    current[var] = 0;
  };
  rec(rec, 0);
  return count;
}

}  // namespace groebner
}  // namespace ktoric

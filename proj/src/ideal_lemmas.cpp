#include "ktoric/ideal_lemmas.hpp"

#include <stdexcept>

#include "ktoric/zlattice.hpp"

namespace ktoric {

namespace {

LaurentPoly unit_shift(int num_vars, int var) {  // x_var - 1
  return LaurentPoly::variable(num_vars, var) -
         LaurentPoly::constant(num_vars, 1);
}

UnitEndedPoly axis_unit_shift(int num_vars, int var) {
  UnitEndedPoly g;
  g.num_vars = num_vars;
  g.axis.assign(num_vars, 0);
  g.axis[var] = 1;
  g.profile[0] = -1;
  g.profile[1] = 1;
  return g;
}

// p with substitute_ones(p, A) = 0 written as sum (x_rho - 1) h_rho over
// rho in A, by telescoping successive substitutions.
std::map<int, LaurentPoly> expand_over_generators(const LaurentPoly& p,
                                                  const std::vector<int>& A) {
  std::map<int, LaurentPoly> out;
  LaurentPoly current = p;
  for (int rho : A) {
    LaurentPoly next = current.substitute_ones({rho});
    auto [h, rem] = divide_by_unit_ended(current - next,
                                         axis_unit_shift(p.num_vars(), rho));
    if (!rem.is_zero())
      throw std::logic_error("expand_over_generators: inexact division");
    if (!h.is_zero()) out.emplace(rho, h);
    current = next;
  }
  if (!current.is_zero())
    throw std::logic_error("expand_over_generators: residue after all "
                           "substitutions");
  return out;
}

bool axes_pairwise_independent(const std::vector<UnitEndedPoly>& gammas) {
  for (size_t i = 0; i < gammas.size(); ++i)
    for (size_t j = i + 1; j < gammas.size(); ++j) {
      MatZ m(2, gammas[i].num_vars);
      for (int k = 0; k < gammas[i].num_vars; ++k) {
        m(0, k) = gammas[i].axis[k];
        m(1, k) = gammas[j].axis[k];
      }
      SnfDecomposition s = snf(m);
      if (m.cols() < 2 || s.D(1, 1) == 0) return false;
    }
  return true;
}

}  // namespace

LaurentPoly IntersectionWitness::reconstruct() const {
  LaurentPoly out(num_vars);
  for (const auto& [S, q] : parts) {
    LaurentPoly gen = LaurentPoly::constant(num_vars, 1);
    for (int rho : S) gen = gen * unit_shift(num_vars, rho);
    out = out + gen * q;
  }
  return out;
}

bool in_unit_shift_ideal(const LaurentPoly& p, const std::vector<int>& A) {
  return p.substitute_ones(std::set<int>(A.begin(), A.end())).is_zero();
}

IntersectionWitness decompose_intersection(
    const LaurentPoly& p, const std::vector<std::vector<int>>& sets) {
  for (size_t j = 0; j < sets.size(); ++j)
    if (!in_unit_shift_ideal(p, sets[j]))
      throw NotInIdealError(static_cast<int>(j));

  IntersectionWitness w;
  w.num_vars = p.num_vars();
  if (p.is_zero()) return w;
  if (sets.empty()) {
    w.parts.emplace(std::vector<int>{}, p);
    return w;
  }

  const std::vector<int>& head = sets.front();
  IntersectionWitness tail = decompose_intersection(
      p, std::vector<std::vector<int>>(sets.begin() + 1, sets.end()));
  std::set<int> head_set(head.begin(), head.end());

  for (const auto& [S, q] : tail.parts) {
    bool meets_head = false;
    for (int rho : S)
      if (head_set.count(rho)) { meets_head = true; break; }
    if (meets_head) {
      LaurentPoly& slot =
          w.parts.emplace(S, LaurentPoly(w.num_vars)).first->second;
      slot = slot + q;
      continue;
    }
    // q := q - pi(q) lies in I_head; expand it over head's generators.
    LaurentPoly killed = q - q.substitute_ones(head_set);
    for (const auto& [rho, h] : expand_over_generators(killed, head)) {
      std::vector<int> bigger = S;
      bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), rho), rho);
      LaurentPoly& slot =
          w.parts.emplace(bigger, LaurentPoly(w.num_vars)).first->second;
      slot = slot + h;
    }
  }
  for (auto it = w.parts.begin(); it != w.parts.end();)
    it = it->second.is_zero() ? w.parts.erase(it) : std::next(it);
  return w;
}

LaurentPoly product_factorization(const LaurentPoly& p,
                                  const std::vector<UnitEndedPoly>& gammas) {
  if (!axes_pairwise_independent(gammas))
    throw std::invalid_argument(
        "product_factorization: axes not pairwise linearly independent");
  for (size_t i = 0; i < gammas.size(); ++i) {
    auto [q, rem] = divide_by_unit_ended(p, gammas[i]);
    if (!rem.is_zero()) throw NotInIdealError(static_cast<int>(i));
  }
  LaurentPoly current = p;
  for (size_t i = 0; i < gammas.size(); ++i) {
    auto [q, rem] = divide_by_unit_ended(current, gammas[i]);
    if (!rem.is_zero()) {
      if (i == 0) throw NotInIdealError(0);
      throw FactorizationContractError(
          "product_factorization: later-stage division left a remainder");
    }
    current = q;
  }
  return current;
}

}  // namespace ktoric

#include "ktoric/random_suites.hpp"

#include <algorithm>

#include "ktoric/ideal_lemmas.hpp"
#include "ktoric/zlattice.hpp"

namespace ktoric {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

VecZ random_primitive_axis(std::mt19937_64& rng, int num_vars) {
  for (;;) {
    VecZ v(num_vars);
    for (int i = 0; i < num_vars; ++i) v(i) = uniform(rng, -2, 2);
    if (!v.isZero()) return primitive(v);
  }
}

bool independent_of(const std::vector<VecZ>& axes, const VecZ& candidate) {
  for (const VecZ& a : axes) {
    MatZ m(2, a.rows());
    m.row(0) = a.transpose();
    m.row(1) = candidate.transpose();
    SnfDecomposition s = snf(m);
    if (m.cols() < 2 || s.D(1, 1) == 0) return false;
  }
  return true;
}

UnitEndedPoly random_unit_ended(std::mt19937_64& rng, int num_vars,
                                const VecZ& axis) {
  UnitEndedPoly g;
  g.num_vars = num_vars;
  g.axis.resize(num_vars);
  for (int i = 0; i < num_vars; ++i)
    g.axis[i] = axis(i).convert_to<long long>();
  const int lo = uniform(rng, -2, 1);
  const int span = uniform(rng, 1, 3);
  g.profile[lo] = uniform(rng, 0, 1) ? 1 : -1;
  g.profile[lo + span] = uniform(rng, 0, 1) ? 1 : -1;
  for (int k = lo + 1; k < lo + span; ++k) {
    int c = uniform(rng, -3, 3);
    if (c != 0) g.profile[k] = c;
  }
  return g;
}

}  // namespace

LaurentPoly random_laurent(std::mt19937_64& rng, int num_vars, int max_terms,
                           int exp_bound, int coeff_bound) {
  LaurentPoly p(num_vars);
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(num_vars);
    for (int i = 0; i < num_vars; ++i) e[i] = uniform(rng, -exp_bound, exp_bound);
    p.add_term(e, uniform(rng, -coeff_bound, coeff_bound));
  }
  return p;
}

SuiteOutcome run_product_factorization_suite(std::uint64_t seed,
                                             long long count) {
  std::mt19937_64 rng(seed);
  SuiteOutcome outcome;
  for (long long it = 0; it < count; ++it) {
    ++outcome.instances;
    const int num_vars = uniform(rng, 2, 4);
    const int r = uniform(rng, 1, 3);  // pairwise independence is enough

    std::vector<VecZ> axes;
    while (static_cast<int>(axes.size()) < r) {
      VecZ a = random_primitive_axis(rng, num_vars);
      if (independent_of(axes, a)) axes.push_back(a);
    }
    std::vector<UnitEndedPoly> gammas;
    LaurentPoly product = LaurentPoly::constant(num_vars, 1);
    for (const VecZ& a : axes) {
      gammas.push_back(random_unit_ended(rng, num_vars, a));
      product = product * gammas.back().to_poly();
    }
    LaurentPoly s = random_laurent(rng, num_vars, 4, 3, 9);
    LaurentPoly p = s * product;

    try {
      LaurentPoly q = product_factorization(p, gammas);
      if (!(q == s) || !(q * product == p)) ++outcome.failures;
    } catch (const FactorizationContractError&) {
      ++outcome.contract_failures;
    } catch (const NotInIdealError&) {
      if (!s.is_zero()) ++outcome.failures;  // a genuine member was rejected
    }

    // Membership equivalence on a perturbed candidate: every remainder
    // zero iff factorization succeeds.
    LaurentPoly candidate = p + random_laurent(rng, num_vars, 2, 3, 4);
    bool member = true;
    for (const auto& g : gammas)
      if (!divide_by_unit_ended(candidate, g).second.is_zero()) {
        member = false;
        break;
      }
    try {
      LaurentPoly q = product_factorization(candidate, gammas);
      if (!member || !(q * product == candidate)) ++outcome.failures;
    } catch (const FactorizationContractError&) {
      ++outcome.contract_failures;
    } catch (const NotInIdealError&) {
      if (member) ++outcome.failures;
    }
  }
  return outcome;
}

SuiteOutcome run_intersection_suite(std::uint64_t seed, long long count) {
  std::mt19937_64 rng(seed);
  SuiteOutcome outcome;
  for (long long it = 0; it < count; ++it) {
    ++outcome.instances;
    const int num_vars = uniform(rng, 3, 5);
    const int r = uniform(rng, 1, 3);
    std::vector<std::vector<int>> sets;
    for (int j = 0; j < r; ++j) {
      std::vector<int> all(num_vars);
      for (int i = 0; i < num_vars; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(uniform(rng, 1, 3));
      std::sort(all.begin(), all.end());
      sets.push_back(all);
    }
    // p = sum of generator products over qualifying sets times random
    // cofactors; a qualifying set picks one variable from every A_j.
    LaurentPoly p(num_vars);
    const int summands = uniform(rng, 1, 3);
    for (int t = 0; t < summands; ++t) {
      std::vector<int> qualifying;
      for (const auto& A : sets) {
        int rho = A[uniform(rng, 0, static_cast<int>(A.size()) - 1)];
        if (std::find(qualifying.begin(), qualifying.end(), rho) ==
            qualifying.end())
          qualifying.push_back(rho);
      }
      LaurentPoly gen = LaurentPoly::constant(num_vars, 1);
      for (int rho : qualifying)
        gen = gen * (LaurentPoly::variable(num_vars, rho) -
                     LaurentPoly::constant(num_vars, 1));
      p = p + gen * random_laurent(rng, num_vars, 3, 4, 9);
    }
    try {
      IntersectionWitness w = decompose_intersection(p, sets);
      if (!(w.reconstruct() == p)) ++outcome.failures;
    } catch (const NotInIdealError&) {
      ++outcome.failures;  // built as a member, must decompose
    }
  }
  return outcome;
}

}  // namespace ktoric

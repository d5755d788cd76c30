#include "nilhecke/modular.hpp"

#include "nilhecke/quotients.hpp"

namespace nilhecke {

std::size_t modular_rank(const std::vector<RationalSparse>& vectors, std::uint64_t prime) {
  std::vector<SparseVector<ModP>> reduced;
  reduced.reserve(vectors.size());
  for (const auto& v : vectors) {
    reduced.push_back(map_scalar<ModP>(v, [prime](const Rational& x) { return reduce_mod(x, prime); }));
  }
  return rank(reduced);
}

ModularPrecheck::ModularPrecheck(std::uint64_t seed) : prime_(random_prime_62(seed)) {
  for (int n = 1; n <= 4 && accepted_; ++n) {
    for (const auto& params :
         {AlgebraParams::nilcoxeter(), AlgebraParams::zero_hecke(), AlgebraParams::group_algebra()}) {
      for (const auto& gens : {twisted_commutator_generators(n, params), commutator_generators(n, params)}) {
        if (rank(gens) != nilhecke::rank(gens)) accepted_ = false;
      }
    }
  }
}

}  // namespace nilhecke

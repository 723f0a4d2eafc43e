#pragma once

#include <optional>

#include "semimod/morphisms.hpp"

namespace semimod {

// A composable pair L -f-> M -g-> N.
struct SequencePair {
    LinearMap f;
    LinearMap g;
};

// The exactness grades of a composable pair, coarsest to strongest:
//   chain_complex   g∘f = 0
//   semi_exact      closure(f(L)) = Ker(g)
//   proper_exact    f(L) = Ker(g)
//   quasi_exact     semi_exact and g k-normal
//   exact           proper_exact and g k-normal
struct ExactnessGrade {
    bool chain_complex = false;
    bool proper_exact = false;
    bool semi_exact = false;
    bool quasi_exact = false;
    bool exact = false;
    std::vector<Witness> witnesses;
};

ExactnessGrade classify_pair(const SequencePair& p);

// 0 -> L -f-> M -g-> N -> 0 is short exact iff f is injective, f(L) = Ker(g),
// g is surjective and g is k-normal. The report also carries the verified
// consequence that both maps are then normal.
Report check_short_exact(const LinearMap& f, const LinearMap& g);

// Contravariant Hom(-, I): the pair (f,g) induces monoid maps
//   Hom(N,I) --(g,I)--> Hom(M,I) --(f,I)--> Hom(L,I)
// by precomposition; the induced pair is classified with the same grades.
struct Dualized {
    HomMonoid hom_n;  // Hom(N, I)
    HomMonoid hom_m;  // Hom(M, I)
    HomMonoid hom_l;  // Hom(L, I)
    LinearMap g_star;  // precomposition with g
    LinearMap f_star;  // precomposition with f
    ExactnessGrade grade;
};

Dualized dualize_with(const SequencePair& p, const SemimodulePtr& coeff,
                      const SearchLimits& limits = {});

// Exhaustive search for a bijective linear map with a linear inverse.
std::optional<LinearMap> find_isomorphism(const SemimodulePtr& a, const SemimodulePtr& b,
                                          const SearchLimits& limits = {});

}  // namespace semimod

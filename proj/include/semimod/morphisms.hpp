#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semimod/semimodule.hpp"

namespace semimod {

// Validates totality and all linearity laws; throws LinearityViolation with
// the complete witness list.
LinearMap check_linear(const SemimodulePtr& source, const SemimodulePtr& target,
                       std::vector<Elem> images);

// Quiet version of the same check.
bool is_linear(const Semimodule& source, const Semimodule& target,
               const std::vector<Elem>& images);

LinearMap identity_map(const SemimodulePtr& m);
LinearMap zero_map(const SemimodulePtr& source, const SemimodulePtr& target);

// g after f; ShapeError unless target(f) = source(g).
LinearMap compose(const LinearMap& g, const LinearMap& f);

// {m | f(m) = 0}; kernels are always subtractive.
Subsemimodule kernel(const LinearMap& f);

// Set-image f(source) with its subtractive flag computed.
Subsemimodule image(const LinearMap& f);

// k-normal: f(m) = f(m') implies m+k = m'+k' for some kernel elements k,k'.
// i-normal: the set-image equals its subtractive closure.
struct NormalityVerdict {
    bool k_normal = false;
    bool i_normal = false;
    std::vector<Witness> witnesses;
    bool normal() const { return k_normal && i_normal; }
};

NormalityVerdict normality(const LinearMap& f);

// Greedy generating set: repeatedly adjoin the first element outside the
// closure of what has been picked so far. Empty for the zero module.
std::vector<Elem> minimal_generators(const Semimodule& m);

// All S-linear maps source -> target in canonical order (lexicographic on
// image tuples). Images are assigned on a minimal generating set and forced
// by closure; the assignment space |target|^#gens is capped by limits.cap
// and scanned in parallel when limits.jobs > 1.
std::vector<LinearMap> enumerate_homs(const SemimodulePtr& source, const SemimodulePtr& target,
                                      const SearchLimits& limits = {});

// Reference route: enumerates all |target|^|source| assignments and filters
// by linearity. Exponentially slower; kept as the independent check of the
// generator-based enumeration.
std::vector<LinearMap> enumerate_homs_exhaustive(const SemimodulePtr& source,
                                                 const SemimodulePtr& target,
                                                 const SearchLimits& limits = {});

// A finite commutative monoid by table, the raw material for Hom(M,N) under
// pointwise addition.
struct MonoidTable {
    std::string name;
    std::vector<std::string> elem_names;
    Elem zero = 0;
    std::vector<Elem> add;  // row-major
};

// The finite cyclic semiring through which the naturals act on every monoid
// of the family: iterated addition is eventually periodic elementwise, and
// the truncation index/period are chosen to dominate the whole family.
SemiringPtr iteration_base(const std::vector<MonoidTable>& family);

// Wraps a commutative monoid as a semimodule over such a base (the action is
// iterated addition).
SemimodulePtr monoid_as_module(const SemiringPtr& base, const MonoidTable& table);

// Hom(M,N) with pointwise addition, wrapped as a semimodule so the sequence
// machinery applies; homs[i] is the map element i stands for.
struct HomMonoid {
    SemimodulePtr module;
    std::vector<LinearMap> homs;

    // Index of a map in the carrier (by image tuple); ShapeError if absent.
    Elem index_of(const LinearMap& f) const;
};

HomMonoid hom_monoid(const SemimodulePtr& m, const SemimodulePtr& n,
                     const SearchLimits& limits = {});

// Same, for several Hom sets at once over one shared base.
std::vector<HomMonoid> hom_monoid_family(
    const std::vector<std::pair<SemimodulePtr, SemimodulePtr>>& pairs,
    const SearchLimits& limits = {});

// {(m,k) | q(m) = f(k)} with componentwise structure. `to_left` is the
// first-component projection (the mate of q), `to_right` the second (mate of
// f): q ∘ to_left = f ∘ to_right. When f is injective, to_left is verified
// injective; when f is moreover a normal monomorphism, to_left is verified
// to be a normal monomorphism onto a subtractive subsemimodule.
struct Pullback {
    SemimodulePtr apex;
    LinearMap to_left;
    LinearMap to_right;
};

Pullback pullback(const LinearMap& q, const LinearMap& f);

// (M ⊕ N) / congruence generated by (f(l),0) ~ (0,g(l)), for f: L->M and
// g: L->N. `from_left`: M -> P and `from_right`: N -> P satisfy
// from_left ∘ f = from_right ∘ g.
struct Pushout {
    SemimodulePtr apex;
    LinearMap from_left;
    LinearMap from_right;
};

Pushout pushout(const LinearMap& f, const LinearMap& g, const SearchLimits& limits = {});

// A map of semirings preserving 0, 1, + and ·.
struct SemiringMorphism {
    SemiringPtr source;
    SemiringPtr target;
    std::vector<Elem> images;

    Elem operator()(Elem e) const { return images[e]; }
};

SemiringMorphism check_semiring_morphism(const SemiringPtr& source, const SemiringPtr& target,
                                         std::vector<Elem> images);

// The target-semiring module m viewed over the source semiring through via:
// t·x := via(t)·x. Tables are rebuilt, names kept.
SemimodulePtr restrict_scalars(const SemiringMorphism& via, const SemimodulePtr& m);

// Change-of-semirings Hom: the carrier is every via-linear map S -> A (S as
// a module over the source semiring through via), with S-action
// (s·φ)(x) = φ(x·s). carrier[i] lists the underlying map of element i.
struct InducedHomModule {
    SemimodulePtr module;
    SemimodulePtr s_as_source_module;
    std::vector<LinearMap> carrier;
};

InducedHomModule induced_hom_module(const SemiringMorphism& via, const SemimodulePtr& a,
                                    const SearchLimits& limits = {});

}  // namespace semimod

#pragma once

#include <optional>

#include "semimod/morphisms.hpp"

namespace semimod {

// A subsemimodule of M together with its carrier module and inclusion map.
// With normal_only, only subtractive subsets (the normal monomorphisms up to
// isomorphism) are produced.
struct EmbeddedSub {
    Subsemimodule sub;
    SemimodulePtr module;
    LinearMap inclusion;
};

std::vector<EmbeddedSub> enumerate_embeddings(const SemimodulePtr& m, bool normal_only,
                                              const SearchLimits& limits = {});

// Analysis of the precomposition map rho: Hom(M,I) -> Hom(L,I) along the
// inclusion of L: whether it is surjective (every map on L extends to M) and
// whether it is k-normal as a monoid map (extensions are unique up to
// translation by maps vanishing on L).
struct RestrictionAnalysis {
    bool surjective = false;
    bool k_normal = false;
    std::optional<LinearMap> unextendable;  // g in Hom(L,I) missed by rho
    std::optional<std::pair<LinearMap, LinearMap>> stuck_pair;  // (h,h') with no k-translation
    std::uint64_t maps_examined = 0;

    Report to_report(const std::string& coeff, const std::string& ambient,
                     const std::string& sub_label) const;
};

RestrictionAnalysis restriction_analysis(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                         const Subsemimodule& l, const SearchLimits& limits = {});

enum class InjKind { plain, i, e };

std::string to_string(InjKind k);

struct InjectivityReport {
    InjKind kind = InjKind::plain;
    bool verdict = false;
    std::optional<Subsemimodule> witness_sub;
    std::optional<LinearMap> witness_map;  // unextendable g, when that is the failure
    std::optional<std::pair<LinearMap, LinearMap>> witness_pair;  // e-condition failure
    std::uint64_t embeddings_examined = 0;
    std::uint64_t maps_examined = 0;

    Report to_report(const std::string& coeff, const std::string& ambient) const;
};

// I is M-injective: every map L -> I from any subsemimodule of M extends
// along the inclusion. (Quantifying over inclusions suffices: every
// monomorphism factors as an isomorphism onto its image, and extension
// existence is invariant under precomposition with isomorphisms.)
InjectivityReport decide_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                   const SearchLimits& limits = {});

// Same with L restricted to subtractive subsemimodules (normal monomorphisms).
InjectivityReport decide_i_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                     const SearchLimits& limits = {});

// I is M-e-injective / normally M-injective: for every subtractive L the
// restriction map rho is surjective and k-normal.
InjectivityReport decide_e_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                     const SearchLimits& limits = {});

// True iff some psi: N -> M and theta: M -> N compose to the identity of N.
Report is_retract(const SemimodulePtr& n, const SemimodulePtr& m, const SearchLimits& limits = {});

}  // namespace semimod

#include "semimod/sequences.hpp"

#include <algorithm>

namespace semimod {

namespace {

// First element of the symmetric difference, in canonical order.
std::optional<Elem> first_diff(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    if (d.empty()) return std::nullopt;
    return d.front();
}

}  // namespace

ExactnessGrade classify_pair(const SequencePair& p) {
    if (p.f.target != p.g.source) throw ShapeError("sequence pair is not composable");
    const SemimodulePtr& mid = p.f.target;
    ExactnessGrade grade;

    grade.chain_complex = true;
    for (Elem l = 0; l < p.f.source->size(); ++l)
        if (p.g.images[p.f.images[l]] != p.g.target->zero()) {
            grade.chain_complex = false;
            grade.witnesses.push_back(
                Witness{"chain_complex", {{"l", p.f.source->elem_name(l)}}});
            break;
        }

    Subsemimodule img = image(p.f);
    Subsemimodule ker = kernel(p.g);
    Subsemimodule img_closed = subtractive_closure(img);

    grade.proper_exact = img.members == ker.members;
    if (!grade.proper_exact)
        if (auto e = first_diff(img.members, ker.members))
            grade.witnesses.push_back(
                Witness{"proper_exact", {{"in_one_side_only", mid->elem_name(*e)}}});

    grade.semi_exact = img_closed.members == ker.members;
    if (!grade.semi_exact)
        if (auto e = first_diff(img_closed.members, ker.members))
            grade.witnesses.push_back(
                Witness{"semi_exact", {{"in_one_side_only", mid->elem_name(*e)}}});

    NormalityVerdict ng = normality(p.g);
    if (!ng.k_normal)
        for (const auto& w : ng.witnesses)
            if (w.label == "k_normal")
                grade.witnesses.push_back(Witness{"g_k_normal", w.items});

    grade.quasi_exact = grade.semi_exact && ng.k_normal;
    grade.exact = grade.proper_exact && ng.k_normal;
    return grade;
}

Report check_short_exact(const LinearMap& f, const LinearMap& g) {
    if (f.target != g.source) throw ShapeError("sequence pair is not composable");
    Report r;
    r.procedure = "check_short_exact";
    r.inputs = {f.source->name(), f.target->name(), g.target->name()};
    r.claim = "0 -> " + f.source->name() + " -> " + f.target->name() + " -> " +
              g.target->name() + " -> 0 is short exact";

    const bool f_inj = f.injective();
    const bool g_surj = g.surjective();
    Subsemimodule img = image(f);
    Subsemimodule ker = kernel(g);
    NormalityVerdict ng = normality(g);

    r.flags["f_injective"] = f_inj;
    r.flags["image_equals_kernel"] = img.members == ker.members;
    r.flags["g_surjective"] = g_surj;
    r.flags["g_k_normal"] = ng.k_normal;
    r.verdict = f_inj && img.members == ker.members && g_surj && ng.k_normal;

    if (!r.flags["image_equals_kernel"])
        if (auto e = first_diff(img.members, ker.members))
            r.witnesses.push_back(
                Witness{"image_vs_kernel", {{"in_one_side_only", f.target->elem_name(*e)}}});
    if (!f_inj) r.witnesses.push_back(Witness{"f_not_injective", {}});
    if (!g_surj) r.witnesses.push_back(Witness{"g_not_surjective", {}});
    for (const auto& w : ng.witnesses)
        if (w.label == "k_normal") r.witnesses.push_back(Witness{"g_k_normal", w.items});

    if (r.verdict) {
        // Consequence of short exactness; a failure here is an internal bug.
        NormalityVerdict nf = normality(f);
        if (!nf.normal() || !ng.i_normal)
            throw std::logic_error("short exact sequence with a non-normal edge map");
        r.flags["f_normal"] = true;
        r.flags["g_normal"] = true;
    }
    return r;
}

Dualized dualize_with(const SequencePair& p, const SemimodulePtr& coeff,
                      const SearchLimits& limits) {
    if (p.f.target != p.g.source) throw ShapeError("sequence pair is not composable");
    auto family = hom_monoid_family(
        {{p.g.target, coeff}, {p.f.target, coeff}, {p.f.source, coeff}}, limits);
    HomMonoid hom_n = std::move(family[0]);
    HomMonoid hom_m = std::move(family[1]);
    HomMonoid hom_l = std::move(family[2]);

    auto precompose = [](const HomMonoid& from, const HomMonoid& to, const LinearMap& along) {
        std::vector<Elem> img;
        img.reserve(from.homs.size());
        for (const LinearMap& h : from.homs) img.push_back(to.index_of(compose(h, along)));
        return check_linear(from.module, to.module, std::move(img));
    };
    LinearMap g_star = precompose(hom_n, hom_m, p.g);
    LinearMap f_star = precompose(hom_m, hom_l, p.f);

    ExactnessGrade grade = classify_pair(SequencePair{g_star, f_star});
    return Dualized{std::move(hom_n), std::move(hom_m), std::move(hom_l),
                    std::move(g_star), std::move(f_star), std::move(grade)};
}

std::optional<LinearMap> find_isomorphism(const SemimodulePtr& a, const SemimodulePtr& b,
                                          const SearchLimits& limits) {
    if (a->size() != b->size()) return std::nullopt;
    for (const LinearMap& h : enumerate_homs(a, b, limits)) {
        if (!h.injective()) continue;  // bijective since the sizes agree
        std::vector<Elem> inverse(static_cast<std::size_t>(b->size()));
        for (Elem e = 0; e < a->size(); ++e) inverse[h.images[e]] = e;
        if (is_linear(*b, *a, inverse)) return h;
    }
    return std::nullopt;
}

}  // namespace semimod

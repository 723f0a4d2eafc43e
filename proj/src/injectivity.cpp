#include "semimod/injectivity.hpp"

#include <algorithm>
#include <set>

namespace semimod {

std::string to_string(InjKind k) {
    switch (k) {
        case InjKind::plain: return "plain";
        case InjKind::i: return "i";
        case InjKind::e: return "e";
    }
    return "?";
}

std::vector<EmbeddedSub> enumerate_embeddings(const SemimodulePtr& m, bool normal_only,
                                              const SearchLimits& limits) {
    std::vector<EmbeddedSub> out;
    for (Subsemimodule& sub : enumerate_subsemimodules(m, normal_only, limits)) {
        Embedded e = materialize(sub);
        out.push_back(EmbeddedSub{std::move(sub), e.module, std::move(e.inclusion)});
    }
    return out;
}

namespace {

struct RestrictionScan {
    std::vector<LinearMap> homs_m;   // Hom(M, I), canonical order
    std::vector<LinearMap> homs_l;   // Hom(L, I), canonical order
    std::vector<std::vector<Elem>> rho;  // rho[i] = restriction of homs_m[i] to L
};

RestrictionScan scan_restriction(const SemimodulePtr& coeff, const EmbeddedSub& e,
                                 const SearchLimits& limits) {
    RestrictionScan s;
    s.homs_m = enumerate_homs(e.inclusion.target, coeff, limits);
    s.homs_l = enumerate_homs(e.module, coeff, limits);
    s.rho.reserve(s.homs_m.size());
    for (const LinearMap& h : s.homs_m) s.rho.push_back(compose(h, e.inclusion).images);
    return s;
}

std::optional<LinearMap> first_unextendable(const RestrictionScan& s) {
    std::set<std::vector<Elem>> reached(s.rho.begin(), s.rho.end());
    for (const LinearMap& g : s.homs_l)
        if (!reached.count(g.images)) return g;
    return std::nullopt;
}

// First pair (h, h') restricting equally on L with no k1,k2 vanishing on L
// such that h+k1 = h'+k2 pointwise.
std::optional<std::pair<LinearMap, LinearMap>> first_stuck_pair(const Semimodule& coeff,
                                                                const RestrictionScan& s) {
    std::vector<std::size_t> ker;
    std::vector<Elem> zero_res;
    if (!s.homs_l.empty())
        zero_res.assign(s.homs_l.front().images.size(), coeff.zero());
    for (std::size_t i = 0; i < s.rho.size(); ++i)
        if (s.rho[i] == zero_res) ker.push_back(i);

    const std::size_t n_m = s.homs_m.size();
    auto pointwise = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
        std::vector<Elem> out(a.size());
        for (std::size_t e = 0; e < a.size(); ++e) out[e] = coeff.add(a[e], b[e]);
        return out;
    };
    for (std::size_t i = 0; i < n_m; ++i)
        for (std::size_t j = i + 1; j < n_m; ++j) {
            if (s.rho[i] != s.rho[j]) continue;
            bool ok = false;
            for (std::size_t k1 : ker) {
                std::vector<Elem> lhs = pointwise(s.homs_m[i].images, s.homs_m[k1].images);
                for (std::size_t k2 : ker)
                    if (lhs == pointwise(s.homs_m[j].images, s.homs_m[k2].images)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (!ok) return std::make_pair(s.homs_m[i], s.homs_m[j]);
        }
    return std::nullopt;
}

InjectivityReport decide(InjKind kind, const SemimodulePtr& coeff, const SemimodulePtr& m,
                         const SearchLimits& limits) {
    if (coeff->over() != m->over())
        throw ShapeError("injectivity inputs live over different semirings");
    InjectivityReport rep;
    rep.kind = kind;
    rep.verdict = true;
    const bool normal_only = kind != InjKind::plain;
    for (const EmbeddedSub& e : enumerate_embeddings(m, normal_only, limits)) {
        ++rep.embeddings_examined;
        RestrictionScan s = scan_restriction(coeff, e, limits);
        rep.maps_examined += s.homs_m.size() + s.homs_l.size();
        if (auto g = first_unextendable(s)) {
            rep.verdict = false;
            rep.witness_sub = e.sub;
            rep.witness_map = std::move(*g);
            return rep;
        }
        if (kind == InjKind::e) {
            if (auto pair = first_stuck_pair(*coeff, s)) {
                rep.verdict = false;
                rep.witness_sub = e.sub;
                rep.witness_pair = std::move(*pair);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

Report RestrictionAnalysis::to_report(const std::string& coeff, const std::string& ambient,
                                      const std::string& sub_label) const {
    Report r;
    r.procedure = "restriction_analysis";
    r.inputs = {coeff, ambient, sub_label};
    r.flags["surjective"] = surjective;
    r.flags["k_normal"] = k_normal;
    r.verdict = surjective && k_normal;
    r.statistics["maps_examined"] = maps_examined;
    r.claim = "restriction Hom(" + ambient + "," + coeff + ") -> Hom(" + sub_label + "," + coeff +
              ") is a normal epimorphism";
    if (unextendable)
        r.witnesses.push_back(Witness{"unextendable", {{"g", unextendable->describe()}}});
    if (stuck_pair) {
        r.witnesses.push_back(Witness{"no_kernel_translation",
                                      {{"h", stuck_pair->first.describe()},
                                       {"h'", stuck_pair->second.describe()}}});
    }
    return r;
}

RestrictionAnalysis restriction_analysis(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                         const Subsemimodule& l, const SearchLimits& limits) {
    if (coeff->over() != m->over())
        throw ShapeError("restriction analysis inputs live over different semirings");
    Embedded e = materialize(l);
    EmbeddedSub es{l, e.module, std::move(e.inclusion)};
    RestrictionScan s = scan_restriction(coeff, es, limits);

    RestrictionAnalysis out;
    out.maps_examined = s.homs_m.size() + s.homs_l.size();
    if (auto g = first_unextendable(s)) {
        out.surjective = false;
        out.unextendable = std::move(*g);
    } else {
        out.surjective = true;
    }
    if (auto pair = first_stuck_pair(*coeff, s)) {
        out.k_normal = false;
        out.stuck_pair = std::move(*pair);
    } else {
        out.k_normal = true;
    }
    return out;
}

Report InjectivityReport::to_report(const std::string& coeff, const std::string& ambient) const {
    Report r;
    r.procedure = "decide_" + (kind == InjKind::plain ? std::string("injective")
                                                      : to_string(kind) + "_injective");
    r.inputs = {coeff, ambient};
    r.verdict = verdict;
    r.statistics["embeddings_examined"] = embeddings_examined;
    r.statistics["maps_examined"] = maps_examined;
    switch (kind) {
        case InjKind::plain:
            r.claim = coeff + " is " + ambient + "-injective";
            break;
        case InjKind::i:
            r.claim = coeff + " is " + ambient + "-i-injective";
            break;
        case InjKind::e:
            r.claim = coeff + " is " + ambient + "-e-injective";
            break;
    }
    if (witness_sub)
        r.witnesses.push_back(Witness{"subsemimodule", {{"members", witness_sub->label()}}});
    if (witness_map)
        r.witnesses.push_back(Witness{"unextendable", {{"g", witness_map->describe()}}});
    if (witness_pair)
        r.witnesses.push_back(Witness{"no_kernel_translation",
                                      {{"h", witness_pair->first.describe()},
                                       {"h'", witness_pair->second.describe()}}});
    return r;
}

InjectivityReport decide_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                   const SearchLimits& limits) {
    return decide(InjKind::plain, coeff, m, limits);
}

InjectivityReport decide_i_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                     const SearchLimits& limits) {
    return decide(InjKind::i, coeff, m, limits);
}

InjectivityReport decide_e_injective(const SemimodulePtr& coeff, const SemimodulePtr& m,
                                     const SearchLimits& limits) {
    return decide(InjKind::e, coeff, m, limits);
}

Report is_retract(const SemimodulePtr& n, const SemimodulePtr& m, const SearchLimits& limits) {
    if (n->over() != m->over()) throw ShapeError("retract inputs live over different semirings");
    Report r;
    r.procedure = "is_retract";
    r.inputs = {n->name(), m->name()};
    r.claim = n->name() + " is a retract of " + m->name();

    const std::vector<LinearMap> into = enumerate_homs(n, m, limits);
    const std::vector<LinearMap> back = enumerate_homs(m, n, limits);
    r.statistics["maps_examined"] = into.size() + back.size();
    const LinearMap id = identity_map(n);
    for (const LinearMap& psi : into)
        for (const LinearMap& theta : back)
            if (compose(theta, psi).images == id.images) {
                r.verdict = true;
                r.witnesses.push_back(Witness{
                    "splitting", {{"psi", psi.describe()}, {"theta", theta.describe()}}});
                return r;
            }
    r.verdict = false;
    return r;
}

}  // namespace semimod

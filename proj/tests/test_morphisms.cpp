#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "semimod/corpus.hpp"

using namespace semimod;

namespace {

const Registry& reg() { return corpus_registry(); }

std::vector<std::vector<Elem>> image_lists(const std::vector<LinearMap>& maps) {
    std::vector<std::vector<Elem>> out;
    for (const auto& m : maps) out.push_back(m.images);
    return out;
}

}  // namespace

TEST_CASE("check_linear accepts the right-multiplication and rejects the broken assignment") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    CHECK_NOTHROW(check_linear(s3, s3, {0, 2, 2}));  // x -> x·a
    CHECK_NOTHROW(check_linear(s3, s3, {0, 1, 2}));
    try {
        check_linear(s3, s3, {0, 1, 1});  // a -> 1 breaks the action law at a·1
        FAIL("expected LinearityViolation");
    } catch (const LinearityViolation& e) {
        bool found = false;
        for (const auto& v : e.violations())
            if (v.law == "action") found = true;
        CHECK(found);
    }
    CHECK_THROWS_AS(check_linear(s3, s3, {0, 1}), ShapeError);
}

TEST_CASE("kernels and images") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const LinearMap& rmula = reg().maps.at("S3.rmula");
    CHECK(kernel(rmula).members == std::vector<Elem>{0});
    CHECK(kernel(zero_map(s3, s3)).members == std::vector<Elem>{0, 1, 2});
    CHECK(kernel(reg().maps.at("S3.proj0a")).members == std::vector<Elem>{0, 2});

    Subsemimodule img = image(rmula);
    CHECK(img.members == std::vector<Elem>{0, 2});
    CHECK(img.subtractive);
    CHECK(image(identity_map(s3)).members == std::vector<Elem>{0, 1, 2});
    CHECK(image(zero_map(s3, s3)).members == std::vector<Elem>{0});
}

TEST_CASE("normality verdicts") {
    const LinearMap& incl = reg().maps.at("S3.incl0a");
    NormalityVerdict n_incl = normality(incl);
    CHECK(n_incl.k_normal);
    CHECK(n_incl.i_normal);

    NormalityVerdict n_rmula = normality(reg().maps.at("S3.rmula"));
    CHECK_FALSE(n_rmula.k_normal);
    CHECK(n_rmula.i_normal);
    REQUIRE_FALSE(n_rmula.witnesses.empty());
    CHECK(n_rmula.witnesses[0].label == "k_normal");
    CHECK(n_rmula.witnesses[0].items[0].second == "1");
    CHECK(n_rmula.witnesses[0].items[1].second == "a");
}

TEST_CASE("every enumerated map: injective implies k-normal, surjective implies i-normal") {
    for (const char* sr : {"S3", "B", "N2", "Z2"}) {
        for (const SemimodulePtr& a : corpus_pool(sr))
            for (const SemimodulePtr& b : corpus_pool(sr))
                for (const LinearMap& f : enumerate_homs(a, b)) {
                    NormalityVerdict v = normality(f);
                    if (f.injective()) CHECK(v.k_normal);
                    if (f.surjective()) CHECK(v.i_normal);
                    CHECK(v.k_normal == oracle::k_normal(f));
                    CHECK(v.i_normal == oracle::i_normal(f));
                    CHECK(kernel(f).subtractive);
                    CHECK(image(f).subtractive == v.i_normal);
                }
    }
}

TEST_CASE("hom enumeration agrees with the exhaustive route and the oracle") {
    for (const char* sr : {"S3", "B", "N2", "Z2"}) {
        for (const SemimodulePtr& a : corpus_pool(sr))
            for (const SemimodulePtr& b : corpus_pool(sr)) {
                if (detail::checked_pow(static_cast<std::uint64_t>(b->size()),
                                        static_cast<std::uint64_t>(a->size()),
                                        1u << 20) > (1u << 20))
                    continue;
                auto fast = enumerate_homs(a, b);
                auto slow = enumerate_homs_exhaustive(a, b);
                CHECK(image_lists(fast) == image_lists(slow));
                CHECK(image_lists(fast) == oracle::all_homs(a, b));
            }
    }
}

TEST_CASE("hom censuses") {
    CHECK(enumerate_homs(reg().semimodules.at("S3"), reg().semimodules.at("S3")).size() == 3);
    CHECK(enumerate_homs(reg().semimodules.at("S3.sub0a"), reg().semimodules.at("S3")).size() == 2);
    CHECK(enumerate_homs(reg().semimodules.at("B"), reg().semimodules.at("B")).size() == 2);
    CHECK(enumerate_homs(reg().semimodules.at("B.zero"), reg().semimodules.at("BxB")).size() == 1);
}

TEST_CASE("hom enumeration is deterministic across worker counts") {
    SearchLimits par;
    par.jobs = 4;
    for (const char* sr : {"S3", "B"}) {
        for (const SemimodulePtr& a : corpus_pool(sr))
            for (const SemimodulePtr& b : corpus_pool(sr))
                CHECK(image_lists(enumerate_homs(a, b)) ==
                      image_lists(enumerate_homs(a, b, par)));
    }
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(*reg().semimodules.at("S3")) == std::vector<Elem>{1});
    CHECK(minimal_generators(*reg().semimodules.at("B.zero")).empty());
    CHECK(minimal_generators(*reg().semimodules.at("BxB")).size() == 2);
}

TEST_CASE("hom monoid structure") {
    HomMonoid hm = hom_monoid(reg().semimodules.at("S3"), reg().semimodules.at("S3"));
    REQUIRE(hm.homs.size() == 3);
    const Elem zero = hm.module->zero();
    const Elem id = hm.index_of(identity_map(reg().semimodules.at("S3")));
    const Elem rmula = hm.index_of(reg().maps.at("S3.rmula"));
    // Pointwise: identity + right-multiplication-by-a is the identity again.
    CHECK(hm.module->add(id, rmula) == id);
    for (Elem e = 0; e < hm.module->size(); ++e) {
        CHECK(hm.module->add(zero, e) == e);
        for (Elem f = 0; f < hm.module->size(); ++f)
            CHECK(hm.module->add(e, f) == hm.module->add(f, e));
    }

    // Hom(B,B) under pointwise addition looks exactly like B.
    HomMonoid hb = hom_monoid(reg().semimodules.at("B"), reg().semimodules.at("B"));
    REQUIRE(hb.homs.size() == 2);
    Elem nz = 1 - hb.module->zero();
    CHECK(hb.module->add(nz, nz) == nz);

    // A non-idempotent case: the two endomorphisms of Z2 add to the zero map,
    // so the monoid is the two-element group over a periodic base.
    HomMonoid hz = hom_monoid(reg().semimodules.at("Z2"), reg().semimodules.at("Z2"));
    REQUIRE(hz.homs.size() == 2);
    Elem idz = hz.index_of(identity_map(reg().semimodules.at("Z2")));
    CHECK(hz.module->add(idz, idz) == hz.module->zero());
}

TEST_CASE("composition") {
    const LinearMap& incl = reg().maps.at("S3.incl0a");
    const LinearMap& proj = reg().maps.at("S3.proj0a");
    const LinearMap& rmula = reg().maps.at("S3.rmula");
    LinearMap pi = compose(proj, incl);
    for (Elem v : pi.images) CHECK(v == proj.target->zero());
    CHECK(compose(rmula, identity_map(reg().semimodules.at("S3"))).images == rmula.images);
    CHECK(compose(rmula, rmula).images == rmula.images);  // a·a = a
    CHECK_THROWS_AS(compose(incl, proj), ShapeError);
}

TEST_CASE("pullbacks") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const LinearMap& proj = reg().maps.at("S3.proj0a");

    // Along the identity the apex is a copy of the source.
    Pullback along_id = pullback(proj, identity_map(reg().semimodules.at("S3.mod0a")));
    CHECK(along_id.apex->size() == s3->size());
    CHECK(along_id.to_left.injective());
    CHECK(along_id.to_left.surjective());

    // Both legs zero: the apex is the whole product.
    Pullback full = pullback(zero_map(s3, reg().semimodules.at("S3.mod0a")),
                             zero_map(s3, reg().semimodules.at("S3.mod0a")));
    CHECK(full.apex->size() == 9);

    CHECK_THROWS_AS(pullback(proj, identity_map(s3)), ShapeError);
}

TEST_CASE("pullback of a normal monomorphism is a normal monomorphism") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const LinearMap& incl = reg().maps.at("S3.incl0a");  // normal mono
    Pullback pb = pullback(identity_map(s3), incl);
    CHECK(pb.to_left.injective());
    CHECK(normality(pb.to_left).normal());
    CHECK(image(pb.to_left).subtractive);

    // A merely injective leg keeps injectivity but can lose i-normality:
    // the non-subtractive ideal of the saturating truncation shows it.
    const SemimodulePtr& n2 = reg().semimodules.at("N2");
    Embedded sub02 = materialize(generated_subsemimodule(n2, std::vector<Elem>{2}));
    Pullback pb2 = pullback(identity_map(n2), sub02.inclusion);
    CHECK(pb2.to_left.injective());
    CHECK_FALSE(image(pb2.to_left).subtractive);
}

TEST_CASE("pullback universal property on small cones") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const LinearMap& proj = reg().maps.at("S3.proj0a");
    const LinearMap& incl = reg().maps.at("S3.incl0a");
    LinearMap to_quot = compose(proj, incl);  // zero map {0,a} -> S3/{0,a}
    Pullback pb = pullback(proj, to_quot);
    for (const char* w_name : {"S3", "S3.sub0a", "S3.mod0a"}) {
        const SemimodulePtr& w = reg().semimodules.at(w_name);
        for (const LinearMap& alpha : enumerate_homs(w, s3))
            for (const LinearMap& beta : enumerate_homs(w, incl.source)) {
                if (compose(proj, alpha).images != compose(to_quot, beta).images) continue;
                int mediators = 0;
                for (const LinearMap& u : enumerate_homs(w, pb.apex))
                    if (compose(pb.to_left, u).images == alpha.images &&
                        compose(pb.to_right, u).images == beta.images)
                        ++mediators;
                CHECK(mediators == 1);
            }
    }
}

TEST_CASE("pushouts") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const SemimodulePtr& b = reg().semimodules.at("B");
    const LinearMap& incl = reg().maps.at("S3.incl0a");

    Pushout same = pushout(identity_map(s3), identity_map(s3));
    CHECK(same.apex->size() == 3);
    CHECK(same.from_left.surjective());
    CHECK(same.from_left.injective());

    // Legs from the zero module give the biproduct.
    const SemimodulePtr& zb = reg().semimodules.at("B.zero");
    Pushout prod = pushout(zero_map(zb, b), zero_map(zb, b));
    CHECK(prod.apex->size() == 4);

    // Collapsing the ideal gives the Bourne quotient.
    const SemimodulePtr& zs = reg().semimodules.at("S3.zero");
    Pushout quot = pushout(incl, zero_map(incl.source, zs));
    CHECK(quot.apex->size() == 2);
    CHECK(find_isomorphism(quot.apex, reg().semimodules.at("S3.mod0a")).has_value());
}

TEST_CASE("pushout universal property on small cocones") {
    const SemimodulePtr& s3 = reg().semimodules.at("S3");
    const LinearMap& incl = reg().maps.at("S3.incl0a");
    const SemimodulePtr& sub = incl.source;
    Pushout po = pushout(incl, identity_map(sub));
    for (const char* w_name : {"S3", "S3.sub0a", "S3.mod0a"}) {
        const SemimodulePtr& w = reg().semimodules.at(w_name);
        for (const LinearMap& alpha : enumerate_homs(s3, w))
            for (const LinearMap& beta : enumerate_homs(sub, w)) {
                if (compose(alpha, incl).images != compose(beta, identity_map(sub)).images)
                    continue;
                int mediators = 0;
                for (const LinearMap& u : enumerate_homs(po.apex, w))
                    if (compose(u, po.from_left).images == alpha.images &&
                        compose(u, po.from_right).images == beta.images)
                        ++mediators;
                CHECK(mediators == 1);
            }
    }
}

TEST_CASE("iteration base handles mixed preperiods and periods") {
    // One monoid needs truncation at height two (saturation), the other a
    // genuine period of two (sign flip); the shared base must dominate both.
    const Registry& registry = reg();
    const SemimodulePtr& n2 = registry.semimodules.at("N2");
    const SemimodulePtr& z2 = registry.semimodules.at("Z2");

    auto table_of = [](const SemimodulePtr& m) {
        MonoidTable t;
        t.name = "t(" + m->name() + ")";
        t.elem_names = m->elem_names();
        t.zero = m->zero();
        t.add.resize(static_cast<std::size_t>(m->size()) * m->size());
        for (Elem a = 0; a < m->size(); ++a)
            for (Elem b = 0; b < m->size(); ++b)
                t.add[static_cast<std::size_t>(a) * m->size() + b] = m->add(a, b);
        return t;
    };
    std::vector<MonoidTable> family = {table_of(n2), table_of(z2)};
    SemiringPtr base = iteration_base(family);
    CHECK(base->size() >= 3);  // at least preperiod 2 plus a period covering 2

    for (const MonoidTable& t : family) {
        SemimodulePtr wrapped = monoid_as_module(base, t);  // validates the laws
        // The action really is iterated addition.
        for (Elem a = 0; a < wrapped->size(); ++a) {
            Elem total = wrapped->zero();
            for (Elem k = 0; k < base->size(); ++k) {
                CHECK(wrapped->act(k, a) == total);
                total = wrapped->add(total, a);
            }
        }
    }
}

TEST_CASE("modules whose zero is not the first element work end to end") {
    RawSemiring w;
    w.name = "W2";
    w.elements = {"u", "z"};
    w.zero = "z";
    w.one = "u";
    w.add = {{"u", "u"}, {"u", "z"}};
    w.mul = {{"u", "z"}, {"z", "z"}};
    SemiringPtr ring = validate_semiring(w);
    SemimodulePtr regular = regular_module(ring);
    CHECK(regular->zero() == 1);

    auto subs = enumerate_subsemimodules(regular);
    REQUIRE(subs.size() == 2);
    CHECK(subs.front().members == std::vector<Elem>{1});  // the zero alone

    Quotient q = quotient_semimodule(regular, subs.front());
    CHECK(q.module->size() == 2);
    CHECK(kernel(q.projection).members == subs.front().members);

    CHECK(enumerate_homs(regular, regular).size() == 2);
    Product p = direct_product({regular, regular});
    CHECK(p.module->elem_name(p.module->zero()) == "(z,z)");
}

TEST_CASE("semiring morphisms and scalar restriction") {
    const SemiringPtr& b = reg().semirings.at("B");
    const SemiringPtr& s3 = reg().semirings.at("S3");
    SemiringMorphism gamma = check_semiring_morphism(b, s3, {0, 1});
    CHECK_THROWS_AS(check_semiring_morphism(b, s3, {0, 2}), AxiomError);  // 1 must map to 1

    SemimodulePtr restricted = restrict_scalars(gamma, reg().semimodules.at("S3"));
    CHECK(restricted->size() == 3);
    CHECK(restricted->over() == b);
}

TEST_CASE("induced hom module") {
    const SemiringPtr& s3 = reg().semirings.at("S3");
    const SemimodulePtr& s3_reg = reg().semimodules.at("S3");

    // Identity change of semirings: Hom(S,A) is A again via evaluation at 1.
    std::vector<Elem> id_imgs(static_cast<std::size_t>(s3->size()));
    std::iota(id_imgs.begin(), id_imgs.end(), 0);
    SemiringMorphism id_gamma = check_semiring_morphism(s3, s3, id_imgs);
    InducedHomModule over_self = induced_hom_module(id_gamma, s3_reg);
    CHECK(over_self.module->size() == 3);
    CHECK(find_isomorphism(over_self.module, s3_reg).has_value());

    // Zero coefficients collapse everything.
    InducedHomModule zero_coeff = induced_hom_module(id_gamma, reg().semimodules.at("S3.zero"));
    CHECK(zero_coeff.module->size() == 1);

    // Boolean coefficients through B -> S3: the carrier is the additive
    // monoid maps S3 -> B; the frozen count comes from the test-side scan.
    const SemiringPtr& b = reg().semirings.at("B");
    SemiringMorphism gamma = check_semiring_morphism(b, s3, {0, 1});
    InducedHomModule hom_b = induced_hom_module(gamma, reg().semimodules.at("B"));
    SemimodulePtr s3_over_b = restrict_scalars(gamma, s3_reg);
    CHECK(hom_b.module->size() == oracle::all_homs(s3_over_b, reg().semimodules.at("B")).size());
    CHECK(hom_b.module->size() == 3);
    CHECK(hom_b.module->over() == s3);
}

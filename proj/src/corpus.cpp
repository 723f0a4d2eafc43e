#include "semimod/corpus.hpp"

#include <sstream>

namespace semimod {

namespace {

RawSemiring s3_tables() {
    RawSemiring raw;
    raw.name = "S3";
    raw.elements = {"0", "1", "a"};
    raw.zero = "0";
    raw.one = "1";
    raw.add = {{"0", "1", "a"}, {"1", "1", "1"}, {"a", "1", "a"}};
    raw.mul = {{"0", "0", "0"}, {"0", "1", "a"}, {"0", "a", "a"}};
    return raw;
}

RawSemiring boolean_tables() {
    RawSemiring raw;
    raw.name = "B";
    raw.elements = {"0", "1"};
    raw.zero = "0";
    raw.one = "1";
    raw.add = {{"0", "1"}, {"1", "1"}};
    raw.mul = {{"0", "0"}, {"0", "1"}};
    return raw;
}

RawSemiring z2_tables() {
    RawSemiring raw;
    raw.name = "Z2";
    raw.elements = {"0", "1"};
    raw.zero = "0";
    raw.one = "1";
    raw.add = {{"0", "1"}, {"1", "0"}};
    raw.mul = {{"0", "0"}, {"0", "1"}};
    return raw;
}

std::string members_of(const Subsemimodule& s) { return s.label(); }

std::string census_string(const std::vector<Subsemimodule>& subs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i) os << " ";
        os << members_of(subs[i]);
    }
    return os.str();
}

std::string names_of(const Semimodule& m, const std::vector<Elem>& elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += m.elem_name(elems[i]);
    }
    return out + "}";
}

struct CorpusData {
    Registry registry;
    std::vector<CorpusEntry> entries;
    std::map<std::string, std::vector<SemimodulePtr>> pools;
};

const CorpusData& data() {
    static const CorpusData store = [] {
        CorpusData d;
        Registry& reg = d.registry;

        SemiringPtr s3 = validate_semiring(s3_tables());
        SemiringPtr boolean = validate_semiring(boolean_tables());
        SemiringPtr z2 = validate_semiring(z2_tables());
        SemiringPtr n2 = natural_truncation("N2", 2, 1);
        SemiringPtr n3 = natural_truncation("N3", 3, 1);
        for (const auto& s : {s3, boolean, z2, n2, n3}) reg.semirings.emplace(s->name(), s);

        SemimodulePtr s3_reg = regular_module(s3);
        SemimodulePtr b_reg = regular_module(boolean);
        SemimodulePtr z2_reg = regular_module(z2);
        SemimodulePtr n2_reg = regular_module(n2);
        SemimodulePtr n3_reg = regular_module(n3);

        const Elem a = *s3_reg->index_of("a");
        Subsemimodule ideal_0a = generated_subsemimodule(s3_reg, std::vector<Elem>{a});
        Embedded sub0a = materialize(ideal_0a, "S3.sub0a");
        Quotient mod0a = quotient_semimodule(s3_reg, ideal_0a, "S3.mod0a");

        const Elem two = *n2_reg->index_of("2");
        Subsemimodule ideal_02 = generated_subsemimodule(n2_reg, std::vector<Elem>{two});
        Embedded sub02 = materialize(ideal_02, "N2.sub02");

        SemimodulePtr s3xs3 = direct_product({s3_reg, s3_reg}, {}, "S3xS3").module;
        SemimodulePtr bxb = direct_product({b_reg, b_reg}, {}, "BxB").module;
        SemimodulePtr z2xz2 = direct_product({z2_reg, z2_reg}, {}, "Z2xZ2").module;

        for (const auto& m :
             {s3_reg, b_reg, z2_reg, n2_reg, n3_reg, sub0a.module, mod0a.module, sub02.module,
              s3xs3, bxb, z2xz2, zero_module(s3, "S3.zero"), zero_module(boolean, "B.zero"),
              zero_module(z2, "Z2.zero"), zero_module(n2, "N2.zero"), zero_module(n3, "N3.zero")})
            reg.semimodules.emplace(m->name(), m);

        reg.maps.emplace("S3.id", identity_map(s3_reg));
        reg.maps.emplace("S3.rmula",
                         check_linear(s3_reg, s3_reg, {s3->mul(0, a), s3->mul(1, a), s3->mul(2, a)}));
        reg.maps.emplace("S3.incl0a", sub0a.inclusion);
        reg.maps.emplace("S3.proj0a", mod0a.projection);

        d.pools["S3"] = {s3_reg, sub0a.module, mod0a.module, reg.semimodules.at("S3.zero"), s3xs3};
        d.pools["B"] = {b_reg, bxb, reg.semimodules.at("B.zero")};
        d.pools["Z2"] = {z2_reg, z2xz2, reg.semimodules.at("Z2.zero")};
        d.pools["N2"] = {n2_reg, sub02.module, reg.semimodules.at("N2.zero")};
        d.pools["N3"] = {n3_reg, reg.semimodules.at("N3.zero")};

        auto expect = [](bool ok, const std::string& detail) -> std::optional<std::string> {
            if (ok) return std::nullopt;
            return detail;
        };

        d.entries.push_back(
            {"s3.subobject_census",
             "the regular module of the three-element idempotent semiring has exactly the "
             "subsemimodules {0}, {0,a} and the whole module, all subtractive",
             [s3_reg, expect](const SearchLimits& lim) {
                 auto subs = enumerate_subsemimodules(s3_reg, false, lim);
                 std::string got = census_string(subs);
                 if (got != "{0} {0,a} {0,1,a}") return expect(false, "census was " + got);
                 for (const auto& s : subs)
                     if (!s.subtractive)
                         return expect(false, members_of(s) + " is not subtractive");
                 return expect(true, "");
             }});
        d.entries.push_back(
            {"s3.injective", "S3 extends every map from every subsemimodule of itself",
             [s3_reg, expect](const SearchLimits& lim) {
                 return expect(decide_injective(s3_reg, s3_reg, lim).verdict,
                               "expected self-injectivity");
             }});
        d.entries.push_back(
            {"s3.i_injective", "S3 extends every map from every subtractive subsemimodule",
             [s3_reg, expect](const SearchLimits& lim) {
                 return expect(decide_i_injective(s3_reg, s3_reg, lim).verdict,
                               "expected i-injectivity");
             }});
        d.entries.push_back(
            {"s3.e_injective_fails",
             "extensions along {0,a} are not unique up to kernel translation: the identity and "
             "the right multiplication by a restrict equally",
             [s3_reg, expect](const SearchLimits& lim) {
                 InjectivityReport r = decide_e_injective(s3_reg, s3_reg, lim);
                 if (r.verdict) return expect(false, "expected e-injectivity to fail");
                 if (!r.witness_sub || r.witness_sub->label() != "{0,a}")
                     return expect(false, "wrong witness subsemimodule");
                 if (!r.witness_pair) return expect(false, "missing witness pair");
                 return expect(r.witness_pair->first.describe() == "0->0, 1->1, a->a" &&
                                   r.witness_pair->second.describe() == "0->0, 1->a, a->a",
                               "wrong witness pair: " + r.witness_pair->first.describe() + " / " +
                                   r.witness_pair->second.describe());
             }});
        d.entries.push_back(
            {"s3.hom_census", "hom sets: |Hom(S3,S3)| = 3, |Hom({0,a},S3)| = 2, |Hom(B,B)| = 2",
             [s3_reg, sub0a, b_reg, expect](const SearchLimits& lim) {
                 auto h1 = enumerate_homs(s3_reg, s3_reg, lim);
                 auto h2 = enumerate_homs(sub0a.module, s3_reg, lim);
                 auto h3 = enumerate_homs(b_reg, b_reg, lim);
                 return expect(h1.size() == 3 && h2.size() == 2 && h3.size() == 2,
                               "sizes " + std::to_string(h1.size()) + "," +
                                   std::to_string(h2.size()) + "," + std::to_string(h3.size()));
             }});
        d.entries.push_back(
            {"s3.zerosumfree_cancellative",
             "only 0 has an additive inverse in S3, and only 0 is additively cancellable",
             [s3, s3_reg, expect](const SearchLimits&) {
                 auto v = zero_sums(*s3);
                 auto k = cancellative_subset(*s3_reg);
                 return expect(names_of(*s3_reg, v) == "{0}" && names_of(*s3_reg, k) == "{0}",
                               "V = " + names_of(*s3_reg, v) + ", K+ = " + names_of(*s3_reg, k));
             }});
        d.entries.push_back(
            {"s3.not_ideal_simple", "the ideal {0,a} is proper and nonzero",
             [s3_reg, expect](const SearchLimits& lim) {
                 Report r = is_ideal_simple(s3_reg, lim);
                 return expect(!r.verdict && !r.witnesses.empty() &&
                                   r.witnesses.front().items.front().second == "{0,a}",
                               "expected witness {0,a}");
             }});
        d.entries.push_back(
            {"s3.not_divisible", "a is not a zero divisor but a·S3 = {0,a} misses 1",
             [s3_reg, expect](const SearchLimits&) {
                 Report r = is_divisible(s3_reg);
                 return expect(!r.verdict && !r.witnesses.empty() &&
                                   r.witnesses.front().items[0].second == "a" &&
                                   r.witnesses.front().items[1].second == "1",
                               "expected witness (a, 1)");
             }});
        const LinearMap incl0a = sub0a.inclusion;
        const LinearMap proj0a = mod0a.projection;
        d.entries.push_back(
            {"s3.short_exact", "0 -> {0,a} -> S3 -> S3/{0,a} -> 0 is short exact",
             [incl0a, proj0a, expect](const SearchLimits&) {
                 Report r = check_short_exact(incl0a, proj0a);
                 return expect(r.verdict, "expected short exactness");
             }});
        d.entries.push_back(
            {"s3.dualized_grade",
             "dualizing the short exact sequence with coefficients S3 keeps the induced pair "
             "proper-exact but k-normality of the restriction fails",
             [incl0a, proj0a, s3_reg, expect](const SearchLimits& lim) {
                 Dualized dual =
                     dualize_with(SequencePair{incl0a, proj0a}, s3_reg, lim);
                 return expect(dual.grade.proper_exact && dual.grade.chain_complex &&
                                   dual.grade.semi_exact && !dual.grade.quasi_exact &&
                                   !dual.grade.exact,
                               "unexpected induced grade");
             }});
        d.entries.push_back(
            {"b.suite",
             "the Boolean semiring: subsemimodules {0} and B, two endomorphisms, injective in "
             "all three senses, divisible",
             [b_reg, expect](const SearchLimits& lim) {
                 auto subs = enumerate_subsemimodules(b_reg, false, lim);
                 if (census_string(subs) != "{0} {0,1}")
                     return expect(false, "census was " + census_string(subs));
                 if (!decide_injective(b_reg, b_reg, lim).verdict)
                     return expect(false, "plain injectivity failed");
                 if (!decide_i_injective(b_reg, b_reg, lim).verdict)
                     return expect(false, "i-injectivity failed");
                 if (!decide_e_injective(b_reg, b_reg, lim).verdict)
                     return expect(false, "e-injectivity failed");
                 if (!is_divisible(b_reg).verdict) return expect(false, "divisibility failed");
                 return expect(true, "");
             }});
        d.entries.push_back(
            {"z2.suite",
             "the two-element ring: every element has an additive inverse, everything is "
             "cancellable, and the ring is self-injective in all three senses",
             [z2, z2_reg, expect](const SearchLimits& lim) {
                 if (names_of(*z2_reg, zero_sums(*z2)) != "{0,1}")
                     return expect(false, "additive inverses missing");
                 if (names_of(*z2_reg, cancellative_subset(*z2_reg)) != "{0,1}")
                     return expect(false, "cancellativity missing");
                 return expect(decide_injective(z2_reg, z2_reg, lim).verdict &&
                                   decide_i_injective(z2_reg, z2_reg, lim).verdict &&
                                   decide_e_injective(z2_reg, z2_reg, lim).verdict,
                               "self-injectivity failed");
             }});
        d.entries.push_back(
            {"n2.saturating",
             "in the saturating truncation at 2, the ideal {0,2} is not subtractive and its "
             "subtractive closure is everything; the Bourne quotient by it collapses",
             [n2_reg, ideal_02, expect](const SearchLimits& lim) {
                 if (ideal_02.subtractive) return expect(false, "{0,2} claimed subtractive");
                 Subsemimodule closed = subtractive_closure(ideal_02);
                 if (closed.label() != "{0,1,2}")
                     return expect(false, "closure was " + closed.label());
                 auto subs = enumerate_subsemimodules(n2_reg, false, lim);
                 if (census_string(subs) != "{0} {0,2} {0,1,2}")
                     return expect(false, "census was " + census_string(subs));
                 auto subtr = enumerate_subsemimodules(n2_reg, true, lim);
                 if (census_string(subtr) != "{0} {0,1,2}")
                     return expect(false, "subtractive census was " + census_string(subtr));
                 Quotient q = quotient_semimodule(n2_reg, ideal_02);
                 if (q.module->size() != 1) return expect(false, "quotient did not collapse");
                 return expect(true, "");
             }});
        d.entries.push_back(
            {"matrix.witnesses",
             "the exact-rational matrix witnesses all hold (ideals, extensions, forced zeros)",
             [expect](const SearchLimits&) {
                 Report r = matrix_demo(MatrixDemoOptions{});
                 return expect(r.verdict, "matrix demo failed");
             }});

        return d;
    }();
    return store;
}

}  // namespace

const Registry& corpus_registry() { return data().registry; }

const std::vector<CorpusEntry>& corpus_entries() { return data().entries; }

std::vector<std::string> corpus_semiring_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : data().pools) out.push_back(name);
    return out;
}

std::vector<SemimodulePtr> corpus_pool(const std::string& semiring_name) {
    auto it = data().pools.find(semiring_name);
    if (it == data().pools.end())
        throw UnresolvedReference("no corpus pool for semiring '" + semiring_name + "'");
    return it->second;
}

Report run_entries(const std::vector<CorpusEntry>& entries, const SearchLimits& limits,
                   bool throw_on_mismatch) {
    Report rep;
    rep.procedure = "corpus";
    rep.claim = "every built-in object reproduces its pinned verdict";
    rep.verdict = true;
    std::vector<std::string> mismatched;
    for (const CorpusEntry& entry : entries) {
        std::optional<std::string> mismatch;
        try {
            mismatch = entry.run(limits);
        } catch (const Error& e) {
            mismatch = std::string("raised ") + e.kind() + ": " + e.what();
        }
        Witness w{mismatch ? "mismatch" : "entry",
                  {{"name", entry.name}, {"verdict", mismatch ? "fail" : "pass"}}};
        if (mismatch) {
            rep.verdict = false;
            mismatched.push_back(entry.name);
            w.items.emplace_back("claim", entry.claim);
            w.items.emplace_back("detail", *mismatch);
        }
        rep.witnesses.push_back(std::move(w));
    }
    rep.statistics["entries"] = entries.size();
    rep.statistics["mismatches"] = mismatched.size();
    if (!rep.verdict && throw_on_mismatch) {
        std::string msg = "corpus mismatches:";
        for (const auto& name : mismatched) msg += " [" + name + "]";
        throw CorpusMismatch(msg);
    }
    return rep;
}

Report run_corpus(const SearchLimits& limits, bool throw_on_mismatch) {
    return run_entries(corpus_entries(), limits, throw_on_mismatch);
}

}  // namespace semimod

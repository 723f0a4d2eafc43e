#include "semimod/morphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace semimod {

namespace {

// Forces images of all elements from the images of the generators by closing
// under add/act equations; returns false on conflict. At the fixpoint every
// equation has been re-checked, so a true result is a verified linear map.
bool extend_by_closure(const Semimodule& src, const Semimodule& tgt, std::vector<Elem>& img) {
    const int n = src.size();
    const int ns = src.over()->size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem x = 0; x < n; ++x) {
            if (img[x] < 0) continue;
            for (Elem y = x; y < n; ++y) {
                if (img[y] < 0) continue;
                Elem z = src.add(x, y);
                Elem v = tgt.add(img[x], img[y]);
                if (img[z] < 0) {
                    img[z] = v;
                    changed = true;
                } else if (img[z] != v) {
                    return false;
                }
            }
            for (Elem s = 0; s < ns; ++s) {
                Elem z = src.act(s, x);
                Elem v = tgt.act(s, img[x]);
                if (img[z] < 0) {
                    img[z] = v;
                    changed = true;
                } else if (img[z] != v) {
                    return false;
                }
            }
        }
    }
    return std::none_of(img.begin(), img.end(), [](Elem e) { return e < 0; });
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

bool is_linear(const Semimodule& source, const Semimodule& target,
               const std::vector<Elem>& images) {
    if (images.size() != static_cast<std::size_t>(source.size())) return false;
    if (images[source.zero()] != target.zero()) return false;
    for (Elem x = 0; x < source.size(); ++x) {
        for (Elem y = x; y < source.size(); ++y)
            if (images[source.add(x, y)] != target.add(images[x], images[y])) return false;
        for (Elem s = 0; s < source.over()->size(); ++s)
            if (images[source.act(s, x)] != target.act(s, images[x])) return false;
    }
    return true;
}

LinearMap check_linear(const SemimodulePtr& source, const SemimodulePtr& target,
                       std::vector<Elem> images) {
    if (source->over() != target->over())
        throw ShapeError("linear map endpoints live over different semirings");
    if (images.size() != static_cast<std::size_t>(source->size()))
        throw ShapeError("map assigns " + std::to_string(images.size()) + " images, expected " +
                         std::to_string(source->size()));
    for (Elem v : images)
        if (v < 0 || v >= target->size()) throw ShapeError("image index out of range");

    std::vector<AxiomViolation> bad;
    if (images[source->zero()] != target->zero())
        bad.push_back({"zero", {source->elem_name(source->zero())}});
    for (Elem x = 0; x < source->size(); ++x) {
        for (Elem y = x; y < source->size(); ++y)
            if (images[source->add(x, y)] != target->add(images[x], images[y]))
                bad.push_back({"additive", {source->elem_name(x), source->elem_name(y)}});
        for (Elem s = 0; s < source->over()->size(); ++s)
            if (images[source->act(s, x)] != target->act(s, images[x]))
                bad.push_back({"action", {source->over()->elem_name(s), source->elem_name(x)}});
    }
    if (!bad.empty())
        throw LinearityViolation("map " + source->name() + " -> " + target->name(),
                                 std::move(bad));
    return LinearMap{source, target, std::move(images)};
}

LinearMap identity_map(const SemimodulePtr& m) {
    std::vector<Elem> img(static_cast<std::size_t>(m->size()));
    std::iota(img.begin(), img.end(), 0);
    return LinearMap{m, m, std::move(img)};
}

LinearMap zero_map(const SemimodulePtr& source, const SemimodulePtr& target) {
    return LinearMap{source, target,
                     std::vector<Elem>(static_cast<std::size_t>(source->size()), target->zero())};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (f.target != g.source) throw ShapeError("composition endpoints do not match");
    std::vector<Elem> img(f.images.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.images[f.images[i]];
    return LinearMap{f.source, g.target, std::move(img)};
}

Subsemimodule kernel(const LinearMap& f) {
    std::vector<Elem> members;
    for (Elem e = 0; e < f.source->size(); ++e)
        if (f.images[e] == f.target->zero()) members.push_back(e);
    return make_subsemimodule(f.source, std::move(members));
}

Subsemimodule image(const LinearMap& f) {
    std::vector<Elem> members(f.images);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return make_subsemimodule(f.target, std::move(members));
}

NormalityVerdict normality(const LinearMap& f) {
    NormalityVerdict v;
    Subsemimodule ker = kernel(f);
    v.k_normal = true;
    for (Elem m = 0; m < f.source->size() && v.k_normal; ++m)
        for (Elem m2 = m + 1; m2 < f.source->size() && v.k_normal; ++m2) {
            if (f.images[m] != f.images[m2]) continue;
            bool ok = false;
            for (Elem k : ker.members) {
                for (Elem k2 : ker.members)
                    if (f.source->add(m, k) == f.source->add(m2, k2)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (!ok) {
                v.k_normal = false;
                v.witnesses.push_back(Witness{
                    "k_normal", {{"m", f.source->elem_name(m)}, {"m'", f.source->elem_name(m2)}}});
            }
        }
    Subsemimodule img = image(f);
    v.i_normal = img.subtractive;
    if (!v.i_normal) {
        Subsemimodule closed = subtractive_closure(img);
        for (Elem e : closed.members)
            if (!img.contains(e)) {
                v.witnesses.push_back(
                    Witness{"i_normal", {{"in_closure_only", f.target->elem_name(e)}}});
                break;
            }
    }
    return v;
}

std::vector<Elem> minimal_generators(const Semimodule& m) {
    std::vector<Elem> gens;
    std::vector<Elem> closed = detail::closure_members(m, {});
    while (static_cast<int>(closed.size()) < m.size()) {
        Elem next = 0;
        while (std::binary_search(closed.begin(), closed.end(), next)) ++next;
        gens.push_back(next);
        closed = detail::closure_members(m, gens);
    }
    return gens;
}

std::vector<LinearMap> enumerate_homs(const SemimodulePtr& source, const SemimodulePtr& target,
                                      const SearchLimits& limits) {
    if (source->over() != target->over())
        throw ShapeError("hom set endpoints live over different semirings");
    const std::vector<Elem> gens = minimal_generators(*source);
    const std::uint64_t nt = static_cast<std::uint64_t>(target->size());
    const std::uint64_t total = detail::checked_pow(nt, gens.size(), limits.cap);
    if (total > limits.cap)
        throw SearchCapExceeded("hom enumeration " + source->name() + " -> " + target->name() +
                                " needs " + std::to_string(target->size()) + "^" +
                                std::to_string(gens.size()) + " candidates, cap " +
                                std::to_string(limits.cap));

    auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::vector<Elem>>& out) {
        std::vector<Elem> img(static_cast<std::size_t>(source->size()));
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::fill(img.begin(), img.end(), -1);
            img[source->zero()] = target->zero();
            std::uint64_t rest = idx;
            bool clash = false;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Elem v = static_cast<Elem>(rest % nt);
                rest /= nt;
                if (img[gens[g]] >= 0 && img[gens[g]] != v) {
                    clash = true;
                    break;
                }
                img[gens[g]] = v;
            }
            if (clash) continue;
            std::vector<Elem> candidate(img);
            if (extend_by_closure(*source, *target, candidate)) out.push_back(candidate);
        }
    };

    std::vector<std::vector<Elem>> found;
    const unsigned jobs = std::max(1u, limits.jobs);
    if (jobs == 1 || total < 2 * jobs) {
        scan(0, total, found);
    } else {
        std::vector<std::vector<std::vector<Elem>>> parts(jobs);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            std::uint64_t b = j * chunk, e = std::min(total, b + chunk);
            pool.emplace_back([&, b, e, j] { scan(b, e, parts[j]); });
        }
        for (auto& t : pool) t.join();
        for (auto& p : parts)
            for (auto& img : p) found.push_back(std::move(img));
    }

    std::sort(found.begin(), found.end());
    std::vector<LinearMap> out;
    out.reserve(found.size());
    for (auto& img : found) out.push_back(LinearMap{source, target, std::move(img)});
    return out;
}

std::vector<LinearMap> enumerate_homs_exhaustive(const SemimodulePtr& source,
                                                 const SemimodulePtr& target,
                                                 const SearchLimits& limits) {
    if (source->over() != target->over())
        throw ShapeError("hom set endpoints live over different semirings");
    const std::uint64_t total = detail::checked_pow(static_cast<std::uint64_t>(target->size()),
                                                    static_cast<std::uint64_t>(source->size()),
                                                    limits.cap);
    if (total > limits.cap)
        throw SearchCapExceeded("exhaustive hom enumeration " + source->name() + " -> " +
                                target->name() + " exceeds cap");
    std::vector<LinearMap> out;
    std::vector<Elem> img(static_cast<std::size_t>(source->size()), 0);
    while (true) {
        if (is_linear(*source, *target, img)) out.push_back(LinearMap{source, target, img});
        int pos = source->size() - 1;
        while (pos >= 0 && img[pos] == target->size() - 1) img[pos--] = 0;
        if (pos < 0) break;
        ++img[pos];
    }
    return out;  // odometer order with the last slot fastest = lexicographic
}

SemiringPtr iteration_base(const std::vector<MonoidTable>& family) {
    std::uint64_t lo = 1, period = 1;
    for (const MonoidTable& t : family) {
        const std::size_t n = t.elem_names.size();
        auto add = [&](Elem a, Elem b) { return t.add[static_cast<std::size_t>(a) * n + b]; };
        for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
            std::vector<int> seen(n, -1);
            Elem x = t.zero;
            int k = 0;
            while (seen[x] < 0) {
                seen[x] = k++;
                x = add(x, a);
            }
            const std::uint64_t pre = static_cast<std::uint64_t>(seen[x]);
            const std::uint64_t per = static_cast<std::uint64_t>(k) - pre;
            lo = std::max(lo, pre);
            period = period / gcd_u(period, per) * per;
            if (lo + period > 256)
                throw SearchCapExceeded("iteration base grew past 256 elements");
        }
    }
    return natural_truncation("nats(" + std::to_string(lo) + ";" + std::to_string(period) + ")",
                              static_cast<int>(lo), static_cast<int>(period));
}

SemimodulePtr monoid_as_module(const SemiringPtr& base, const MonoidTable& table) {
    const std::size_t n = table.elem_names.size();
    std::vector<Elem> act(static_cast<std::size_t>(base->size()) * n);
    // Row k of the action is the k-th additive iterate.
    std::vector<Elem> cur(n, table.zero);
    for (Elem k = 0; k < base->size(); ++k) {
        for (std::size_t m = 0; m < n; ++m) act[static_cast<std::size_t>(k) * n + m] = cur[m];
        for (std::size_t m = 0; m < n; ++m)
            cur[m] = table.add[static_cast<std::size_t>(cur[m]) * n + m];
    }
    return detail::module_from_tables(table.name, base, table.elem_names, table.zero, table.add,
                                      act);
}

namespace {

MonoidTable pointwise_monoid(const std::string& name, const std::vector<LinearMap>& homs) {
    if (homs.empty()) throw ShapeError("hom set is empty; the zero map is always present");
    const SemimodulePtr& tgt = homs.front().target;
    MonoidTable t;
    t.name = name;
    std::map<std::vector<Elem>, Elem> index;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        index[homs[i].images] = static_cast<Elem>(i);
        std::string nm = "h(";
        for (std::size_t e = 0; e < homs[i].images.size(); ++e) {
            if (e) nm += ",";
            nm += tgt->elem_name(homs[i].images[e]);
        }
        t.elem_names.push_back(nm + ")");
    }
    const std::vector<Elem> zimg(homs.front().images.size(), tgt->zero());
    auto zit = index.find(zimg);
    if (zit == index.end()) throw std::logic_error("zero map missing from hom set");
    t.zero = zit->second;
    const std::size_t n = homs.size();
    t.add.resize(n * n);
    std::vector<Elem> sum(homs.front().images.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t e = 0; e < sum.size(); ++e)
                sum[e] = tgt->add(homs[i].images[e], homs[j].images[e]);
            auto it = index.find(sum);
            if (it == index.end())
                throw std::logic_error("hom set not closed under pointwise addition");
            t.add[i * n + j] = it->second;
        }
    return t;
}

}  // namespace

Elem HomMonoid::index_of(const LinearMap& f) const {
    for (std::size_t i = 0; i < homs.size(); ++i)
        if (homs[i].images == f.images && homs[i].source == f.source &&
            homs[i].target == f.target)
            return static_cast<Elem>(i);
    throw ShapeError("map is not an element of this hom monoid");
}

HomMonoid hom_monoid(const SemimodulePtr& m, const SemimodulePtr& n, const SearchLimits& limits) {
    auto fam = hom_monoid_family({{m, n}}, limits);
    return std::move(fam.front());
}

std::vector<HomMonoid> hom_monoid_family(
    const std::vector<std::pair<SemimodulePtr, SemimodulePtr>>& pairs,
    const SearchLimits& limits) {
    std::vector<std::vector<LinearMap>> homsets;
    std::vector<MonoidTable> tables;
    for (const auto& [m, n] : pairs) {
        homsets.push_back(enumerate_homs(m, n, limits));
        tables.push_back(
            pointwise_monoid("hom(" + m->name() + "," + n->name() + ")", homsets.back()));
    }
    SemiringPtr base = iteration_base(tables);
    std::vector<HomMonoid> out;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out.push_back(HomMonoid{monoid_as_module(base, tables[i]), std::move(homsets[i])});
    return out;
}

Pullback pullback(const LinearMap& q, const LinearMap& f) {
    if (q.target != f.target) throw ShapeError("pullback legs need a common target");
    const SemimodulePtr& m = q.source;
    const SemimodulePtr& k = f.source;

    std::vector<std::pair<Elem, Elem>> elems;
    std::map<std::pair<Elem, Elem>, Elem> index;
    for (Elem a = 0; a < m->size(); ++a)
        for (Elem b = 0; b < k->size(); ++b)
            if (q.images[a] == f.images[b]) {
                index[{a, b}] = static_cast<Elem>(elems.size());
                elems.emplace_back(a, b);
            }

    const std::size_t n = elems.size();
    std::vector<std::string> names;
    for (auto [a, b] : elems) names.push_back("(" + m->elem_name(a) + "," + k->elem_name(b) + ")");
    std::vector<Elem> add(n * n), act(static_cast<std::size_t>(m->over()->size()) * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto key = std::pair<Elem, Elem>{m->add(elems[i].first, elems[j].first),
                                             k->add(elems[i].second, elems[j].second)};
            add[i * n + j] = index.at(key);
        }
    for (Elem s = 0; s < m->over()->size(); ++s)
        for (std::size_t j = 0; j < n; ++j) {
            auto key = std::pair<Elem, Elem>{m->act(s, elems[j].first), k->act(s, elems[j].second)};
            act[static_cast<std::size_t>(s) * n + j] = index.at(key);
        }

    SemimodulePtr apex = detail::module_from_tables(
        "pb(" + m->name() + "," + k->name() + ")", m->over(), std::move(names),
        index.at({m->zero(), k->zero()}), add, act);

    std::vector<Elem> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
        left[i] = elems[i].first;
        right[i] = elems[i].second;
    }
    Pullback out{apex, LinearMap{apex, m, std::move(left)}, LinearMap{apex, k, std::move(right)}};

    if (compose(q, out.to_left).images != compose(f, out.to_right).images)
        throw std::logic_error("pullback square does not commute");
    if (f.injective()) {
        if (!out.to_left.injective())
            throw std::logic_error("pullback of an injective leg lost injectivity");
        NormalityVerdict nf = normality(f);
        if (nf.normal()) {
            NormalityVerdict nl = normality(out.to_left);
            if (!nl.normal() || !image(out.to_left).subtractive)
                throw std::logic_error(
                    "pullback of a normal monomorphism is not a normal monomorphism");
        }
    }
    return out;
}

Pushout pushout(const LinearMap& f, const LinearMap& g, const SearchLimits& limits) {
    if (f.source != g.source) throw ShapeError("pushout legs need a common source");
    Product prod = direct_product({f.target, g.target}, limits);
    std::vector<std::pair<Elem, Elem>> seed;
    for (Elem l = 0; l < f.source->size(); ++l)
        seed.emplace_back(prod.injections[0].images[f.images[l]],
                          prod.injections[1].images[g.images[l]]);
    std::vector<int> class_of = detail::congruence_closure(*prod.module, seed);
    Quotient q = detail::quotient_by_classes(
        prod.module, class_of, "po(" + f.target->name() + "," + g.target->name() + ")");
    Pushout out{q.module, compose(q.projection, prod.injections[0]),
                compose(q.projection, prod.injections[1])};
    if (compose(out.from_left, f).images != compose(out.from_right, g).images)
        throw std::logic_error("pushout square does not commute");
    return out;
}

SemiringMorphism check_semiring_morphism(const SemiringPtr& source, const SemiringPtr& target,
                                         std::vector<Elem> images) {
    if (images.size() != static_cast<std::size_t>(source->size()))
        throw ShapeError("semiring morphism assigns wrong number of images");
    for (Elem v : images)
        if (v < 0 || v >= target->size()) throw ShapeError("image index out of range");
    std::vector<AxiomViolation> bad;
    const auto& nm = source->elem_names();
    if (images[source->zero()] != target->zero()) bad.push_back({"hom_zero", {}});
    if (images[source->one()] != target->one()) bad.push_back({"hom_one", {}});
    for (Elem a = 0; a < source->size(); ++a)
        for (Elem b = 0; b < source->size(); ++b) {
            if (images[source->add(a, b)] != target->add(images[a], images[b]))
                bad.push_back({"hom_add", {nm[a], nm[b]}});
            if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
                bad.push_back({"hom_mul", {nm[a], nm[b]}});
        }
    if (!bad.empty())
        throw AxiomError("semiring morphism " + source->name() + " -> " + target->name(),
                         std::move(bad));
    return SemiringMorphism{source, target, std::move(images)};
}

SemimodulePtr restrict_scalars(const SemiringMorphism& via, const SemimodulePtr& m) {
    if (m->over() != via.target)
        throw ShapeError("module is not over the morphism's target semiring");
    const std::size_t n = static_cast<std::size_t>(m->size());
    std::vector<Elem> add(n * n), act(static_cast<std::size_t>(via.source->size()) * n);
    for (Elem a = 0; a < m->size(); ++a)
        for (Elem b = 0; b < m->size(); ++b) add[static_cast<std::size_t>(a) * n + b] = m->add(a, b);
    for (Elem t = 0; t < via.source->size(); ++t)
        for (Elem x = 0; x < m->size(); ++x)
            act[static_cast<std::size_t>(t) * n + x] = m->act(via.images[t], x);
    return detail::module_from_tables("res(" + m->name() + "," + via.source->name() + ")",
                                      via.source, m->elem_names(), m->zero(), add, act);
}

InducedHomModule induced_hom_module(const SemiringMorphism& via, const SemimodulePtr& a,
                                    const SearchLimits& limits) {
    if (a->over() != via.source)
        throw ShapeError("coefficient module must live over the morphism's source semiring");
    const SemiringPtr& s = via.target;

    // S as a module over the source semiring: t·x = via(t)x.
    const std::size_t ns = static_cast<std::size_t>(s->size());
    std::vector<Elem> add(ns * ns), act(static_cast<std::size_t>(via.source->size()) * ns);
    for (Elem x = 0; x < s->size(); ++x)
        for (Elem y = 0; y < s->size(); ++y)
            add[static_cast<std::size_t>(x) * ns + y] = s->add(x, y);
    for (Elem t = 0; t < via.source->size(); ++t)
        for (Elem x = 0; x < s->size(); ++x)
            act[static_cast<std::size_t>(t) * ns + x] = s->mul(via.images[t], x);
    SemimodulePtr s_mod =
        detail::module_from_tables("res(" + s->name() + "," + via.source->name() + ")", via.source,
                                   s->elem_names(), s->zero(), add, act);

    std::vector<LinearMap> carrier = enumerate_homs(s_mod, a, limits);
    std::map<std::vector<Elem>, Elem> index;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        index[carrier[i].images] = static_cast<Elem>(i);

    const std::size_t n = carrier.size();
    std::vector<std::string> names;
    for (const auto& h : carrier) {
        std::string nm = "h(";
        for (std::size_t e = 0; e < h.images.size(); ++e) {
            if (e) nm += ",";
            nm += a->elem_name(h.images[e]);
        }
        names.push_back(nm + ")");
    }
    std::vector<Elem> hadd(n * n), hact(static_cast<std::size_t>(s->size()) * n);
    std::vector<Elem> img(ns);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t x = 0; x < ns; ++x)
                img[x] = a->add(carrier[i].images[x], carrier[j].images[x]);
            auto it = index.find(img);
            if (it == index.end())
                throw std::logic_error("induced hom carrier not closed under addition");
            hadd[i * n + j] = it->second;
        }
    for (Elem sc = 0; sc < s->size(); ++sc)
        for (std::size_t j = 0; j < n; ++j) {
            for (Elem x = 0; x < s->size(); ++x)
                img[static_cast<std::size_t>(x)] = carrier[j].images[s->mul(x, sc)];
            auto it = index.find(img);
            if (it == index.end())
                throw std::logic_error("induced hom carrier not closed under the action");
            hact[static_cast<std::size_t>(sc) * n + j] = it->second;
        }

    const std::vector<Elem> zimg(ns, a->zero());
    SemimodulePtr mod = detail::module_from_tables("hom(" + s->name() + "," + a->name() + ")", s,
                                                   std::move(names), index.at(zimg), hadd, hact);
    return InducedHomModule{mod, s_mod, std::move(carrier)};
}

}  // namespace semimod

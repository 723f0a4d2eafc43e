#include "semimod/semimodule.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "validate_util.hpp"

namespace semimod {

using detail::NameIndex;
using detail::resolve_table;

namespace {

bool sorted_contains(const std::vector<Elem>& v, Elem e) {
    return std::binary_search(v.begin(), v.end(), e);
}

// Closure of seed ∪ {zero} under add and act, as a sorted member list.
std::vector<Elem> close_under_ops(const Semimodule& m, std::span<const Elem> seed) {
    const int n = m.size();
    const int ns = m.over()->size();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<Elem> work;
    auto push = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            work.push_back(e);
        }
    };
    push(m.zero());
    for (Elem e : seed) push(e);
    std::vector<Elem> members(work);
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        for (Elem y : members)
            if (!in[m.add(x, y)]) {
                in[m.add(x, y)] = 1;
                work.push_back(m.add(x, y));
            }
        for (Elem s = 0; s < ns; ++s)
            if (!in[m.act(s, x)]) {
                in[m.act(s, x)] = 1;
                work.push_back(m.act(s, x));
            }
        members.clear();
        for (Elem e = 0; e < n; ++e)
            if (in[e]) members.push_back(e);
    }
    return members;
}

// Raw subtractive closure: {x | x+l = l' for some l,l' in members}.
std::vector<Elem> s_closure_raw(const Semimodule& m, const std::vector<Elem>& members) {
    std::vector<Elem> out;
    for (Elem x = 0; x < m.size(); ++x) {
        bool found = false;
        for (Elem l : members) {
            if (sorted_contains(members, m.add(x, l))) {
                found = true;
                break;
            }
        }
        if (found) out.push_back(x);
    }
    return out;
}

bool is_closed(const Semimodule& m, const std::vector<Elem>& members) {
    if (!sorted_contains(members, m.zero())) return false;
    for (Elem x : members) {
        for (Elem y : members)
            if (!sorted_contains(members, m.add(x, y))) return false;
        for (Elem s = 0; s < m.over()->size(); ++s)
            if (!sorted_contains(members, m.act(s, x))) return false;
    }
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the least element as root
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::optional<Elem> Semimodule::index_of(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<Elem>(i);
    return std::nullopt;
}

bool Subsemimodule::contains(Elem e) const { return sorted_contains(members, e); }

std::string Subsemimodule::label() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += parent->elem_name(members[i]);
    }
    return out + "}";
}

bool LinearMap::injective() const {
    std::vector<char> hit(static_cast<std::size_t>(target->size()), 0);
    for (Elem v : images) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

bool LinearMap::surjective() const {
    std::vector<char> hit(static_cast<std::size_t>(target->size()), 0);
    for (Elem v : images) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::string LinearMap::describe() const {
    std::string out;
    for (Elem e = 0; e < source->size(); ++e) {
        if (e) out += ", ";
        out += source->elem_name(e) + "->" + target->elem_name(images[e]);
    }
    return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.source == b.source && a.target == b.target && a.images == b.images;
}

SemimodulePtr validate_semimodule(SemiringPtr s, const RawSemimodule& raw) {
    if (!s) throw ShapeError("semimodule '" + raw.name + "' has no base semiring");
    if (raw.elements.empty())
        throw ShapeError("semimodule '" + raw.name + "' has no elements; the zero is required");
    NameIndex ix(raw.elements);
    const Elem zero = ix.resolve(raw.zero, "zero");
    const std::size_t n = raw.elements.size();
    const std::size_t ns = static_cast<std::size_t>(s->size());

    std::vector<AxiomViolation> bad;
    std::vector<Elem> add = resolve_table(raw.add, n, n, ix, raw.elements, "add", bad);
    std::vector<Elem> act = resolve_table(raw.act, ns, n, ix, s->elem_names(), "act", bad);
    if (!bad.empty()) throw AxiomError("semimodule '" + raw.name + "'", std::move(bad));

    const auto& nm = raw.elements;
    const auto& sm = s->elem_names();
    auto A = [&](Elem a, Elem b) { return add[static_cast<std::size_t>(a) * n + b]; };
    auto T = [&](Elem sc, Elem m) { return act[static_cast<std::size_t>(sc) * n + m]; };
    const int N = static_cast<int>(n);
    const int NS = static_cast<int>(ns);

    for (Elem a = 0; a < N; ++a) {
        if (A(zero, a) != a || A(a, zero) != a) bad.push_back({"add_identity", {nm[a]}});
        for (Elem b = 0; b < N; ++b) {
            if (A(a, b) != A(b, a)) bad.push_back({"add_commutative", {nm[a], nm[b]}});
            for (Elem c = 0; c < N; ++c)
                if (A(A(a, b), c) != A(a, A(b, c)))
                    bad.push_back({"add_associative", {nm[a], nm[b], nm[c]}});
        }
    }
    for (Elem sc = 0; sc < NS; ++sc) {
        if (T(sc, zero) != zero) bad.push_back({"act_zero_module", {sm[sc]}});
        for (Elem a = 0; a < N; ++a) {
            for (Elem b = 0; b < N; ++b)
                if (T(sc, A(a, b)) != A(T(sc, a), T(sc, b)))
                    bad.push_back({"act_add_distributive", {sm[sc], nm[a], nm[b]}});
            for (Elem sc2 = 0; sc2 < NS; ++sc2) {
                if (T(s->add(sc, sc2), a) != A(T(sc, a), T(sc2, a)))
                    bad.push_back({"act_scalar_add_distributive", {sm[sc], sm[sc2], nm[a]}});
                if (T(s->mul(sc, sc2), a) != T(sc, T(sc2, a)))
                    bad.push_back({"act_associative", {sm[sc], sm[sc2], nm[a]}});
            }
        }
    }
    for (Elem a = 0; a < N; ++a) {
        if (T(s->one(), a) != a) bad.push_back({"act_identity", {nm[a]}});
        if (T(s->zero(), a) != zero) bad.push_back({"act_zero_scalar", {nm[a]}});
    }
    if (!bad.empty()) throw AxiomError("semimodule '" + raw.name + "'", std::move(bad));

    auto m = std::make_shared<Semimodule>();
    m->name_ = raw.name;
    m->over_ = std::move(s);
    m->names_ = raw.elements;
    m->zero_ = zero;
    m->add_ = std::move(add);
    m->act_ = std::move(act);
    return m;
}

namespace detail {

std::vector<Elem> closure_members(const Semimodule& m, std::span<const Elem> seed) {
    return close_under_ops(m, seed);
}

SemimodulePtr module_from_tables(std::string name, SemiringPtr over,
                                 std::vector<std::string> elem_names, Elem zero,
                                 const std::vector<Elem>& add, const std::vector<Elem>& act) {
    RawSemimodule raw;
    raw.name = std::move(name);
    raw.over = over->name();
    raw.elements = std::move(elem_names);
    raw.zero = raw.elements[zero];
    const std::size_t n = raw.elements.size();
    raw.add.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) raw.add[i].push_back(raw.elements[add[i * n + j]]);
    raw.act.resize(static_cast<std::size_t>(over->size()));
    for (std::size_t i = 0; i < raw.act.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) raw.act[i].push_back(raw.elements[act[i * n + j]]);
    return validate_semimodule(std::move(over), raw);
}

std::vector<int> congruence_closure(const Semimodule& m,
                                    const std::vector<std::pair<Elem, Elem>>& seed) {
    const int n = m.size();
    const int ns = m.over()->size();
    UnionFind uf(n);
    for (auto [a, b] : seed) uf.unite(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = x + 1; y < n; ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                for (Elem z = 0; z < n; ++z)
                    if (uf.unite(m.add(x, z), m.add(y, z))) changed = true;
                for (Elem s = 0; s < ns; ++s)
                    if (uf.unite(m.act(s, x), m.act(s, y))) changed = true;
            }
    }
    // Number classes by least member (union rank keeps least element as root).
    std::vector<int> root(n), reps;
    for (Elem e = 0; e < n; ++e) root[e] = uf.find(e);
    for (Elem e = 0; e < n; ++e)
        if (root[e] == e) reps.push_back(e);
    std::vector<int> class_of(n);
    for (Elem e = 0; e < n; ++e) {
        auto it = std::lower_bound(reps.begin(), reps.end(), root[e]);
        class_of[e] = static_cast<int>(it - reps.begin());
    }
    return class_of;
}

Quotient quotient_by_classes(const SemimodulePtr& m, const std::vector<int>& class_of,
                             const std::string& name) {
    const int n = m->size();
    const int ns = m->over()->size();
    const int k = 1 + *std::max_element(class_of.begin(), class_of.end());
    std::vector<Elem> rep(k, -1);
    for (Elem e = 0; e < n; ++e)
        if (rep[class_of[e]] < 0) rep[class_of[e]] = e;

    std::vector<Elem> add(static_cast<std::size_t>(k) * k), act(static_cast<std::size_t>(ns) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) add[static_cast<std::size_t>(i) * k + j] = class_of[m->add(rep[i], rep[j])];
    for (Elem s = 0; s < ns; ++s)
        for (int j = 0; j < k; ++j) act[static_cast<std::size_t>(s) * k + j] = class_of[m->act(s, rep[j])];

    // The relation must be a congruence; representative independence is a
    // structural guarantee, so a mismatch is an internal bug.
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y)
            if (class_of[m->add(x, y)] !=
                add[static_cast<std::size_t>(class_of[x]) * k + class_of[y]])
                throw std::logic_error("quotient tables depend on representatives (add)");
        for (Elem s = 0; s < ns; ++s)
            if (class_of[m->act(s, x)] != act[static_cast<std::size_t>(s) * k + class_of[x]])
                throw std::logic_error("quotient tables depend on representatives (act)");
    }

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) names.push_back("[" + m->elem_name(rep[i]) + "]");
    SemimodulePtr q = module_from_tables(name, m->over(), std::move(names),
                                         class_of[m->zero()], add, act);
    std::vector<Elem> proj(static_cast<std::size_t>(n));
    for (Elem e = 0; e < n; ++e) proj[e] = class_of[e];
    return Quotient{q, LinearMap{m, q, std::move(proj)}};
}

}  // namespace detail

SemimodulePtr regular_module(const SemiringPtr& s) {
    const std::size_t n = static_cast<std::size_t>(s->size());
    std::vector<Elem> add(n * n), act(n * n);
    for (Elem a = 0; a < s->size(); ++a)
        for (Elem b = 0; b < s->size(); ++b) {
            add[static_cast<std::size_t>(a) * n + b] = s->add(a, b);
            act[static_cast<std::size_t>(a) * n + b] = s->mul(a, b);
        }
    return detail::module_from_tables(s->name(), s, s->elem_names(), s->zero(), add, act);
}

SemimodulePtr zero_module(const SemiringPtr& s, std::string name) {
    if (name.empty()) name = "zero(" + s->name() + ")";
    std::vector<Elem> add{0}, act(static_cast<std::size_t>(s->size()), 0);
    return detail::module_from_tables(std::move(name), s, {"0"}, 0, add, act);
}

std::vector<Elem> cancellative_subset(const Semimodule& m) {
    std::vector<Elem> out;
    for (Elem a = 0; a < m.size(); ++a) {
        bool ok = true;
        for (Elem x = 0; x < m.size() && ok; ++x)
            for (Elem y = x + 1; y < m.size() && ok; ++y)
                if (m.add(a, x) == m.add(a, y)) ok = false;
        if (ok) out.push_back(a);
    }
    return out;
}

Subsemimodule generated_subsemimodule(const SemimodulePtr& m, std::span<const Elem> seed) {
    std::vector<Elem> members = close_under_ops(*m, seed);
    bool subtractive = s_closure_raw(*m, members) == members;
    return Subsemimodule{m, std::move(members), subtractive};
}

Subsemimodule make_subsemimodule(const SemimodulePtr& m, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_closed(*m, members))
        throw ShapeError("member set is not a subsemimodule of " + m->name());
    bool subtractive = s_closure_raw(*m, members) == members;
    return Subsemimodule{m, std::move(members), subtractive};
}

std::vector<Subsemimodule> enumerate_subsemimodules(const SemimodulePtr& m, bool subtractive_only,
                                                    const SearchLimits& limits) {
    std::set<std::vector<Elem>> seen;
    std::deque<std::vector<Elem>> work;
    std::uint64_t candidates = 0;

    std::vector<Elem> least = close_under_ops(*m, {});
    seen.insert(least);
    work.push_back(least);
    while (!work.empty()) {
        std::vector<Elem> c = std::move(work.front());
        work.pop_front();
        for (Elem x = 0; x < m->size(); ++x) {
            if (sorted_contains(c, x)) continue;
            if (++candidates > limits.cap)
                throw SearchCapExceeded("subsemimodule enumeration of " + m->name() +
                                        " exceeded cap " + std::to_string(limits.cap));
            std::vector<Elem> seed(c);
            seed.push_back(x);
            std::vector<Elem> d = close_under_ops(*m, seed);
            if (seen.insert(d).second) work.push_back(d);
        }
    }

    std::vector<std::vector<Elem>> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subsemimodule> out;
    for (auto& members : all) {
        bool subtractive = s_closure_raw(*m, members) == members;
        if (subtractive_only && !subtractive) continue;
        out.push_back(Subsemimodule{m, std::move(members), subtractive});
    }
    return out;
}

Subsemimodule subtractive_closure(const Subsemimodule& l) {
    std::vector<Elem> closed = s_closure_raw(*l.parent, l.members);
    bool subtractive = s_closure_raw(*l.parent, closed) == closed;
    return Subsemimodule{l.parent, std::move(closed), subtractive};
}

Quotient quotient_semimodule(const SemimodulePtr& m, const Subsemimodule& l, std::string name) {
    if (l.parent != m) throw ShapeError("subsemimodule does not belong to " + m->name());
    if (name.empty()) name = "quot(" + m->name() + "," + l.label() + ")";
    // Bourne pairs: m ~ m' iff (m + L) meets (m' + L).
    const int n = m->size();
    std::vector<std::vector<Elem>> reach(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) {
        for (Elem e : l.members) reach[x].push_back(m->add(x, e));
        std::sort(reach[x].begin(), reach[x].end());
        reach[x].erase(std::unique(reach[x].begin(), reach[x].end()), reach[x].end());
    }
    std::vector<std::pair<Elem, Elem>> seed;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y) {
            bool meets = false;
            for (Elem v : reach[x])
                if (sorted_contains(reach[y], v)) {
                    meets = true;
                    break;
                }
            if (meets) seed.emplace_back(x, y);
        }
    std::vector<int> class_of = detail::congruence_closure(*m, seed);
    return detail::quotient_by_classes(m, class_of, name);
}

Product direct_product(const std::vector<SemimodulePtr>& factors, const SearchLimits& limits,
                       std::string name) {
    if (factors.empty()) throw ShapeError("direct product of an empty family");
    const SemiringPtr& s = factors.front()->over();
    for (const auto& f : factors)
        if (f->over() != s)
            throw ShapeError("direct product factors live over different semirings");

    std::uint64_t size = 1;
    for (const auto& f : factors) {
        size *= static_cast<std::uint64_t>(f->size());
        if (size > limits.cap)
            throw SearchCapExceeded("direct product size exceeds cap " +
                                    std::to_string(limits.cap));
    }
    const int k = static_cast<int>(factors.size());
    const int n = static_cast<int>(size);

    std::vector<int> stride(static_cast<std::size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1]->size();
    auto component = [&](int idx, int f) { return (idx / stride[f]) % factors[f]->size(); };
    auto compose_idx = [&](const std::vector<Elem>& comps) {
        int idx = 0;
        for (int f = 0; f < k; ++f) idx += comps[f] * stride[f];
        return idx;
    };

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    std::string prod_name = std::move(name);
    if (prod_name.empty()) {
        prod_name = "prod(";
        for (int f = 0; f < k; ++f) {
            if (f) prod_name += ",";
            prod_name += factors[f]->name();
        }
        prod_name += ")";
    }
    for (int idx = 0; idx < n; ++idx) {
        std::string nm = "(";
        for (int f = 0; f < k; ++f) {
            if (f) nm += ",";
            nm += factors[f]->elem_name(component(idx, f));
        }
        names.push_back(nm + ")");
    }

    std::vector<Elem> add(static_cast<std::size_t>(n) * n);
    std::vector<Elem> act(static_cast<std::size_t>(s->size()) * n);
    std::vector<Elem> comps(static_cast<std::size_t>(k));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int f = 0; f < k; ++f)
                comps[f] = factors[f]->add(component(x, f), component(y, f));
            add[static_cast<std::size_t>(x) * n + y] = compose_idx(comps);
        }
    for (Elem sc = 0; sc < s->size(); ++sc)
        for (int x = 0; x < n; ++x) {
            for (int f = 0; f < k; ++f) comps[f] = factors[f]->act(sc, component(x, f));
            act[static_cast<std::size_t>(sc) * n + x] = compose_idx(comps);
        }

    std::vector<Elem> zero_comps(static_cast<std::size_t>(k));
    for (int f = 0; f < k; ++f) zero_comps[f] = factors[f]->zero();
    SemimodulePtr p = detail::module_from_tables(prod_name, s, std::move(names),
                                                 compose_idx(zero_comps), add, act);

    Product out;
    out.module = p;
    for (int f = 0; f < k; ++f) {
        std::vector<Elem> inj(static_cast<std::size_t>(factors[f]->size()));
        for (Elem e = 0; e < factors[f]->size(); ++e) {
            std::vector<Elem> c(zero_comps);
            c[f] = e;
            inj[e] = compose_idx(c);
        }
        std::vector<Elem> proj(static_cast<std::size_t>(n));
        for (int idx = 0; idx < n; ++idx) proj[idx] = component(idx, f);
        out.injections.push_back(LinearMap{factors[f], p, std::move(inj)});
        out.projections.push_back(LinearMap{p, factors[f], std::move(proj)});
    }
    return out;
}

Embedded materialize(const Subsemimodule& l, std::string name) {
    const Semimodule& parent = *l.parent;
    if (name.empty()) name = "sub(" + parent.name() + "," + l.label() + ")";
    const int k = static_cast<int>(l.members.size());
    std::vector<int> local(static_cast<std::size_t>(parent.size()), -1);
    for (int i = 0; i < k; ++i) local[l.members[i]] = i;
    if (local[parent.zero()] < 0)
        throw ShapeError("subsemimodule misses the zero of " + parent.name());

    std::vector<std::string> names;
    for (Elem e : l.members) names.push_back(parent.elem_name(e));
    std::vector<Elem> add(static_cast<std::size_t>(k) * k);
    std::vector<Elem> act(static_cast<std::size_t>(parent.over()->size()) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            add[static_cast<std::size_t>(i) * k + j] = local[parent.add(l.members[i], l.members[j])];
    for (Elem s = 0; s < parent.over()->size(); ++s)
        for (int j = 0; j < k; ++j)
            act[static_cast<std::size_t>(s) * k + j] = local[parent.act(s, l.members[j])];

    SemimodulePtr sub = detail::module_from_tables(std::move(name), parent.over(),
                                                   std::move(names), local[parent.zero()], add,
                                                   act);
    std::vector<Elem> incl(l.members.begin(), l.members.end());
    return Embedded{sub, LinearMap{sub, l.parent, std::move(incl)}};
}

Report is_divisible(const SemimodulePtr& m) {
    const Semiring& s = *m->over();
    Report r;
    r.procedure = "is_divisible";
    r.inputs = {m->name()};
    r.claim = "every scalar that is not a zero divisor acts surjectively on " + m->name();
    r.verdict = true;
    for (Elem sc : non_zero_divisors(s)) {
        std::vector<char> hit(static_cast<std::size_t>(m->size()), 0);
        for (Elem x = 0; x < m->size(); ++x) hit[m->act(sc, x)] = 1;
        for (Elem y = 0; y < m->size(); ++y)
            if (!hit[y]) {
                r.verdict = false;
                r.witnesses.push_back(Witness{
                    "not_divisible",
                    {{"scalar", s.elem_name(sc)}, {"unreached", m->elem_name(y)}}});
                return r;
            }
    }
    return r;
}

Report is_ideal_simple(const SemimodulePtr& m, const SearchLimits& limits) {
    if (m->size() == 1) throw DegenerateInput("ideal-simplicity is undefined for the zero module");
    auto subs = enumerate_subsemimodules(m, false, limits);
    Report r;
    r.procedure = "is_ideal_simple";
    r.inputs = {m->name()};
    r.claim = "the only subsemimodules of " + m->name() + " are {0} and the whole module";
    r.statistics["subsemimodules"] = subs.size();
    r.verdict = subs.size() == 2;
    if (!r.verdict) {
        for (const auto& sub : subs)
            if (sub.members.size() > 1 && static_cast<int>(sub.members.size()) < m->size()) {
                r.witnesses.push_back(Witness{"proper_subsemimodule", {{"members", sub.label()}}});
                break;
            }
    }
    return r;
}

}  // namespace semimod

#include "semimod/semiring.hpp"

#include <algorithm>

#include "validate_util.hpp"

namespace semimod {

using detail::NameIndex;
using detail::resolve_table;

std::optional<Elem> Semiring::index_of(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<Elem>(i);
    return std::nullopt;
}

bool Semiring::mul_commutative() const {
    for (Elem a = 0; a < size(); ++a)
        for (Elem b = 0; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Semiring::additively_idempotent() const {
    for (Elem a = 0; a < size(); ++a)
        if (add(a, a) != a) return false;
    return true;
}

SemiringPtr validate_semiring(const RawSemiring& raw) {
    if (raw.elements.empty()) throw ShapeError("semiring '" + raw.name + "' has no elements");
    NameIndex ix(raw.elements);
    const Elem zero = ix.resolve(raw.zero, "zero");
    const Elem one = ix.resolve(raw.one, "one");
    const std::size_t n = raw.elements.size();

    std::vector<AxiomViolation> bad;
    std::vector<Elem> add = resolve_table(raw.add, n, n, ix, raw.elements, "add", bad);
    std::vector<Elem> mul = resolve_table(raw.mul, n, n, ix, raw.elements, "mul", bad);
    if (!bad.empty()) throw AxiomError("semiring '" + raw.name + "'", std::move(bad));

    const auto& nm = raw.elements;
    auto A = [&](Elem a, Elem b) { return add[static_cast<std::size_t>(a) * n + b]; };
    auto M = [&](Elem a, Elem b) { return mul[static_cast<std::size_t>(a) * n + b]; };
    const int N = static_cast<int>(n);

    if (zero == one) bad.push_back({"zero_ne_one", {nm[zero]}});
    for (Elem a = 0; a < N; ++a) {
        if (A(zero, a) != a || A(a, zero) != a) bad.push_back({"add_identity", {nm[a]}});
        if (M(one, a) != a || M(a, one) != a) bad.push_back({"mul_identity", {nm[a]}});
        if (M(zero, a) != zero || M(a, zero) != zero) bad.push_back({"absorption", {nm[a]}});
    }
    for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
            if (A(a, b) != A(b, a)) bad.push_back({"add_commutative", {nm[a], nm[b]}});
    for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b)
            for (Elem c = 0; c < N; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c)))
                    bad.push_back({"add_associative", {nm[a], nm[b], nm[c]}});
                if (M(M(a, b), c) != M(a, M(b, c)))
                    bad.push_back({"mul_associative", {nm[a], nm[b], nm[c]}});
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    bad.push_back({"left_distributive", {nm[a], nm[b], nm[c]}});
                if (M(A(a, b), c) != A(M(a, c), M(b, c)))
                    bad.push_back({"right_distributive", {nm[a], nm[b], nm[c]}});
            }
    if (!bad.empty()) throw AxiomError("semiring '" + raw.name + "'", std::move(bad));

    auto s = std::make_shared<Semiring>();
    s->name_ = raw.name;
    s->names_ = raw.elements;
    s->zero_ = zero;
    s->one_ = one;
    s->add_ = std::move(add);
    s->mul_ = std::move(mul);
    return s;
}

std::vector<Elem> zero_sums(const Semiring& s) {
    std::vector<Elem> out;
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem t = 0; t < s.size(); ++t)
            if (s.add(a, t) == s.zero()) {
                out.push_back(a);
                break;
            }
    return out;
}

std::vector<Elem> non_zero_divisors(const Semiring& s) {
    std::vector<Elem> out;
    for (Elem a = 0; a < s.size(); ++a) {
        bool ok = true;
        for (Elem t = 0; t < s.size() && ok; ++t) {
            if (t == s.zero()) continue;
            if (s.mul(a, t) == s.zero() || s.mul(t, a) == s.zero()) ok = false;
        }
        if (ok) out.push_back(a);
    }
    return out;
}

SemiringPtr natural_truncation(const std::string& name, int lo, int period) {
    if (lo < 0 || period < 1 || lo + period < 2)
        throw ShapeError("natural_truncation needs lo >= 0, period >= 1, lo+period >= 2");
    const int n = lo + period;
    if (n > 256) throw SearchCapExceeded("natural_truncation size " + std::to_string(n));
    auto canon = [&](long long x) -> Elem {
        if (x < n) return static_cast<Elem>(x);
        return static_cast<Elem>(lo + (x - lo) % period);
    };
    RawSemiring raw;
    raw.name = name;
    for (int i = 0; i < n; ++i) raw.elements.push_back(std::to_string(i));
    raw.zero = "0";
    raw.one = "1";
    raw.add.resize(n);
    raw.mul.resize(n);
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            raw.add[a].push_back(std::to_string(canon(a + b)));
            raw.mul[a].push_back(std::to_string(canon(a * b)));
        }
    return validate_semiring(raw);
}

}  // namespace semimod

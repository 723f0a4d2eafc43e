#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semimod/report.hpp"
#include "semimod/semiring.hpp"

namespace semimod {

struct RawSemimodule {
    std::string name;
    std::string over;  // semiring name, informational; the caller resolves it
    std::vector<std::string> elements;
    std::string zero;
    std::vector<std::vector<std::string>> add;  // |M| x |M|
    std::vector<std::vector<std::string>> act;  // |S| x |M|, one row per scalar
};

// A finite left semimodule: a commutative monoid (M,+,0) with a scalar
// action satisfying s·(m+m') = s·m+s·m', (s+s')·m = s·m+s'·m,
// (ss')·m = s·(s'·m), 1·m = m, 0·m = 0, s·0 = 0. Immutable once validated.
class Semimodule {
public:
    const std::string& name() const noexcept { return name_; }
    const SemiringPtr& over() const noexcept { return over_; }
    int size() const noexcept { return static_cast<int>(names_.size()); }
    Elem zero() const noexcept { return zero_; }
    Elem add(Elem m, Elem n) const { return add_[static_cast<std::size_t>(m) * names_.size() + n]; }
    Elem act(Elem s, Elem m) const { return act_[static_cast<std::size_t>(s) * names_.size() + m]; }
    const std::string& elem_name(Elem e) const { return names_[e]; }
    const std::vector<std::string>& elem_names() const noexcept { return names_; }
    std::optional<Elem> index_of(std::string_view n) const;

private:
    friend std::shared_ptr<const Semimodule> validate_semimodule(SemiringPtr, const RawSemimodule&);

    std::string name_;
    SemiringPtr over_;
    std::vector<std::string> names_;
    Elem zero_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> act_;
};

using SemimodulePtr = std::shared_ptr<const Semimodule>;

// A subset of a parent's carrier, closed under + and the action and
// containing zero. `subtractive` records whether the subset equals its
// subtractive closure.
struct Subsemimodule {
    SemimodulePtr parent;
    std::vector<Elem> members;  // sorted ascending
    bool subtractive = false;

    bool contains(Elem e) const;
    std::string label() const;  // "{0,a}" in parent element names
};

// A total S-linear map between semimodules over the same semiring:
// f(0) = 0, f(m+m') = f(m)+f(m'), f(s·m) = s·f(m).
struct LinearMap {
    SemimodulePtr source;
    SemimodulePtr target;
    std::vector<Elem> images;  // images[e] for every source element e

    Elem operator()(Elem e) const { return images[e]; }
    bool injective() const;
    bool surjective() const;
    std::string describe() const;  // "0->0, 1->a, a->a" in element names
};

bool operator==(const LinearMap& a, const LinearMap& b);

// --- validation and constructions -----------------------------------------

SemimodulePtr validate_semimodule(SemiringPtr s, const RawSemimodule& raw);

// S acting on itself by its own multiplication.
SemimodulePtr regular_module(const SemiringPtr& s);

SemimodulePtr zero_module(const SemiringPtr& s, std::string name = "");

// K+(M) = {m | m+x = m+y implies x = y}. M is cancellative iff this is all of M.
std::vector<Elem> cancellative_subset(const Semimodule& m);

// Least closed subset containing the seed and zero.
Subsemimodule generated_subsemimodule(const SemimodulePtr& m, std::span<const Elem> seed);

// Wraps an already-closed member set (throws ShapeError if not closed).
Subsemimodule make_subsemimodule(const SemimodulePtr& m, std::vector<Elem> members);

// All closed subsets, canonically ordered by size then lexicographic member
// list; closure-of-generators search, SearchCapExceeded past limits.cap
// candidate closures.
std::vector<Subsemimodule> enumerate_subsemimodules(const SemimodulePtr& m,
                                                    bool subtractive_only = false,
                                                    const SearchLimits& limits = {});

// L-bar = {m | m+l = l' for some l,l' in L}; always subtractive, contains L.
Subsemimodule subtractive_closure(const Subsemimodule& l);

struct Quotient {
    SemimodulePtr module;
    LinearMap projection;
};

// Quotient by the Bourne congruence m ~ m' iff m+l = m'+l' for some l,l' in
// L. Ker(projection) equals the subtractive closure of L.
Quotient quotient_semimodule(const SemimodulePtr& m, const Subsemimodule& l,
                             std::string name = "");

struct Product {
    SemimodulePtr module;
    std::vector<LinearMap> injections;   // one per factor
    std::vector<LinearMap> projections;  // projection(k) ∘ injection(k) = id
};

Product direct_product(const std::vector<SemimodulePtr>& factors, const SearchLimits& limits = {},
                       std::string name = "");

// A subsemimodule materialized as a standalone module plus its inclusion.
struct Embedded {
    SemimodulePtr module;
    LinearMap inclusion;
};

Embedded materialize(const Subsemimodule& l, std::string name = "");

// True iff every non-zero-divisor scalar acts surjectively; failure witness
// is (scalar, unreached element).
Report is_divisible(const SemimodulePtr& m);

// True iff the only closed subsets are {0} and M. DegenerateInput on M = {0}.
Report is_ideal_simple(const SemimodulePtr& m, const SearchLimits& limits = {});

// --- internal building block shared with morphisms -------------------------
namespace detail {

// Builds a validated semimodule directly from index tables (names must be
// token-safe; tables must already satisfy the laws - validation runs anyway).
SemimodulePtr module_from_tables(std::string name, SemiringPtr over,
                                 std::vector<std::string> elem_names, Elem zero,
                                 const std::vector<Elem>& add, const std::vector<Elem>& act);

// Sorted member list of the closure of seed ∪ {zero} under add and act.
std::vector<Elem> closure_members(const Semimodule& m, std::span<const Elem> seed);

// Saturates seed pairs into a congruence (union-find closed under + and the
// action); returns the class id of every element, classes numbered by their
// least member.
std::vector<int> congruence_closure(const Semimodule& m,
                                    const std::vector<std::pair<Elem, Elem>>& seed);

// Quotient of m by an element->class map; class names are "[least member]".
Quotient quotient_by_classes(const SemimodulePtr& m, const std::vector<int>& class_of,
                             const std::string& name);

}  // namespace detail

}  // namespace semimod

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semimod/core.hpp"

namespace semimod {

// Unvalidated table data, as it comes from a file or from code. Tables are
// row-major over the declared element names.
struct RawSemiring {
    std::string name;
    std::vector<std::string> elements;
    std::string zero;
    std::string one;
    std::vector<std::vector<std::string>> add;
    std::vector<std::vector<std::string>> mul;
};

// A finite semiring given by Cayley tables: (S,+,0) a commutative monoid,
// (S,·,1) a monoid, 0 ≠ 1, multiplication absorbs 0 and distributes over +
// on both sides. Immutable once validated.
class Semiring {
public:
    const std::string& name() const noexcept { return name_; }
    int size() const noexcept { return static_cast<int>(names_.size()); }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }
    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * names_.size() + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * names_.size() + b]; }
    const std::string& elem_name(Elem e) const { return names_[e]; }
    const std::vector<std::string>& elem_names() const noexcept { return names_; }
    std::optional<Elem> index_of(std::string_view n) const;

    bool mul_commutative() const;
    bool additively_idempotent() const;

private:
    friend std::shared_ptr<const Semiring> validate_semiring(const RawSemiring& raw);

    std::string name_;
    std::vector<std::string> names_;
    Elem zero_ = 0;
    Elem one_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

// Checks shape, name resolution and every semiring axiom; throws ShapeError /
// DuplicateElement / UnresolvedReference / AxiomError (with the complete
// violation list, one witness tuple per violating instance).
SemiringPtr validate_semiring(const RawSemiring& raw);

// V(S) = {s | s+t = 0 for some t}. S is zerosumfree iff this is {zero}.
std::vector<Elem> zero_sums(const Semiring& s);

// Elements s such that s·t ≠ 0 and t·s ≠ 0 for every t ≠ 0. Note 0 itself is
// a zero divisor whenever |S| > 1.
std::vector<Elem> non_zero_divisors(const Semiring& s);

// The finite cyclic semiring {0,...,lo+period-1}: the quotient of the
// naturals collapsing lo ~ lo+period, with both operations reduced
// accordingly. Requires lo >= 1 (lo = 0 would be the ring Z/period; callers
// that want it can still ask: lo = 0, period >= 2 is accepted).
SemiringPtr natural_truncation(const std::string& name, int lo, int period);

}  // namespace semimod

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semimod {

// Dense element index into a carrier's declaration-order element list.
using Elem = int;

// Knobs for enumeration-heavy operations. `cap` bounds how many candidates a
// single search may examine before SearchCapExceeded is thrown; `jobs` is the
// worker count for searches that parallelize. Results are canonically ordered
// regardless of `jobs`.
struct SearchLimits {
    std::uint64_t cap = 1'000'000;
    unsigned jobs = 1;
};

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& w) : Error("ShapeError", w) {}
};

struct DuplicateElement : Error {
    explicit DuplicateElement(const std::string& w) : Error("DuplicateElement", w) {}
};

struct UnresolvedReference : Error {
    explicit UnresolvedReference(const std::string& w) : Error("UnresolvedReference", w) {}
};

struct SearchCapExceeded : Error {
    explicit SearchCapExceeded(const std::string& w) : Error("SearchCapExceeded", w) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& w) : Error("DegenerateInput", w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("DomainError", w) {}
};

// A sampled check contradicting a statement that holds identically; firing
// means the implementation (not the sample) is wrong.
struct SampleViolation : Error {
    explicit SampleViolation(const std::string& w) : Error("SampleViolation", w) {}
};

struct CorpusMismatch : Error {
    explicit CorpusMismatch(const std::string& w) : Error("CorpusMismatch", w) {}
};

struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& w)
        : Error("ParseError",
                "parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + w),
          line(line_), col(col_) {}
    int line;
    int col;
};

// One violated law instance: the law's name plus the offending elements.
struct AxiomViolation {
    std::string law;
    std::vector<std::string> witness;

    std::string to_string() const {
        std::ostringstream os;
        os << law << "(";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) os << ", ";
            os << witness[i];
        }
        os << ")";
        return os.str();
    }
};

// Carries the complete list of violations found by a validator.
class ValidationError : public Error {
public:
    ValidationError(std::string kind, const std::string& subject, std::vector<AxiomViolation> vs)
        : Error(std::move(kind), summarize(subject, vs)), violations_(std::move(vs)) {}

    const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
    static std::string summarize(const std::string& subject, const std::vector<AxiomViolation>& vs) {
        std::ostringstream os;
        os << subject << ": " << vs.size() << " violation(s)";
        for (std::size_t i = 0; i < vs.size() && i < 8; ++i) os << "; " << vs[i].to_string();
        if (vs.size() > 8) os << "; ...";
        return os.str();
    }

    std::vector<AxiomViolation> violations_;
};

struct AxiomError : ValidationError {
    AxiomError(const std::string& subject, std::vector<AxiomViolation> vs)
        : ValidationError("AxiomViolation", subject, std::move(vs)) {}
};

struct LinearityViolation : ValidationError {
    LinearityViolation(const std::string& subject, std::vector<AxiomViolation> vs)
        : ValidationError("LinearityViolation", subject, std::move(vs)) {}
};

namespace detail {

// Checked product used to pre-size enumeration spaces.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace detail

}  // namespace semimod

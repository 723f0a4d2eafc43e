#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semimod/report.hpp"

namespace semimod {

// A 2x2 matrix over the non-negative rationals, exact arithmetic throughout.
class QMat {
public:
    QMat() : e_{0, 0, 0, 0} {}
    QMat(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

    static QMat identity() { return QMat(1, 0, 0, 1); }

    const mpq_class& at(int row, int col) const { return e_[static_cast<std::size_t>(row) * 2 + col]; }
    bool is_zero() const;
    std::string to_string() const;  // [[a,b],[c,d]]

private:
    std::array<mpq_class, 4> e_;
};

bool operator==(const QMat& a, const QMat& b);
inline bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

QMat mat_add(const QMat& a, const QMat& b);
QMat mat_mul(const QMat& a, const QMat& b);
QMat scalar_mul(const mpq_class& c, const QMat& a);

// The three families of non-trivial proper subtractive left ideals of the
// 2x2 matrices: E1 (second column zero), E2 (first column zero), and
// Nr (first column = r times the second), r > 0.
struct IdealTag {
    enum Kind { E1, E2, Nr } which = E1;
    mpq_class r = 1;  // meaningful only for Nr

    std::string label() const;
    // The span generator the extension construction divides through:
    // E1 -> [[1,0],[0,0]], E2 -> [[0,0],[0,1]], Nr -> [[1,1/r],[0,0]].
    QMat generator_image() const;
};

bool ideal_member(const IdealTag& tag, const QMat& a);

// For each sample (X, A) with A in the ideal: if X+A lands in the ideal then
// X must already be in it, and s·A + B stays in the ideal for the arbitrary
// matrix X playing s and B := A. A SampleViolation would falsify the ideal's
// subtractivity/closure and must never fire.
Report check_subtractive_samples(const IdealTag& tag,
                                 const std::vector<std::pair<QMat, QMat>>& samples);

// The extension h(X) = X·g_n0 of the i-injectivity construction, evaluated
// at a probe from the ideal; DomainError if the probe is outside. The
// structural identity probe·generator_image = probe is asserted.
QMat i_inj_extension(const IdealTag& tag, const QMat& g_n0, const QMat& probe);

// Replays the diagonal-ideal counterexample with exact rationals: the two
// retractions h1, h2 onto N1 agree on N1, every map vanishing on N1 is
// forced to zero (the only non-negative solution of l+n = m+o = 0 is
// l=m=n=o=0), and h1 != h2 at the identity matrix.
Report verify_counterexample_N1();

struct MatrixDemoOptions {
    std::uint64_t samples = 1000;
    std::uint64_t seed = 7;
};

// Seeded end-to-end run of every exact-rational witness: ideal closure and
// subtractivity for E1/E2/Nr with sampled r, the extension identities, the
// one-generator collapse of E1, and verify_counterexample_N1.
Report matrix_demo(const MatrixDemoOptions& options = {});

}  // namespace semimod

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace weylkit {

enum class DecayKind { Exponential, Algebraic };

/**
 * Closed-form decay envelope for a solution-family kernel on (0, infinity):
 *   Exponential:  M * exp(-c t) * t^(beta - 1)
 *   Algebraic:    M * t^(beta - 1) / (1 + t^gamma)
 * with M > 0, beta in (0, 1], c > 0 (exponential), gamma > 1 (algebraic).
 * Both envelopes decrease monotonically in t, blow up at 0 unless beta = 1,
 * and are integrable at 0.  value(0) is only defined for beta = 1.
 */
struct EnvelopeLaw {
    DecayKind kind = DecayKind::Algebraic;
    double M = 1.0;
    double c = 1.0;     // exponential rate (Exponential only)
    double beta = 1.0;  // singularity exponent at 0
    double gamma = 2.0; // algebraic tail rate (Algebraic only)

    static EnvelopeLaw exponential(double M, double c, double beta);
    static EnvelopeLaw algebraic(double M, double beta, double gamma);

    double value(double t) const; // throws std::domain_error for t < 0 or t = 0 with beta < 1
    bool singular_at_zero() const { return beta < 1.0; }
};

/**
 * A kernel t -> R(t): either the envelope itself (pure decay-law kernels)
 * or explicit scalar / diagonal-matrix samples certified to obey a given
 * envelope, slot by slot.  eval(t, slot) is the scalar value of slot `slot`;
 * non-diagonal kernels have a single slot.
 */
class KernelSpec {
public:
    static KernelSpec exp_law(double M, double c, double beta);
    static KernelSpec alg_law(double M, double beta, double gamma);
    static KernelSpec scalar(std::function<double(double)> f, EnvelopeLaw certified);
    static KernelSpec diagonal(std::vector<std::function<double(double)>> slots,
                               EnvelopeLaw certified);

    std::size_t slots() const { return fns_.empty() ? 1 : fns_.size(); }
    bool is_pure_law() const { return fns_.empty(); }
    double eval(double t, std::size_t slot = 0) const;
    const EnvelopeLaw& envelope() const { return env_; }

private:
    explicit KernelSpec(EnvelopeLaw env) : env_(env) {}
    EnvelopeLaw env_;
    std::vector<std::function<double(double)>> fns_; // empty for pure laws
};

} // namespace weylkit

#pragma once

#include "finitype/exactmat.hpp"
#include "finitype/quiver.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace finitype {

/// Sign in {-1, 0, +1} per unordered vertex pair; 0 means undefined.
class SignAssignment {
public:
    SignAssignment() = default;
    explicit SignAssignment(std::size_t n) : n_(n), sgn_(n * n, 0) {}

    std::size_t size() const { return n_; }
    int operator()(std::size_t a, std::size_t b) const { return sgn_[a * n_ + b]; }
    void set(std::size_t a, std::size_t b, int s);

    /// Every edge of g carries +1 or -1.
    bool total_on(const Quiver& g) const;

private:
    std::size_t n_ = 0;
    std::vector<signed char> sgn_;
};

/// Quasi-Cartan companion of B: diagonal 2, |c_ij| = |b_ij|, symmetric by signs.
class QuasiCartanCompanion {
public:
    QuasiCartanCompanion() = default;

    /// Throws std::logic_error when c is not a quasi-Cartan companion of b.
    QuasiCartanCompanion(const SkewForm& b, SquareIntMatrix c);

    const SquareIntMatrix& matrix() const { return c_; }

private:
    SquareIntMatrix c_;
};

namespace detail {

/// Sign given to the first undefined edge of a popped cycle. The literal rule
/// (-prod) only meets the sign condition on even cycles; it is kept for
/// differential tests.
enum class ClosingRule { Corrected, Literal };

SignAssignment assign_signs(const Quiver& g, const CycleInventory& inv, ClosingRule rule);

}  // namespace detail

/// Single edges get +1. Cycles are popped from the stack; in each, the first
/// undefined edge is chosen so that the product of (-c_ij) around the cycle is
/// negative, and any other undefined edge gets +1.
/// Throws std::logic_error if a popped cycle has no undefined edge.
SignAssignment assign_signs(const Quiver& g, const CycleInventory& inv);

/// c_ii = 2, c_ij = sgn(i, j) * |b_ij|.
QuasiCartanCompanion build_companion(const SkewForm& b, const SignAssignment& s);

/// Product of (-c_ij) over the edges of the cycle is negative.
bool sign_condition_holds(const SquareIntMatrix& c, const ChordlessCycle& cycle);

struct CompanionVerdict {
    bool positive = false;
    QuasiCartanCompanion companion;
    /// Order of the first non-positive leading minor when not positive.
    std::optional<std::size_t> first_bad_minor;
    /// All leading minors when positive.
    std::vector<Integer> leading_minors;
};

/// Builds the sign-condition companion and tests it for positivity. On a
/// cyclically oriented quiver this decides whether any positive companion exists.
CompanionVerdict positive_companion_exists(const SkewForm& b, const Quiver& g, const CycleInventory& inv);

}  // namespace finitype

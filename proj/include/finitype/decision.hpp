#pragma once

#include "finitype/companion.hpp"
#include "finitype/exactmat.hpp"
#include "finitype/quiver.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace finitype {

/// Outcome of the finite-type test. A matrix that is not skew-symmetrizable
/// lies outside the question and is reported as such, not as infinite type.
struct Decision {
    enum class Verdict { FiniteType, NotFinite, NotSkewSymmetrizable };
    enum class Reason {
        None,
        NotSkewSymmetrizable,
        EdgeBoundExceeded,
        NonCyclicCycle,
        StructuralFailure,
        CompanionNotPositive,
    };

    Verdict verdict = Verdict::NotSkewSymmetrizable;
    Reason reason = Reason::None;

    std::optional<SkewForm> form;
    std::optional<NotSkewSymmetrizable> domain_error;
    std::optional<NotCyclicallyOriented> orientation_failure;
    std::optional<CycleInventory> inventory;
    std::optional<QuasiCartanCompanion> companion;
    std::optional<std::size_t> bad_minor;  // with CompanionNotPositive
    std::vector<Integer> leading_minors;   // with FiniteType

    bool finite() const { return verdict == Verdict::FiniteType; }
};

std::string_view to_string(Decision::Verdict v);
std::string_view to_string(Decision::Reason r);

/// Symmetrizer, quiver, chordless cycles, then the sign-condition companion.
Decision decide(const SquareIntMatrix& b);

/// Same pipeline for an already validated form.
Decision decide(const SkewForm& b);

}  // namespace finitype

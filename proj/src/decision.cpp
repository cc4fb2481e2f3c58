#include "finitype/decision.hpp"

namespace finitype {

std::string_view to_string(Decision::Verdict v) {
    switch (v) {
        case Decision::Verdict::FiniteType: return "FiniteType";
        case Decision::Verdict::NotFinite: return "NotFinite";
        case Decision::Verdict::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    }
    return "?";
}

std::string_view to_string(Decision::Reason r) {
    switch (r) {
        case Decision::Reason::None: return "None";
        case Decision::Reason::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
        case Decision::Reason::EdgeBoundExceeded: return "EdgeBoundExceeded";
        case Decision::Reason::NonCyclicCycle: return "NonCyclicCycle";
        case Decision::Reason::StructuralFailure: return "StructuralFailure";
        case Decision::Reason::CompanionNotPositive: return "CompanionNotPositive";
    }
    return "?";
}

Decision decide(const SquareIntMatrix& b) {
    auto form = compute_skew_symmetrizer(b);
    if (auto* err = std::get_if<NotSkewSymmetrizable>(&form)) {
        Decision d;
        d.verdict = Decision::Verdict::NotSkewSymmetrizable;
        d.reason = Decision::Reason::NotSkewSymmetrizable;
        d.domain_error = *err;
        return d;
    }
    return decide(std::get<SkewForm>(form));
}

Decision decide(const SkewForm& b) {
    Decision d;
    d.form = b;
    const Quiver g = build_quiver(b);

    auto cod = chordless_cycles_cod(g);
    if (auto* failure = std::get_if<NotCyclicallyOriented>(&cod)) {
        d.verdict = Decision::Verdict::NotFinite;
        switch (failure->kind) {
            case NotCyclicallyOriented::Kind::EdgeBoundExceeded: d.reason = Decision::Reason::EdgeBoundExceeded; break;
            case NotCyclicallyOriented::Kind::NonCyclicCycle: d.reason = Decision::Reason::NonCyclicCycle; break;
            case NotCyclicallyOriented::Kind::StructuralFailure: d.reason = Decision::Reason::StructuralFailure; break;
        }
        d.orientation_failure = std::move(*failure);
        return d;
    }

    d.inventory = std::move(std::get<CycleInventory>(cod));
    CompanionVerdict cv = positive_companion_exists(b, g, *d.inventory);
    d.companion = std::move(cv.companion);
    if (cv.positive) {
        d.verdict = Decision::Verdict::FiniteType;
        d.leading_minors = std::move(cv.leading_minors);
    } else {
        d.verdict = Decision::Verdict::NotFinite;
        d.reason = Decision::Reason::CompanionNotPositive;
        d.bad_minor = cv.first_bad_minor;
    }
    return d;
}

}  // namespace finitype

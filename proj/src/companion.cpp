#include "finitype/companion.hpp"

#include <stdexcept>

namespace finitype {

void SignAssignment::set(std::size_t a, std::size_t b, int s) {
    sgn_[a * n_ + b] = static_cast<signed char>(s);
    sgn_[b * n_ + a] = static_cast<signed char>(s);
}

bool SignAssignment::total_on(const Quiver& g) const {
    if (g.size() != n_) return false;
    for (const Arc& arc : g.arcs())
        if ((*this)(arc.from, arc.to) == 0) return false;
    return true;
}

QuasiCartanCompanion::QuasiCartanCompanion(const SkewForm& b, SquareIntMatrix c) : c_(std::move(c)) {
    const SquareIntMatrix& bm = b.matrix();
    const std::size_t n = bm.size();
    if (c_.size() != n) throw std::logic_error("companion: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (c_(i, i) != 2) throw std::logic_error("companion: diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && abs(c_(i, j)) != abs(bm(i, j))) throw std::logic_error("companion: |c_ij| != |b_ij|");
    }
    if (!is_symmetric_by_signs(c_)) throw std::logic_error("companion: not symmetric by signs");
}

namespace detail {

SignAssignment assign_signs(const Quiver& g, const CycleInventory& inv, ClosingRule rule) {
    SignAssignment s(g.size());
    for (const auto& [a, b] : inv.single_edges) s.set(a, b, 1);

    for (auto it = inv.cycles.rbegin(); it != inv.cycles.rend(); ++it) {
        const auto& x = it->vertices;
        const std::size_t t = x.size();
        std::optional<std::size_t> first_undefined;
        int prod = 1;
        for (std::size_t i = 0; i < t; ++i) {
            const std::size_t a = x[i];
            const std::size_t b = x[(i + 1) % t];
            if (s(a, b) != 0) {
                prod *= s(a, b);
            } else if (!first_undefined) {
                first_undefined = i;
            } else {
                s.set(a, b, 1);
            }
        }
        if (!first_undefined) throw std::logic_error("assign_signs: popped cycle has no undefined edge");

        // Sign product around the cycle must be (-1)^(t+1) for prod(-c_ij) < 0.
        int closing = -prod;
        if (rule == ClosingRule::Corrected) closing = (t % 2 == 0 ? -1 : 1) * prod;
        const std::size_t i = *first_undefined;
        s.set(x[i], x[(i + 1) % t], closing);
    }
    return s;
}

}  // namespace detail

SignAssignment assign_signs(const Quiver& g, const CycleInventory& inv) {
    return detail::assign_signs(g, inv, detail::ClosingRule::Corrected);
}

QuasiCartanCompanion build_companion(const SkewForm& b, const SignAssignment& s) {
    const SquareIntMatrix& bm = b.matrix();
    const std::size_t n = bm.size();
    SquareIntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                c(i, j) = 2;
            else if (sgn(bm(i, j)) != 0)
                c(i, j) = s(i, j) * abs(bm(i, j));
        }
    }
    return QuasiCartanCompanion(b, std::move(c));
}

bool sign_condition_holds(const SquareIntMatrix& c, const ChordlessCycle& cycle) {
    const auto& x = cycle.vertices;
    const std::size_t t = x.size();
    Integer prod = 1;
    for (std::size_t i = 0; i < t; ++i) prod *= -c(x[i], x[(i + 1) % t]);
    return sgn(prod) < 0;
}

CompanionVerdict positive_companion_exists(const SkewForm& b, const Quiver& g, const CycleInventory& inv) {
    CompanionVerdict v;
    v.companion = build_companion(b, assign_signs(g, inv));
    v.first_bad_minor = first_nonpositive_minor(v.companion.matrix());
    v.positive = !v.first_bad_minor.has_value();
    if (v.positive) v.leading_minors = leading_principal_minors(v.companion.matrix());
    return v;
}

}  // namespace finitype

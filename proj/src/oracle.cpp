#include "finitype/oracle.hpp"

#include <deque>
#include <functional>
#include <unordered_set>
#include <utility>

namespace finitype {

SkewForm mutate(const SkewForm& form, std::size_t k) {
    const SquareIntMatrix& b = form.matrix();
    const std::size_t n = b.size();
    if (k >= n) throw std::out_of_range("mutate: direction out of range");
    SquareIntMatrix out(n);
    Integer product;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            out(i, j) = b(i, j);
            const int s = sgn(b(i, k));
            if (s == 0) continue;
            product = b(i, k) * b(k, j);
            if (sgn(product) > 0) out(i, j) += s * product;
        }
    }
    return SkewForm(std::move(out), form.symmetrizer());
}

std::optional<LargeEntry> find_large_entry(const SquareIntMatrix& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Integer p = abs(b(i, j) * b(j, i));
            if (p >= 4) return LargeEntry{i, j, std::move(p), 0, b};
        }
    }
    return std::nullopt;
}

namespace {

struct MatrixHash {
    std::size_t operator()(const SquareIntMatrix& m) const {
        std::size_t h = std::hash<std::size_t>{}(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (const Integer& x : m.row(i)) {
                const std::size_t v = static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), 0)) * 2 + (sgn(x) < 0);
                h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
        }
        return h;
    }
};

}  // namespace

MutationClassReport explore_mutation_class(const SkewForm& b, std::size_t limit) {
    MutationClassReport report;
    report.limit = limit;
    report.visited = 1;
    if (auto w = find_large_entry(b.matrix())) {
        report.status = MutationClassReport::Status::LargeEntryFound;
        report.witness = std::move(w);
        return report;
    }

    std::unordered_set<SquareIntMatrix, MatrixHash> seen{b.matrix()};
    std::deque<std::pair<SkewForm, std::size_t>> frontier;
    frontier.emplace_back(b, 0);
    while (!frontier.empty()) {
        auto [current, depth] = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t k = 0; k < current.size(); ++k) {
            SkewForm next = mutate(current, k);
            if (seen.contains(next.matrix())) continue;
            seen.insert(next.matrix());
            ++report.visited;
            if (auto w = find_large_entry(next.matrix())) {
                w->depth = depth + 1;
                report.status = MutationClassReport::Status::LargeEntryFound;
                report.witness = std::move(w);
                return report;
            }
            if (report.visited > limit) {
                report.status = MutationClassReport::Status::LimitExceeded;
                return report;
            }
            frontier.emplace_back(std::move(next), depth + 1);
        }
    }
    report.status = MutationClassReport::Status::FiniteClass;
    return report;
}

std::optional<QuasiCartanCompanion> brute_force_positive_companion(const SkewForm& form, std::size_t cap) {
    const SquareIntMatrix& b = form.matrix();
    const std::size_t n = b.size();

    // Pairs {i, k}, i < k, grouped by k: all signs inside the leading block of
    // order k + 1 are fixed once group k is.
    std::vector<std::vector<std::size_t>> lower(n);
    std::size_t m = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(b(i, k)) != 0) {
                lower[k].push_back(i);
                ++m;
            }
        }
    }
    if (m > cap) throw CapExceeded("brute_force_positive_companion: too many arcs");

    SquareIntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;

    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == n) return true;
        const auto& group = lower[k];
        const std::size_t choices = std::size_t{1} << group.size();
        for (std::size_t mask = 0; mask < choices; ++mask) {
            for (std::size_t e = 0; e < group.size(); ++e) {
                // Most significant bit first, so mask order is lexicographic.
                const bool negative = (mask >> (group.size() - 1 - e)) & 1U;
                const std::size_t i = group[e];
                c(i, k) = abs(b(i, k));
                c(k, i) = abs(b(k, i));
                if (negative) {
                    c(i, k) = -c(i, k);
                    c(k, i) = -c(k, i);
                }
            }
            if (sgn(determinant(c.leading_block(k + 1))) > 0 && search(k + 1)) return true;
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    return QuasiCartanCompanion(form, std::move(c));
}

}  // namespace finitype

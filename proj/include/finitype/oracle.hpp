#pragma once

#include "finitype/companion.hpp"
#include "finitype/exactmat.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace finitype {

inline constexpr std::size_t default_oracle_limit = 100000;
inline constexpr std::size_t default_brute_force_cap = 20;

/// Matrix mutation in direction k (0-based). The result keeps B's symmetrizer.
/// Throws std::out_of_range when k >= n.
SkewForm mutate(const SkewForm& b, std::size_t k);

struct LargeEntry {
    std::size_t i = 0;  // 0-based, i < j
    std::size_t j = 0;
    Integer value;      // |b_ij * b_ji| >= 4
    std::size_t depth = 0;
    SquareIntMatrix matrix;
};

struct MutationClassReport {
    enum class Status { FiniteClass, LargeEntryFound, LimitExceeded };
    Status status = Status::FiniteClass;
    std::size_t visited = 0;
    std::size_t limit = 0;
    std::optional<LargeEntry> witness;
};

/// First pair i < j (row-major) with |b_ij * b_ji| >= 4.
std::optional<LargeEntry> find_large_entry(const SquareIntMatrix& b);

/// Breadth-first search of the labeled mutation class, deduplicated by exact
/// matrix equality. Mutation directions are tried in ascending order.
MutationClassReport explore_mutation_class(const SkewForm& b, std::size_t limit = default_oracle_limit);

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Exhaustive search over the 2^m sign choices of a quasi-Cartan companion.
/// Returns the first positive one in lexicographic sign order (arcs sorted by
/// larger then smaller endpoint, + before -), or nothing. A branch is cut as
/// soon as a completed leading block has a non-positive determinant, which
/// cannot exclude a positive companion.
/// Throws CapExceeded when the quiver has more than `cap` arcs.
std::optional<QuasiCartanCompanion> brute_force_positive_companion(const SkewForm& b,
                                                                   std::size_t cap = default_brute_force_cap);

}  // namespace finitype

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace finitype {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense n x n matrix of arbitrary-precision integers, row-major.
class SquareIntMatrix {
public:
    SquareIntMatrix() = default;
    explicit SquareIntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    /// Throws std::invalid_argument unless every row has as many entries as there are rows.
    SquareIntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static SquareIntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    std::span<const Integer> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

    /// Top-left k x k block.
    SquareIntMatrix leading_block(std::size_t k) const;

    SquareIntMatrix transposed() const;

    friend bool operator==(const SquareIntMatrix& a, const SquareIntMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Integer> entries_;
};

/// Positive diagonal matrix kept in canonical form: on every connected
/// component of the coupling pattern the entries are coprime positive integers.
class DiagonalRational {
public:
    DiagonalRational() = default;

    /// Takes positive integer entries as given. Throws std::invalid_argument on a non-positive entry.
    explicit DiagonalRational(std::vector<Integer> entries);

    static DiagonalRational identity(std::size_t n);

    std::size_t size() const { return d_.size(); }
    const Integer& operator[](std::size_t i) const { return d_[i]; }
    const std::vector<Integer>& entries() const { return d_; }

    friend bool operator==(const DiagonalRational&, const DiagonalRational&) = default;

private:
    std::vector<Integer> d_;
};

/// A skew-symmetrizable matrix together with a symmetrizer D such that D*B is skew-symmetric.
class SkewForm {
public:
    /// Validates that D*B is skew-symmetric; throws std::invalid_argument otherwise.
    SkewForm(SquareIntMatrix b, DiagonalRational d);

    std::size_t size() const { return b_.size(); }
    const SquareIntMatrix& matrix() const { return b_; }
    const DiagonalRational& symmetrizer() const { return d_; }

    friend bool operator==(const SkewForm&, const SkewForm&) = default;

private:
    SquareIntMatrix b_;
    DiagonalRational d_;
};

struct NotSkewSymmetrizable {
    enum class Cause { SignRule, NonPositiveRatio, InconsistentCycle };
    Cause cause;
    // Offending pair, 0-based.
    std::size_t i = 0;
    std::size_t j = 0;

    std::string describe() const;
};

bool is_skew_symmetric_by_signs(const SquareIntMatrix& b);

/// Off-diagonal entries pairwise zero or of equal sign.
bool is_symmetric_by_signs(const SquareIntMatrix& c);

/// d_i * b_ij == -d_j * b_ji for all i, j.
bool skew_symmetrizes(const DiagonalRational& d, const SquareIntMatrix& b);

/// d_i * c_ij == d_j * c_ji for all i, j.
bool symmetrizes(const DiagonalRational& d, const SquareIntMatrix& c);

/// Finds the canonical symmetrizer by propagating ratios across the coupling
/// pattern, one component at a time, rooted at its smallest vertex.
std::variant<SkewForm, NotSkewSymmetrizable> compute_skew_symmetrizer(const SquareIntMatrix& b);

/// Determinants of the top-left k x k blocks for k = 1..n, by fraction-free elimination.
std::vector<Integer> leading_principal_minors(const SquareIntMatrix& m);

/// Exact determinant by Bareiss elimination with row pivoting.
Integer determinant(const SquareIntMatrix& m);

/// Order k (1-based) of the first leading principal minor that is <= 0, if any.
std::optional<std::size_t> first_nonpositive_minor(const SquareIntMatrix& c);

/// Every leading principal minor strictly positive. Meaningful for symmetrizable matrices.
bool is_positive(const SquareIntMatrix& c);

/// X*C*X for a diagonal X with entries +1 (flip false) or -1 (flip true).
SquareIntMatrix sign_conjugate(const SquareIntMatrix& c, const std::vector<bool>& flip);

/// D*M.
SquareIntMatrix scale_rows(const DiagonalRational& d, const SquareIntMatrix& m);

}  // namespace finitype

#include "finitype/exactmat.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace finitype {

SquareIntMatrix::SquareIntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw std::invalid_argument("SquareIntMatrix: rows must have n entries");
        for (long v : r) entries_.emplace_back(v);
    }
}

SquareIntMatrix SquareIntMatrix::identity(std::size_t n) {
    SquareIntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

SquareIntMatrix SquareIntMatrix::leading_block(std::size_t k) const {
    if (k > n_) throw std::out_of_range("leading_block: k exceeds dimension");
    SquareIntMatrix out(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

SquareIntMatrix SquareIntMatrix::transposed() const {
    SquareIntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

DiagonalRational::DiagonalRational(std::vector<Integer> entries) : d_(std::move(entries)) {
    for (const auto& v : d_)
        if (sgn(v) <= 0) throw std::invalid_argument("DiagonalRational: entries must be positive");
}

DiagonalRational DiagonalRational::identity(std::size_t n) {
    return DiagonalRational(std::vector<Integer>(n, Integer(1)));
}

SkewForm::SkewForm(SquareIntMatrix b, DiagonalRational d) : b_(std::move(b)), d_(std::move(d)) {
    if (d_.size() != b_.size()) throw std::invalid_argument("SkewForm: symmetrizer dimension mismatch");
    if (!skew_symmetrizes(d_, b_)) throw std::invalid_argument("SkewForm: D*B is not skew-symmetric");
}

std::string NotSkewSymmetrizable::describe() const {
    std::ostringstream os;
    switch (cause) {
        case Cause::SignRule: os << "sign rule violated"; break;
        case Cause::NonPositiveRatio: os << "non-positive symmetrizer ratio"; break;
        case Cause::InconsistentCycle: os << "inconsistent symmetrizer around a cycle"; break;
    }
    os << " at (" << i + 1 << ", " << j + 1 << ")";
    return os.str();
}

namespace {

// First pair (i, j), i <= j, breaking the skew-by-signs rule.
std::optional<std::pair<std::size_t, std::size_t>> sign_rule_violation(const SquareIntMatrix& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(b(i, i)) != 0) return std::pair{i, i};
        for (std::size_t j = i + 1; j < n; ++j) {
            const int s = sgn(b(i, j));
            const int t = sgn(b(j, i));
            const bool ok = (s == 0 && t == 0) || s * t < 0;
            if (!ok) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_skew_symmetric_by_signs(const SquareIntMatrix& b) { return !sign_rule_violation(b).has_value(); }

bool is_symmetric_by_signs(const SquareIntMatrix& c) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(c(i, j)) != sgn(c(j, i))) return false;
    return true;
}

bool skew_symmetrizes(const DiagonalRational& d, const SquareIntMatrix& b) {
    const std::size_t n = b.size();
    if (d.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (d[i] * b(i, j) != -(d[j] * b(j, i))) return false;
    return true;
}

bool symmetrizes(const DiagonalRational& d, const SquareIntMatrix& c) {
    const std::size_t n = c.size();
    if (d.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d[i] * c(i, j) != d[j] * c(j, i)) return false;
    return true;
}

std::variant<SkewForm, NotSkewSymmetrizable> compute_skew_symmetrizer(const SquareIntMatrix& b) {
    using Cause = NotSkewSymmetrizable::Cause;
    if (auto bad = sign_rule_violation(b)) return NotSkewSymmetrizable{Cause::SignRule, bad->first, bad->second};

    const std::size_t n = b.size();
    std::vector<Rational> ratio(n);
    std::vector<bool> seen(n, false);
    std::vector<Integer> d(n);

    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> component{root};
        ratio[root] = 1;
        seen[root] = true;
        std::deque<std::size_t> frontier{root};
        while (!frontier.empty()) {
            const std::size_t i = frontier.front();
            frontier.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || sgn(b(i, j)) == 0) continue;
                // d_j = d_i * (-b_ij / b_ji)
                Rational step(Integer(-b(i, j)), b(j, i));
                step.canonicalize();
                const Rational next = ratio[i] * step;
                if (sgn(next) <= 0) return NotSkewSymmetrizable{Cause::NonPositiveRatio, i, j};
                if (!seen[j]) {
                    seen[j] = true;
                    ratio[j] = next;
                    component.push_back(j);
                    frontier.push_back(j);
                } else if (ratio[j] != next) {
                    return NotSkewSymmetrizable{Cause::InconsistentCycle, std::min(i, j), std::max(i, j)};
                }
            }
        }

        // Scale the component to coprime positive integers.
        Integer lcm_den = 1;
        for (std::size_t v : component) lcm_den = lcm(lcm_den, Integer(ratio[v].get_den()));
        Integer g = 0;
        for (std::size_t v : component) {
            d[v] = Integer(ratio[v].get_num()) * (lcm_den / Integer(ratio[v].get_den()));
            g = gcd(g, d[v]);
        }
        for (std::size_t v : component) d[v] /= g;
    }

    return SkewForm(b, DiagonalRational(std::move(d)));
}

namespace {

void divexact(Integer& x, const Integer& by) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), by.get_mpz_t()); }

// Fraction-free elimination without pivoting. The pivot reached at step k is
// the leading minor of order k + 1. Rows whose entry in the pivot column is
// zero are left untouched and later brought up to date in one step, since
// skipping steps a..b-1 amounts to scaling the row by P_{b-1} / P_{a-1}.
// Stops at the first zero pivot, or at the first non-positive one when asked.
std::vector<Integer> bareiss_leading_minors(const SquareIntMatrix& m, bool stop_on_nonpositive) {
    const std::size_t n = m.size();
    SquareIntMatrix a = m;
    std::vector<std::size_t> level(n, 0);  // elimination steps applied to each row
    std::vector<Integer> pivots;           // pivots[t] = P_t
    pivots.reserve(n);
    Integer scratch;

    const auto pivot_before = [&pivots](std::size_t step) -> Integer {
        return step == 0 ? Integer(1) : pivots[step - 1];
    };
    const auto catch_up = [&](std::size_t row, std::size_t to_level) {
        const std::size_t from = level[row];
        if (from == to_level) return;
        const Integer mul = pivot_before(to_level);
        const Integer div = pivot_before(from);
        for (std::size_t j = to_level; j < n; ++j) {
            Integer& x = a(row, j);
            if (sgn(x) == 0) continue;
            x *= mul;
            divexact(x, div);
        }
        level[row] = to_level;
    };

    for (std::size_t k = 0; k < n; ++k) {
        catch_up(k, k);
        const Integer pivot = a(k, k);
        pivots.push_back(pivot);
        if (sgn(pivot) == 0 || (stop_on_nonpositive && sgn(pivot) < 0)) break;

        const Integer prev = pivot_before(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            catch_up(i, k);
            const Integer factor = a(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& x = a(i, j);
                const Integer& y = a(k, j);
                if (sgn(y) == 0) {
                    if (sgn(x) == 0) continue;
                    x *= pivot;
                } else {
                    mpz_mul(scratch.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
                    mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), y.get_mpz_t());
                    mpz_swap(x.get_mpz_t(), scratch.get_mpz_t());
                }
                divexact(x, prev);
            }
            a(i, k) = 0;
            level[i] = k + 1;
        }
    }
    return pivots;
}

}  // namespace

std::vector<Integer> leading_principal_minors(const SquareIntMatrix& m) {
    std::vector<Integer> minors = bareiss_leading_minors(m, false);
    // A zero pivot ends the unpivoted sweep; the remaining blocks are done one by one.
    for (std::size_t k = minors.size() + 1; k <= m.size(); ++k) minors.push_back(determinant(m.leading_block(k)));
    return minors;
}

Integer determinant(const SquareIntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    SquareIntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
            sign = -sign;
        }
        const Integer pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * pivot - a(i, k) * a(k, j);
                divexact(a(i, j), prev);
            }
            a(i, k) = 0;
        }
        prev = pivot;
    }
    return sign * a(n - 1, n - 1);
}

std::optional<std::size_t> first_nonpositive_minor(const SquareIntMatrix& c) {
    const std::vector<Integer> pivots = bareiss_leading_minors(c, true);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (sgn(pivots[k]) <= 0) return k + 1;
    return std::nullopt;
}

bool is_positive(const SquareIntMatrix& c) { return !first_nonpositive_minor(c).has_value(); }

SquareIntMatrix sign_conjugate(const SquareIntMatrix& c, const std::vector<bool>& flip) {
    const std::size_t n = c.size();
    if (flip.size() != n) throw std::invalid_argument("sign_conjugate: dimension mismatch");
    SquareIntMatrix out = c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (flip[i] != flip[j]) out(i, j) = -out(i, j);
    return out;
}

SquareIntMatrix scale_rows(const DiagonalRational& d, const SquareIntMatrix& m) {
    const std::size_t n = m.size();
    if (d.size() != n) throw std::invalid_argument("scale_rows: dimension mismatch");
    SquareIntMatrix out = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) *= d[i];
    return out;
}

}  // namespace finitype

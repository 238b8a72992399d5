#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricq/gf.hpp"

namespace toricq {

/// Raised when an exhaustive search would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix over GF(q), entries stored as canonical encodings.
class GfMatrix {
public:
  GfMatrix(Field field, std::size_t rows, std::size_t cols);
  static GfMatrix from_ints(const Field& field,
                            const std::vector<std::vector<std::int64_t>>& entries);

  const Field& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint16_t at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint16_t v) { d_[i * cols_ + j] = v; }

  /// Rows as plain integer vectors (canonical encodings).
  std::vector<std::vector<std::int64_t>> to_ints() const;

  bool is_zero() const;
  friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<std::uint16_t> d_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// In-place reduced row echelon form; pivots chosen leftmost column first,
/// topmost row first. Deterministic.
RrefResult rref(GfMatrix& M);

GfMatrix matmul(const GfMatrix& A, const GfMatrix& B);
GfMatrix transpose(const GfMatrix& A);

/// Per-coordinate weights for the weighted inner product sum w_i x_i y_i.
struct WeightVector {
  Field field;
  std::vector<std::uint16_t> w;
};

/// A linear code over GF(q), held as the RREF of its generator matrix with
/// zero rows dropped, so equal row spaces compare equal as matrices.
class LinearCode {
public:
  /// Row space of an arbitrary generator candidate.
  static LinearCode from_rows(const GfMatrix& rows);
  static LinearCode zero_code(const Field& field, std::size_t n);
  static LinearCode full_space(const Field& field, std::size_t n);

  const Field& field() const noexcept { return f_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return gen_.rows(); }
  const GfMatrix& gen() const noexcept { return gen_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.gen_ == b.gen_;
  }
  friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

private:
  LinearCode(Field f, std::size_t n, GfMatrix gen)
      : f_(std::move(f)), n_(n), gen_(std::move(gen)) {}
  Field f_;
  std::size_t n_;
  GfMatrix gen_;
};

/// Dual code under the standard inner product; dim = n - k.
LinearCode dual(const LinearCode& C);

/// Dual under the weighted inner product sum w_i x_i y_i.
LinearCode weighted_dual(const LinearCode& C, const WeightVector& w);

/// Span of all coordinatewise products of pairs of basis rows.
LinearCode schur_square(const LinearCode& C);

/// Restriction to the columns in `keep` (sorted, deduplicated). The dimension
/// of the result may drop; callers that care must compare k().
LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& keep);

/// True iff every generator of `inner` lies in the row space of `outer`.
bool contains(const LinearCode& outer, const LinearCode& inner);

struct SearchOptions {
  std::uint64_t max_enum = std::uint64_t{1} << 28;
  unsigned threads = 1;
};

/// Exact minimum Hamming distance by exhaustive codeword enumeration.
/// Throws BudgetExceeded if q^k > options.max_enum.
std::int64_t min_distance(const LinearCode& C, const SearchOptions& options = {});

/// Minimum Hamming weight over codewords of C1 that are not in C2.
/// Requires C2 strictly contained in C1.
std::int64_t min_weight_in_difference(const LinearCode& C1, const LinearCode& C2,
                                      const SearchOptions& options = {});

/// Counts of codewords by Hamming weight, indices 0..n. Exhaustive.
std::vector<std::uint64_t> weight_distribution(const LinearCode& C,
                                               const SearchOptions& options = {});

}  // namespace toricq

#include "toricq/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace toricq {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// q^k, saturating well above any usable enumeration budget.
u64 ipow_sat(u64 q, u64 k) {
  constexpr u64 cap = u64{1} << 62;
  u64 r = 1;
  for (u64 i = 0; i < k; ++i) {
    if (r > cap / q) return cap;
    r *= q;
  }
  return r;
}

void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw std::invalid_argument("matrices belong to different fields");
}

}  // namespace

GfMatrix::GfMatrix(Field field, std::size_t rows, std::size_t cols)
    : f_(std::move(field)), rows_(rows), cols_(cols), d_(rows * cols, 0) {}

GfMatrix GfMatrix::from_ints(const Field& field,
                             const std::vector<std::vector<i64>>& entries) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries[0].size();
  GfMatrix M(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      const i64 v = entries[i][j];
      if (v < 0 || v >= field.q())
        throw std::invalid_argument("matrix entry is not a canonical encoding");
      M.set(i, j, static_cast<std::uint16_t>(v));
    }
  }
  return M;
}

std::vector<std::vector<i64>> GfMatrix::to_ints() const {
  std::vector<std::vector<i64>> out(rows_, std::vector<i64>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

bool GfMatrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](std::uint16_t v) { return v == 0; });
}

RrefResult rref(GfMatrix& M) {
  const Field& f = M.field();
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t col = 0; col < M.cols() && r < M.rows(); ++col) {
    std::size_t piv = r;
    while (piv < M.rows() && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < M.cols(); ++j) {
        const auto tmp = M.at(r, j);
        M.set(r, j, M.at(piv, j));
        M.set(piv, j, tmp);
      }
    const auto scale = f.inv(M.at(r, col));
    for (std::size_t j = 0; j < M.cols(); ++j) M.set(r, j, f.mul(scale, M.at(r, j)));
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r) continue;
      const auto c = M.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < M.cols(); ++j)
        M.set(i, j, f.sub(M.at(i, j), f.mul(c, M.at(r, j))));
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

GfMatrix matmul(const GfMatrix& A, const GfMatrix& B) {
  check_same_field(A.field(), B.field());
  if (A.cols() != B.rows()) throw std::invalid_argument("matmul shape mismatch");
  const Field& f = A.field();
  GfMatrix C(f, A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t l = 0; l < A.cols(); ++l) {
      const auto a = A.at(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        C.set(i, j, f.add(C.at(i, j), f.mul(a, B.at(l, j))));
    }
  return C;
}

GfMatrix transpose(const GfMatrix& A) {
  GfMatrix T(A.field(), A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) T.set(j, i, A.at(i, j));
  return T;
}

LinearCode LinearCode::from_rows(const GfMatrix& rows) {
  if (rows.cols() == 0) throw std::invalid_argument("code length must be positive");
  GfMatrix M = rows;
  const RrefResult r = rref(M);
  GfMatrix gen(M.field(), r.rank, M.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) gen.set(i, j, M.at(i, j));
  return LinearCode(M.field(), M.cols(), std::move(gen));
}

LinearCode LinearCode::zero_code(const Field& field, std::size_t n) {
  return from_rows(GfMatrix(field, 0, n));
}

LinearCode LinearCode::full_space(const Field& field, std::size_t n) {
  GfMatrix id(field, n, n);
  for (std::size_t i = 0; i < n; ++i) id.set(i, i, 1);
  return from_rows(id);
}

LinearCode dual(const LinearCode& C) {
  const Field& f = C.field();
  const GfMatrix& G = C.gen();
  GfMatrix M = G;
  const RrefResult r = rref(M);  // already RREF; recover pivot columns
  std::vector<bool> is_pivot(C.n(), false);
  for (const auto p : r.pivots) is_pivot[p] = true;
  GfMatrix null_rows(f, C.n() - r.rank, C.n());
  std::size_t row = 0;
  for (std::size_t free = 0; free < C.n(); ++free) {
    if (is_pivot[free]) continue;
    null_rows.set(row, free, 1);
    for (std::size_t i = 0; i < r.rank; ++i)
      null_rows.set(row, r.pivots[i], f.neg(M.at(i, free)));
    ++row;
  }
  return LinearCode::from_rows(null_rows);
}

LinearCode weighted_dual(const LinearCode& C, const WeightVector& w) {
  if (w.field != C.field()) throw std::invalid_argument("weights belong to a different field");
  if (w.w.size() != C.n()) throw std::invalid_argument("weight vector length mismatch");
  const Field& f = C.field();
  GfMatrix scaled = C.gen();
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j)
      scaled.set(i, j, f.mul(scaled.at(i, j), w.w[j]));
  return dual(LinearCode::from_rows(scaled));
}

LinearCode schur_square(const LinearCode& C) {
  if (C.k() == 0) throw std::invalid_argument("Schur square needs a nonzero code");
  const Field& f = C.field();
  const GfMatrix& G = C.gen();
  const std::size_t k = C.k();
  GfMatrix prods(f, k * (k + 1) / 2, C.n());
  std::size_t row = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j, ++row)
      for (std::size_t c = 0; c < C.n(); ++c)
        prods.set(row, c, f.mul(G.at(i, c), G.at(j, c)));
  return LinearCode::from_rows(prods);
}

LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("restriction needs a nonempty column set");
  std::vector<std::size_t> cols = keep;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.back() >= C.n()) throw std::invalid_argument("restriction column out of range");
  GfMatrix M(C.field(), C.k(), cols.size());
  for (std::size_t i = 0; i < C.k(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) M.set(i, j, C.gen().at(i, cols[j]));
  return LinearCode::from_rows(M);
}

namespace {

// Reduces `word` by the RREF generator of C; zero remainder means membership.
bool is_member(const LinearCode& C, std::vector<std::uint16_t> word,
               const std::vector<std::size_t>& pivots) {
  const Field& f = C.field();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const auto c = word[pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < word.size(); ++j)
      word[j] = f.sub(word[j], f.mul(c, C.gen().at(i, j)));
  }
  return std::all_of(word.begin(), word.end(), [](std::uint16_t v) { return v == 0; });
}

std::vector<std::size_t> pivot_columns(const LinearCode& C) {
  GfMatrix M = C.gen();
  return rref(M).pivots;
}

// Walks u*G for all message indices in [lo, hi), odometer order over base-q
// digits (digit 0 least significant). Index 0 is the zero message. The word
// is updated incrementally from precomputed per-digit delta rows.
template <typename Visit>
void enumerate_words(const GfMatrix& G, u64 lo, u64 hi, Visit&& visit) {
  const Field& f = G.field();
  const u64 q = static_cast<u64>(f.q());
  const std::size_t k = G.rows();
  const std::size_t n = G.cols();
  const bool char2 = f.p() == 2;

  // delta[i][d] = (next(d) - elt(d)) * row_i, next(q-1) wrapping to 0.
  std::vector<std::uint16_t> delta(k * q * n);
  for (std::size_t i = 0; i < k; ++i)
    for (u64 d = 0; d < q; ++d) {
      const auto step = d + 1 < q
                            ? f.sub(static_cast<Field::enc_t>(d + 1), static_cast<Field::enc_t>(d))
                            : f.neg(static_cast<Field::enc_t>(q - 1));
      for (std::size_t c = 0; c < n; ++c)
        delta[(i * q + d) * n + c] = static_cast<std::uint16_t>(f.mul(step, G.at(i, c)));
    }

  std::vector<u64> digits(k, 0);
  std::vector<std::uint16_t> word(n, 0);
  u64 idx = lo;
  for (std::size_t i = 0; i < k; ++i) {
    digits[i] = idx % q;
    idx /= q;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (digits[i] == 0) continue;
    const auto c = static_cast<Field::enc_t>(digits[i]);
    for (std::size_t j = 0; j < n; ++j)
      word[j] = static_cast<std::uint16_t>(f.add(word[j], f.mul(c, G.at(i, j))));
  }

  const auto apply = [&](std::size_t i, u64 d) {
    const std::uint16_t* row = &delta[(i * q + d) * n];
    if (char2) {
      for (std::size_t c = 0; c < n; ++c) word[c] ^= row[c];
    } else {
      for (std::size_t c = 0; c < n; ++c)
        word[c] = static_cast<std::uint16_t>(f.add(word[c], row[c]));
    }
  };

  for (u64 cur = lo; cur < hi; ++cur) {
    visit(static_cast<const std::vector<std::uint16_t>&>(word), cur);
    if (cur + 1 == hi) break;
    std::size_t i = 0;
    while (digits[i] == q - 1) {
      apply(i, q - 1);
      digits[i] = 0;
      ++i;
    }
    apply(i, digits[i]);
    ++digits[i];
  }
}

// Budget check shared by the exhaustive searches.
u64 guarded_total(const LinearCode& C, const SearchOptions& options) {
  const u64 total = ipow_sat(static_cast<u64>(C.field().q()), C.k());
  if (total > options.max_enum)
    throw BudgetExceeded("enumeration of " + std::to_string(C.field().q()) + "^" +
                         std::to_string(C.k()) + " codewords exceeds the budget of " +
                         std::to_string(options.max_enum));
  return total;
}

// Splits [1, total) into per-thread ranges and min-reduces; the result does
// not depend on the thread count.
template <typename PerWord>
i64 parallel_min(const GfMatrix& G, u64 total, unsigned threads, PerWord&& per_word) {
  const unsigned nt = std::max(1u, threads);
  std::vector<i64> results(nt, std::numeric_limits<i64>::max());
  if (total <= 1) return std::numeric_limits<i64>::max();
  const u64 span = total - 1;
  const u64 chunk = (span + nt - 1) / nt;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) {
    const u64 lo = 1 + static_cast<u64>(t) * chunk;
    const u64 hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, t] {
      i64 best = std::numeric_limits<i64>::max();
      enumerate_words(G, lo, hi, [&](const std::vector<std::uint16_t>& word, u64) {
        per_word(word, best);
      });
      results[t] = best;
    });
  }
  for (auto& th : pool) th.join();
  return *std::min_element(results.begin(), results.end());
}

i64 hamming_weight(const std::vector<std::uint16_t>& word) {
  i64 w = 0;
  for (const auto v : word) w += v != 0;
  return w;
}

}  // namespace

i64 min_distance(const LinearCode& C, const SearchOptions& options) {
  if (C.k() == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  const u64 total = guarded_total(C, options);
  return parallel_min(C.gen(), total, options.threads,
                      [](const std::vector<std::uint16_t>& word, i64& best) {
                        const i64 w = hamming_weight(word);
                        if (w < best) best = w;
                      });
}

i64 min_weight_in_difference(const LinearCode& C1, const LinearCode& C2,
                             const SearchOptions& options) {
  if (C1.field() != C2.field() || C1.n() != C2.n())
    throw std::invalid_argument("codes are not comparable");
  if (!contains(C1, C2)) throw std::invalid_argument("C2 is not contained in C1");
  if (C1.k() == C2.k()) throw std::invalid_argument("difference of equal codes is empty");
  const u64 total = guarded_total(C1, options);
  const auto pivots = pivot_columns(C2);
  return parallel_min(C1.gen(), total, options.threads,
                      [&](const std::vector<std::uint16_t>& word, i64& best) {
                        const i64 w = hamming_weight(word);
                        if (w < best && !is_member(C2, word, pivots)) best = w;
                      });
}

std::vector<u64> weight_distribution(const LinearCode& C, const SearchOptions& options) {
  const u64 total = guarded_total(C, options);
  std::vector<u64> dist(C.n() + 1, 0);
  if (C.k() == 0) {
    dist[0] = 1;
    return dist;
  }
  dist[0] = 1;  // zero codeword
  enumerate_words(C.gen(), 1, total, [&](const std::vector<std::uint16_t>& word, u64) {
    ++dist[static_cast<std::size_t>(hamming_weight(word))];
  });
  return dist;
}

bool contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.field() != inner.field() || outer.n() != inner.n())
    throw std::invalid_argument("codes are not comparable");
  const auto pivots = pivot_columns(outer);
  for (std::size_t i = 0; i < inner.k(); ++i) {
    std::vector<std::uint16_t> row(inner.n());
    for (std::size_t j = 0; j < inner.n(); ++j) row[j] = inner.gen().at(i, j);
    if (!is_member(outer, std::move(row), pivots)) return false;
  }
  return true;
}

}  // namespace toricq

#include "toricq/quantum.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricq {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using bigint = boost::multiprecision::cpp_int;

u64 ipow_sat(u64 q, u64 k) {
  constexpr u64 cap = u64{1} << 62;
  u64 r = 1;
  for (u64 i = 0; i < k; ++i) {
    if (r > cap / q) return cap;
    r *= q;
  }
  return r;
}

std::size_t support_size(const std::vector<std::uint16_t>& v) {
  std::size_t s = 0;
  for (const auto x : v) s += x != 0;
  return s;
}

// Weight distribution of the dual code from the distribution of C, via the
// q-ary MacWilliams identity B_j = q^{-k} sum_i A_i K_j(i) with Krawtchouk
// K_j(i) = sum_s (-1)^s C(i,s) C(n-i,j-s) (q-1)^{j-s}. Exact integers.
std::vector<bigint> dual_distribution(const std::vector<u64>& A, std::size_t n, i64 q,
                                      std::size_t k) {
  std::vector<std::vector<bigint>> binom(n + 1, std::vector<bigint>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : bigint(0));
  }
  std::vector<bigint> qm1pow(n + 1);
  qm1pow[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) qm1pow[j] = qm1pow[j - 1] * (q - 1);

  bigint qk = 1;
  for (std::size_t i = 0; i < k; ++i) qk *= q;

  std::vector<bigint> B(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    bigint acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (A[i] == 0) continue;
      bigint kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        const bigint term = binom[i][s] * binom[n - i][j - s] * qm1pow[j - s];
        if (s % 2)
          kraw -= term;
        else
          kraw += term;
      }
      acc += bigint(A[i]) * kraw;
    }
    if (acc % qk != 0) throw std::logic_error("MacWilliams transform is not integral");
    B[j] = acc / qk;
  }
  return B;
}

}  // namespace

DualizingWeights find_dualizing_weights(const LinearCode& C) {
  const Field& f = C.field();
  const LinearCode sq = schur_square(C);
  if (sq.k() == C.n())
    throw StageError("weights",
                     "Schur square spans the full space: polytope too large for this field, "
                     "no dualizing weights");
  const LinearCode null = dual(sq);

  // Single greedy pass over the RREF nullspace basis. Each basis vector is
  // scaled by the first unit coefficient that maximizes the support of the
  // running sum and kept unless the support would shrink. Every kept vector
  // contributes a coordinate no later vector can cancel, so the final
  // support is at least the number of kept vectors.
  std::vector<std::uint16_t> w(C.n(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < null.k(); ++i) {
    std::vector<std::uint16_t> chosen;
    std::size_t chosen_size = 0;
    for (Field::enc_t c = 1; c < static_cast<Field::enc_t>(f.q()); ++c) {
      std::vector<std::uint16_t> cand(C.n());
      for (std::size_t j = 0; j < C.n(); ++j)
        cand[j] = static_cast<std::uint16_t>(f.add(w[j], f.mul(c, null.gen().at(i, j))));
      const std::size_t s = support_size(cand);
      if (chosen.empty() || s > chosen_size) {
        chosen = std::move(cand);
        chosen_size = s;
      }
    }
    if (chosen_size >= best) {
      w = std::move(chosen);
      best = chosen_size;
    }
  }

  DualizingWeights out{f, std::move(w), {}, false};
  for (std::size_t j = 0; j < C.n(); ++j)
    if (out.w[j] != 0) out.restricted.push_back(j);
  Field::enc_t sum = 0;
  for (const auto v : out.w) sum = f.add(sum, v);
  out.sum_zero = sum == 0;
  return out;
}

bool verify_containment(const LinearCode& C, const DualizingWeights& weights) {
  if (weights.field != C.field() || weights.w.size() != C.n())
    throw std::invalid_argument("weights do not match the code");
  const Field& f = C.field();
  const LinearCode CR = puncture(C, weights.restricted);
  if (CR.k() == 0) return true;  // vacuous
  GfMatrix scaled = CR.gen();
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j)
      scaled.set(i, j, f.mul(scaled.at(i, j), weights.w[weights.restricted[j]]));
  return matmul(scaled, transpose(CR.gen())).is_zero();
}

LinearCode rescale_char2(const LinearCode& C, const DualizingWeights& weights) {
  const Field& f = C.field();
  if (f.p() != 2)
    throw StageError("rescale",
                     "odd characteristic unsupported for rescaling (weights need not be "
                     "squares unless q = 2^m)");
  if (weights.field != f || weights.w.size() != C.n())
    throw std::invalid_argument("weights do not match the code");
  const LinearCode CR = puncture(C, weights.restricted);
  GfMatrix scaled = CR.gen();
  for (std::size_t j = 0; j < scaled.cols(); ++j) {
    const auto v = f.sqrt(weights.w[weights.restricted[j]]);
    for (std::size_t i = 0; i < scaled.rows(); ++i)
      scaled.set(i, j, f.mul(scaled.at(i, j), v));
  }
  const LinearCode Ct = LinearCode::from_rows(scaled);
  if (Ct.k() > 0 && !matmul(Ct.gen(), transpose(Ct.gen())).is_zero())
    throw StageError("rescale", "rescaled code is not self-orthogonal");
  return Ct;
}

CssCode css_construct(const LinearCode& Ctilde, const SearchOptions& options) {
  const Field& f = Ctilde.field();
  const LinearCode D = dual(Ctilde);
  if (!contains(D, Ctilde))
    throw StageError("css", "code is not contained in its dual");
  const std::size_t n = Ctilde.n();
  CssCode out{f, n, Ctilde.gen(), Ctilde.gen(),
              static_cast<i64>(n) - 2 * static_cast<i64>(Ctilde.k()), 0, false, "none"};
  if (Ctilde.k() > 0 && !matmul(out.hx, transpose(out.hz)).is_zero())
    throw StageError("css", "stabilizer sectors do not commute");

  if (out.k == 0) return out;  // self-dual input: no logical qubits, no distance

  const u64 q = static_cast<u64>(f.q());
  if (ipow_sat(q, D.k()) <= options.max_enum) {
    out.d = min_weight_in_difference(D, Ctilde, options);
    out.d_exact = true;
    out.d_method = "difference_enum";
  } else if (ipow_sat(q, Ctilde.k()) <= options.max_enum) {
    const auto A = weight_distribution(Ctilde, options);
    const auto B = dual_distribution(A, n, f.q(), Ctilde.k());
    for (std::size_t j = 1; j <= n; ++j) {
      if (B[j] > bigint(A[j])) {
        out.d = static_cast<i64>(j);
        break;
      }
    }
    out.d_exact = true;
    out.d_method = "macwilliams";
  }
  return out;
}

PipelineReport pipeline(const Field& field, i64 d, i64 e, i64 r, const SupportSet& support,
                        const SearchOptions& options) {
  std::optional<i64> d_formula;
  const LatticePolytope P = [&] {
    try {
      return hirzebruch_polytope(d, e, r);
    } catch (const std::invalid_argument& ex) {
      throw StageError("geometry", ex.what());
    }
  }();

  ToricCode tc = [&] {
    try {
      return build_code(field, P, support);
    } catch (const std::invalid_argument& ex) {
      throw StageError("classical", ex.what());
    }
  }();

  if (support.kind == SupportSet::Kind::Full) {
    try {
      d_formula = hirzebruch_params(field, d, e, r).dmin;
    } catch (const std::invalid_argument&) {
      // formula hypotheses fail; no closed-form value for this instance
    }
  }
  std::optional<i64> d_exhaustive;
  if (ipow_sat(static_cast<u64>(field.q()), tc.code.k()) <= options.max_enum && tc.code.k() > 0)
    d_exhaustive = min_distance(tc.code, options);

  DualizingWeights weights = find_dualizing_weights(tc.code);
  const bool containment = verify_containment(tc.code, weights);
  if (!containment) throw StageError("containment", "restricted code is not in its w-dual");
  const LinearCode Ct = rescale_char2(tc.code, weights);
  CssCode css = css_construct(Ct, options);

  // Ampleness of the two divisor classes whose supports cut out the
  // (F_q* \ {1})^2 support: D1 ~ (q-2)(V1 + r V4) + V2, D2 ~ (V1 + r V4) + (q-2) V2.
  const Fan fan = normal_fan(P);
  const i64 q = field.q();
  const Divisor D1(fan, {q - 2, 1, 0, r * (q - 2)});
  const Divisor D2(fan, {1, q - 2, 0, r});

  PipelineReport rep{field,
                     d,
                     e,
                     r,
                     P,
                     support,
                     tc.code.n(),
                     tc.code.k(),
                     d_formula,
                     d_exhaustive,
                     std::move(weights),
                     containment,
                     Ct.k(),
                     std::move(css),
                     is_ample(D1),
                     is_ample(D2)};
  return rep;
}

}  // namespace toricq

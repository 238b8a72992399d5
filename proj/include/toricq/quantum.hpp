#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricq/gf.hpp"
#include "toricq/lattice.hpp"
#include "toricq/linear_code.hpp"
#include "toricq/toric.hpp"

namespace toricq {

/// Failure of a specific pipeline stage, so callers can report where a run
/// stopped.
struct StageError : std::runtime_error {
  StageError(std::string stage_, const std::string& message)
      : std::runtime_error(message), stage(std::move(stage_)) {}
  std::string stage;
};

/// A weight vector w over the full support with sum_P w_P f(P) g(P) = 0 for
/// all pairs of code functions f, g, together with its restricted support
/// R = { P : w_P != 0 }.
struct DualizingWeights {
  Field field;
  std::vector<std::uint16_t> w;        // length n of the source code
  std::vector<std::size_t> restricted;  // indices with w != 0, ascending
  bool sum_zero = false;               // whether sum_P w_P == 0
};

/// Picks a weight vector from the nullspace of the Schur square of C:
/// a single greedy pass over the RREF nullspace basis, keeping each basis
/// vector (coefficient 1) iff it strictly enlarges the support of the
/// running sum. Deterministic. Throws StageError("weights", ...) when the
/// Schur square spans the full space.
DualizingWeights find_dualizing_weights(const LinearCode& C);

/// True iff the restriction of C to R is contained in its w-dual there,
/// checked exactly as G * diag(w_R) * G^T = 0.
bool verify_containment(const LinearCode& C, const DualizingWeights& weights);

/// Characteristic 2 only: restricts C to R and scales column i by
/// sqrt(w_i), which turns the weighted self-orthogonality into standard
/// self-orthogonality. The result is checked to satisfy G * G^T = 0.
LinearCode rescale_char2(const LinearCode& C, const DualizingWeights& weights);

/// A CSS stabilizer code with both check sectors drawn from one
/// self-orthogonal classical code.
struct CssCode {
  Field field;
  std::size_t n = 0;
  GfMatrix hx, hz;
  std::int64_t k = 0;
  std::int64_t d = 0;        // 0 when unknown
  bool d_exact = false;
  std::string d_method;      // "difference_enum", "macwilliams" or "none"
};

/// Builds the CSS code of a self-orthogonal code (hx = hz = its generator).
/// The distance is the minimum weight in dual(C) \ C, computed by direct
/// difference enumeration when q^dim(dual) fits the budget, else exactly
/// through the dual weight distribution (MacWilliams transform of the small
/// code's distribution) when q^dim(C) fits; otherwise left unknown.
CssCode css_construct(const LinearCode& Ctilde, const SearchOptions& options = {});

/// End-to-end construction report for one Hirzebruch instance.
struct PipelineReport {
  Field field;
  std::int64_t d = 0, e = 0, r = 0;
  LatticePolytope polytope;
  SupportSet support;
  // classical stage
  std::size_t n = 0, k = 0;
  std::optional<std::int64_t> d_formula;     // closed-form full-torus value, when applicable
  std::optional<std::int64_t> d_exhaustive;  // when within budget
  // weights stage
  DualizingWeights weights;
  bool containment = false;
  std::size_t punctured_k = 0;
  // quantum stage
  CssCode css;
  // ampleness of the two reference divisors cutting out the support
  bool D1_ample = false;
  bool D2_ample = false;
};

/// Runs build -> weights -> containment -> rescale -> css for the Hirzebruch
/// polytope (d, e, r) over `field` on the given support. Throws StageError
/// with the failing stage name.
PipelineReport pipeline(const Field& field, std::int64_t d, std::int64_t e, std::int64_t r,
                        const SupportSet& support, const SearchOptions& options = {});

}  // namespace toricq

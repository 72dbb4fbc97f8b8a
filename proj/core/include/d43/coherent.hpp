#pragma once

// The limit crystal B_infinity and the embeddings
// T_{ε(b0)} ⊗ B_l ⊗ T_{-φ(b0)} -> B_infinity for minimal b0.

#include "d43/perfectness.hpp"

#include <string>
#include <vector>

namespace d43 {

using InfElement = CrystalElement;

/// B_infinity: every operator is total.
inline AffineCrystal limit_crystal() { return AffineCrystal(FreeIntegral{}); }
inline const InfElement kBInfinity{};

/// The shifted crystal the embedding for (l, b0) starts from.
ShiftedCrystal<AffineCrystal> embedding_source(long l, const MinimalElement& b0);

/// Subtract (α,β,β,β,β,α). Throws std::invalid_argument if the shift
/// weights of `source` are not (ε(b0), -φ(b0)).
InfElement f_embed(long l, const MinimalElement& b0, const ShiftedCrystal<AffineCrystal>& source, const CrystalElement& b);
InfElement f_embed(long l, const MinimalElement& b0, const CrystalElement& b);

struct EmbeddingReport {
  bool pass = false;
  std::size_t checked = 0;
  std::string first_failure;
};
EmbeddingReport verify_embedding(long l, const MinimalElement& b0);

struct CoverWitness {
  InfElement nu;
  long l = 0;
  MinimalElement b0;
};

struct CoverReport {
  bool pass = false;
  long radius = 0;
  long l_max = 0;
  std::size_t elements = 0;
  std::vector<CoverWitness> witnesses;
  std::vector<InfElement> uncovered;
};
/// Every element with |coordinates| <= radius lies in the image of some
/// f_{(l,b0)} with l <= l_max; l_max defaults to 10 radius (at least 1) and
/// is doubled once before reporting a failure.
CoverReport verify_cover(long radius, long l_max = 0);

}  // namespace d43

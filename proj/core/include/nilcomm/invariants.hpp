#pragma once

#include <string>
#include <vector>

#include "nilcomm/diagram.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

// Reductive symmetric pair attached to one row length.
enum class PairKind {
  GlSo,    // (gl_m, so_m)
  GlSp,    // (gl_m, sp_m)
  GlGlGl,  // (gl_m, gl_a + gl_b)
  SoSoSo,  // (so_m, so_a x so_b)
  SpGl,    // (sp_m, gl_{m/2})
  SoGl,    // (so_m, gl_{m/2})
  SpSpSp,  // (sp_m, sp_a x sp_b)
};

struct LengthPair {
  int d = 0;
  PairKind kind = PairKind::GlSo;
  int m = 0;
  int a = 0;
  int b = 0;
  int dim_g = 0;
  int dim_k = 0;
  int dim_p = 0;
  int rank = 0;
  std::string label() const;
};

std::vector<LengthPair> centralizer_pairs(const AbDiagram& diagram, PairType type);
int defect_per_length(const AbDiagram& diagram, PairType type, int d);
// Throws Error(EmptyDiagram) on the empty diagram.
int defect(const AbDiagram& diagram, PairType type);
int dim_p0(const AbDiagram& diagram, PairType type);

bool is_distinguished(const AbDiagram& diagram, PairType type);
bool is_almost_distinguished(const AbDiagram& diagram, PairType type);
// ad h has only even eigenvalues: all rows share one parity.
bool is_even(const AbDiagram& diagram);
// Every row has length 1.
bool is_zero_orbit(const AbDiagram& diagram);

struct AmbientDims {
  int dim_p = 0;
  int rank_p = 0;
  int dim_k = 0;
  int dim_g = 0;
};
AmbientDims ambient_dims(PairType type, const PairParams& params);

// k_j = number of rows of length >= 2j+1. Throws Error(EvenRowPresent).
std::vector<int> k_profile(const AbDiagram& diagram);

// Graded centralizer dimensions counted from h-weights: entry i holds
// (dim k(e,i), dim p(e,i)) for i = 0, 1, ...
struct GradedCount {
  int degree = 0;
  int dim_k = 0;
  int dim_p = 0;
};
std::vector<GradedCount> graded_counts(const AbDiagram& diagram, PairType type);
// dim g(e,1) for the full algebra (both eigenspaces).
int dim_g1(const AbDiagram& diagram, PairType type);

int dim_p_cent(const AbDiagram& diagram, PairType type);
int dim_orbit(const AbDiagram& diagram, PairType type);
int component_dim(const AbDiagram& diagram, PairType type);

struct OrbitInvariants {
  int defect = 0;
  int dim_p_cent = 0;
  int dim_orbit = 0;
  int dim_p0 = 0;
  bool is_distinguished = false;
  bool is_almost_distinguished = false;
  bool is_even = false;
  int component_dim = 0;
};
OrbitInvariants compute_invariants(const AbDiagram& diagram, PairType type);

}  // namespace nilcomm

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nilcomm/diagram.hpp"
#include "nilcomm/linalg.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

struct BasisTag {
  int row = 0;    // index into diagram.rows()
  int power = 0;  // basis vector e^power . v_row
};

// Explicit S-triple with the involution data on the basis e^a . v_i.
// For J-types J = diag(signs) when xi = 1 and J = sqrt(-1) diag(signs) when
// xi = -1; theta acts on matrix units by x_kl -> signs[k] signs[l] x_kl.
// For AI and AII theta(x) = -G^{-1} x^T G with G the form.
struct MatrixRealization {
  PairType type = PairType::AI;
  AbDiagram diagram;
  int n = 0;
  IntMatrix e, h, f;
  std::optional<IntMatrix> form;
  std::optional<IntMatrix> J;
  int xi = 1;
  std::vector<BasisTag> tags;
  std::vector<int> weights;  // h eigenvalue of each basis vector
  std::vector<int> signs;    // J-type letter sign of each basis vector (+1 for a)
  std::vector<int> partner;  // row paired with each row by the form (itself when self-paired)
};

// Throws Error(UnrealizableDiagram) when no pairing of rows carries an admissible form.
MatrixRealization realize(const AbDiagram& diagram, PairType type, const PairParams& params);
MatrixRealization realize(const AbDiagram& diagram, PairType type);
// Re-checks every realization invariant; throws Error(InvariantViolated).
void check_realization(const MatrixRealization& real);

// Independent realizability test: a generic element of the linear space of
// forms compatible with (e, h, letters) is nondegenerate.
bool realizable_by_form_space(const AbDiagram& diagram, PairType type, std::uint64_t seed = 0);

enum class Part { k, p, g };
enum class Side { e, f };

// Basis of {x in g : [h,x] = degree x, [side,x] = 0, theta(x) = +-x}, as matrices.
std::vector<QMatrix> centralizer_basis(const MatrixRealization& real, int degree, Part part,
                                       Side side = Side::e);
int centralizer_dim(const MatrixRealization& real, int degree, Part part, Side side = Side::e);

struct GradedPiece {
  int degree = 0;
  int dim_k = 0;
  int dim_p = 0;
};
struct GradedDims {
  std::vector<GradedPiece> pieces;  // degrees 0, 1, ...
  int dim_g_f_minus1 = 0;
  int dim_fixed_f_minus1 = 0;  // of g(f,-1) under p(e,0)
  int dim_p_cent() const;
  int dim_p(int degree) const;
  int dim_k(int degree) const;
};
GradedDims centralizer_dims(const MatrixRealization& real);

// Fixed space of p(e,0) acting on g(f,-1).
int fixed_f_minus1_dim(const MatrixRealization& real);

struct DefectSample {
  int value = 0;
  std::vector<int> trials;
  bool agreed = false;  // the minimum was attained by three trials
};
DefectSample defect_oracle(const MatrixRealization& real, std::uint64_t seed = 0, int bound = 10);

// Adjacent-length commuting witness and its AII doubling; i1, i2 are row indices with
// length(i2) = length(i1) + 1. Throws WrongType or NoAdjacentLengths.
IntMatrix commuting_witness(const MatrixRealization& real, int i1, int i2);
// First pair of adjacent rows suitable for commuting_witness.
std::optional<std::pair<int, int>> adjacent_rows(const MatrixRealization& real);

// theta(x) == sign * x
bool theta_eigen(const MatrixRealization& real, const IntMatrix& x, int sign);

enum class Test74 { applies, not_applies };
Test74 selflarge_test_7_4(const MatrixRealization& real);

// Throws Error(NotNilpotent).
std::vector<int> jordan_type(const IntMatrix& x);

// Torus test for p(e,0): generic rank equals its dimension.
bool p0_is_torus(const MatrixRealization& real, std::uint64_t seed = 0);

}  // namespace nilcomm

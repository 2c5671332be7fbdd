#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace nilcomm {

enum class PairType { AI, AII, AIII, BDI, CI, CII, DIII };

inline constexpr std::array<PairType, 7> kClassicalTypes = {
    PairType::AI,  PairType::AII, PairType::AIII, PairType::BDI,
    PairType::CI,  PairType::CII, PairType::DIII};

std::string_view to_string(PairType type);
// Throws Error(WrongType) on an unknown name.
PairType parse_pair_type(std::string_view name);

// AI and AII diagrams are plain partitions; the others carry letters.
bool is_plain(PairType type);
bool has_signature(PairType type);
bool is_type_a(PairType type);

// Symmetry of the invariant form (+1 orthogonal, -1 symplectic) and the sign
// of J squared, for the four types realized with a form and a J.
struct FormData {
  int epsilon;
  int xi;
};
std::optional<FormData> form_data(PairType type);

struct Signature {
  int count_a = 0;
  int count_b = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct PairParams {
  int n = 0;
  std::optional<Signature> signature;
  friend bool operator==(const PairParams&, const PairParams&) = default;
};

// Builds parameters and checks the parity and signature rules of the type.
PairParams make_params(PairType type, int n, std::optional<int> p = std::nullopt,
                       std::optional<int> q = std::nullopt);
void check_params(PairType type, const PairParams& params);

// Every admissible params of size n (all signatures); empty when n is inadmissible.
std::vector<PairParams> params_of_size(PairType type, int n);

inline constexpr int kDefaultBound = 30;

}  // namespace nilcomm

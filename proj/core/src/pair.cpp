#include "nilcomm/pair.hpp"

#include <string>

#include "nilcomm/error.hpp"

namespace nilcomm {

std::string_view to_string(PairType type) {
  switch (type) {
    case PairType::AI: return "AI";
    case PairType::AII: return "AII";
    case PairType::AIII: return "AIII";
    case PairType::BDI: return "BDI";
    case PairType::CI: return "CI";
    case PairType::CII: return "CII";
    case PairType::DIII: return "DIII";
  }
  return "?";
}

PairType parse_pair_type(std::string_view name) {
  for (PairType t : kClassicalTypes) {
    if (to_string(t) == name) return t;
  }
  throw Error(Errc::WrongType, "unknown classical pair type '" + std::string(name) + "'");
}

bool is_plain(PairType type) { return type == PairType::AI || type == PairType::AII; }

bool has_signature(PairType type) {
  return type == PairType::AIII || type == PairType::BDI || type == PairType::CII;
}

bool is_type_a(PairType type) {
  return type == PairType::AI || type == PairType::AII || type == PairType::AIII;
}

std::optional<FormData> form_data(PairType type) {
  switch (type) {
    case PairType::BDI: return FormData{1, 1};
    case PairType::CI: return FormData{-1, -1};
    case PairType::DIII: return FormData{1, -1};
    case PairType::CII: return FormData{-1, 1};
    default: return std::nullopt;
  }
}

void check_params(PairType type, const PairParams& params) {
  const std::string tag(to_string(type));
  if (params.n < 0) throw Error(Errc::InvalidParams, tag + ": n must be non-negative");
  const bool even_n = type == PairType::AII || type == PairType::CI || type == PairType::DIII ||
                      type == PairType::CII;
  if (even_n && params.n % 2 != 0) throw Error(Errc::InvalidParams, tag + " requires n even");
  if (has_signature(type)) {
    if (!params.signature) throw Error(Errc::InvalidParams, tag + " requires a signature (p, q)");
    const auto [p, q] = *params.signature;
    if (p < 0 || q < 0 || p + q != params.n)
      throw Error(Errc::InvalidParams, tag + ": signature must satisfy p + q = n");
    if (type == PairType::CII && (p % 2 != 0 || q % 2 != 0))
      throw Error(Errc::InvalidParams, "CII requires p and q even");
  } else if (params.signature) {
    throw Error(Errc::InvalidParams, tag + " takes no signature");
  }
}

PairParams make_params(PairType type, int n, std::optional<int> p, std::optional<int> q) {
  PairParams params{n, std::nullopt};
  if (p || q) {
    const int pp = p ? *p : n - *q;
    const int qq = q ? *q : n - *p;
    params.signature = Signature{pp, qq};
  }
  check_params(type, params);
  return params;
}

}  // namespace nilcomm

namespace nilcomm {

std::vector<PairParams> params_of_size(PairType type, int n) {
  std::vector<PairParams> out;
  if (n < 0) return out;
  if (!has_signature(type)) {
    const bool even_n = type == PairType::AII || type == PairType::CI || type == PairType::DIII;
    if (!even_n || n % 2 == 0) out.push_back(PairParams{n, std::nullopt});
    return out;
  }
  for (int p = n; p >= 0; --p) {
    if (type == PairType::CII && (p % 2 != 0 || (n - p) % 2 != 0)) continue;
    out.push_back(PairParams{n, Signature{p, n - p}});
  }
  return out;
}

}  // namespace nilcomm

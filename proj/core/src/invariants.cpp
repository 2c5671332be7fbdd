#include "nilcomm/invariants.hpp"

#include <algorithm>

namespace nilcomm {

namespace {

PairKind kind_for(PairType type, int d) {
  const bool even = d % 2 == 0;
  switch (type) {
    case PairType::AI: return PairKind::GlSo;
    case PairType::AII: return PairKind::GlSp;
    case PairType::AIII: return PairKind::GlGlGl;
    case PairType::BDI: return even ? PairKind::SpGl : PairKind::SoSoSo;
    case PairType::CI: return even ? PairKind::SoSoSo : PairKind::SpGl;
    case PairType::DIII: return even ? PairKind::SpSpSp : PairKind::SoGl;
    case PairType::CII: return even ? PairKind::SoGl : PairKind::SpSpSp;
  }
  return PairKind::GlSo;
}

LengthPair make_pair(PairKind kind, int d, int m, int a, int b) {
  LengthPair lp{d, kind, m, a, b};
  switch (kind) {
    case PairKind::GlSo:
      lp.dim_g = m * m;
      lp.dim_k = m * (m - 1) / 2;
      lp.rank = m;
      break;
    case PairKind::GlSp:
      lp.dim_g = m * m;
      lp.dim_k = m * (m + 1) / 2;
      lp.rank = m / 2;
      break;
    case PairKind::GlGlGl:
      lp.dim_g = m * m;
      lp.dim_k = a * a + b * b;
      lp.rank = std::min(a, b);
      break;
    case PairKind::SoSoSo:
      lp.dim_g = m * (m - 1) / 2;
      lp.dim_k = a * (a - 1) / 2 + b * (b - 1) / 2;
      lp.rank = std::min(a, b);
      break;
    case PairKind::SpGl:
      lp.dim_g = m * (m + 1) / 2;
      lp.dim_k = (m / 2) * (m / 2);
      lp.rank = m / 2;
      break;
    case PairKind::SoGl:
      lp.dim_g = m * (m - 1) / 2;
      lp.dim_k = (m / 2) * (m / 2);
      lp.rank = m / 4;
      break;
    case PairKind::SpSpSp:
      lp.dim_g = m * (m + 1) / 2;
      lp.dim_k = a * (a + 1) / 2 + b * (b + 1) / 2;
      lp.rank = std::min(a, b) / 2;
      break;
  }
  lp.dim_p = lp.dim_g - lp.dim_k;
  return lp;
}

bool minus_one(PairType type) { return type == PairType::AI || type == PairType::AII; }

struct Cell {
  int weight;
  int sign;
};

std::vector<Cell> cells_of(const AbDiagram& diagram) {
  std::vector<Cell> out;
  for (const Row& r : diagram.rows()) {
    const int s0 = r.start == Letter::a ? 1 : -1;
    for (int c = 0; c < r.length; ++c) out.push_back({2 * c - r.length + 1, c % 2 == 0 ? s0 : -s0});
  }
  return out;
}

}  // namespace

std::string LengthPair::label() const {
  auto s = [](int x) { return std::to_string(x); };
  switch (kind) {
    case PairKind::GlSo: return "(gl_" + s(m) + ", so_" + s(m) + ")";
    case PairKind::GlSp: return "(gl_" + s(m) + ", sp_" + s(m) + ")";
    case PairKind::GlGlGl: return "(gl_" + s(m) + ", gl_" + s(a) + "+gl_" + s(b) + ")";
    case PairKind::SoSoSo: return "(so_" + s(m) + ", so_" + s(a) + "xso_" + s(b) + ")";
    case PairKind::SpGl: return "(sp_" + s(m) + ", gl_" + s(m / 2) + ")";
    case PairKind::SoGl: return "(so_" + s(m) + ", gl_" + s(m / 2) + ")";
    case PairKind::SpSpSp: return "(sp_" + s(m) + ", sp_" + s(a) + "xsp_" + s(b) + ")";
  }
  return "?";
}

std::vector<LengthPair> centralizer_pairs(const AbDiagram& diagram, PairType type) {
  std::vector<LengthPair> out;
  for (int d : diagram.occupied_lengths()) {
    out.push_back(make_pair(kind_for(type, d), d, diagram.multiplicity(d), diagram.a(d),
                            diagram.b(d)));
  }
  return out;
}

int defect_per_length(const AbDiagram& diagram, PairType type, int d) {
  const int m = diagram.multiplicity(d);
  if (m == 0) return 0;
  return make_pair(kind_for(type, d), d, m, diagram.a(d), diagram.b(d)).rank;
}

int defect(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) throw Error(Errc::EmptyDiagram, "defect of the empty diagram");
  int total = 0;
  for (const LengthPair& lp : centralizer_pairs(diagram, type)) total += lp.rank;
  return minus_one(type) ? total - 1 : total;
}

int dim_p0(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return 0;
  int total = 0;
  for (const LengthPair& lp : centralizer_pairs(diagram, type)) total += lp.dim_p;
  return minus_one(type) ? total - 1 : total;
}

bool is_distinguished(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return true;
  const auto lengths = diagram.occupied_lengths();
  switch (type) {
    case PairType::AI:
      return diagram.num_rows() == 1;
    case PairType::AII:
      return diagram.num_rows() == 2 && lengths.size() == 1;
    case PairType::AIII:
      return std::all_of(lengths.begin(), lengths.end(),
                         [&](int d) { return diagram.a(d) == 0 || diagram.b(d) == 0; });
    case PairType::BDI:
    case PairType::CI: {
      const int bad_parity = type == PairType::BDI ? 0 : 1;
      return std::all_of(lengths.begin(), lengths.end(), [&](int d) {
        return d % 2 != bad_parity && (diagram.a(d) == 0 || diagram.b(d) == 0);
      });
    }
    case PairType::CII:
    case PairType::DIII: {
      const int gl_parity = type == PairType::CII ? 0 : 1;
      return std::all_of(lengths.begin(), lengths.end(), [&](int d) {
        if (d % 2 == gl_parity) return diagram.multiplicity(d) <= 2;
        return diagram.a(d) == 0 || diagram.b(d) == 0;
      });
    }
  }
  return false;
}

bool is_almost_distinguished(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return true;
  const auto lengths = diagram.occupied_lengths();
  switch (type) {
    case PairType::AI:
      return static_cast<int>(lengths.size()) == diagram.num_rows();
    case PairType::AII:
      return std::all_of(lengths.begin(), lengths.end(),
                         [&](int d) { return diagram.multiplicity(d) == 2; });
    case PairType::BDI:
    case PairType::CI: {
      const int bad_parity = type == PairType::BDI ? 0 : 1;
      return std::all_of(lengths.begin(), lengths.end(), [&](int d) {
        return d % 2 != bad_parity && diagram.a(d) * diagram.b(d) <= 1;
      });
    }
    case PairType::AIII:
    case PairType::CII:
    case PairType::DIII:
      return is_distinguished(diagram, type);
  }
  return false;
}

bool is_even(const AbDiagram& diagram) {
  const auto& rows = diagram.rows();
  return std::all_of(rows.begin(), rows.end(), [&](const Row& r) {
    return r.length % 2 == rows.front().length % 2;
  });
}

bool is_zero_orbit(const AbDiagram& diagram) {
  return !diagram.empty() && diagram.max_length() == 1;
}

AmbientDims ambient_dims(PairType type, const PairParams& params) {
  check_params(type, params);
  const int n = params.n;
  if (n == 0) return {};
  const int p = params.signature ? params.signature->count_a : 0;
  const int q = params.signature ? params.signature->count_b : 0;
  switch (type) {
    case PairType::AI: return {n * (n + 1) / 2 - 1, n - 1, n * (n - 1) / 2, n * n - 1};
    case PairType::AII: return {n * (n - 1) / 2 - 1, n / 2 - 1, n * (n + 1) / 2, n * n - 1};
    case PairType::AIII: return {2 * p * q, std::min(p, q), p * p + q * q - 1, n * n - 1};
    case PairType::BDI:
      return {p * q, std::min(p, q), p * (p - 1) / 2 + q * (q - 1) / 2, n * (n - 1) / 2};
    case PairType::CI: return {n * n / 4 + n / 2, n / 2, n * n / 4, n * (n + 1) / 2};
    case PairType::CII:
      return {p * q, std::min(p, q) / 2, p * (p + 1) / 2 + q * (q + 1) / 2, n * (n + 1) / 2};
    case PairType::DIII: return {n * n / 4 - n / 2, n / 4, n * n / 4, n * (n - 1) / 2};
  }
  return {};
}

std::vector<int> k_profile(const AbDiagram& diagram) {
  for (const Row& r : diagram.rows()) {
    if (r.length % 2 == 0)
      throw Error(Errc::EvenRowPresent, "k profile needs odd rows only, found length " +
                                            std::to_string(r.length));
  }
  std::vector<int> k;
  for (int j = 0; 2 * j + 1 <= diagram.max_length(); ++j) {
    int c = 0;
    for (const Row& r : diagram.rows()) c += r.length >= 2 * j + 1;
    k.push_back(c);
  }
  return k;
}

std::vector<GradedCount> graded_counts(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return {};
  const std::vector<Cell> cells = cells_of(diagram);
  const int top = 2 * (diagram.max_length() - 1);
  // kh[i], ph[i]: dims of k(i,h), p(i,h) for 0 <= i <= top + 2.
  std::vector<int> kh(top + 3, 0), ph(top + 3, 0);
  auto add = [&](int weight, bool in_k) {
    if (weight < 0 || weight > top + 2) return;
    (in_k ? kh : ph)[weight] += 1;
  };
  const int n = static_cast<int>(cells.size());
  const auto fd = form_data(type);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const Cell& x = cells[k];
      const Cell& y = cells[l];
      switch (type) {
        case PairType::AIII:
          add(x.weight - y.weight, x.sign * y.sign == 1);
          break;
        case PairType::AI:
        case PairType::AII: {
          // Symmetric tensors land in p for AI and in k for AII.
          const bool sym_in_k = type == PairType::AII;
          if (k < l) {
            add(x.weight + y.weight, sym_in_k);
            add(x.weight + y.weight, !sym_in_k);
          } else if (k == l) {
            add(x.weight + y.weight, sym_in_k);
          }
          break;
        }
        default: {
          const bool include = fd->epsilon == 1 ? k < l : k <= l;
          if (include) add(x.weight + y.weight, fd->xi * x.sign * y.sign == 1);
          break;
        }
      }
    }
  }
  std::vector<GradedCount> out;
  for (int i = 0; i <= top; ++i) {
    GradedCount g{i, kh[i] - ph[i + 2], ph[i] - kh[i + 2]};
    out.push_back(g);
  }
  if (type == PairType::AI || type == PairType::AII) out[0].dim_p -= 1;
  if (type == PairType::AIII) out[0].dim_k -= 1;
  return out;
}

int dim_g1(const AbDiagram& diagram, PairType type) {
  const auto counts = graded_counts(diagram, type);
  if (counts.size() < 2) return 0;
  return counts[1].dim_k + counts[1].dim_p;
}

int dim_p_cent(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return 0;
  const AmbientDims amb = ambient_dims(type, params_of(diagram, type));
  const auto& rows = diagram.rows();
  if (type == PairType::AI) {
    int sum = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) sum += static_cast<int>(j + 1) * rows[j].length;
    return sum - 1;
  }
  const bool all_odd = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.length % 2 == 1; });
  const bool all_even = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.length % 2 == 0; });
  if (type == PairType::BDI && all_odd) {
    const auto k = k_profile(diagram);
    int quad = 4 * amb.dim_p - 2 * amb.dim_g + k[0] * (k[0] - 1);
    for (std::size_t j = 1; j < k.size(); ++j) quad += 2 * k[j] * k[j];
    return quad / 4;
  }
  if (type == PairType::CI && all_even) {
    int twice = 2 * amb.dim_p - amb.dim_g;
    for (int j = 0; 2 * j + 2 <= diagram.max_length(); ++j) {
      int c = 0;
      for (const Row& r : rows) c += r.length >= 2 * j + 2;
      twice += c * c;
    }
    return twice / 2;
  }
  int total = 0;
  for (const GradedCount& g : graded_counts(diagram, type)) total += g.dim_p;
  return total;
}

int dim_orbit(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return 0;
  return ambient_dims(type, params_of(diagram, type)).dim_p - dim_p_cent(diagram, type);
}

int component_dim(const AbDiagram& diagram, PairType type) {
  if (diagram.empty()) return 0;
  return ambient_dims(type, params_of(diagram, type)).dim_p - defect(diagram, type);
}

OrbitInvariants compute_invariants(const AbDiagram& diagram, PairType type) {
  OrbitInvariants inv;
  inv.defect = diagram.empty() ? 0 : defect(diagram, type);
  inv.dim_p_cent = dim_p_cent(diagram, type);
  inv.dim_orbit = dim_orbit(diagram, type);
  inv.dim_p0 = dim_p0(diagram, type);
  inv.is_distinguished = is_distinguished(diagram, type);
  inv.is_almost_distinguished = is_almost_distinguished(diagram, type);
  inv.is_even = is_even(diagram);
  inv.component_dim = component_dim(diagram, type);
  return inv;
}

}  // namespace nilcomm

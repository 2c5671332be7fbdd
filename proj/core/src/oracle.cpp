#include "nilcomm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nilcomm/invariants.hpp"

namespace nilcomm {

namespace {

struct Triple {
  int n = 0;
  IntMatrix e, h, f;
  std::vector<BasisTag> tags;
  std::vector<int> weights;
  std::vector<int> signs;
  std::vector<int> row_offset;
};

Triple build_triple(const AbDiagram& diagram) {
  Triple t;
  t.n = diagram.size();
  t.e = IntMatrix(t.n, t.n);
  t.h = IntMatrix(t.n, t.n);
  t.f = IntMatrix(t.n, t.n);
  int idx = 0;
  for (int i = 0; i < diagram.num_rows(); ++i) {
    const Row& r = diagram.rows()[i];
    t.row_offset.push_back(idx);
    const int s0 = (diagram.plain() || r.start == Letter::a) ? 1 : -1;
    for (int a = 0; a < r.length; ++a) {
      t.tags.push_back({i, a});
      t.weights.push_back(2 * a - r.length + 1);
      t.signs.push_back(a % 2 == 0 ? s0 : -s0);
      t.h(idx + a, idx + a) = 2 * a - r.length + 1;
      if (a + 1 < r.length) t.e(idx + a + 1, idx + a) = 1;
      if (a > 0) t.f(idx + a - 1, idx + a) = static_cast<long long>(a) * (r.length - a);
    }
    idx += r.length;
  }
  return t;
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

// Matrix of a linear map on a subspace of matrix units, one column per unit.
class UnitSystem {
 public:
  UnitSystem(int n, std::vector<std::pair<int, int>> units) : n_(n), units_(std::move(units)) {}

  int num_vars() const { return static_cast<int>(units_.size()); }
  const std::vector<std::pair<int, int>>& units() const { return units_; }

  // Adds the n*n equations L(x) = 0, where L(E_kl) is supplied through `image`.
  void add_block(const std::function<void(int k, int l, QMatrix& out)>& image) {
    const std::size_t base = rows_.size();
    rows_.resize(base + std::size_t(n_) * n_, std::vector<Rational>(units_.size()));
    QMatrix tmp(n_, n_);
    for (std::size_t v = 0; v < units_.size(); ++v) {
      tmp = QMatrix(n_, n_);
      image(units_[v].first, units_[v].second, tmp);
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
          if (tmp(r, c) != 0) rows_[base + std::size_t(r) * n_ + c][v] = tmp(r, c);
    }
  }

  void add_row(std::vector<Rational> row) { rows_.push_back(std::move(row)); }

  QMatrix matrix() const {
    std::vector<const std::vector<Rational>*> live;
    for (const auto& row : rows_) {
      if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
        live.push_back(&row);
    }
    QMatrix m(static_cast<int>(live.size()), num_vars());
    for (std::size_t i = 0; i < live.size(); ++i)
      for (int j = 0; j < num_vars(); ++j) m(static_cast<int>(i), j) = (*live[i])[j];
    return m;
  }

  int kernel_dim() const {
    if (units_.empty()) return 0;
    return num_vars() - rank(matrix());
  }

  std::vector<QMatrix> kernel() const {
    std::vector<QMatrix> out;
    if (units_.empty()) return out;
    for (const auto& vec : kernel_basis(matrix())) {
      QMatrix x(n_, n_);
      for (std::size_t v = 0; v < units_.size(); ++v) x(units_[v].first, units_[v].second) = vec[v];
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> units_;
  std::vector<std::vector<Rational>> rows_;
};

// [M, E_kl]
void commutator_image(const QMatrix& m, int k, int l, QMatrix& out) {
  const int n = m.rows();
  for (int r = 0; r < n; ++r) out(r, l) += m(r, k);
  for (int c = 0; c < n; ++c) out(k, c) -= m(l, c);
}

// E_kl^T G + sigma G E_kl
void form_image(const IntMatrix& g, int sigma, int k, int l, QMatrix& out) {
  const int n = g.rows();
  for (int c = 0; c < n; ++c)
    if (g(k, c) != 0) out(l, c) += Rational(static_cast<long>(g(k, c)));
  for (int r = 0; r < n; ++r)
    if (g(r, k) != 0) out(r, l) += Rational(static_cast<long>(sigma * g(r, k)));
}

bool uses_signs(PairType type) { return !is_plain(type); }

UnitSystem graded_system(const MatrixRealization& real, int degree, Part part) {
  std::vector<std::pair<int, int>> units;
  for (int k = 0; k < real.n; ++k) {
    for (int l = 0; l < real.n; ++l) {
      if (real.weights[k] - real.weights[l] != degree) continue;
      if (part != Part::g && uses_signs(real.type)) {
        const int want = part == Part::k ? 1 : -1;
        if (real.signs[k] * real.signs[l] != want) continue;
      }
      units.push_back({k, l});
    }
  }
  UnitSystem sys(real.n, std::move(units));
  if (is_type_a(real.type)) {
    std::vector<Rational> trace(sys.num_vars());
    for (int v = 0; v < sys.num_vars(); ++v)
      if (sys.units()[v].first == sys.units()[v].second) trace[v] = 1;
    sys.add_row(std::move(trace));
  } else {
    sys.add_block([&](int k, int l, QMatrix& out) { form_image(*real.form, 1, k, l, out); });
  }
  if (is_plain(real.type) && part != Part::g) {
    const int sigma = part == Part::k ? 1 : -1;
    sys.add_block([&](int k, int l, QMatrix& out) { form_image(*real.form, sigma, k, l, out); });
  }
  return sys;
}

void add_commutator(UnitSystem& sys, const QMatrix& m) {
  sys.add_block([&](int k, int l, QMatrix& out) { commutator_image(m, k, l, out); });
}

std::vector<int> rows_by_length_group(const AbDiagram& d, int start) {
  std::vector<int> out;
  for (int i = start; i < d.num_rows() && d.rows()[i].length == d.rows()[start].length; ++i)
    out.push_back(i);
  return out;
}

// Pairs rows of equal length so that each block carries an admissible form.
std::optional<std::vector<int>> find_pairing(const AbDiagram& diagram, const FormData& fd) {
  std::vector<int> partner(diagram.num_rows(), -1);
  auto sign_of = [&](int i) { return diagram.rows()[i].start == Letter::a ? 1 : -1; };
  int i = 0;
  while (i < diagram.num_rows()) {
    const std::vector<int> group = rows_by_length_group(diagram, i);
    const int d = diagram.rows()[i].length;
    const int parity = sign_pow(d - 1);
    const bool self_ok = fd.epsilon == parity && fd.xi == parity;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
      while (pos < group.size() && partner[group[pos]] >= 0) ++pos;
      if (pos == group.size()) return true;
      const int r = group[pos];
      if (self_ok) {
        partner[r] = r;
        if (rec(pos + 1)) return true;
        partner[r] = -1;
      }
      for (std::size_t q = pos + 1; q < group.size(); ++q) {
        const int s = group[q];
        if (partner[s] >= 0) continue;
        if (sign_of(r) * sign_of(s) * parity != fd.xi) continue;
        partner[r] = s;
        partner[s] = r;
        if (rec(pos + 1)) return true;
        partner[r] = partner[s] = -1;
      }
      return false;
    };
    if (!rec(0)) return std::nullopt;
    i += static_cast<int>(group.size());
  }
  return partner;
}

QMatrix combination(const std::vector<QMatrix>& basis, const std::vector<long>& coeffs) {
  QMatrix x(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] == 0) continue;
    x = x + Rational(coeffs[j]) * basis[j];
  }
  return x;
}

std::vector<long> draw(std::mt19937_64& rng, std::size_t count, int bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<long> c(count);
  do {
    for (auto& x : c) x = dist(rng);
  } while (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }));
  return c;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvariantViolated, what);
}

}  // namespace

MatrixRealization realize(const AbDiagram& diagram, PairType type, const PairParams& params) {
  if (diagram.size() != params.n)
    throw Error(Errc::SizeMismatch, "diagram size differs from n");
  if (!diagram.empty() && diagram.plain() != is_plain(type))
    throw Error(Errc::FormMismatch, "diagram form does not match the pair type");
  if (params.signature && !diagram.empty() && diagram.signature() != *params.signature)
    throw Error(Errc::SignatureMismatch, "diagram signature differs from (p, q)");

  Triple t = build_triple(diagram);
  MatrixRealization real;
  real.type = type;
  real.diagram = diagram;
  real.n = t.n;
  real.e = t.e;
  real.h = t.h;
  real.f = t.f;
  real.tags = t.tags;
  real.weights = t.weights;
  real.signs = t.signs;
  real.partner.assign(diagram.num_rows(), -1);

  auto idx = [&](int row, int a) { return t.row_offset[row] + a; };
  const int n = t.n;

  if (type == PairType::AI) {
    IntMatrix g(n, n);
    for (int i = 0; i < diagram.num_rows(); ++i) {
      real.partner[i] = i;
      const int len = diagram.rows()[i].length;
      for (int a = 0; a < len; ++a) g(idx(i, a), idx(i, len - 1 - a)) = 1;
    }
    real.form = g;
  } else if (type == PairType::AII) {
    IntMatrix g(n, n);
    int i = 0;
    while (i < diagram.num_rows()) {
      const auto group = rows_by_length_group(diagram, i);
      if (group.size() % 2 != 0)
        throw Error(Errc::UnrealizableDiagram,
                    "odd multiplicity at length " + std::to_string(diagram.rows()[i].length));
      for (std::size_t k = 0; k < group.size(); k += 2) {
        const int r = group[k];
        const int s = group[k + 1];
        real.partner[r] = s;
        real.partner[s] = r;
        const int len = diagram.rows()[r].length;
        for (int a = 0; a < len; ++a) {
          g(idx(r, a), idx(s, len - 1 - a)) = 1;
          g(idx(s, a), idx(r, len - 1 - a)) = -1;
        }
      }
      i += static_cast<int>(group.size());
    }
    real.form = g;
  } else if (type == PairType::AIII) {
    IntMatrix j(n, n);
    for (int k = 0; k < n; ++k) j(k, k) = t.signs[k];
    real.J = j;
  } else {
    const FormData fd = *form_data(type);
    const auto pairing = find_pairing(diagram, fd);
    if (!pairing)
      throw Error(Errc::UnrealizableDiagram,
                  "no pairing of rows of " + to_text(diagram) + " carries an admissible form");
    real.partner = *pairing;
    real.xi = fd.xi;
    IntMatrix g(n, n);
    for (int i = 0; i < diagram.num_rows(); ++i) {
      const int p = real.partner[i];
      if (p < i) continue;
      const int len = diagram.rows()[i].length;
      for (int a = 0; a < len; ++a) {
        const int b = len - 1 - a;
        if (p == i) {
          g(idx(i, a), idx(i, b)) = sign_pow(a);
        } else {
          g(idx(i, a), idx(p, b)) = sign_pow(a);
          g(idx(p, b), idx(i, a)) = fd.epsilon * sign_pow(a);
        }
      }
    }
    real.form = g;
    IntMatrix j(n, n);
    for (int k = 0; k < n; ++k) j(k, k) = t.signs[k];
    real.J = j;
  }
  check_realization(real);
  return real;
}

MatrixRealization realize(const AbDiagram& diagram, PairType type) {
  return realize(diagram, type, params_of(diagram, type));
}

bool theta_eigen(const MatrixRealization& real, const IntMatrix& x, int sign) {
  if (is_plain(real.type)) {
    const IntMatrix& g = *real.form;
    IntMatrix lhs = x.transpose() * g;
    IntMatrix rhs = g * x;
    for (int i = 0; i < real.n; ++i)
      for (int j = 0; j < real.n; ++j)
        if (lhs(i, j) + sign * rhs(i, j) != 0) return false;
    return true;
  }
  for (int k = 0; k < real.n; ++k)
    for (int l = 0; l < real.n; ++l)
      if (x(k, l) != 0 && real.signs[k] * real.signs[l] != sign) return false;
  return true;
}

void check_realization(const MatrixRealization& real) {
  const int n = real.n;
  require(commutator(real.h, real.e) == 2LL * real.e, "[h,e] = 2e");
  require(commutator(real.h, real.f) == -2LL * real.f, "[h,f] = -2f");
  require(commutator(real.e, real.f) == real.h, "[e,f] = h");
  require(theta_eigen(real, real.e, -1), "theta(e) = -e");
  require(theta_eigen(real, real.h, 1), "theta(h) = h");
  require(theta_eigen(real, real.f, -1), "theta(f) = -f");
  for (int k = 0; k < n; ++k)
    require(real.h(k, k) == real.weights[k], "h diagonal with the tagged weights");

  if (real.J) {
    const IntMatrix& j = *real.J;
    require(j * j == IntMatrix::identity(n), "J^2 = xi Id");
    long long trace = 0;
    for (int k = 0; k < n; ++k) trace += j(k, k);
    const Signature sig = real.diagram.signature();
    require(trace == sig.count_a - sig.count_b, "trace of J equals count_a - count_b");
    for (int i = 0; i < real.diagram.num_rows(); ++i) {
      const int lowest = static_cast<int>(std::find_if(real.tags.begin(), real.tags.end(), [&](const BasisTag& t) {
                                            return t.row == i && t.power == 0;
                                          }) - real.tags.begin());
      const int want = real.diagram.rows()[i].start == Letter::a ? 1 : -1;
      require(j(lowest, lowest) == want, "lowest weight vector carries the start letter");
    }
  }
  if (real.form) {
    const IntMatrix& g = *real.form;
    const int eps = is_plain(real.type) ? (real.type == PairType::AI ? 1 : -1)
                                        : form_data(real.type)->epsilon;
    require(g.transpose() == static_cast<long long>(eps) * g, "form symmetry");
    require(rank(g) == n, "form nondegenerate");
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (g(k, l) == 0) continue;
        require(real.weights[k] + real.weights[l] == 0, "Phi(V(lambda), V(mu)) = 0 unless lambda = -mu");
        if (real.J) require(real.signs[k] * real.signs[l] == real.xi, "J preserves the form");
      }
    if (!is_plain(real.type)) {
      for (const IntMatrix* x : {&real.e, &real.h, &real.f})
        require((x->transpose() * g + g * *x).is_zero(), "triple preserves the form");
    }
  }
}

bool realizable_by_form_space(const AbDiagram& diagram, PairType type, std::uint64_t seed) {
  if (diagram.empty() || type == PairType::AIII) return true;
  if (diagram.plain() != is_plain(type)) return false;
  const Triple t = build_triple(diagram);
  int eps = 1;
  std::optional<int> xi;
  if (type == PairType::AII) eps = -1;
  if (auto fd = form_data(type)) {
    eps = fd->epsilon;
    xi = fd->xi;
  }
  std::vector<std::pair<int, int>> units;
  for (int k = 0; k < t.n; ++k)
    for (int l = 0; l < t.n; ++l) {
      if (t.weights[k] + t.weights[l] != 0) continue;
      if (xi && t.signs[k] * t.signs[l] != *xi) continue;
      units.push_back({k, l});
    }
  UnitSystem sys(t.n, units);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t v = 0; v < units.size(); ++v) index[units[v]] = static_cast<int>(v);
  for (std::size_t v = 0; v < units.size(); ++v) {
    std::vector<Rational> row(units.size());
    row[v] += 1;
    row[index.at({units[v].second, units[v].first})] -= eps;
    sys.add_row(std::move(row));
  }
  // e^T G + s G e = 0 with s = +1 (e skew, form types) or -1 (e self-adjoint, AI/AII).
  const int s = is_plain(type) ? -1 : 1;
  sys.add_block([&](int k, int l, QMatrix& out) {
    for (int r = 0; r < t.n; ++r)
      if (t.e(k, r) != 0) out(r, l) += Rational(static_cast<long>(t.e(k, r)));
    for (int c = 0; c < t.n; ++c)
      if (t.e(l, c) != 0) out(k, c) += Rational(static_cast<long>(s * t.e(l, c)));
  });
  const auto basis = sys.kernel();
  if (basis.empty()) return false;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 3; ++trial) {
    const QMatrix g = combination(basis, draw(rng, basis.size(), 1000));
    if (rank(g) == t.n) return true;
  }
  return false;
}

std::vector<QMatrix> centralizer_basis(const MatrixRealization& real, int degree, Part part, Side side) {
  UnitSystem sys = graded_system(real, degree, part);
  add_commutator(sys, to_rational(side == Side::e ? real.e : real.f));
  return sys.kernel();
}

int centralizer_dim(const MatrixRealization& real, int degree, Part part, Side side) {
  UnitSystem sys = graded_system(real, degree, part);
  add_commutator(sys, to_rational(side == Side::e ? real.e : real.f));
  return sys.kernel_dim();
}

int fixed_f_minus1_dim(const MatrixRealization& real) {
  UnitSystem sys = graded_system(real, -1, Part::g);
  add_commutator(sys, to_rational(real.f));
  for (const QMatrix& t : centralizer_basis(real, 0, Part::p)) add_commutator(sys, t);
  return sys.kernel_dim();
}

int GradedDims::dim_p_cent() const {
  int total = 0;
  for (const auto& p : pieces) total += p.dim_p;
  return total;
}

int GradedDims::dim_p(int degree) const {
  return degree >= 0 && degree < static_cast<int>(pieces.size()) ? pieces[degree].dim_p : 0;
}

int GradedDims::dim_k(int degree) const {
  return degree >= 0 && degree < static_cast<int>(pieces.size()) ? pieces[degree].dim_k : 0;
}

GradedDims centralizer_dims(const MatrixRealization& real) {
  GradedDims out;
  if (real.n == 0) return out;
  const int top = 2 * (real.diagram.max_length() - 1);
  for (int i = 0; i <= top; ++i) {
    out.pieces.push_back({i, centralizer_dim(real, i, Part::k), centralizer_dim(real, i, Part::p)});
  }
  out.dim_g_f_minus1 = centralizer_dim(real, -1, Part::g, Side::f);
  out.dim_fixed_f_minus1 = fixed_f_minus1_dim(real);
  return out;
}

DefectSample defect_oracle(const MatrixRealization& real, std::uint64_t seed, int bound) {
  DefectSample out;
  const auto basis = centralizer_basis(real, 0, Part::p);
  if (basis.empty()) {
    out.trials = {0, 0, 0};
    out.agreed = true;
    return out;
  }
  const int r = static_cast<int>(basis.size());
  const int n = real.n;
  std::mt19937_64 rng(seed);
  constexpr int kMaxTrials = 12;
  while (static_cast<int>(out.trials.size()) < kMaxTrials) {
    const QMatrix x = combination(basis, draw(rng, basis.size(), bound));
    QMatrix a(n * n, r);
    for (int j = 0; j < r; ++j) {
      const QMatrix c = commutator(x, basis[j]);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a(u * n + v, j) = c(u, v);
    }
    out.trials.push_back(r - rank(a));
    const int best = *std::min_element(out.trials.begin(), out.trials.end());
    if (std::count(out.trials.begin(), out.trials.end(), best) >= 3) break;
  }
  out.value = *std::min_element(out.trials.begin(), out.trials.end());
  out.agreed = std::count(out.trials.begin(), out.trials.end(), out.value) >= 3;
  return out;
}

bool p0_is_torus(const MatrixRealization& real, std::uint64_t seed) {
  const int dim = centralizer_dim(real, 0, Part::p);
  return defect_oracle(real, seed).value == dim;
}

std::optional<std::pair<int, int>> adjacent_rows(const MatrixRealization& real) {
  if (!is_plain(real.type)) return std::nullopt;
  const auto& rows = real.diagram.rows();
  for (int i2 = 0; i2 < static_cast<int>(rows.size()); ++i2) {
    if (real.type == PairType::AII && real.partner[i2] < i2) continue;
    for (int i1 = 0; i1 < static_cast<int>(rows.size()); ++i1) {
      if (real.type == PairType::AII && real.partner[i1] < i1) continue;
      if (rows[i1].length > 0 && rows[i2].length == rows[i1].length + 1) return std::pair{i1, i2};
    }
  }
  return std::nullopt;
}

IntMatrix commuting_witness(const MatrixRealization& real, int i1, int i2) {
  if (!is_plain(real.type)) throw Error(Errc::WrongType, "witness is defined for AI and AII only");
  const auto& rows = real.diagram.rows();
  const int nr = static_cast<int>(rows.size());
  if (i1 < 0 || i2 < 0 || i1 >= nr || i2 >= nr || rows[i2].length != rows[i1].length + 1)
    throw Error(Errc::NoAdjacentLengths, "rows do not have lengths l and l+1");
  std::vector<std::pair<int, int>> merged = {{i1, i2}};
  if (real.type == PairType::AII) {
    auto alpha = [&](int i) { return real.partner[i] > i ? 1 : -1; };
    if (alpha(i1) != alpha(i2)) i1 = real.partner[i1];
    merged = {{i1, i2}, {real.partner[i1], real.partner[i2]}};
  }
  std::vector<int> offset(nr);
  for (int i = 0, acc = 0; i < nr; ++i) {
    offset[i] = acc;
    acc += rows[i].length;
  }
  IntMatrix w(real.n, real.n);
  std::vector<bool> used(nr, false);
  for (auto [r, s] : merged) {
    used[r] = used[s] = true;
    const int len = rows[r].length;
    for (int a = 0; a < len; ++a) {
      w(offset[s] + a + 1, offset[r] + a) = 1;
      w(offset[r] + a, offset[s] + a) = 1;
    }
  }
  for (int i = 0; i < nr; ++i) {
    if (used[i]) continue;
    for (int a = 0; a + 1 < rows[i].length; ++a) w(offset[i] + a + 1, offset[i] + a) = 1;
  }
  return w;
}

Test74 selflarge_test_7_4(const MatrixRealization& real) {
  if (real.diagram.empty() || !is_almost_distinguished(real.diagram, real.type) ||
      is_distinguished(real.diagram, real.type))
    throw Error(Errc::NotAlmostDistinguished, "weight test needs an almost-distinguished, non-distinguished orbit");
  if (centralizer_dim(real, 1, Part::p) == 0) return Test74::not_applies;
  return fixed_f_minus1_dim(real) == 0 ? Test74::applies : Test74::not_applies;
}

std::vector<int> jordan_type(const IntMatrix& x) {
  const int n = x.rows();
  std::vector<int> ranks = {n};
  IntMatrix power = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * x;
    ranks.push_back(rank(power));
  }
  if (ranks.back() != 0) throw Error(Errc::NotNilpotent, "matrix is not nilpotent");
  std::vector<int> parts;
  for (int s = n; s >= 1; --s) {
    const int at_least_s = ranks[s - 1] - ranks[s];
    const int at_least_next = s < n ? ranks[s] - ranks[s + 1] : 0;
    for (int c = 0; c < at_least_s - at_least_next; ++c) parts.push_back(s);
  }
  return parts;
}

}  // namespace nilcomm

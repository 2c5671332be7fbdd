#include "nilcomm/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilcomm {

namespace {

bool row_before(const Row& x, const Row& y) {
  if (x.length != y.length) return x.length > y.length;
  return x.start < y.start;
}

std::string row_text(const Row& row) {
  std::string s;
  s.reserve(row.length);
  for (int c = 0; c < row.length; ++c) s.push_back(to_char(letter_at(row.start, c)));
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

AbDiagram AbDiagram::from_partition(std::vector<int> lengths) {
  AbDiagram d;
  d.plain_ = true;
  for (int len : lengths) {
    if (len <= 0) throw Error(Errc::SyntaxError, "row lengths must be positive");
    d.rows_.push_back(Row{len, Letter::a});
  }
  std::sort(d.rows_.begin(), d.rows_.end(), row_before);
  return d;
}

AbDiagram AbDiagram::from_rows(std::vector<Row> rows) {
  AbDiagram d;
  d.plain_ = rows.empty();
  for (const Row& r : rows) {
    if (r.length <= 0) throw Error(Errc::SyntaxError, "row lengths must be positive");
  }
  d.rows_ = std::move(rows);
  std::sort(d.rows_.begin(), d.rows_.end(), row_before);
  return d;
}

int AbDiagram::size() const {
  int n = 0;
  for (const Row& r : rows_) n += r.length;
  return n;
}

int AbDiagram::multiplicity(int d) const {
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(),
                                        [d](const Row& r) { return r.length == d; }));
}

int AbDiagram::count_starting(int d, Letter l) const {
  if (plain_) return 0;
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [d, l](const Row& r) {
    return r.length == d && r.start == l;
  }));
}

std::vector<int> AbDiagram::partition() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const Row& r : rows_) p.push_back(r.length);
  return p;
}

std::vector<int> AbDiagram::occupied_lengths() const {
  std::vector<int> out;
  for (const Row& r : rows_) {
    if (out.empty() || out.back() != r.length) out.push_back(r.length);
  }
  return out;
}

Signature AbDiagram::signature() const {
  Signature s;
  if (plain_) {
    s.count_a = size();
    return s;
  }
  for (const Row& r : rows_) {
    const int hi = (r.length + 1) / 2;
    const int lo = r.length / 2;
    if (r.start == Letter::a) {
      s.count_a += hi;
      s.count_b += lo;
    } else {
      s.count_a += lo;
      s.count_b += hi;
    }
  }
  return s;
}

bool operator<(const AbDiagram& x, const AbDiagram& y) {
  if (x.plain_ != y.plain_) return x.plain_ < y.plain_;
  return std::lexicographical_compare(
      x.rows_.begin(), x.rows_.end(), y.rows_.begin(), y.rows_.end(),
      [](const Row& r, const Row& s) {
        if (r.length != s.length) return r.length < s.length;
        return r.start < s.start;
      });
}

std::vector<Violation> validate_shape(const AbDiagram& diagram, PairType type) {
  std::vector<Violation> out;
  if (diagram.empty()) return out;
  if (diagram.plain() != is_plain(type)) {
    out.push_back({Errc::FormMismatch, 0,
                   is_plain(type) ? "type expects a plain partition"
                                  : "type expects an ab-diagram"});
    return out;
  }
  auto fail = [&](int d, const std::string& rule) {
    out.push_back({Errc::ParityViolation, d, rule + " at length " + std::to_string(d)});
  };
  for (int d : diagram.occupied_lengths()) {
    const int m = diagram.multiplicity(d);
    const int a = diagram.a(d);
    const int b = diagram.b(d);
    const bool even = d % 2 == 0;
    switch (type) {
      case PairType::AI:
      case PairType::AIII:
        break;
      case PairType::AII:
        if (m % 2 != 0) fail(d, "multiplicity must be even");
        break;
      case PairType::BDI:
        if (even && a != b) fail(d, "even rows need a_d = b_d");
        break;
      case PairType::CI:
        if (!even && a != b) fail(d, "odd rows need a_d = b_d");
        break;
      case PairType::DIII:
        if (!even && a != b) fail(d, "odd rows need a_d = b_d");
        if (even && (a % 2 != 0 || b % 2 != 0)) fail(d, "even rows need a_d, b_d even");
        break;
      case PairType::CII:
        if (!even && (a % 2 != 0 || b % 2 != 0)) fail(d, "odd rows need a_d, b_d even");
        if (even && a != b) fail(d, "even rows need a_d = b_d");
        break;
    }
  }
  return out;
}

std::vector<Violation> validate(const AbDiagram& diagram, PairType type, const PairParams& params) {
  std::vector<Violation> out;
  if (diagram.size() != params.n) {
    out.push_back({Errc::SizeMismatch, 0,
                   "diagram has " + std::to_string(diagram.size()) + " cells, expected " +
                       std::to_string(params.n)});
  }
  if (diagram.empty()) return out;
  auto shape = validate_shape(diagram, type);
  out.insert(out.end(), shape.begin(), shape.end());
  if (diagram.plain() != is_plain(type)) return out;

  std::optional<Signature> want;
  if (has_signature(type)) {
    want = params.signature;
  } else if (type == PairType::CI || type == PairType::DIII) {
    want = Signature{params.n / 2, params.n / 2};
  }
  if (want) {
    const Signature got = diagram.signature();
    if (got != *want) {
      out.push_back({Errc::SignatureMismatch, 0,
                     "signature (" + std::to_string(got.count_a) + "," +
                         std::to_string(got.count_b) + ") != (" + std::to_string(want->count_a) +
                         "," + std::to_string(want->count_b) + ")"});
    }
  }
  return out;
}

bool is_valid(const AbDiagram& diagram, PairType type, const PairParams& params) {
  return validate(diagram, type, params).empty();
}

PairParams params_of(const AbDiagram& diagram, PairType type) {
  PairParams p{diagram.size(), std::nullopt};
  if (has_signature(type)) p.signature = diagram.signature();
  return p;
}

std::string to_text(const AbDiagram& diagram) {
  if (diagram.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < diagram.rows().size(); ++i) {
    const Row& r = diagram.rows()[i];
    if (diagram.plain()) {
      if (i) out.push_back(',');
      out += std::to_string(r.length);
    } else {
      if (i) out.push_back('/');
      out += row_text(r);
    }
  }
  return out;
}

AbDiagram parse_diagram(std::string_view text) {
  const std::size_t offset = [&] {
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    return k;
  }();
  const std::string_view body = trim(text);
  if (body.empty() || body == "-") return AbDiagram{};

  if (std::isdigit(static_cast<unsigned char>(body.front()))) {
    std::vector<int> lengths;
    std::size_t i = 0;
    while (true) {
      const std::size_t begin = i;
      long value = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
        value = value * 10 + (body[i] - '0');
        if (value > 100000) throw Error(Errc::SyntaxError, "row length too large", int(offset + begin));
        ++i;
      }
      if (i == begin) throw Error(Errc::SyntaxError, "expected a row length", int(offset + i));
      if (value == 0) throw Error(Errc::SyntaxError, "row lengths must be positive", int(offset + begin));
      lengths.push_back(static_cast<int>(value));
      if (i == body.size()) break;
      if (body[i] != ',') throw Error(Errc::SyntaxError, "expected ','", int(offset + i));
      ++i;
    }
    return AbDiagram::from_partition(std::move(lengths));
  }

  std::vector<Row> rows;
  std::size_t i = 0;
  while (true) {
    const std::size_t begin = i;
    while (i < body.size() && body[i] != '/') {
      const char c = body[i];
      if (c != 'a' && c != 'b') throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "'", int(offset + i));
      if (i > begin && c == body[i - 1])
        throw Error(Errc::AlternationError, "letters must alternate within a row", int(offset + i));
      ++i;
    }
    if (i == begin) throw Error(Errc::SyntaxError, "empty row", int(offset + i));
    rows.push_back(Row{static_cast<int>(i - begin), body[begin] == 'a' ? Letter::a : Letter::b});
    if (i == body.size()) break;
    ++i;
  }
  return AbDiagram::from_rows(std::move(rows));
}

Truncation truncate_columns(const Truncation& t, int k) {
  Truncation out;
  out.rows.reserve(t.rows.size());
  for (const Row& r : t.rows) {
    const int len = std::max(0, r.length - k);
    const Letter start = letter_at(r.start, k);
    out.rows.push_back(Row{len, start});
    out.cells += len;
    const int hi = (len + 1) / 2;
    const int lo = len / 2;
    if (start == Letter::a) {
      out.count_a += hi;
      out.count_b += lo;
    } else {
      out.count_a += lo;
      out.count_b += hi;
    }
  }
  return out;
}

Truncation truncate_columns(const AbDiagram& diagram, int k) {
  Truncation t;
  t.rows = diagram.rows();
  t = truncate_columns(t, std::max(0, k));
  if (diagram.plain()) {
    t.count_a = 0;
    t.count_b = 0;
  }
  return t;
}

std::pair<AbDiagram, AbDiagram> strip_common_rows(const AbDiagram& x, const AbDiagram& y) {
  std::vector<Row> left = x.rows();
  std::vector<Row> right;
  for (const Row& r : y.rows()) {
    auto it = std::find(left.begin(), left.end(), r);
    if (it != left.end()) {
      left.erase(it);
    } else {
      right.push_back(r);
    }
  }
  auto build = [&](std::vector<Row> rows, bool plain) {
    if (rows.empty()) return AbDiagram{};
    if (plain) {
      std::vector<int> lengths;
      for (const Row& r : rows) lengths.push_back(r.length);
      return AbDiagram::from_partition(std::move(lengths));
    }
    return AbDiagram::from_rows(std::move(rows));
  };
  return {build(std::move(left), x.plain()), build(std::move(right), y.plain())};
}

}  // namespace nilcomm

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilcomm/error.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

enum class Letter : std::uint8_t { a, b };

inline Letter flip(Letter l) { return l == Letter::a ? Letter::b : Letter::a; }
inline char to_char(Letter l) { return l == Letter::a ? 'a' : 'b'; }
// Letter of cell c (0-based) of a row starting with `start`.
inline Letter letter_at(Letter start, int c) { return c % 2 == 0 ? start : flip(start); }

struct Row {
  int length = 0;
  Letter start = Letter::a;
  friend bool operator==(const Row&, const Row&) = default;
};

// Rows in canonical order: decreasing length, then a-first before b-first.
// Plain diagrams (AI, AII) ignore the start letter and store Letter::a.
class AbDiagram {
 public:
  AbDiagram() = default;

  static AbDiagram from_partition(std::vector<int> lengths);
  static AbDiagram from_rows(std::vector<Row> rows);

  bool plain() const { return plain_; }
  bool empty() const { return rows_.empty(); }
  const std::vector<Row>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  int max_length() const { return rows_.empty() ? 0 : rows_.front().length; }

  int multiplicity(int d) const;
  int count_starting(int d, Letter l) const;
  int a(int d) const { return count_starting(d, Letter::a); }
  int b(int d) const { return count_starting(d, Letter::b); }

  std::vector<int> partition() const;
  // Distinct row lengths, decreasing.
  std::vector<int> occupied_lengths() const;
  Signature signature() const;

  friend bool operator==(const AbDiagram&, const AbDiagram&) = default;
  friend bool operator<(const AbDiagram& x, const AbDiagram& y);

 private:
  bool plain_ = true;
  std::vector<Row> rows_;
};

struct Violation {
  Errc code;
  int length = 0;  // offending row length for ParityViolation, 0 otherwise
  std::string detail;
};

// Empty result means valid.
std::vector<Violation> validate(const AbDiagram& diagram, PairType type, const PairParams& params);
bool is_valid(const AbDiagram& diagram, PairType type, const PairParams& params);
// Same as validate without the size and signature checks.
std::vector<Violation> validate_shape(const AbDiagram& diagram, PairType type);
// Parameters read off the diagram itself (n, and the signature where the type has one).
PairParams params_of(const AbDiagram& diagram, PairType type);

// "ababa/aba/bab/b", "4,2,1"; the empty diagram prints as "-".
std::string to_text(const AbDiagram& diagram);
AbDiagram parse_diagram(std::string_view text);

std::vector<AbDiagram> enumerate_diagrams(PairType type, const PairParams& params,
                                          int bound = kDefaultBound);

struct Truncation {
  std::vector<Row> rows;  // surviving rows, same order as the source; zero-length rows kept
  int cells = 0;
  int count_a = 0;
  int count_b = 0;
};
Truncation truncate_columns(const AbDiagram& diagram, int k);
Truncation truncate_columns(const Truncation& t, int k);

std::pair<AbDiagram, AbDiagram> strip_common_rows(const AbDiagram& x, const AbDiagram& y);

}  // namespace nilcomm

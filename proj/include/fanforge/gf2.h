// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bit-packed linear algebra over GF(2).
//
// A vector of dimension k is a Bits word whose bit i is coordinate i. Text
// form is little-endian: character i of the string is coordinate i.

#ifndef FANFORGE_GF2_H_
#define FANFORGE_GF2_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanforge {

using Bits = std::uint64_t;

inline constexpr int kMaxDim = 62;

inline Bits low_mask(int dim) { return dim >= 64 ? ~Bits{0} : (Bits{1} << dim) - 1; }

inline int parity(Bits v) { return __builtin_parityll(v); }

inline int popcount(Bits v) { return __builtin_popcountll(v); }

// Lexicographic order on the little-endian bitstrings of equal length.
inline bool lex_less(Bits a, Bits b) {
  Bits diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

std::string to_bitstring(Bits v, int dim);

// Throws StructuralError on characters other than '0' and '1' or when the
// string is longer than kMaxDim.
Bits parse_bitstring(std::string_view text);

// A rows x cols matrix acting on column vectors: apply(v) has bit r equal to
// the parity of row(r) & v.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  static Gf2Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Bits row(int r) const { return row_[r]; }
  void set_row(int r, Bits bits);
  bool get(int r, int c) const { return (row_[r] >> c) & 1; }
  void set(int r, int c, bool value);

  Bits column(int c) const;
  Bits apply(Bits v) const;
  int rank() const;

  // (a * b).apply(v) == a.apply(b.apply(v)).
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Bits> row_;
};

// The functional lambda o m on the domain of m, with lambda given on the
// codomain.
Bits pull_back(Bits lambda, const Gf2Matrix& m);

// Incremental row-echelon span. Each stored row remembers which inserted
// vectors it combines, so membership queries can return coordinates.
class Gf2Span {
 public:
  explicit Gf2Span(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(pivot_rows_.size()); }

  // Returns true if v was independent of the span and has been added.
  bool insert(Bits v);
  bool contains(Bits v) const;

  // A subset mask over the independent vectors (in insertion order) summing
  // to v, or nullopt when v is outside the span.
  std::optional<Bits> coordinates(Bits v) const;

 private:
  struct Row {
    Bits value;
    Bits combo;
    int pivot;
  };

  Bits reduce(Bits v, Bits* combo) const;

  int dim_;
  std::vector<Row> pivot_rows_;
};

}  // namespace fanforge

#endif  // FANFORGE_GF2_H_

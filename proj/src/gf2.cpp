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

#include "fanforge/gf2.h"

#include <cassert>

#include "fanforge/error.h"

namespace fanforge {

std::string to_bitstring(Bits v, int dim) {
  std::string out(dim, '0');
  for (int i = 0; i < dim; ++i) {
    if ((v >> i) & 1) out[i] = '1';
  }
  return out;
}

Bits parse_bitstring(std::string_view text) {
  if (text.empty() || static_cast<int>(text.size()) > kMaxDim) {
    throw StructuralError("bitstring length out of range: '" + std::string(text) + "'");
  }
  Bits v = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v |= Bits{1} << i;
    } else if (text[i] != '0') {
      throw StructuralError("bad bitstring: '" + std::string(text) + "'");
    }
  }
  return v;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim) {
    throw StructuralError("matrix shape out of range");
  }
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.row_[i] = Bits{1} << i;
  return m;
}

void Gf2Matrix::set_row(int r, Bits bits) {
  assert(r >= 0 && r < rows_);
  row_[r] = bits & low_mask(cols_);
}

void Gf2Matrix::set(int r, int c, bool value) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (value) {
    row_[r] |= Bits{1} << c;
  } else {
    row_[r] &= ~(Bits{1} << c);
  }
}

Bits Gf2Matrix::column(int c) const {
  Bits out = 0;
  for (int r = 0; r < rows_; ++r) {
    if ((row_[r] >> c) & 1) out |= Bits{1} << r;
  }
  return out;
}

Bits Gf2Matrix::apply(Bits v) const {
  Bits out = 0;
  for (int r = 0; r < rows_; ++r) {
    if (parity(row_[r] & v)) out |= Bits{1} << r;
  }
  return out;
}

int Gf2Matrix::rank() const {
  Gf2Span span(cols_);
  for (Bits r : row_) span.insert(r);
  return span.rank();
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix shapes do not compose");
  Gf2Matrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    Bits acc = 0;
    for (int k = 0; k < a.cols_; ++k) {
      if ((a.row_[r] >> k) & 1) acc ^= b.row_[k];
    }
    out.row_[r] = acc;
  }
  return out;
}

Bits pull_back(Bits lambda, const Gf2Matrix& m) {
  Bits out = 0;
  for (int r = 0; r < m.rows(); ++r) {
    if ((lambda >> r) & 1) out ^= m.row(r);
  }
  return out;
}

Bits Gf2Span::reduce(Bits v, Bits* combo) const {
  for (const Row& row : pivot_rows_) {
    if ((v >> row.pivot) & 1) {
      v ^= row.value;
      if (combo != nullptr) *combo ^= row.combo;
    }
  }
  return v;
}

bool Gf2Span::insert(Bits v) {
  Bits combo = Bits{1} << rank();
  Bits rest = reduce(v, &combo);
  if (rest == 0) return false;
  int pivot = __builtin_ctzll(rest);
  // Keep rows fully reduced against the new pivot.
  for (Row& row : pivot_rows_) {
    if ((row.value >> pivot) & 1) {
      row.value ^= rest;
      row.combo ^= combo;
    }
  }
  pivot_rows_.push_back({rest, combo, pivot});
  return true;
}

bool Gf2Span::contains(Bits v) const { return reduce(v, nullptr) == 0; }

std::optional<Bits> Gf2Span::coordinates(Bits v) const {
  Bits combo = 0;
  if (reduce(v, &combo) != 0) return std::nullopt;
  return combo;
}

}  // namespace fanforge

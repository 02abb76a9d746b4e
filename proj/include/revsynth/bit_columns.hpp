#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "revsynth/gate.hpp"

namespace revsynth {

/// One bit column per circuit line, each column holding one bit per
/// truth-table row, packed 64 rows to a word. Row r of line k lives in
/// bit (r % 64) of word (r / 64) of column k. Bits past the last row are
/// kept zero so that popcounts need no extra masking.
class BitColumns {
public:
  BitColumns(int width, std::size_t rows)
      : width_(width), rows_(rows), words_((rows + 63) / 64), data_(width * words_, 0) {
    if (width < 1) throw std::invalid_argument("column set needs at least one line");
    if (rows < 1) throw std::invalid_argument("column set needs at least one row");
  }

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t words() const { return words_; }

  [[nodiscard]] std::uint64_t* column(int line) { return data_.data() + (line - 1) * words_; }
  [[nodiscard]] const std::uint64_t* column(int line) const {
    return data_.data() + (line - 1) * words_;
  }

  /// Valid-row mask for word w.
  [[nodiscard]] std::uint64_t row_mask(std::size_t w) const {
    const std::size_t full = rows_ / 64;
    if (w < full) return ~std::uint64_t{0};
    const unsigned rem = rows_ % 64;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  }

  void set_constant(int line, int value) {
    std::uint64_t* col = column(line);
    for (std::size_t w = 0; w < words_; ++w) col[w] = value ? row_mask(w) : 0;
  }

  /// Loads bit `bit_index` (0-based) of each row index into the column:
  /// row r gets (r >> bit_index) & 1.
  void load_index_bit(int line, int bit_index) {
    // Bits 0..5 repeat with period <= 64 and are the same in every word;
    // higher bits are constant within a word.
    static constexpr std::uint64_t kPattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    std::uint64_t* col = column(line);
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t word =
          bit_index < 6 ? kPattern[bit_index]
                        : ((w >> (bit_index - 6)) & 1 ? ~std::uint64_t{0} : 0);
      col[w] = word & row_mask(w);
    }
  }

  /// Bit of one row, for spot checks and the scalar oracle path.
  [[nodiscard]] int bit(int line, std::size_t row) const {
    return static_cast<int>((column(line)[row / 64] >> (row % 64)) & 1);
  }

  void set_bit(int line, std::size_t row, int value) {
    std::uint64_t& w = column(line)[row / 64];
    const std::uint64_t mask = std::uint64_t{1} << (row % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  /// Packed state of one row (bit k-1 = line k), the same convention as
  /// apply_gate on scalars.
  [[nodiscard]] std::uint64_t row_state(std::size_t row) const {
    std::uint64_t s = 0;
    for (int l = 1; l <= width_; ++l) s |= static_cast<std::uint64_t>(bit(l, row)) << (l - 1);
    return s;
  }

  friend bool operator==(const BitColumns&, const BitColumns&) = default;

private:
  int width_ = 0;
  std::size_t rows_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Applies one gate to all rows at once with whole-word boolean ops.
/// Equivalent to apply_gate on every row state.
inline void apply_gate_columns(BitColumns& cols, const Gate& g) {
  const std::size_t words = cols.words();
  switch (g.kind) {
    case GateKind::Not: {
      std::uint64_t* t = cols.column(g.lines[0]);
      for (std::size_t w = 0; w < words; ++w) t[w] = ~t[w] & cols.row_mask(w);
      return;
    }
    case GateKind::Cnot: {
      const std::uint64_t* c = cols.column(g.lines[0]);
      std::uint64_t* t = cols.column(g.lines[1]);
      for (std::size_t w = 0; w < words; ++w) t[w] ^= c[w];
      return;
    }
    case GateKind::Toffoli: {
      std::uint64_t* t = cols.column(g.target());
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t all = cols.row_mask(w);
        for (std::size_t i = 0; i + 1 < g.lines.size(); ++i) all &= cols.column(g.lines[i])[w];
        t[w] ^= all;
      }
      return;
    }
    default: {
      const std::uint64_t* p = cols.column(g.lines[0]);
      std::uint64_t* q = cols.column(g.lines[1]);
      std::uint64_t* t = cols.column(g.lines[2]);
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t q_old = q[w];
        std::uint64_t term = 0;
        switch (g.kind) {
          case GateKind::Peres: term = p[w] & q_old; break;
          case GateKind::PeresNegFirst: term = ~p[w] & q_old & cols.row_mask(w); break;
          case GateKind::PeresNegSecond: term = p[w] & ~q_old & cols.row_mask(w); break;
          default: term = p[w] | q_old; break;  // OrPeres
        }
        q[w] ^= p[w];
        t[w] ^= term;
      }
      return;
    }
  }
}

inline std::int64_t popcount_words(const std::uint64_t* words, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t w = 0; w < n; ++w) total += std::popcount(words[w]);
  return total;
}

}  // namespace revsynth

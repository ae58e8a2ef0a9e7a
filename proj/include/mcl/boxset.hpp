#ifndef MCL_BOXSET_HPP
#define MCL_BOXSET_HPP

#include <cstdint>
#include <vector>

#include "mcl/exponent.hpp"

namespace mcl {

class MonomialIdeal;

// Dense bit set over the integer box [0, bound] (inclusive, componentwise).
// Cells along the last coordinate share a padded row of 64-bit words, so
// upward closure and frontier extraction run wordwise.  Padding bits are
// kept zero at all times.
class BoxSet {
 public:
  explicit BoxSet(ExponentVector bound);

  int dims() const { return static_cast<int>(bound_.size()); }
  const ExponentVector& bound() const { return bound_; }

  bool inside(const ExponentVector& v) const;
  bool get(const ExponentVector& v) const;
  void set(const ExponentVector& v);

  // Marks every cell that dominates a marked cell.
  void close_upward();

  // Marked cells none of whose immediate predecessors is marked, in
  // lexicographic order.  For an upward-closed set these are its minimal
  // elements.
  std::vector<ExponentVector> minimal_elements() const;

  std::uint64_t count() const;

 private:
  std::int64_t row_of(const ExponentVector& v) const;

  ExponentVector bound_;
  std::vector<std::int64_t> stride_;  // row strides for dims 0..D-2
  std::int64_t rows_;
  int row_bits_;
  int words_per_row_;
  std::uint64_t last_word_mask_;
  std::vector<std::uint64_t> data_;
};

// Bitmap of (monomials of I) restricted to the box.  Generators outside the
// box contribute nothing inside and are skipped.
BoxSet ideal_box_bitmap(const MonomialIdeal& I, const ExponentVector& bound);

}  // namespace mcl

#endif

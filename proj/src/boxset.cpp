#include "mcl/boxset.hpp"

#include <bit>

#include "mcl/errors.hpp"
#include "mcl/ideal.hpp"

namespace mcl {

namespace {
// 250 MB of bits; enough for every bounded check this library runs, and a
// hard stop before an absurd input exhausts memory.
constexpr std::int64_t kMaxBits = 2'000'000'000;
}  // namespace

BoxSet::BoxSet(ExponentVector bound) : bound_(std::move(bound)) {
  if (bound_.empty()) throw DomainError("BoxSet needs at least one dimension");
  check_nonnegative(bound_);
  const int d = dims();
  row_bits_ = bound_[d - 1] + 1;
  words_per_row_ = (row_bits_ + 63) / 64;
  const int tail = row_bits_ % 64;
  last_word_mask_ = tail == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail) - 1);

  stride_.assign(d > 1 ? d - 1 : 0, 1);
  rows_ = 1;
  for (int i = d - 2; i >= 0; --i) {
    stride_[i] = rows_;
    rows_ *= bound_[i] + 1;
    if (rows_ > kMaxBits) throw DomainError("box too large for dense bit set");
  }
  if (rows_ * static_cast<std::int64_t>(row_bits_) > kMaxBits)
    throw DomainError("box too large for dense bit set");
  data_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

std::int64_t BoxSet::row_of(const ExponentVector& v) const {
  std::int64_t r = 0;
  for (std::size_t i = 0; i + 1 < bound_.size(); ++i) r += v[i] * stride_[i];
  return r;
}

bool BoxSet::inside(const ExponentVector& v) const {
  if (static_cast<int>(v.size()) != dims())
    throw DimensionMismatch("BoxSet dimension mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || v[i] > bound_[i]) return false;
  return true;
}

bool BoxSet::get(const ExponentVector& v) const {
  const std::int64_t row = row_of(v);
  const int j = v.back();
  return (data_[row * words_per_row_ + j / 64] >> (j % 64)) & 1;
}

void BoxSet::set(const ExponentVector& v) {
  const std::int64_t row = row_of(v);
  const int j = v.back();
  data_[row * words_per_row_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

void BoxSet::close_upward() {
  const int d = dims();
  ExponentVector u(d > 1 ? d - 1 : 0, 0);
  for (std::int64_t r = 0; r < rows_; ++r) {
    std::uint64_t* row = data_.data() + r * words_per_row_;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      const std::uint64_t* prev = row - stride_[i] * words_per_row_;
      for (int w = 0; w < words_per_row_; ++w) row[w] |= prev[w];
    }
    // Prefix-OR along the row: every bit above a set bit becomes set.
    bool carry = false;
    for (int w = 0; w < words_per_row_; ++w) {
      if (carry) {
        row[w] = ~std::uint64_t{0};
      } else {
        std::uint64_t x = row[w];
        x |= x << 1;
        x |= x << 2;
        x |= x << 4;
        x |= x << 8;
        x |= x << 16;
        x |= x << 32;
        row[w] = x;
        carry = x != 0;
      }
    }
    row[words_per_row_ - 1] &= last_word_mask_;
    // Odometer over the prefix coordinates, last one fastest.
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
      if (++u[i] <= bound_[i]) break;
      u[i] = 0;
    }
  }
}

std::vector<ExponentVector> BoxSet::minimal_elements() const {
  const int d = dims();
  std::vector<ExponentVector> out;
  std::vector<std::uint64_t> cand(words_per_row_);
  ExponentVector u(d > 1 ? d - 1 : 0, 0);
  for (std::int64_t r = 0; r < rows_; ++r) {
    const std::uint64_t* row = data_.data() + r * words_per_row_;
    // cand = row & ~(row shifted up one along the last coordinate)
    std::uint64_t prev_top = 0;
    for (int w = 0; w < words_per_row_; ++w) {
      const std::uint64_t shifted = (row[w] << 1) | prev_top;
      prev_top = row[w] >> 63;
      cand[w] = row[w] & ~shifted;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      const std::uint64_t* prev = row - stride_[i] * words_per_row_;
      for (int w = 0; w < words_per_row_; ++w) cand[w] &= ~prev[w];
    }
    for (int w = 0; w < words_per_row_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        ExponentVector v(d);
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i];
        v[d - 1] = w * 64 + b;
        out.push_back(std::move(v));
      }
    }
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
      if (++u[i] <= bound_[i]) break;
      u[i] = 0;
    }
  }
  return out;
}

std::uint64_t BoxSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : data_) c += std::popcount(w);
  return c;
}

BoxSet ideal_box_bitmap(const MonomialIdeal& I, const ExponentVector& bound) {
  BoxSet s(bound);
  for (const auto& g : I.generators())
    if (s.inside(g)) s.set(g);
  s.close_upward();
  return s;
}

}  // namespace mcl

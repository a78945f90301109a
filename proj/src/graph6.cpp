#include "gemex/graph6.hpp"

#include <cstddef>

namespace gemex {

namespace {

constexpr int kBias = 63;  // printable range starts at '?'

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}

  void push(bool bit) {
    cur_ = (cur_ << 1) | static_cast<int>(bit);
    if (++filled_ == 6) flush_full();
  }

  void pad() {
    while (filled_ != 0) push(false);
  }

 private:
  void flush_full() {
    out_ += static_cast<char>(cur_ + kBias);
    cur_ = 0;
    filled_ = 0;
  }

  std::string& out_;
  int cur_ = 0;
  int filled_ = 0;
};

class BitReader {
 public:
  BitReader(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool next() {
    if (filled_ == 0) {
      if (offset_ >= text_.size()) throw ParseError("graph6 data truncated", offset_);
      const unsigned char c = static_cast<unsigned char>(text_[offset_]);
      if (c < kBias || c > 126) throw ParseError("graph6 byte out of printable range", offset_);
      ++offset_;
      cur_ = c - kBias;
      filled_ = 6;
    }
    --filled_;
    return (cur_ >> filled_) & 1;
  }

  std::size_t offset() const { return offset_; }
  bool exhausted() const { return offset_ >= text_.size(); }

  // Any bit left over in the final byte must be zero padding.
  void check_padding() {
    while (filled_ > 0)
      if (next()) throw ParseError("graph6 padding bits must be zero", offset_ - 1);
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  int cur_ = 0;
  int filled_ = 0;
};

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    // long form: '~' then n in 18 bits, big-endian, 6 per byte
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 0x3f) + kBias);
    out += static_cast<char>(((n >> 6) & 0x3f) + kBias);
    out += static_cast<char>((n & 0x3f) + kBias);
  }
  BitWriter bits(out);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bits.push(g.has_edge(row, col));
  bits.pad();
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  std::size_t pos = 0;
  long n;
  const unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6 order beyond supported range", 1);
    if (text.size() < 4) throw ParseError("graph6 data truncated", text.size());
    n = 0;
    for (pos = 1; pos < 4; ++pos) {
      const unsigned char c = static_cast<unsigned char>(text[pos]);
      if (c < kBias || c > 126) throw ParseError("graph6 byte out of printable range", pos);
      n = (n << 6) | (c - kBias);
    }
  } else {
    if (head < kBias) throw ParseError("graph6 byte out of printable range", 0);
    n = head - kBias;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph order " + std::to_string(n) + " outside supported 1..64", 0);

  Graph g(static_cast<int>(n));
  BitReader bits(text, pos);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (bits.next()) g = g.with_edge(row, col);
  bits.check_padding();
  if (!bits.exhausted()) throw ParseError("trailing bytes after graph6 data", bits.offset());
  return g;
}

}  // namespace gemex

// bytes.hpp -- big-endian byte cursor primitives shared by the class-file
// and archive codecs.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace deblometer {

using u1 = std::uint8_t;
using u2 = std::uint16_t;
using u4 = std::uint32_t;
using u8 = std::uint64_t;

using Bytes = std::vector<u1>;

/// Thrown by ByteReader when a read runs past the end of the input.
class TruncatedInput : public std::runtime_error {
public:
  explicit TruncatedInput(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

class ByteReader {
public:
  explicit ByteReader(std::span<const u1> data) : data_(data) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  bool at_end() const { return pos_ == data_.size(); }

  void seek(std::size_t pos) {
    if (pos > data_.size()) throw TruncatedInput("seek past end of input");
    pos_ = pos;
  }

  u1 read_u1() {
    need(1);
    return data_[pos_++];
  }

  u2 read_u2() {
    need(2);
    u2 v = static_cast<u2>((data_[pos_] << 8) | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }

  u4 read_u4() {
    need(4);
    u4 v = (static_cast<u4>(data_[pos_]) << 24) |
           (static_cast<u4>(data_[pos_ + 1]) << 16) |
           (static_cast<u4>(data_[pos_ + 2]) << 8) |
           static_cast<u4>(data_[pos_ + 3]);
    pos_ += 4;
    return v;
  }

  u8 read_u8() {
    u8 hi = read_u4();
    return (hi << 32) | read_u4();
  }

  Bytes read_bytes(std::size_t n) {
    need(n);
    Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
              data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
  }

  std::string read_string(std::size_t n) {
    need(n);
    std::string out(reinterpret_cast<const char*>(data_.data() + pos_), n);
    pos_ += n;
    return out;
  }

  void skip(std::size_t n) {
    need(n);
    pos_ += n;
  }

private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n)
      throw TruncatedInput("input truncated at offset " + std::to_string(pos_) +
                           ", needed " + std::to_string(n) + " more byte(s)");
  }

  std::span<const u1> data_;
  std::size_t pos_ = 0;
};

class ByteWriter {
public:
  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }
  std::size_t size() const { return out_.size(); }

  void write_u1(u1 v) { out_.push_back(v); }

  void write_u2(u2 v) {
    out_.push_back(static_cast<u1>(v >> 8));
    out_.push_back(static_cast<u1>(v));
  }

  void write_u4(u4 v) {
    out_.push_back(static_cast<u1>(v >> 24));
    out_.push_back(static_cast<u1>(v >> 16));
    out_.push_back(static_cast<u1>(v >> 8));
    out_.push_back(static_cast<u1>(v));
  }

  void write_u8(u8 v) {
    write_u4(static_cast<u4>(v >> 32));
    write_u4(static_cast<u4>(v));
  }

  void write_bytes(std::span<const u1> data) {
    out_.insert(out_.end(), data.begin(), data.end());
  }

  void write_string(const std::string& s) {
    out_.insert(out_.end(), s.begin(), s.end());
  }

  // Little-endian writers for the ZIP container, which is the one format
  // here that is not big-endian.
  void write_u2le(u2 v) {
    out_.push_back(static_cast<u1>(v));
    out_.push_back(static_cast<u1>(v >> 8));
  }

  void write_u4le(u4 v) {
    out_.push_back(static_cast<u1>(v));
    out_.push_back(static_cast<u1>(v >> 8));
    out_.push_back(static_cast<u1>(v >> 16));
    out_.push_back(static_cast<u1>(v >> 24));
  }

private:
  Bytes out_;
};

inline u2 read_u2le(std::span<const u1> d, std::size_t off) {
  return static_cast<u2>(d[off] | (d[off + 1] << 8));
}

inline u4 read_u4le(std::span<const u1> d, std::size_t off) {
  return static_cast<u4>(d[off]) | (static_cast<u4>(d[off + 1]) << 8) |
         (static_cast<u4>(d[off + 2]) << 16) |
         (static_cast<u4>(d[off + 3]) << 24);
}

}  // namespace deblometer

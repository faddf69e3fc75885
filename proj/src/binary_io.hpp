#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "rehub/error.hpp"

namespace rehub::detail {

inline void put_u8(std::ostream& out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

template <typename T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> buf;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
  }
  out.write(buf.data(), buf.size());
}

inline void put_magic(std::ostream& out, std::string_view magic) {
  out.write(magic.data(), static_cast<std::streamsize>(magic.size()));
}

class Reader {
 public:
  Reader(std::istream& in, std::string_view what) : in_(in), what_(what) {}

  template <typename T>
  T le() {
    std::array<char, sizeof(T)> buf;
    read(buf.data(), buf.size());
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    }
    return static_cast<T>(v);
  }

  std::uint8_t u8() { return le<std::uint8_t>(); }

  void expect_magic(std::string_view magic) {
    std::string got(magic.size(), '\0');
    read(got.data(), got.size());
    if (got != magic) throw FormatError(std::string(what_) + ": bad magic");
  }

  void expect_end() {
    if (in_.peek() != std::istream::traits_type::eof()) {
      throw FormatError(std::string(what_) + ": trailing bytes after payload");
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError(std::string(what_) + ": " + why);
  }

 private:
  void read(char* dst, std::size_t n) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) fail("truncated stream");
  }

  std::istream& in_;
  std::string_view what_;
};

}  // namespace rehub::detail

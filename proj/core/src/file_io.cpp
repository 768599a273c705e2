#include "fakeweather/file_io.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>

#include "fakeweather/error.hpp"

namespace fakeweather {
namespace {

[[noreturn]] void io_fail(const char* action, const std::filesystem::path& path) {
  const int err = errno;
  std::string msg = std::string("cannot ") + action + " '" + path.string() + "'";
  if (err != 0) msg += std::string(": ") + std::strerror(err);
  throw IoError(msg);
}

template <typename Container>
Container read_all(const std::filesystem::path& path) {
  errno = 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail("open", path);
  Container data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) io_fail("read", path);
  return data;
}

void write_all(const std::filesystem::path& path, const char* data, std::size_t size) {
  errno = 0;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) io_fail("open for writing", path);
  out.write(data, static_cast<std::streamsize>(size));
  out.flush();
  if (!out) io_fail("write", path);
}

}  // namespace

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  return read_all<std::vector<std::uint8_t>>(path);
}

std::string read_text_file(const std::filesystem::path& path) {
  return read_all<std::string>(path);
}

void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  write_all(path, reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  write_all(path, text.data(), text.size());
}

}  // namespace fakeweather

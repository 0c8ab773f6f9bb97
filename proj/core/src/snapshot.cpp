#include "kp5/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

constexpr char kMagic[7] = {'K', 'P', '5', 'L', 'A', 'B', '1'};

void put_u64(std::vector<unsigned char>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<unsigned char>& buf, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  put_u64(buf, v);
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t v = get_u64(p);
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

}  // namespace

void write_snapshot(const SpectralField& u, const std::filesystem::path& path) {
  const TorusGrid& g = u.grid();
  std::vector<unsigned char> buf;
  buf.reserve(7 + 24 + static_cast<std::size_t>(g.nx / 2 + 1) * g.ny * 16);
  buf.insert(buf.end(), kMagic, kMagic + 7);
  put_u64(buf, static_cast<std::uint64_t>(g.nx));
  put_u64(buf, static_cast<std::uint64_t>(g.ny));
  put_f64(buf, g.lambda);
  for (int mx = 0; mx <= g.nx / 2; ++mx) {
    for (int ky = 0; ky < g.ny; ++ky) {
      const auto& z = u.raw(mx, ky);
      put_f64(buf, z.real());
      put_f64(buf, z.imag());
    }
  }

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw numerical_error("write_snapshot: cannot open " + tmp.string());
    os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!os) throw numerical_error("write_snapshot: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SpectralField read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw parameter_error("read_snapshot: cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 7 + 24 || std::memcmp(buf.data(), kMagic, 7) != 0) {
    throw parameter_error("read_snapshot: bad magic in " + path.string());
  }
  const unsigned char* p = buf.data() + 7;
  std::uint64_t nx = get_u64(p);
  std::uint64_t ny = get_u64(p + 8);
  double lambda = get_f64(p + 16);
  p += 24;

  TorusGrid g;
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  g.lambda = lambda;
  g.validate();
  const std::size_t expect = 7 + 24 + static_cast<std::size_t>(g.nx / 2 + 1) * g.ny * 16;
  if (buf.size() != expect) throw parameter_error("read_snapshot: truncated " + path.string());

  SpectralField u(g);
  for (int mx = 0; mx <= g.nx / 2; ++mx) {
    for (int ky = 0; ky < g.ny; ++ky) {
      double re = get_f64(p);
      double im = get_f64(p + 8);
      p += 16;
      u.raw(mx, ky) = {re, im};
    }
  }
  return u;
}

}  // namespace kp5

#include "phasespace/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "phasespace/error.hpp"

namespace phasespace {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | mode);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, std::ios::in | mode);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf, end);
}

void write_wigner_csv(const std::filesystem::path& path, const WignerGrid& w, double x_scale,
                      double p_scale) {
  const bool normalised = x_scale != 1.0 || p_scale != 1.0;
  auto out = open_for_write(path);
  out << (normalised ? "x,p,w,X,P\n" : "x,p,w\n");
  for (std::size_t i = 0; i < w.x_axis().size(); ++i) {
    const double x = w.x_axis()[i];
    for (std::size_t j = 0; j < w.p_axis().size(); ++j) {
      const double p = w.p_axis()[j];
      out << format_double(x) << ',' << format_double(p) << ',' << format_double(w(i, j));
      if (normalised) out << ',' << format_double(x * x_scale) << ',' << format_double(p * p_scale);
      out << '\n';
    }
  }
  if (!out) throw Error("write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw Error(path.string() + ": empty CSV");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(trim(cell));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string cell = trim(rest.substr(0, comma));
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw Error(path.string() + ": bad number '" + cell + "'");
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (row.size() != table.header.size()) throw Error(path.string() + ": ragged CSV row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

PgmRange write_wigner_pgm(const std::filesystem::path& path, const WignerGrid& w) {
  const auto [lo, hi] = std::minmax_element(w.values().begin(), w.values().end());
  const PgmRange range{*lo, *hi};
  const double span = range.max - range.min;
  const std::size_t width = w.x_axis().size();
  const std::size_t height = w.p_axis().size();

  std::vector<unsigned char> pixels(width * height);
  for (std::size_t row = 0; row < height; ++row) {
    const std::size_t j = height - 1 - row;
    for (std::size_t i = 0; i < width; ++i) {
      const double level = span > 0.0 ? (w(i, j) - range.min) / span : 0.0;
      pixels[row * width + i] =
          static_cast<unsigned char>(std::clamp(std::lround(255.0 * level), 0L, 255L));
    }
  }
  auto out = open_for_write(path, std::ios::binary);
  out << "P5\n" << width << ' ' << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw Error("write failed for " + path.string());
  return range;
}

PgmImage read_pgm(const std::filesystem::path& path) {
  auto in = open_for_read(path, std::ios::binary);
  std::string magic;
  PgmImage img{};
  int maxval = 0;
  in >> magic >> img.width >> img.height >> maxval;
  if (magic != "P5" || maxval != 255 || !in) throw Error(path.string() + ": not an 8-bit P5 PGM");
  in.get();  // single whitespace before the raster
  img.pixels.resize(img.width * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (!in) throw Error(path.string() + ": truncated raster");
  return img;
}

void write_metadata(const std::filesystem::path& path, const Metadata& meta) {
  auto out = open_for_write(path);
  for (const auto& [key, value] : meta) out << key << " = " << value << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

Metadata read_metadata(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  Metadata meta;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    meta.emplace_back(trim(std::string_view(line).substr(0, eq)),
                      trim(std::string_view(line).substr(eq + 1)));
  }
  return meta;
}

}  // namespace phasespace

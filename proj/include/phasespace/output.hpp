#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "phasespace/wigner.hpp"

namespace phasespace {

/// Ordered key/value record written as `key = value` lines.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest text that parses back to the same double (17 significant digits).
std::string format_double(double v);

/// CSV with header `x,p,w`, one row per sample, x outer and p inner. When
/// `x_scale`/`p_scale` are not 1 the normalised coordinates X = x*x_scale,
/// P = p*p_scale are appended as columns `X,P`.
void write_wigner_csv(const std::filesystem::path& path, const WignerGrid& w, double x_scale = 1.0,
                      double p_scale = 1.0);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Range used for the 8-bit linear map of a PGM heatmap.
struct PgmRange {
  double min;
  double max;
};

/// Binary P5 image, width = x samples, height = p samples, top row = largest p.
/// W is mapped linearly from [min W, max W] to [0, 255].
PgmRange write_wigner_pgm(const std::filesystem::path& path, const WignerGrid& w);

struct PgmImage {
  std::size_t width;
  std::size_t height;
  std::vector<unsigned char> pixels;
};

PgmImage read_pgm(const std::filesystem::path& path);

void write_metadata(const std::filesystem::path& path, const Metadata& meta);
Metadata read_metadata(const std::filesystem::path& path);

}  // namespace phasespace

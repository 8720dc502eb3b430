#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cylgabor/qp_signal.hpp"
#include "cylgabor/special_fn.hpp"
#include "cylgabor/stft.hpp"
#include "cylgabor/superframes.hpp"

namespace cylgabor::io {

// Malformed input; the message names the source and the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that cannot be opened for reading or writing.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17 significant digits, so every finite double round-trips.
std::string fmt(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// { "nu": real, "coeffs": [[k, re, im], ...] }
QPSignal parse_signal(const std::string& text, const std::string& source = "<signal>");
std::string dump_signal(const QPSignal& f);
QPSignal load_signal(const std::string& path);
void save_signal(const std::string& path, const QPSignal& f);

// { "nu": real, "channels": [ [[k, re, im], ...], ... ] }
VectorSignal parse_vector_signal(const std::string& text, const std::string& source = "<vector signal>");
VectorSignal load_vector_signal(const std::string& path);

// { "c": real (optional), "gamma": real, "nu_shift": real, "nu_j": [real, ...] }
TPFactorization parse_tp(const std::string& text, const std::string& source = "<tp>");
TPFactorization load_tp(const std::string& path);

// Header `x,xi`.
std::vector<CylinderPoint> parse_points_csv(const std::string& text, const std::string& source = "<points>");
std::string dump_points_csv(const std::vector<CylinderPoint>& pts);

struct Sample {
  CylinderPoint p;
  cplx value;
};

// Header `x,xi,re,im`.
std::vector<Sample> parse_samples_csv(const std::string& text, const std::string& source = "<samples>");
std::string dump_samples_csv(const std::vector<Sample>& samples);

// Header `x,xi,re,im`, xi-major, rows of `values` following xi.
std::string dump_grid_csv(const GridSpec& grid, const Eigen::MatrixXcd& values);

}  // namespace cylgabor::io

#include "cylgabor/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cylgabor::io {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

const json& field(const json& obj, const char* name, const std::string& source) {
  if (!obj.is_object()) throw ParseError(source + ": expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(source + ": missing field '" + name + "'");
  return *it;
}

std::vector<std::pair<int, cplx>> coeff_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of [k, re, im]");
  std::vector<std::pair<int, cplx>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 3) throw ParseError(at + ": expected [k, re, im]");
    if (!e[0].is_number_integer()) throw ParseError(at + ": mode index must be an integer");
    out.emplace_back(e[0].get<int>(), cplx(number(e[1], at + ".re"), number(e[2], at + ".im")));
  }
  return out;
}

json coeff_json(const QPSignal& f) {
  json arr = json::array();
  for (const auto& [k, a] : f.coeffs) arr.push_back({k, a.real(), a.imag()});
  return arr;
}

QPSignal signal_from(double nu, const std::vector<std::pair<int, cplx>>& entries, const std::string& where) {
  try {
    return make_signal(nu, entries);
  } catch (const std::domain_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text, const std::string& source,
                                               const std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!seen_header) {
      if (cells != header) {
        std::string want;
        for (std::size_t i = 0; i < header.size(); ++i) want += (i ? "," : "") + header[i];
        throw ParseError(source + ":" + std::to_string(lineno) + ": expected header '" + want + "'");
      }
      seen_header = true;
      continue;
    }
    if (cells.size() != header.size())
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                       " columns");
    cells.push_back(std::to_string(lineno));
    rows.push_back(std::move(cells));
  }
  if (!seen_header) throw ParseError(source + ": empty file");
  return rows;
}

double cell_number(const std::string& cell, const std::string& source, const std::string& lineno) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used == cell.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(source + ":" + lineno + ": not a number: '" + cell + "'");
}

}  // namespace

QPSignal parse_signal(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  const double nu = number(field(j, "nu", source), source + ": nu");
  return signal_from(nu, coeff_list(field(j, "coeffs", source), source + ": coeffs"), source);
}

std::string dump_signal(const QPSignal& f) {
  json j;
  j["nu"] = f.nu;
  j["coeffs"] = coeff_json(f);
  return j.dump() + "\n";
}

QPSignal load_signal(const std::string& path) { return parse_signal(read_file(path), path); }

void save_signal(const std::string& path, const QPSignal& f) { write_file(path, dump_signal(f)); }

VectorSignal parse_vector_signal(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  VectorSignal F;
  F.nu = number(field(j, "nu", source), source + ": nu");
  const json& ch = field(j, "channels", source);
  if (!ch.is_array() || ch.empty()) throw ParseError(source + ": channels must be a nonempty array");
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const std::string where = source + ": channels[" + std::to_string(i) + "]";
    F.channels.push_back(signal_from(F.nu, coeff_list(ch[i], where), where));
  }
  return F;
}

VectorSignal load_vector_signal(const std::string& path) { return parse_vector_signal(read_file(path), path); }

TPFactorization parse_tp(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  TPFactorization fac;
  if (j.contains("c")) fac.c = number(j["c"], source + ": c");
  fac.gamma = number(field(j, "gamma", source), source + ": gamma");
  if (j.contains("nu_shift")) fac.nu_shift = number(j["nu_shift"], source + ": nu_shift");
  if (j.contains("nu_j")) {
    const json& a = j["nu_j"];
    if (!a.is_array()) throw ParseError(source + ": nu_j must be an array");
    for (std::size_t i = 0; i < a.size(); ++i)
      fac.nu_j.push_back(number(a[i], source + ": nu_j[" + std::to_string(i) + "]"));
  }
  try {
    fac.validate();
  } catch (const std::domain_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  return fac;
}

TPFactorization load_tp(const std::string& path) { return parse_tp(read_file(path), path); }

std::vector<CylinderPoint> parse_points_csv(const std::string& text, const std::string& source) {
  std::vector<CylinderPoint> pts;
  for (const auto& row : csv_rows(text, source, {"x", "xi"}))
    pts.push_back({cell_number(row[0], source, row[2]), cell_number(row[1], source, row[2])});
  return pts;
}

std::string dump_points_csv(const std::vector<CylinderPoint>& pts) {
  std::string out = "x,xi\n";
  for (const auto& p : pts) out += fmt(p.x) + "," + fmt(p.xi) + "\n";
  return out;
}

std::vector<Sample> parse_samples_csv(const std::string& text, const std::string& source) {
  std::vector<Sample> out;
  for (const auto& row : csv_rows(text, source, {"x", "xi", "re", "im"}))
    out.push_back({{cell_number(row[0], source, row[4]), cell_number(row[1], source, row[4])},
                   {cell_number(row[2], source, row[4]), cell_number(row[3], source, row[4])}});
  return out;
}

std::string dump_samples_csv(const std::vector<Sample>& samples) {
  std::string out = "x,xi,re,im\n";
  for (const auto& s : samples)
    out += fmt(s.p.x) + "," + fmt(s.p.xi) + "," + fmt(s.value.real()) + "," + fmt(s.value.imag()) + "\n";
  return out;
}

std::string dump_grid_csv(const GridSpec& grid, const Eigen::MatrixXcd& values) {
  if (values.rows() != grid.nxi || values.cols() != grid.nx)
    throw std::domain_error("dump_grid_csv: value matrix does not match the grid");
  std::string out = "x,xi,re,im\n";
  for (int j = 0; j < grid.nxi; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const cplx v = values(j, i);
      out += fmt(grid.x(i)) + "," + fmt(grid.xi(j)) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
    }
  return out;
}

}  // namespace cylgabor::io

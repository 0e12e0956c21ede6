#include "expmodel/dataset_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "expmodel/error.hpp"

namespace expmodel {

std::string format_real(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_csv_row(std::ostream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

void write_dataset_csv(std::ostream& os, const Dataset& data) {
  if (const auto& meta = data.meta()) {
    os << "# seed=" << meta->seed << " sigma=" << format_real(meta->sigma_noise) << " map=" << meta->map_name
       << " prng=" << meta->prng_name << " n=" << meta->n << '\n';
  }
  const bool clean = data.has_clean();
  os << (clean ? "i,x,y,x_o,y_o\n" : "i,x,y\n");
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& s = data[i];
    if (clean) {
      const auto& c = data.clean()[i];
      write_csv_row(os, {std::to_string(i + 1), format_real(s.x), format_real(s.y), format_real(c.x), format_real(c.y)});
    } else {
      write_csv_row(os, {std::to_string(i + 1), format_real(s.x), format_real(s.y)});
    }
  }
}

void save_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidParameter, "cannot open '" + path.string() + "' for writing");
  write_dataset_csv(os, data);
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view cell, std::size_t line_no) {
  cell = trim(cell);
  // Non-finite values parse here and are rejected by Dataset.
  std::string tmp(cell);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": cannot parse number '" + tmp + "'");
  }
  return v;
}

GenerationMeta parse_meta(std::string_view comment) {
  GenerationMeta meta;
  for (auto token : split(trim(comment), ' ')) {
    token = trim(token);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) continue;
    const auto key = token.substr(0, eq);
    const std::string value(token.substr(eq + 1));
    try {
      if (key == "seed") meta.seed = std::stoull(value);
      else if (key == "sigma") meta.sigma_noise = std::stod(value);
      else if (key == "map") meta.map_name = value;
      else if (key == "prng") meta.prng_name = value;
      else if (key == "n") meta.n = std::stoull(value);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad metadata value for '" + std::string(key) + "'");
    }
  }
  return meta;
}

}  // namespace

Dataset read_dataset_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<GenerationMeta> meta;
  std::vector<std::string_view> header;
  std::string header_line;

  int col_x = -1, col_y = -1, col_xo = -1, col_yo = -1;
  std::vector<Sample> samples;
  std::vector<Sample> clean;

  while (std::getline(is, line)) {
    ++line_no;
    const auto view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      if (view.find("seed=") != std::string_view::npos) meta = parse_meta(view.substr(1));
      continue;
    }
    if (header.empty()) {
      header_line = std::string(view);
      header = split(header_line, ',');
      for (std::size_t c = 0; c < header.size(); ++c) {
        const auto name = trim(header[c]);
        if (name == "x") col_x = static_cast<int>(c);
        else if (name == "y") col_y = static_cast<int>(c);
        else if (name == "x_o") col_xo = static_cast<int>(c);
        else if (name == "y_o") col_yo = static_cast<int>(c);
      }
      if (col_x < 0 || col_y < 0) throw Error(ErrorKind::ParseError, "header must name columns x and y");
      continue;
    }
    const auto cells = split(view, ',');
    if (cells.size() != header.size()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(header.size()) + " cells, got " +
                                             std::to_string(cells.size()));
    }
    samples.push_back({parse_real(cells[static_cast<std::size_t>(col_x)], line_no),
                       parse_real(cells[static_cast<std::size_t>(col_y)], line_no)});
    if (col_xo >= 0 && col_yo >= 0) {
      clean.push_back({parse_real(cells[static_cast<std::size_t>(col_xo)], line_no),
                       parse_real(cells[static_cast<std::size_t>(col_yo)], line_no)});
    }
  }

  Dataset out(std::move(samples), std::move(clean));
  if (meta) out.set_meta(*meta);
  return out;
}

Dataset load_dataset_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::InvalidParameter, "cannot open '" + path.string() + "'");
  return read_dataset_csv(is);
}

}  // namespace expmodel

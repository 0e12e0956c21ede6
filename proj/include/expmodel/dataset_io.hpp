#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "expmodel/dataset.hpp"

namespace expmodel {

// Shortest-stable decimal rendering used by every CSV writer (17 significant
// digits, round-trips exactly).
[[nodiscard]] std::string format_real(double v);

// Dataset CSV:
//   # seed=<s> sigma=<sigma> map=ulam prng=<name> n=<n>     (only with meta)
//   i,x,y[,x_o,y_o]
// Rows are 1-based and in insertion order.
void write_dataset_csv(std::ostream& os, const Dataset& data);
void save_dataset_csv(const std::filesystem::path& path, const Dataset& data);

// Reads the format above. A file with no rows yields an empty dataset; it is
// up to the consumer to reject it. Throws ParseError on malformed content.
[[nodiscard]] Dataset read_dataset_csv(std::istream& is);
[[nodiscard]] Dataset load_dataset_csv(const std::filesystem::path& path);

// Plain RFC-4180-free CSV writing helpers shared by the other artifact writers.
void write_csv_row(std::ostream& os, std::initializer_list<std::string> cells);

}  // namespace expmodel

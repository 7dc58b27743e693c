#pragma once

#include <cstdint>
#include <string>

#include "peierls/dataset_io.hpp"
#include "peierls/flux.hpp"

namespace peierls::cli {

enum class Format { text, json };

struct CommandResult {
  std::string output;
  std::string warnings;
  int exit_code = 0;
};

CommandResult classify(const Flux& flux, Format format);
CommandResult verify(const Flux& flux, std::int64_t gauge, bool corrupt, Format format);
CommandResult invariant(const Flux& flux, int max_j, Format format);
CommandResult spectrum(const Flux& flux, int k_grid, int depth, Format format);
// Writes the dataset to out_path, or into the result when out_path is empty.
CommandResult butterfly(int q_max, int k_grid, unsigned threads, bool check, DatasetFormat format,
                        const std::string& out_path);
CommandResult landau(double r, double m, int n_max, Format format);
CommandResult gauge_check(const Flux& flux, std::int64_t gauge, std::uint64_t seed, Format format);

}  // namespace peierls::cli

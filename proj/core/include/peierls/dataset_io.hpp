#pragma once

#include <iosfwd>
#include <string>

#include "peierls/spectral.hpp"

namespace peierls {

enum class DatasetFormat { csv, json };

// CSV: "phi_num,phi_den,energy" header then one row per sample.
// JSON: {"q_max":..,"k_grid":..,"points":[{"phi":[nu,q],"E":..},..]}.
// Energies are written in shortest round-trip form, so reading back gives the
// same doubles.
void write_dataset(std::ostream& out, const ButterflyDataset& data, DatasetFormat format);
void write_dataset(const std::string& path, const ButterflyDataset& data, DatasetFormat format);

// CSV carries no parameters; q_max is recovered from the largest denominator
// and k_grid is left 0.
ButterflyDataset read_dataset(std::istream& in, DatasetFormat format);
ButterflyDataset read_dataset(const std::string& path, DatasetFormat format);

}  // namespace peierls

#include "peierls/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "peierls/errors.hpp"

namespace peierls {

namespace {

constexpr const char* csv_header = "phi_num,phi_den,energy";

void write_csv(std::ostream& out, const ButterflyDataset& data) {
  out << csv_header << '\n';
  std::string line;
  char buf[32];
  auto append = [&](auto v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    line.append(buf, res.ptr);
  };
  for (const ButterflyRow& r : data.rows) {
    line.clear();
    append(r.num);
    line += ',';
    append(r.den);
    line += ',';
    append(r.energy == 0.0 ? 0.0 : r.energy);
    line += '\n';
    out << line;
  }
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw Error(Errc::dataset_format, "line " + std::to_string(line_no) + ": bad field '" + std::string(field) + "'");
  }
  return value;
}

ButterflyDataset read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header) {
    throw Error(Errc::dataset_format, "missing CSV header '" + std::string(csv_header) + "'");
  }
  ButterflyDataset data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string_view v(line);
    const auto c1 = v.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : v.find(',', c1 + 1);
    if (c2 == std::string_view::npos || v.find(',', c2 + 1) != std::string_view::npos) {
      throw Error(Errc::dataset_format, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    ButterflyRow r{parse_field<std::int64_t>(v.substr(0, c1), line_no),
                   parse_field<std::int64_t>(v.substr(c1 + 1, c2 - c1 - 1), line_no),
                   parse_field<double>(v.substr(c2 + 1), line_no)};
    data.q_max = std::max<int>(data.q_max, static_cast<int>(r.den));
    data.rows.push_back(r);
  }
  return data;
}

void write_json(std::ostream& out, const ButterflyDataset& data) {
  nlohmann::json points = nlohmann::json::array();
  for (const ButterflyRow& r : data.rows) {
    points.push_back({{"phi", {r.num, r.den}}, {"E", r.energy == 0.0 ? 0.0 : r.energy}});
  }
  nlohmann::json doc;
  doc["q_max"] = data.q_max;
  doc["k_grid"] = data.k_grid;
  doc["points"] = std::move(points);
  out << doc.dump() << '\n';
}

ButterflyDataset read_json(std::istream& in) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    ButterflyDataset data;
    data.q_max = doc.at("q_max").get<int>();
    data.k_grid = doc.at("k_grid").get<int>();
    for (const auto& p : doc.at("points")) {
      const auto& phi = p.at("phi");
      if (!phi.is_array() || phi.size() != 2) throw Error(Errc::dataset_format, "phi must be [num, den]");
      data.rows.push_back({phi[0].get<std::int64_t>(), phi[1].get<std::int64_t>(), p.at("E").get<double>()});
    }
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::dataset_format, e.what());
  }
}

}  // namespace

void write_dataset(std::ostream& out, const ButterflyDataset& data, DatasetFormat format) {
  if (format == DatasetFormat::csv) {
    write_csv(out, data);
  } else {
    write_json(out, data);
  }
}

void write_dataset(const std::string& path, const ButterflyDataset& data, DatasetFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::dataset_format, "cannot open " + path + " for writing");
  write_dataset(out, data, format);
  if (!out) throw Error(Errc::dataset_format, "write to " + path + " failed");
}

ButterflyDataset read_dataset(std::istream& in, DatasetFormat format) {
  return format == DatasetFormat::csv ? read_csv(in) : read_json(in);
}

ButterflyDataset read_dataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::dataset_format, "cannot open " + path);
  return read_dataset(in, format);
}

}  // namespace peierls

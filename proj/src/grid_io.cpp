#include "qumond/grid_io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace qumond {

static_assert(std::endian::native == std::endian::little,
              "grid dumps are little-endian; big-endian hosts unsupported");

void write_grid(std::ostream& out, const ScalarGrid& g, int component) {
  std::ostringstream header;
  header.precision(17);
  header << "SCALARGRID n=" << g.n() << " L=" << g.half_width()
         << " layout=x-fastest encoding=f64le";
  if (component > 0) header << " component=" << component;
  header << "\n";
  out << header.str();
  out.write(reinterpret_cast<const char*>(g.data().data()),
            static_cast<std::streamsize>(g.size() * sizeof(double)));
}

void write_grid(const std::string& path, const ScalarGrid& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_grid(out, g);
}

void write_grid(const std::string& path, const VectorGrid& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (int k = 0; k < 3; ++k) write_grid(out, v.comp(k), k + 1);
}

namespace {
ScalarGrid read_block(std::istream& in, int expected_component) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("grid dump: missing header");
  std::istringstream ss(line);
  std::string tag;
  ss >> tag;
  if (tag != "SCALARGRID") throw std::runtime_error("grid dump: bad magic '" + tag + "'");
  int n = 0, component = 0;
  double L = 0.0;
  std::string tok;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::runtime_error("grid dump: bad token '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "n") n = std::stoi(val);
    else if (key == "L") L = std::stod(val);
    else if (key == "component") component = std::stoi(val);
    else if (key == "layout") {
      if (val != "x-fastest") throw std::runtime_error("grid dump: unsupported layout " + val);
    } else if (key == "encoding") {
      if (val != "f64le") throw std::runtime_error("grid dump: unsupported encoding " + val);
    } else {
      throw std::runtime_error("grid dump: unknown key " + key);
    }
  }
  if (expected_component > 0 && component != expected_component)
    throw std::runtime_error("grid dump: expected component " + std::to_string(expected_component));
  std::vector<double> data(static_cast<std::size_t>(n) * n * n);
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!in) throw std::runtime_error("grid dump: truncated data block");
  return ScalarGrid(n, L, std::move(data));
}
}  // namespace

ScalarGrid read_scalar_grid(std::istream& in) { return read_block(in, 0); }

ScalarGrid read_scalar_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_scalar_grid(in);
}

VectorGrid read_vector_grid(std::istream& in) {
  ScalarGrid x = read_block(in, 1);
  ScalarGrid y = read_block(in, 2);
  ScalarGrid z = read_block(in, 3);
  return VectorGrid(std::move(x), std::move(y), std::move(z));
}

VectorGrid read_vector_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_vector_grid(in);
}

}  // namespace qumond

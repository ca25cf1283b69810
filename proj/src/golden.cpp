#include "skewdyck/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skewdyck {

GoldenTable parse_golden(const std::string& text) {
  GoldenTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.header.push_back(line);
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    GoldenRow row{};
    bool first = true;
    while (fields >> token) {
      Integer value;
      if (value.set_str(token, 10) != 0)
        throw std::runtime_error("golden line " + std::to_string(line_no) + ": bad integer '" + token + "'");
      if (first) {
        if (sgn(value) < 0) throw std::runtime_error("golden line " + std::to_string(line_no) + ": negative index");
        row.index = value.get_ui();
        first = false;
      } else {
        row.values.push_back(std::move(value));
      }
    }
    if (first) continue;
    if (row.values.empty())
      throw std::runtime_error("golden line " + std::to_string(line_no) + ": index without values");
    table.rows.push_back(std::move(row));
  }
  return table;
}

GoldenTable load_golden(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open golden file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_golden(buf.str());
}

}  // namespace skewdyck

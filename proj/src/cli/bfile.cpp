#include "asmtree/cli/bfile.hpp"

#include <fstream>
#include <sstream>

namespace asmtree::cli {

std::vector<BFileTerm> parse_bfile(std::istream& in) {
  std::vector<BFileTerm> terms;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw MalformedBFile("b-file line " + std::to_string(line_no) + ": expected \"index value\"");
    }
    BFileTerm term{};
    try {
      std::size_t used = 0;
      term.index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("index");
      term.value = Natural::parse(value_text);
    } catch (const std::exception&) {
      throw MalformedBFile("b-file line " + std::to_string(line_no) + ": cannot parse \"" + line + "\"");
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::vector<BFileTerm> read_bfile(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MalformedBFile("cannot read b-file " + file.string());
  return parse_bfile(in);
}

}  // namespace asmtree::cli

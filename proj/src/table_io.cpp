#include "lrbqv/table_io.hpp"

#include <istream>
#include <sstream>
#include <unordered_map>

namespace lrbqv {

  namespace {
    std::vector<std::string> split_ws(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> words;
      for (std::string w; in >> w;) {
        words.push_back(w);
      }
      return words;
    }

    bool is_skippable(std::string const& line) {
      auto pos = line.find_first_not_of(" \t\r");
      return pos == std::string::npos || line[pos] == '#';
    }
  }  // namespace

  RawTable parse_table(std::istream& in) {
    RawTable                                     raw;
    std::unordered_map<std::string, std::size_t> index;
    bool                                         header_seen = false;
    std::size_t                                  line_no     = 0;
    std::size_t                                  header_line = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (is_skippable(line)) {
        continue;
      }
      auto words = split_ws(line);
      if (!header_seen) {
        if (words.front() != "elements:") {
          throw ParseError("line " + std::to_string(line_no)
                               + ": expected 'elements: <names>'",
                           line_no,
                           1);
        }
        words.erase(words.begin());
        if (words.empty()) {
          throw ParseError("line " + std::to_string(line_no)
                               + ": no element names",
                           line_no,
                           1);
        }
        for (auto const& w : words) {
          if (w.front() == '#') {
            throw ParseError("line " + std::to_string(line_no)
                                 + ": element names may not start with '#'",
                             line_no,
                             line.find(w) + 1);
          }
          if (!index.try_emplace(w, raw.names.size()).second) {
            throw ParseError("line " + std::to_string(line_no)
                                 + ": duplicate element name '" + w + "'",
                             line_no,
                             1);
          }
          raw.names.push_back(w);
        }
        header_seen = true;
        header_line = line_no;
        continue;
      }
      if (raw.rows.size() == raw.names.size()) {
        throw ParseError("line " + std::to_string(line_no)
                             + ": more rows than elements",
                         line_no,
                         1);
      }
      if (words.size() != raw.names.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": row has "
                             + std::to_string(words.size())
                             + " entries, expected "
                             + std::to_string(raw.names.size()),
                         line_no,
                         1);
      }
      std::vector<std::size_t> row;
      for (auto const& w : words) {
        auto it = index.find(w);
        if (it == index.end()) {
          throw ParseError("line " + std::to_string(line_no)
                               + ": unknown element '" + w + "'",
                           line_no,
                           line.find(w) + 1);
        }
        row.push_back(it->second);
      }
      raw.rows.push_back(std::move(row));
    }
    if (!header_seen) {
      throw ParseError("missing 'elements:' header", line_no, 0);
    }
    if (raw.rows.size() != raw.names.size()) {
      throw ParseError("table declared on line " + std::to_string(header_line)
                           + " has " + std::to_string(raw.rows.size())
                           + " rows, expected "
                           + std::to_string(raw.names.size()),
                       line_no,
                       0);
    }
    return raw;
  }

  RawTable parse_table(std::string const& text) {
    std::istringstream in(text);
    return parse_table(in);
  }

  FiniteSemigroup read_semigroup(std::istream& in) {
    auto result = validate(parse_table(in));
    if (!result.ok()) {
      throw InvalidSemigroup(std::move(result.errors));
    }
    return std::move(*result.semigroup);
  }

  FiniteSemigroup read_semigroup(std::string const& text) {
    std::istringstream in(text);
    return read_semigroup(in);
  }

  std::string format_table(FiniteSemigroup const& S) {
    std::string out = "elements:";
    for (auto const& name : S.names()) {
      out += ' ' + name;
    }
    out += '\n';
    for (element_type x = 0; x < S.order(); ++x) {
      for (element_type y = 0; y < S.order(); ++y) {
        if (y != 0) {
          out += ' ';
        }
        out += S.name(S.product(x, y));
      }
      out += '\n';
    }
    return out;
  }

}  // namespace lrbqv

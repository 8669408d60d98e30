#include "regext/literals.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <regex>
#include <stdexcept>

namespace regext {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_ints(const std::string& text, int rank, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string field = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    int v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("bad " + what + " literal '" + text + "': '" + field + "' is not an integer");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.size()) != rank) {
    throw std::invalid_argument("bad " + what + " literal '" + text + "': expected " + std::to_string(rank) +
                                " entries, got " + std::to_string(out.size()));
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

LieType parse_type(const std::string& text) {
  static const std::regex pattern("[A-G][0-9]+");
  if (!std::regex_match(text, pattern)) throw std::invalid_argument("bad Lie type literal '" + text + "'");
  return LieType::parse(text);
}

Root parse_root(const std::string& text, int rank) { return Root{parse_ints(text, rank, "root")}; }

Weight parse_weight(const std::string& text, int rank) {
  const std::string t = trim(text);
  if (t.rfind("w:", 0) != 0) throw std::invalid_argument("bad weight literal '" + text + "': missing 'w:' prefix");
  return Weight{parse_ints(t.substr(2), rank, "weight")};
}

std::vector<Root> parse_root_list(const std::string& text, int rank) {
  const std::string t = trim(text);
  std::vector<Root> out;
  if (!t.empty() && t[0] == '@') {
    const std::string path = t.substr(1);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open subset file '" + path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("subset file '" + path + "': " + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("subset file '" + path + "' must hold a JSON array");
    for (const auto& item : doc) {
      if (!item.is_array() || static_cast<int>(item.size()) != rank) {
        throw std::invalid_argument("subset file '" + path + "': each entry must be an array of " +
                                    std::to_string(rank) + " integers");
      }
      Root r;
      for (const auto& c : item) {
        if (!c.is_number_integer()) throw std::invalid_argument("subset file '" + path + "': non-integer coefficient");
        r.coeffs.push_back(c.get<int>());
      }
      out.push_back(std::move(r));
    }
    return out;
  }
  if (t.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = t.find(';', pos);
    out.push_back(parse_root(t.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos), rank));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

RootSubset parse_subset(const RootSystem& sys, const std::string& text) {
  return RootSubset::from_roots(sys, parse_root_list(text, sys.rank()));
}

std::string format_root(const Root& r) { return join(r.coeffs); }

std::string format_weight(const Weight& w) { return "w:" + join(w.coords); }

std::string format_subset(const RootSubset& s) {
  std::string out;
  for (int idx : s.indices()) out += (out.empty() ? "" : ";") + format_root(s.system().root(idx));
  return out;
}

}  // namespace regext

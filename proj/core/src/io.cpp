#include "syzlab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "syzlab/error.hpp"

namespace syzlab {

namespace {

struct Line {
  int number = 0;
  std::string text;
  // Column (1-based) of text[0] in the original line.
  int column = 1;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, const Line& line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    auto col = line.text.find(s);
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line.number,
                     line.column + static_cast<int>(col == std::string::npos ? 0 : col));
  }
  return value;
}

bool strip_prefix(std::string& s, std::string_view prefix) {
  if (s.compare(0, prefix.size(), prefix) != 0) return false;
  s.erase(0, prefix.size());
  return true;
}

}  // namespace

PresentedModule parse_module_text(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = raw.find_last_not_of(" \t\r");
      lines.push_back({number, raw.substr(first, last - first + 1), static_cast<int>(first) + 1});
    }
  }
  if (lines.empty()) throw ParseError("module file: empty input");

  std::size_t at = 0;
  Line ring_line = lines[at++];
  std::string body = ring_line.text;
  if (!strip_prefix(body, "ring:")) throw ParseError("expected 'ring:'", ring_line.number, ring_line.column);
  auto words = split_ws(body);
  std::vector<std::string> names;
  std::vector<int> degrees;
  bool in_degrees = false;
  for (const auto& w : words) {
    if (w == "deg") {
      in_degrees = true;
    } else if (in_degrees) {
      degrees.push_back(parse_int(w, ring_line, "degree"));
    } else {
      names.push_back(w);
    }
  }
  if (!in_degrees) degrees.assign(names.size(), 1);
  if (names.empty()) throw ParseError("ring has no variables", ring_line.number, ring_line.column);
  if (degrees.size() != names.size()) {
    throw ParseError("ring: " + std::to_string(names.size()) + " variables but " +
                         std::to_string(degrees.size()) + " degrees",
                     ring_line.number, ring_line.column);
  }
  RingPtr ring;
  try {
    ring = make_ring(names, degrees);
  } catch (const Error& e) {
    throw ParseError(e.what(), ring_line.number, ring_line.column);
  }

  if (at == lines.size()) throw ParseError("missing 'ambient:' line", ring_line.number + 1, 1);
  Line amb = lines[at++];
  body = amb.text;
  if (!strip_prefix(body, "ambient:")) throw ParseError("expected 'ambient:'", amb.number, amb.column);
  words = split_ws(body);
  if (words.size() < 2 || words[0] != "rank") {
    throw ParseError("expected 'ambient: rank R twists k1,...'", amb.number, amb.column);
  }
  const int rank = parse_int(words[1], amb, "rank");
  if (rank < 0) throw ParseError("negative rank", amb.number, amb.column);
  std::vector<int> twists(static_cast<std::size_t>(rank), 0);
  if (words.size() > 2) {
    if (words[2] != "twists" || words.size() > 4) {
      throw ParseError("expected 'twists k1,...,kR'", amb.number, amb.column);
    }
    twists.clear();
    if (words.size() == 4) {
      std::stringstream list(words[3]);
      std::string item;
      while (std::getline(list, item, ',')) twists.push_back(parse_int(item, amb, "twist"));
    }
    if (twists.size() != static_cast<std::size_t>(rank)) {
      throw ParseError("rank " + std::to_string(rank) + " but " + std::to_string(twists.size()) +
                           " twists",
                       amb.number, amb.column);
    }
  }
  FreeModule ambient(ring, std::move(twists));

  if (at < lines.size() && lines[at].text == "relations:") ++at;
  std::vector<ModuleElement> relations;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    ModuleElement rel;
    try {
      rel = parse_element(ambient, line.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number, line.column + std::max(0, e.column() - 1));
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number, line.column);
    }
    if (!rel.is_zero() && !rel.degree(ambient)) {
      throw ParseError("inhomogeneous relation '" + line.text + "'", line.number, line.column);
    }
    relations.push_back(std::move(rel));
  }
  return PresentedModule(std::move(ambient), std::move(relations));
}

PresentedModule load_module_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_text(buf.str());
}

std::string write_module_text(const PresentedModule& M) { return M.serialize(); }

void save_module_file(const PresentedModule& M, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << write_module_text(M);
}

}  // namespace syzlab

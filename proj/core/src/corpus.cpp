#include "piblocks/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "piblocks/errors.hpp"

namespace piblocks {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::vector<int>> parse_cycles(int line, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(line, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(line, "expected a point inside a cycle");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + (text[i++] - '0');
      cycle.push_back(value);
      skip_ws();
    }
    if (i == text.size()) fail(line, "unterminated cycle");
    ++i;  // ')'
    if (cycle.size() < 2) fail(line, "cycles need at least two points");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (cycles.empty()) fail(line, "empty generator");
  return cycles;
}

long long parse_positive(int line, const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument("range");
    return v;
  } catch (const std::exception&) {
    fail(line, what + " must be a positive integer, got '" + text + "'");
  }
}

}  // namespace

CorpusEntry parse_group_file(const std::string& text) {
  CorpusEntry entry;
  bool have_name = false, have_degree = false;
  std::vector<std::pair<int, std::string>> gen_lines;

  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s.erase(0, start);
    if (s.empty()) continue;

    auto space = s.find(' ');
    std::string key = s.substr(0, space);
    std::string rest = space == std::string::npos ? "" : s.substr(space + 1);
    if (key == "name") {
      if (rest.empty()) fail(line, "name requires a value");
      entry.name = rest;
      have_name = true;
    } else if (key == "degree") {
      entry.degree = static_cast<int>(parse_positive(line, rest, "degree"));
      have_degree = true;
    } else if (key == "gen") {
      gen_lines.emplace_back(line, rest);
    } else if (key == "order") {
      entry.declared_order = parse_positive(line, rest, "order");
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }

  if (!have_name) throw InputError("missing 'name' directive");
  if (!have_degree) throw InputError("missing 'degree' directive");
  for (auto& [gline, gtext] : gen_lines) {
    try {
      entry.generators.push_back(
          Perm::from_cycles(entry.degree, parse_cycles(gline, gtext)));
    } catch (const InputError& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(gline, what);
    }
  }

  entry.group = make_group(entry.degree, entry.generators);
  if (entry.declared_order && *entry.declared_order != entry.group->order())
    throw InputError("declared order " + std::to_string(*entry.declared_order) +
                     " but the group has order " + std::to_string(entry.group->order()));
  return entry;
}

CorpusEntry load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_file(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw InputError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".grp")
      files.push_back(de.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> entries;
  for (const auto& f : files) entries.push_back(load_group_file(f));
  return entries;
}

}  // namespace piblocks

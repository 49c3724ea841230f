#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "piblocks/group.hpp"

namespace piblocks {

/// One parsed group description. The group is constructed eagerly so a
/// loaded entry is always valid; a declared order is cross-checked.
struct CorpusEntry {
  std::string name;
  int degree = 1;
  std::vector<Perm> generators;
  std::optional<long long> declared_order;
  GroupPtr group;
};

/// Line-oriented format: `name <id>`, `degree <n>`, zero or more
/// `gen <cycles>` in 1-based cycle notation, optional `order <n>`.
/// Blank lines and `#` comments are ignored. Errors carry line numbers.
CorpusEntry parse_group_file(const std::string& text);

/// Parses one file; errors are prefixed with the file name.
CorpusEntry load_group_file(const std::filesystem::path& path);

/// All .grp files in the directory, sorted by filename.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace piblocks

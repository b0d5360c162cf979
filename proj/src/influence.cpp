#include "orgsim/influence.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "orgsim/errors.hpp"

namespace orgsim {

namespace {

constexpr int kBuiltinN = 15;

struct PatternInfo {
  PatternId id;
  const char* name;
  int k;
};

constexpr PatternInfo kPatterns[] = {
    {PatternId::kSmallDiag, "small_diag", 2},
    {PatternId::kBigDiag, "big_diag", 4},
    {PatternId::kSmallReciprocal, "small_reciprocal", 6},
    {PatternId::kBigReciprocal, "big_reciprocal", 6},
    {PatternId::kSmallRing, "small_ring", 5},
    {PatternId::kBigRing, "big_ring", 9},
    {PatternId::kRandomK4, "random_k4", 4},
    {PatternId::kRandomK6, "random_k6", 6},
};

InfluenceMatrix blank(int n, PatternId id) {
  InfluenceMatrix m;
  m.n = n;
  m.pattern = id;
  m.cells.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

// Five 3x3 (small) or three 5x5 (big) all-true blocks on the diagonal.
void add_diagonal_blocks(InfluenceMatrix& m, int block) {
  for (int i = 0; i < m.n; ++i) {
    const int b = i / block;
    for (int j = b * block; j < (b + 1) * block; ++j) m.set(i, j, true);
  }
}

// Extra cells per row drawn uniformly without replacement among the columns
// outside the row's own block. Uses a partial Fisher-Yates so the draw count
// is fixed regardless of which columns come up.
void add_random_cells(InfluenceMatrix& m, int block, int extra, Rng& rng) {
  for (int i = 0; i < m.n; ++i) {
    const int b = i / block;
    std::vector<int> eligible;
    eligible.reserve(m.n - block);
    for (int j = 0; j < m.n; ++j)
      if (j / block != b) eligible.push_back(j);
    for (int s = 0; s < extra; ++s) {
      const std::size_t j =
          s + static_cast<std::size_t>(rng.uniform_int(eligible.size() - s));
      std::swap(eligible[s], eligible[j]);
      m.set(i, eligible[s], true);
    }
  }
}

}  // namespace

const std::vector<PatternId>& all_builtin_patterns() {
  static const std::vector<PatternId> ids = [] {
    std::vector<PatternId> v;
    for (const auto& p : kPatterns) v.push_back(p.id);
    return v;
  }();
  return ids;
}

std::string pattern_name(PatternId id) {
  for (const auto& p : kPatterns)
    if (p.id == id) return p.name;
  return "custom";
}

PatternId pattern_from_name(const std::string& name) {
  for (const auto& p : kPatterns)
    if (name == p.name) return p.id;
  if (name == "custom") return PatternId::kCustom;
  throw ConfigError("unknown pattern name: " + name);
}

int pattern_k(PatternId id) {
  for (const auto& p : kPatterns)
    if (p.id == id) return p.k;
  throw ConfigError("pattern_k: not a built-in pattern");
}

int InfluenceMatrix::row_k(int i) const {
  int count = 0;
  for (int j = 0; j < n; ++j)
    if (j != i && cell(i, j)) ++count;
  return count;
}

std::vector<int> InfluenceMatrix::row_positions(int i) const {
  std::vector<int> pos;
  for (int j = 0; j < n; ++j)
    if (cell(i, j)) pos.push_back(j);
  return pos;
}

void InfluenceMatrix::validate() const {
  if (n <= 0) throw ConfigError("influence matrix: N must be positive");
  if (cells.size() != static_cast<std::size_t>(n) * n)
    throw ConfigError("influence matrix: cell storage is not N x N");
  for (int i = 0; i < n; ++i) {
    if (!cell(i, i))
      throw ConfigError("influence matrix: row " + std::to_string(i + 1) +
                        " has a false diagonal cell");
  }
}

InfluenceMatrix build_pattern(PatternId id, Rng& rng) {
  InfluenceMatrix m = blank(kBuiltinN, id);
  switch (id) {
    case PatternId::kSmallDiag:
      add_diagonal_blocks(m, 3);
      break;
    case PatternId::kBigDiag:
      add_diagonal_blocks(m, 5);
      break;
    case PatternId::kSmallReciprocal:
      // Own block plus the first two decisions of the previous and next
      // blocks, cyclically.
      add_diagonal_blocks(m, 3);
      for (int i = 0; i < m.n; ++i) {
        const int b = i / 3;
        const int prev = ((b + 4) % 5) * 3;
        const int next = ((b + 1) % 5) * 3;
        m.set(i, prev, true);
        m.set(i, prev + 1, true);
        m.set(i, next, true);
        m.set(i, next + 1, true);
      }
      break;
    case PatternId::kBigReciprocal:
      // Own block plus the first decision of the previous and next blocks.
      add_diagonal_blocks(m, 5);
      for (int i = 0; i < m.n; ++i) {
        const int b = i / 5;
        m.set(i, ((b + 2) % 3) * 5, true);
        m.set(i, ((b + 1) % 3) * 5, true);
      }
      break;
    case PatternId::kSmallRing:
      // Own block plus the whole next block, cyclically.
      add_diagonal_blocks(m, 3);
      for (int i = 0; i < m.n; ++i) {
        const int next = (((i / 3) + 1) % 5) * 3;
        for (int j = next; j < next + 3; ++j) m.set(i, j, true);
      }
      break;
    case PatternId::kBigRing:
      add_diagonal_blocks(m, 5);
      for (int i = 0; i < m.n; ++i) {
        const int next = (((i / 5) + 1) % 3) * 5;
        for (int j = next; j < next + 5; ++j) m.set(i, j, true);
      }
      break;
    case PatternId::kRandomK4:
      add_diagonal_blocks(m, 3);
      add_random_cells(m, 3, 2, rng);
      break;
    case PatternId::kRandomK6:
      add_diagonal_blocks(m, 3);
      add_random_cells(m, 3, 4, rng);
      break;
    case PatternId::kCustom:
      throw ConfigError("build_pattern: custom matrices are loaded, not built");
  }
  return m;
}

InfluenceMatrix read_matrix_text(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw ConfigError("matrix text: first line must be a positive N");
  std::string line;
  std::getline(in, line);  // rest of the N line
  InfluenceMatrix m;
  m.n = n;
  m.pattern = PatternId::kCustom;
  m.cells.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw ConfigError("matrix text: missing row " + std::to_string(i + 1));
    // Tolerate trailing whitespace/CR.
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (static_cast<int>(line.size()) != n)
      throw ConfigError("matrix text: row " + std::to_string(i + 1) +
                        " has length " + std::to_string(line.size()) +
                        ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (line[j] == '1') {
        m.set(i, j, true);
      } else if (line[j] != '0') {
        throw ConfigError("matrix text: row " + std::to_string(i + 1) +
                          " contains a character other than '0'/'1'");
      }
    }
  }
  m.validate();
  return m;
}

InfluenceMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file: " + path);
  return read_matrix_text(in);
}

std::string matrix_to_text(const InfluenceMatrix& m) {
  std::ostringstream out;
  out << m.n << '\n';
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out << (m.cell(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace orgsim

#include <cctype>
#include <charconv>
#include <string>

#include "gyro/finite.hpp"

namespace gyro {

namespace {

constexpr int kMaxOrder = 1024;

struct Token {
  std::string_view text;
  int line;    // 1-based
  int column;  // 1-based
};

// Logical content of the file: '#' comments stripped, blank lines skipped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      toks.push_back(Token{line.substr(start, i - start), line_no,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

int parse_int(const Token& t, ParseErrorKind kind) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(kind, t.line, t.column,
                     "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

struct PositionedTable {
  CayleyTable table;
  std::vector<Token> positions;  // one per entry, row-major
};

PositionedTable parse_positioned(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError(ParseErrorKind::kEmptyInput, 1, 1, "no content");

  const auto& head = lines[0];
  if (head.size() != 1)
    throw ParseError(ParseErrorKind::kBadOrder, head[1].line, head[1].column,
                     "order line must hold a single integer");
  const int n = parse_int(head[0], ParseErrorKind::kBadOrder);
  if (n < 1 || n > kMaxOrder)
    throw ParseError(ParseErrorKind::kBadOrder, head[0].line, head[0].column,
                     "order must be in 1.." + std::to_string(kMaxOrder));

  if (static_cast<int>(lines.size()) - 1 != n) {
    const auto& ref = lines.size() > 1 ? lines.back()[0] : head[0];
    throw ParseError(ParseErrorKind::kWrongRowCount, ref.line, ref.column,
                     "expected " + std::to_string(n) + " rows, got " +
                         std::to_string(lines.size() - 1));
  }

  PositionedTable out;
  out.table.order = n;
  out.table.entries.reserve(static_cast<std::size_t>(n) *
                            static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto& row = lines[static_cast<std::size_t>(r) + 1];
    if (static_cast<int>(row.size()) != n)
      throw ParseError(ParseErrorKind::kWrongColumnCount, row[0].line,
                       row[0].column,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.size()));
    for (const auto& tok : row) {
      const int v = parse_int(tok, ParseErrorKind::kNonIntegerToken);
      if (v < 0 || v >= n)
        throw ParseError(ParseErrorKind::kOutOfRange, tok.line, tok.column,
                         "entry " + std::to_string(v) + " outside 0.." +
                             std::to_string(n - 1));
      out.table.entries.push_back(v);
      out.positions.push_back(tok);
    }
  }
  return out;
}

// Two-sided identity element, or -1.
int find_identity(const CayleyTable& t) {
  for (int e = 0; e < t.order; ++e) {
    bool ok = true;
    for (int a = 0; a < t.order && ok; ++a)
      ok = t.at(e, a) == a && t.at(a, e) == a;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::kEmptyInput: return "empty input";
    case ParseErrorKind::kBadOrder: return "bad order";
    case ParseErrorKind::kNonIntegerToken: return "non-integer token";
    case ParseErrorKind::kWrongRowCount: return "wrong row count";
    case ParseErrorKind::kWrongColumnCount: return "wrong column count";
    case ParseErrorKind::kOutOfRange: return "entry out of range";
    case ParseErrorKind::kNoIdentity: return "no identity element";
    case ParseErrorKind::kRowNotPermutation: return "row is not a permutation";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

CayleyTable::CayleyTable(int n, std::vector<int> e)
    : order(n), entries(std::move(e)) {
  if (n < 1) throw std::invalid_argument("CayleyTable: order must be >= 1");
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("CayleyTable: entry count != order^2");
  for (int v : entries)
    if (v < 0 || v >= n)
      throw std::invalid_argument("CayleyTable: entry out of range");
}

CayleyTable parse_table(std::string_view text) {
  return parse_positioned(text).table;
}

LoadedTable load_table(std::string_view text) {
  auto [t, positions] = parse_positioned(text);

  for (int r = 0; r < t.order; ++r) {
    std::vector<bool> seen(static_cast<std::size_t>(t.order), false);
    for (int c = 0; c < t.order; ++c) {
      const int v = t.at(r, c);
      if (seen[static_cast<std::size_t>(v)]) {
        const Token& tok =
            positions[static_cast<std::size_t>(r) * t.order + c];
        throw ParseError(ParseErrorKind::kRowNotPermutation, tok.line,
                         tok.column,
                         "row " + std::to_string(r) + " repeats entry " +
                             std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  const int e = find_identity(t);
  if (e < 0)
    throw ParseError(ParseErrorKind::kNoIdentity, 1, 1,
                     "table has no two-sided identity element");

  LoadedTable out;
  if (e == 0) {
    out.table = std::move(t);
  } else {
    auto im = Permutation::identity(t.order).images();
    im[0] = e;
    im[static_cast<std::size_t>(e)] = 0;
    Permutation swap{std::move(im)};
    out.table = transport_table(t, swap);
    out.relabeling = swap;
  }
  return out;
}

std::string save_table(const CayleyTable& t) {
  std::string out = std::to_string(t.order);
  out += '\n';
  for (int r = 0; r < t.order; ++r) {
    for (int c = 0; c < t.order; ++c) {
      if (c) out += ' ';
      out += std::to_string(t.at(r, c));
    }
    out += '\n';
  }
  return out;
}

CayleyTable transport_table(const CayleyTable& t, const Permutation& phi) {
  if (phi.size() != t.order)
    throw std::invalid_argument("transport_table: size mismatch");
  const Permutation inv = phi.inverse();
  CayleyTable out;
  out.order = t.order;
  out.entries.resize(t.entries.size());
  for (int i = 0; i < t.order; ++i)
    for (int j = 0; j < t.order; ++j)
      out.at(i, j) = inv(t.at(phi(i), phi(j)));
  return out;
}

}  // namespace gyro

#include "modal/kripke.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace modal {

namespace {

std::string located(const std::string& what, int line, int column) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << what;
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& what, int line_arg, int column_arg)
    : std::runtime_error(located(what, line_arg, column_arg)),
      line(line_arg),
      column(column_arg) {}

// ===========================================================================
// Conditions
// ===========================================================================

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::Refl: return "refl";
    case Condition::Sym: return "sym";
    case Condition::Ser: return "ser";
    case Condition::Trans: return "trans";
    case Condition::Eucl: return "eucl";
  }
  throw std::invalid_argument("unknown condition tag");
}

std::optional<Condition> condition_from_name(std::string_view name) {
  for (int i = 0; i < kConditionCount; ++i) {
    const auto c = static_cast<Condition>(i);
    if (name == condition_name(c)) return c;
  }
  return std::nullopt;
}

ConditionSet::ConditionSet(std::initializer_list<Condition> conditions) {
  for (Condition c : conditions) insert(c);
}

ConditionSet ConditionSet::all() {
  ConditionSet s;
  for (int i = 0; i < kConditionCount; ++i) s.insert(static_cast<Condition>(i));
  return s;
}

int ConditionSet::size() const { return std::popcount(bits_); }

std::vector<Condition> ConditionSet::items() const {
  std::vector<Condition> out;
  for (int i = 0; i < kConditionCount; ++i) {
    const auto c = static_cast<Condition>(i);
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::string ConditionSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Condition c : items()) {
    if (!first) out += ',';
    out += condition_name(c);
    first = false;
  }
  out += '}';
  return out;
}

ConditionSet condition_set_from_names(std::string_view csv) {
  ConditionSet set;
  // An empty (or all-blank) list is the empty set; "refl,," is an error.
  size_t pos = 0;
  bool saw_token = false;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = csv.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.empty()) {
      if (saw_token || comma < csv.size())
        throw std::invalid_argument("empty condition name in list '" + std::string(csv) + "'");
    } else {
      const auto c = condition_from_name(token);
      if (!c)
        throw std::invalid_argument("unknown condition '" + std::string(token) +
                                    "' (expected refl, sym, ser, trans or eucl)");
      if (set.contains(*c))
        throw std::invalid_argument("duplicate condition '" + std::string(token) + "'");
      set.insert(*c);
      saw_token = true;
    }
    if (comma == csv.size()) break;
    pos = comma + 1;
  }
  return set;
}

// ===========================================================================
// RelationMatrix / Frame
// ===========================================================================

RelationMatrix::RelationMatrix(int n_worlds) : n_(n_worlds) {
  if (n_worlds < 1 || n_worlds > kMaxWorlds)
    throw std::invalid_argument("world count must be between 1 and 64, got " +
                                std::to_string(n_worlds));
  rows_.assign(static_cast<size_t>(n_worlds), Word{0});
}

RelationMatrix RelationMatrix::from_edges(int n_worlds,
                                          const std::vector<std::pair<int, int>>& edges) {
  RelationMatrix r(n_worlds);
  for (const auto& [s, t] : edges) r.set(s, t);
  return r;
}

RelationMatrix RelationMatrix::from_rows(int n_worlds, std::span<const Word> rows) {
  RelationMatrix r(n_worlds);
  if (rows.size() != static_cast<size_t>(n_worlds))
    throw std::invalid_argument("expected one row per world");
  const Word mask = world_mask(n_worlds);
  for (int s = 0; s < n_worlds; ++s) {
    if (rows[static_cast<size_t>(s)] & ~mask)
      throw std::invalid_argument("relation row has bits beyond the world count");
    r.rows_[static_cast<size_t>(s)] = rows[static_cast<size_t>(s)];
  }
  return r;
}

void RelationMatrix::check_world(int w, const char* what) const {
  if (w < 0 || w >= n_)
    throw std::invalid_argument(std::string(what) + " world " + std::to_string(w) +
                                " out of range for " + std::to_string(n_) + " worlds");
}

bool RelationMatrix::at(int s, int t) const {
  check_world(s, "source");
  check_world(t, "target");
  return (rows_[static_cast<size_t>(s)] >> t) & 1u;
}

void RelationMatrix::set(int s, int t, bool value) {
  check_world(s, "source");
  check_world(t, "target");
  if (value)
    rows_[static_cast<size_t>(s)] |= Word{1} << t;
  else
    rows_[static_cast<size_t>(s)] &= ~(Word{1} << t);
}

Word RelationMatrix::row(int s) const {
  check_world(s, "source");
  return rows_[static_cast<size_t>(s)];
}

std::vector<std::pair<int, int>> RelationMatrix::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < n_; ++s) {
    Word bits = rows_[static_cast<size_t>(s)];
    while (bits) {
      const int t = std::countr_zero(bits);
      bits &= bits - 1;
      out.emplace_back(s, t);
    }
  }
  return out;
}

std::uint64_t RelationMatrix::encoding() const {
  if (n_ * n_ > 64)
    throw std::invalid_argument("relation encoding requires n*n <= 64 (n = " +
                                std::to_string(n_) + ")");
  std::uint64_t enc = 0;
  for (int s = 0; s < n_; ++s)
    enc |= rows_[static_cast<size_t>(s)] << (s * n_);
  return enc;
}

Frame::Frame(int n_worlds, std::vector<RelationMatrix> relations)
    : n_worlds_(n_worlds), relations_(std::move(relations)) {
  if (n_worlds < 1 || n_worlds > kMaxWorlds)
    throw std::invalid_argument("world count must be between 1 and 64, got " +
                                std::to_string(n_worlds));
  if (relations_.empty())
    throw std::invalid_argument("a frame needs at least one relation");
  for (const RelationMatrix& r : relations_)
    if (r.n_worlds() != n_worlds)
      throw std::invalid_argument("relation world count does not match the frame");
}

Frame Frame::single(RelationMatrix relation) {
  const int n = relation.n_worlds();
  std::vector<RelationMatrix> rels;
  rels.push_back(std::move(relation));
  return Frame(n, std::move(rels));
}

const RelationMatrix& Frame::relation(int rel_index) const {
  if (rel_index < 0 || rel_index >= relation_count())
    throw std::invalid_argument("relation index " + std::to_string(rel_index) +
                                " out of range (frame has " +
                                std::to_string(relation_count()) + ")");
  return relations_[static_cast<size_t>(rel_index)];
}

// ===========================================================================
// Condition checks
// ===========================================================================

bool condition_holds(int n_worlds, std::span<const Word> rows, Condition c) {
  switch (c) {
    case Condition::Refl:
      for (int s = 0; s < n_worlds; ++s)
        if (!((rows[static_cast<size_t>(s)] >> s) & 1u)) return false;
      return true;
    case Condition::Ser:
      for (int s = 0; s < n_worlds; ++s)
        if (rows[static_cast<size_t>(s)] == 0) return false;
      return true;
    case Condition::Sym:
      for (int s = 0; s < n_worlds; ++s)
        for (int t = s + 1; t < n_worlds; ++t)
          if (((rows[static_cast<size_t>(s)] >> t) & 1u) !=
              ((rows[static_cast<size_t>(t)] >> s) & 1u))
            return false;
      return true;
    case Condition::Trans:
      // s -> t requires everything reachable from t to be reachable from s.
      for (int s = 0; s < n_worlds; ++s) {
        const Word succ = rows[static_cast<size_t>(s)];
        Word bits = succ;
        while (bits) {
          const int t = std::countr_zero(bits);
          bits &= bits - 1;
          if (rows[static_cast<size_t>(t)] & ~succ) return false;
        }
      }
      return true;
    case Condition::Eucl:
      // s -> t requires every successor of s to be a successor of t.
      for (int s = 0; s < n_worlds; ++s) {
        const Word succ = rows[static_cast<size_t>(s)];
        Word bits = succ;
        while (bits) {
          const int t = std::countr_zero(bits);
          bits &= bits - 1;
          if (succ & ~rows[static_cast<size_t>(t)]) return false;
        }
      }
      return true;
  }
  throw std::invalid_argument("unknown condition tag");
}

bool check_condition(const Frame& frame, int rel_index, Condition c) {
  const RelationMatrix& rel = frame.relation(rel_index);
  return condition_holds(frame.n_worlds(), rel.rows(), c);
}

bool check_condition_set(const Frame& frame, int rel_index, const ConditionSet& conditions) {
  for (Condition c : conditions.items())
    if (!check_condition(frame, rel_index, c)) return false;
  return true;
}

// ===========================================================================
// Valuations
// ===========================================================================

void Valuation::assign(std::string name, Word worlds) {
  assignments_[std::move(name)] = worlds;
}

const Word* Valuation::find(std::string_view name) const {
  const auto it = assignments_.find(name);
  return it == assignments_.end() ? nullptr : &it->second;
}

Word world_set(std::initializer_list<int> worlds) {
  Word out = 0;
  for (int w : worlds) {
    if (w < 0 || w >= kMaxWorlds)
      throw std::invalid_argument("world index out of range: " + std::to_string(w));
    out |= Word{1} << w;
  }
  return out;
}

std::string world_name(int world) { return "i" + std::to_string(world + 1); }

std::string world_set_to_string(Word worlds) {
  std::string out = "{";
  bool first = true;
  while (worlds) {
    const int w = std::countr_zero(worlds);
    worlds &= worlds - 1;
    if (!first) out += ',';
    out += world_name(w);
    first = false;
  }
  out += '}';
  return out;
}

// ===========================================================================
// Frame text format
// ===========================================================================

namespace {

// Cursor over one line; columns are 1-based for error reporting.
struct LineScanner {
  std::string_view text;
  int line_no;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_no, static_cast<int>(pos) + 1);
  }

  void skip_spaces() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c, const char* what) {
    skip_spaces();
    if (peek() != c) fail(std::string("expected '") + c + "' " + what);
    ++pos;
  }

  // Lower-case keyword such as "worlds" / "rel".
  bool try_keyword(std::string_view word) {
    skip_spaces();
    if (text.substr(pos, word.size()) != word) return false;
    const size_t after = pos + word.size();
    if (after < text.size() &&
        std::isalnum(static_cast<unsigned char>(text[after])))
      return false;
    pos = after;
    return true;
  }

  int parse_int(const char* what) {
    skip_spaces();
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
      fail(std::string("expected ") + what);
    pos += static_cast<size_t>(ptr - begin);
    return value;
  }
};

}  // namespace

Frame frame_parse(std::string_view text) {
  std::optional<int> n_worlds;
  std::vector<RelationMatrix> relations;

  int line_no = 0;
  size_t line_start = 0;
  while (line_start <= text.size()) {
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view raw = text.substr(line_start, line_end - line_start);
    ++line_no;

    // Comments run to end of line and never affect column numbering.
    std::string_view body = raw;
    if (const size_t hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);

    LineScanner scan{body, line_no};
    if (!scan.at_end()) {
      if (!n_worlds) {
        if (!scan.try_keyword("worlds"))
          scan.fail("expected 'worlds:' header");
        scan.expect(':', "after 'worlds'");
        scan.skip_spaces();
        const int count_col = static_cast<int>(scan.pos) + 1;
        const int n = scan.parse_int("world count");
        if (n < 1 || n > kMaxWorlds)
          throw ParseError("world count must be between 1 and 64, got " +
                               std::to_string(n),
                           line_no, count_col);
        if (!scan.at_end()) scan.fail("unexpected text after world count");
        n_worlds = n;
      } else {
        if (!scan.try_keyword("rel"))
          scan.fail("expected 'rel <k>:' line");
        scan.skip_spaces();
        const int index_col = static_cast<int>(scan.pos) + 1;
        const int k = scan.parse_int("relation index");
        if (k != static_cast<int>(relations.size()))
          throw ParseError("expected relation index " +
                               std::to_string(relations.size()) + ", got " +
                               std::to_string(k),
                           line_no, index_col);
        scan.expect(':', "after relation index");
        RelationMatrix rel(*n_worlds);
        while (!scan.at_end()) {
          // at_end() already skipped spaces, so this is the '(' column.
          const int edge_col = static_cast<int>(scan.pos) + 1;
          scan.expect('(', "to start an edge");
          const int s = scan.parse_int("source world");
          scan.expect(',', "between edge worlds");
          const int t = scan.parse_int("target world");
          scan.expect(')', "to close the edge");
          if (s < 1 || s > *n_worlds || t < 1 || t > *n_worlds)
            throw ParseError("edge (" + std::to_string(s) + "," + std::to_string(t) +
                                 ") out of range for " + std::to_string(*n_worlds) +
                                 " worlds",
                             line_no, edge_col);
          if (rel.at(s - 1, t - 1))
            throw ParseError("duplicate edge (" + std::to_string(s) + "," +
                                 std::to_string(t) + ")",
                             line_no, edge_col);
          rel.set(s - 1, t - 1);
        }
        relations.push_back(std::move(rel));
      }
    }

    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }

  if (!n_worlds) throw ParseError("missing 'worlds:' header", 1, 1);
  if (relations.empty())
    throw ParseError("frame has no relations", line_no, 1);
  return Frame(*n_worlds, std::move(relations));
}

std::string frame_print(const Frame& frame) {
  std::string out = "worlds: " + std::to_string(frame.n_worlds());
  for (int k = 0; k < frame.relation_count(); ++k) {
    out += "\nrel " + std::to_string(k) + ":";
    for (const auto& [s, t] : frame.relation(k).edges())
      out += " (" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
  }
  return out;
}

}  // namespace modal

#include "overlap/family.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace overlap {

class FamilyBuilder {
 public:
  Element intern(std::string_view tok) {
    auto [it, inserted] = index_.try_emplace(std::string(tok),
                                             static_cast<Element>(f_.tokens_.size()));
    if (inserted) {
      f_.tokens_.emplace_back(tok);
      stamp_.push_back(0);
    }
    return it->second;
  }

  // Appends v to the open set unless already present in it.
  void add(Element v) {
    if (stamp_[v] == current_) return;
    stamp_[v] = current_;
    f_.elements_.push_back(v);
  }

  void begin_set() { ++current_; }
  bool open_set_empty() const { return f_.elements_.size() == f_.offsets_.back(); }
  void close_set() { f_.offsets_.push_back(f_.elements_.size()); }
  std::size_t set_count() const { return f_.offsets_.size() - 1; }

  void reserve_universe(std::size_t n) {
    f_.tokens_.reserve(n);
    stamp_.reserve(n);
  }

  SetFamily take() { return std::move(f_); }

 private:
  SetFamily f_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t current_ = 0;
};

SetFamily SetFamily::from_sets(std::size_t n,
                               const std::vector<std::vector<Element>>& sets,
                               std::vector<std::string> tokens) {
  if (!tokens.empty() && tokens.size() != n)
    throw std::invalid_argument("token count does not match universe size");
  SetFamily f;
  if (tokens.empty()) {
    tokens.reserve(n);
    for (std::size_t v = 0; v < n; ++v) tokens.push_back(std::to_string(v));
  }
  f.tokens_ = std::move(tokens);
  std::vector<std::size_t> stamp(n, 0);
  std::size_t current = 0;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("empty set in family");
    ++current;
    for (Element v : s) {
      if (v >= n) throw std::invalid_argument("element index out of range");
      if (stamp[v] == current) continue;
      stamp[v] = current;
      f.elements_.push_back(v);
    }
    f.offsets_.push_back(f.elements_.size());
  }
  return f;
}

namespace {

template <class F>
void for_each_token(std::string_view line, F&& fn) {
  constexpr std::string_view ws = " \t\r\f\v";
  std::size_t i = 0;
  while (true) {
    i = line.find_first_not_of(ws, i);
    if (i == std::string_view::npos) return;
    std::size_t j = line.find_first_of(ws, i);
    if (j == std::string_view::npos) j = line.size();
    fn(line.substr(i, j - i));
    i = j;
  }
}

}  // namespace

SetFamily parse_family(std::istream& in) {
  FamilyBuilder b;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    auto first = view.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && view[first] == '#') continue;

    if (first != std::string_view::npos && view.substr(first).starts_with("!universe")) {
      auto rest = view.substr(first + 9);
      if (!rest.empty() && rest.find_first_of(" \t\r\f\v") != 0)
        throw ParseError(lineno, "line " + std::to_string(lineno) +
                                     ": unknown directive");
      if (b.set_count() != 0)
        throw ParseError(lineno, "line " + std::to_string(lineno) +
                                     ": !universe header must precede all sets");
      for_each_token(rest, [&](std::string_view tok) { b.intern(tok); });
      continue;
    }

    b.begin_set();
    for_each_token(view, [&](std::string_view tok) { b.add(b.intern(tok)); });
    if (b.open_set_empty())
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": empty set");
    b.close_set();
  }
  if (in.bad()) throw std::ios_base::failure("error reading family input");
  if (b.set_count() == 0) throw ParseError(0, "no sets");
  return b.take();
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

std::string format_family(const SetFamily& f) {
  std::vector<char> used(f.universe_size(), 0);
  for (SetId i = 0; i < f.set_count(); ++i)
    for (Element v : f.set(i)) used[v] = 1;

  std::string out;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    out += "!universe";
    for (Element v = 0; v < f.universe_size(); ++v)
      if (!used[v]) (out += ' ') += f.token(v);
    out += '\n';
  }
  for (SetId i = 0; i < f.set_count(); ++i) {
    bool first = true;
    for (Element v : f.set(i)) {
      if (!first) out += ' ';
      out += f.token(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

LFOrder lf_order(const SetFamily& f) {
  const std::size_t m = f.set_count();
  std::size_t max_size = 0;
  for (SetId i = 0; i < m; ++i) max_size = std::max(max_size, f.size_of(i));

  // Counting sort keyed on (max_size - size) keeps input order among ties.
  std::vector<std::size_t> start(max_size + 2, 0);
  for (SetId i = 0; i < m; ++i) ++start[max_size - f.size_of(i) + 1];
  for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];

  LFOrder lf;
  lf.order.resize(m);
  lf.rank.resize(m);
  for (SetId i = 0; i < m; ++i) {
    std::size_t slot = start[max_size - f.size_of(i)]++;
    lf.order[slot] = i;
    lf.rank[i] = slot;
  }
  return lf;
}

SLLists build_sl_lists(const SetFamily& f, const LFOrder& lf) {
  const std::size_t n = f.universe_size();
  SLLists sl;
  sl.offsets_.assign(n + 1, 0);
  for (SetId i = 0; i < f.set_count(); ++i)
    for (Element v : f.set(i)) ++sl.offsets_[v + 1];
  for (std::size_t v = 0; v < n; ++v) sl.offsets_[v + 1] += sl.offsets_[v];

  sl.ids_.resize(f.total_size());
  std::vector<std::size_t> fill(sl.offsets_.begin(), sl.offsets_.end() - 1);
  for (auto it = lf.order.rbegin(); it != lf.order.rend(); ++it)
    for (Element v : f.set(*it)) sl.ids_[fill[v]++] = *it;
  return sl;
}

}  // namespace overlap

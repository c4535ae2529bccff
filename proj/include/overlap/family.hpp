#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace overlap {

using Element = std::uint32_t;
using SetId = std::uint32_t;

inline constexpr SetId kNoSet = std::numeric_limits<SetId>::max();

/// Raised for malformed family input. `line()` is 1-based, 0 when not tied
/// to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A family of subsets over an interned universe {0, ..., n-1}.
///
/// Sets are stored as one flat element array with offsets, so `set(i)` is a
/// contiguous span. Elements inside a set are distinct, in first-appearance
/// order of the input line.
class SetFamily {
 public:
  SetFamily() = default;

  /// Builds a family from element-index lists. Duplicates inside a list are
  /// removed; indices must be < n. Throws std::invalid_argument otherwise or
  /// when a list is empty.
  static SetFamily from_sets(std::size_t n,
                             const std::vector<std::vector<Element>>& sets,
                             std::vector<std::string> tokens = {});

  std::size_t universe_size() const noexcept { return tokens_.size(); }
  std::size_t set_count() const noexcept { return offsets_.size() - 1; }
  /// |F|: the sum of set cardinalities.
  std::size_t total_size() const noexcept { return elements_.size(); }

  std::span<const Element> set(SetId i) const noexcept {
    return {elements_.data() + offsets_[i], elements_.data() + offsets_[i + 1]};
  }
  std::size_t size_of(SetId i) const noexcept {
    return offsets_[i + 1] - offsets_[i];
  }
  const std::string& token(Element v) const noexcept { return tokens_[v]; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

 private:
  friend class FamilyBuilder;

  std::vector<std::string> tokens_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Element> elements_;
};

/// Reads the text format: one set per line, whitespace-separated tokens,
/// `#` comment lines, optional `!universe tok...` header declaring extra
/// elements. Throws ParseError on an empty set line or a family with no
/// sets, std::ios_base::failure on stream errors.
SetFamily parse_family(std::istream& in);
SetFamily parse_family(std::string_view text);

/// Writes `f` back in the text format. Declared-but-unused elements are
/// emitted in a `!universe` header.
std::string format_family(const SetFamily& f);

/// Sets sorted by non-increasing size, ties by increasing input index.
struct LFOrder {
  std::vector<SetId> order;
  std::vector<std::size_t> rank;  // rank[order[k]] == k
};

/// Bucket sort on sizes, O(n + m).
LFOrder lf_order(const SetFamily& f);

/// Per element v, the sets containing v in exact reverse LF order
/// (non-decreasing size, ties by decreasing input index).
class SLLists {
 public:
  std::span<const SetId> operator[](Element v) const noexcept {
    return {ids_.data() + offsets_[v], ids_.data() + offsets_[v + 1]};
  }
  std::size_t universe_size() const noexcept { return offsets_.size() - 1; }
  std::size_t total_size() const noexcept { return ids_.size(); }

 private:
  friend SLLists build_sl_lists(const SetFamily& f, const LFOrder& lf);

  std::vector<std::size_t> offsets_;
  std::vector<SetId> ids_;
};

/// O(n + |F|): walks LF order backwards appending each set to its elements.
SLLists build_sl_lists(const SetFamily& f, const LFOrder& lf);

}  // namespace overlap

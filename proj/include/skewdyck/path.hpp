#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewdyck {

/// Step kinds of a skew Dyck path. The left step of the geometric model is
/// encoded as DownRed, a down step drawn in red.
enum class Step : std::uint8_t { Up, DownBlack, DownRed };

constexpr int displacement(Step s) { return s == Step::Up ? 1 : -1; }

/// 'U', 'D' or 'R'.
char step_letter(Step s);

/// Parses a word over {U, D, R}; throws std::invalid_argument on other letters.
std::vector<Step> parse_word(std::string_view text);
std::string format_word(std::span<const Step> word);

enum class Rule : std::uint8_t { BelowAxis, UpRed, RedUp };

std::string_view rule_name(Rule r);

struct Violation {
  std::size_t index;  // first offending step (first step of the pair for UpRed/RedUp)
  Rule rule;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
  bool valid = true;
  std::optional<Violation> violation;
};

/// Checks the three rules: never below the axis, no Up-DownRed and no
/// DownRed-Up factor. Reports the earliest violation.
ValidityReport validate(std::span<const Step> word);

/// Number of contiguous Up, DownBlack, DownRed factors.
std::size_t count_udr(std::span<const Step> word);

class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A validated step word with its level profile.
class SkewPath {
 public:
  SkewPath();

  /// Throws InvalidPath if validate(word) fails.
  static SkewPath from_steps(std::vector<Step> word);
  static SkewPath parse(std::string_view text) { return from_steps(parse_word(text)); }

  const std::vector<Step>& steps() const { return steps_; }
  /// Running prefix sums; levels()[0] == 0 and levels().size() == length() + 1.
  const std::vector<int>& levels() const { return levels_; }
  std::size_t udr_count() const { return udr_count_; }
  std::size_t length() const { return steps_.size(); }
  int end_level() const { return levels_.back(); }
  int max_level() const;

  std::string to_string() const { return format_word(steps_); }

  friend bool operator==(const SkewPath& a, const SkewPath& b) { return a.steps_ == b.steps_; }

 private:
  friend class PathEnumerator;

  std::vector<Step> steps_;
  std::vector<int> levels_;
  std::size_t udr_count_ = 0;
};

std::size_t count_udr(const SkewPath& path);

class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t kDefaultOracleCap = 24;

struct EnumerateOptions {
  std::optional<int> end_level;
  bool forbid_udr = false;
  std::size_t cap = kDefaultOracleCap;
};

/// Single-consumer stream over all valid paths of a fixed length, in
/// lexicographic order with Up < DownBlack < DownRed. Only valid prefixes
/// are extended; with an end level, prefixes that cannot reach it in the
/// remaining steps are cut as well.
///
///   PathEnumerator e(6, {.end_level = 0, .forbid_udr = true});
///   while (e.next()) use(e.current());
class PathEnumerator {
 public:
  PathEnumerator(std::size_t length, EnumerateOptions options = {});

  /// Advances to the next path; false once the stream is exhausted.
  bool next();
  /// The path produced by the last successful next(). Reused between calls.
  const SkewPath& current() const { return path_; }

 private:
  bool can_push(Step s) const;
  void push(Step s);
  Step pop();
  bool descend();

  std::size_t length_;
  EnumerateOptions options_;
  SkewPath path_;
  bool started_ = false;
  bool done_ = false;
};

/// Convenience wrapper: invokes visit for each path of PathEnumerator.
void enumerate(std::size_t length, const EnumerateOptions& options,
               const std::function<void(const SkewPath&)>& visit);

/// Materializes the whole stream.
std::vector<SkewPath> enumerate_all(std::size_t length, const EnumerateOptions& options = {});

struct ColorMap {
  std::string up = "black";
  std::string down_black = "black";
  std::string down_red = "red";
};

struct SvgOptions {
  int unit_px = 20;
  ColorMap colors;
};

/// Standalone SVG 1.1 drawing with one <line> per step.
std::string render_svg(const SkewPath& path, const SvgOptions& options = {});

}  // namespace skewdyck

#include "skewdyck/path.hpp"

#include <algorithm>
#include <cstdlib>

namespace skewdyck {

char step_letter(Step s) {
  switch (s) {
    case Step::Up: return 'U';
    case Step::DownBlack: return 'D';
    case Step::DownRed: return 'R';
  }
  return '?';
}

std::vector<Step> parse_word(std::string_view text) {
  std::vector<Step> word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': word.push_back(Step::Up); break;
      case 'D': word.push_back(Step::DownBlack); break;
      case 'R': word.push_back(Step::DownRed); break;
      default:
        throw std::invalid_argument("unexpected step letter '" + std::string(1, text[i]) + "' at position " +
                                    std::to_string(i) + " (expected U, D or R)");
    }
  }
  return word;
}

std::string format_word(std::span<const Step> word) {
  std::string out;
  out.reserve(word.size());
  for (Step s : word) out += step_letter(s);
  return out;
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::BelowAxis: return "BelowAxis";
    case Rule::UpRed: return "UpRed";
    case Rule::RedUp: return "RedUp";
  }
  return "?";
}

ValidityReport validate(std::span<const Step> word) {
  int level = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) {
      if (word[i - 1] == Step::Up && word[i] == Step::DownRed) return {false, Violation{i - 1, Rule::UpRed}};
      if (word[i - 1] == Step::DownRed && word[i] == Step::Up) return {false, Violation{i - 1, Rule::RedUp}};
    }
    level += displacement(word[i]);
    if (level < 0) return {false, Violation{i, Rule::BelowAxis}};
  }
  return {};
}

std::size_t count_udr(std::span<const Step> word) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 2 < word.size(); ++i)
    if (word[i] == Step::Up && word[i + 1] == Step::DownBlack && word[i + 2] == Step::DownRed) ++n;
  return n;
}

SkewPath::SkewPath() : levels_{0} {}

SkewPath SkewPath::from_steps(std::vector<Step> word) {
  const ValidityReport report = validate(word);
  if (!report.valid) {
    throw InvalidPath("invalid skew path '" + format_word(word) + "': " +
                      std::string(rule_name(report.violation->rule)) + " at step " +
                      std::to_string(report.violation->index));
  }
  SkewPath p;
  p.levels_.reserve(word.size() + 1);
  for (Step s : word) p.levels_.push_back(p.levels_.back() + displacement(s));
  p.udr_count_ = count_udr(word);
  p.steps_ = std::move(word);
  return p;
}

int SkewPath::max_level() const { return *std::max_element(levels_.begin(), levels_.end()); }

std::size_t count_udr(const SkewPath& path) { return path.udr_count(); }

PathEnumerator::PathEnumerator(std::size_t length, EnumerateOptions options)
    : length_(length), options_(options) {
  if (length > options_.cap)
    throw CapExceeded("path length " + std::to_string(length) + " exceeds oracle cap " +
                      std::to_string(options_.cap));
  path_.steps_.reserve(length);
  path_.levels_.reserve(length + 1);
}

bool PathEnumerator::can_push(Step s) const {
  const auto& steps = path_.steps_;
  const int level = path_.levels_.back() + displacement(s);
  if (level < 0) return false;
  if (!steps.empty()) {
    if (steps.back() == Step::Up && s == Step::DownRed) return false;
    if (steps.back() == Step::DownRed && s == Step::Up) return false;
  }
  if (options_.forbid_udr && s == Step::DownRed && steps.size() >= 2 && steps[steps.size() - 2] == Step::Up &&
      steps.back() == Step::DownBlack)
    return false;
  if (options_.end_level) {
    const long remaining = static_cast<long>(length_ - steps.size() - 1);
    const long gap = std::labs(static_cast<long>(level) - *options_.end_level);
    if (gap > remaining || (remaining - gap) % 2 != 0) return false;
  }
  return true;
}

void PathEnumerator::push(Step s) {
  auto& steps = path_.steps_;
  if (s == Step::DownRed && steps.size() >= 2 && steps[steps.size() - 2] == Step::Up &&
      steps.back() == Step::DownBlack)
    ++path_.udr_count_;
  steps.push_back(s);
  path_.levels_.push_back(path_.levels_.back() + displacement(s));
}

Step PathEnumerator::pop() {
  auto& steps = path_.steps_;
  const Step s = steps.back();
  steps.pop_back();
  path_.levels_.pop_back();
  if (s == Step::DownRed && steps.size() >= 2 && steps[steps.size() - 2] == Step::Up &&
      steps.back() == Step::DownBlack)
    --path_.udr_count_;
  return s;
}

// Depth-first search resuming from the current prefix. next_kind is the
// smallest step kind still to be tried at the current depth.
bool PathEnumerator::descend() {
  int next_kind = 0;
  if (started_) {
    if (path_.steps_.empty()) return false;
    next_kind = static_cast<int>(pop()) + 1;
  }
  started_ = true;
  for (;;) {
    if (path_.steps_.size() == length_) {
      if (!options_.end_level || path_.end_level() == *options_.end_level) return true;
      if (path_.steps_.empty()) return false;
      next_kind = static_cast<int>(pop()) + 1;
      continue;
    }
    bool pushed = false;
    for (int k = next_kind; k <= 2; ++k) {
      const auto s = static_cast<Step>(k);
      if (can_push(s)) {
        push(s);
        pushed = true;
        break;
      }
    }
    if (pushed) {
      next_kind = 0;
      continue;
    }
    if (path_.steps_.empty()) return false;
    next_kind = static_cast<int>(pop()) + 1;
  }
}

bool PathEnumerator::next() {
  if (done_) return false;
  if (!descend()) done_ = true;
  return !done_;
}

void enumerate(std::size_t length, const EnumerateOptions& options,
               const std::function<void(const SkewPath&)>& visit) {
  PathEnumerator e(length, options);
  while (e.next()) visit(e.current());
}

std::vector<SkewPath> enumerate_all(std::size_t length, const EnumerateOptions& options) {
  std::vector<SkewPath> out;
  enumerate(length, options, [&](const SkewPath& p) { out.push_back(p); });
  return out;
}

}  // namespace skewdyck

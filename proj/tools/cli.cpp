#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "skewdyck/asymptotics.hpp"
#include "skewdyck/equations.hpp"
#include "skewdyck/holonomic.hpp"
#include "skewdyck/kernel.hpp"
#include "skewdyck/layered_dp.hpp"
#include "skewdyck/path.hpp"
#include "skewdyck/serialize.hpp"
#include "skewdyck/verify.hpp"

#ifndef SKEWDYCK_GOLDEN_DIR
#define SKEWDYCK_GOLDEN_DIR ""
#endif

namespace skewdyck::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Tsv };

/// --t-eval: keep t symbolic, or substitute a rational value.
struct TEval {
  std::optional<Rational> value;  // empty means track
  std::string label;

  bool tracking() const { return !value.has_value(); }
};

TEval parse_t_eval(const std::string& text) {
  if (text == "track") return {std::nullopt, "track"};
  if (text == "zero") return {Rational(0), "zero"};
  if (text == "one") return {Rational(1), "one"};
  try {
    Rational v = parse_rational(text);
    return {v, v.get_str()};
  } catch (const std::invalid_argument&) {
    throw UsageError("--t-eval expects track, zero, one or a rational number, got '" + text + "'");
  }
}

// A sequence of coefficients: either t-polynomials or plain rationals.
struct Sequence {
  std::vector<RationalTPoly> tracked;
  std::vector<Rational> values;
  bool is_tracked = false;

  std::size_t size() const { return is_tracked ? tracked.size() : values.size(); }
};

Sequence make_sequence(const ZSeries<RationalTPoly>& s, const TEval& t) {
  Sequence seq;
  if (t.tracking()) {
    seq.is_tracked = true;
    seq.tracked = s.coefficients();
  } else {
    seq.values = evaluate_t(s, *t.value).coefficients();
  }
  return seq;
}

Sequence make_sequence(const ZSeries<Rational>& s) {
  Sequence seq;
  seq.values = s.coefficients();
  return seq;
}

void print_sequence(std::ostream& out, const Sequence& seq, Format format, bool half, const std::string& t_label) {
  switch (format) {
    case Format::Text: {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out << ' ';
        out << (seq.is_tracked ? seq.tracked[i].to_string() : seq.values[i].get_str());
      }
      out << '\n';
      break;
    }
    case Format::Tsv: {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        out << i;
        if (seq.is_tracked) {
          for (const auto& c : seq.tracked[i].coefficients()) out << '\t' << c.get_str();
          if (seq.tracked[i].is_zero()) out << "\t0";
        } else {
          out << '\t' << seq.values[i].get_str();
        }
        out << '\n';
      }
      break;
    }
    case Format::Json: {
      nlohmann::json j;
      auto arr = nlohmann::json::array();
      for (std::size_t i = 0; i < seq.size(); ++i)
        arr.push_back(seq.is_tracked ? coefficient_json(seq.tracked[i]) : coefficient_json(seq.values[i]));
      j["sequence"] = std::move(arr);
      j["variable"] = half ? "z(half)" : "z";
      j["t_mode"] = t_label;
      out << j.dump() << '\n';
      break;
    }
  }
}

/// Spreads a half-length series back to full length (z -> z^2), order n.
template <class R>
ZSeries<R> spread(const ZSeries<R>& half, std::size_t n) {
  ZSeries<R> full(n);
  for (std::size_t i = 0; 2 * i < n && i < half.order(); ++i) full[2 * i] = half[i];
  return full;
}

int cmd_count(std::ostream& out, std::size_t length, int level, const TEval& t, Format format) {
  if (level < 0) throw UsageError("level must be nonnegative");
  const TPoly p = count_track(length, level);
  const RationalTPoly q = p.cast<Rational>();
  switch (format) {
    case Format::Text:
    case Format::Tsv:
      out << (t.tracking() ? q.to_string() : q.evaluate(*t.value).get_str()) << '\n';
      break;
    case Format::Json: {
      nlohmann::json j;
      j["length"] = length;
      j["level"] = level;
      j["t_mode"] = t.label;
      j["count"] = t.tracking() ? coefficient_json(q) : coefficient_json(q.evaluate(*t.value));
      out << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

int cmd_series(std::ostream& out, std::size_t order, bool half, const TEval& t, Format format) {
  const std::size_t half_order = half ? order : (order + 1) / 2;
  Sequence seq;
  if (t.value && *t.value == 0) {
    const auto s = avoidance_series(half_order);
    seq = make_sequence(half ? s : spread(s, order));
  } else {
    const auto s = marked_series(half_order);
    seq = make_sequence(half ? s : spread(s, order), t);
  }
  print_sequence(out, seq, format, half, t.label);
  return 0;
}

int cmd_bivariate(std::ostream& out, std::size_t order, Format format) {
  const auto s = marked_series(order);
  switch (format) {
    case Format::Text:
      for (const auto& p : s.coefficients()) {
        const auto& c = p.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j].get_str();
        out << '\n';
      }
      break;
    case Format::Tsv:
    case Format::Json:
      print_sequence(out, make_sequence(s, TEval{}), format, true, "track");
      break;
  }
  return 0;
}

int cmd_levels(std::ostream& out, unsigned level, std::size_t order, bool half, const TEval& t, Format format) {
  if (half && level % 2 != 0) throw UsageError("--half-length needs an even level");
  const std::size_t full_order = std::max<std::size_t>(half ? 2 * order : order, level + 2);
  Sequence seq;
  if (t.value && *t.value == 0) {
    auto s = level_gf<Rational>(level, full_order);
    s = half ? s.shifted_down(level).compressed(2).truncated(order) : s.truncated(order);
    seq = make_sequence(s);
  } else {
    auto s = level_gf<RationalTPoly>(level, full_order);
    s = half ? s.shifted_down(level).compressed(2).truncated(order) : s.truncated(order);
    seq = make_sequence(s, t);
  }
  print_sequence(out, seq, format, half, t.label);
  return 0;
}

int cmd_verify(std::ostream& out, std::size_t order, const std::string& golden_dir, bool sequential,
               Format format) {
  VerifyOptions options;
  options.order = order;
  options.parallel = !sequential;
  if (!golden_dir.empty()) options.golden_dir = golden_dir;
  const auto results = run_verification(options);
  const auto passed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
  if (format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << nlohmann::json{{"checks", arr}, {"passed", passed}, {"total", results.size()}}.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) out << " [" << r.detail << ']';
      out << '\n';
    }
    out << passed << '/' << results.size() << " checks passed\n";
  }
  return passed == results.size() ? 0 : 1;
}

int cmd_asympt(std::ostream& out, std::vector<std::size_t> ns, Format format) {
  for (std::size_t n : ns)
    if (n == 0) throw UsageError("asymptotic estimate needs n >= 1");
  const std::size_t max_n = ns.empty() ? 0 : *std::max_element(ns.begin(), ns.end());
  const auto seq = extend({1, 1, 2, 6}, std::max<std::size_t>(max_n, 3));
  const auto rows = convergence_report(ns, seq);
  char ratio[32];
  if (format == Format::Json) {
    const auto c = constants();
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      std::snprintf(ratio, sizeof ratio, "%.12f", r.ratio);
      arr.push_back({{"n", r.n}, {"exact", r.exact.get_str()}, {"estimate", scientific_from_log(r.log_estimate, 12)},
                     {"ratio", ratio}});
    }
    out << nlohmann::json{{"rows", arr},
                          {"constants",
                           {{"z0", c.z0}, {"S0", c.S0}, {"growth", c.growth}, {"amplitude", c.amplitude}}}}
               .dump()
        << '\n';
    return 0;
  }
  out << "n\ts_n\testimate\tratio\n";
  for (const auto& r : rows) {
    std::snprintf(ratio, sizeof ratio, "%.12f", r.ratio);
    out << r.n << '\t' << scientific_from_log(r.log_exact, 12) << '\t' << scientific_from_log(r.log_estimate, 12)
        << '\t' << ratio << '\n';
  }
  return 0;
}

int cmd_render(std::ostream& out, const std::string& word, const SvgOptions& options, const std::string& file) {
  SkewPath path;
  try {
    path = SkewPath::parse(word);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string svg = render_svg(path, options);
  if (file.empty() || file == "-") {
    out << svg;
    return 0;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + file);
  f << svg;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of skew Dyck paths with up-down-red avoided or counted", "skewdyck"};
  app.require_subcommand(1);

  std::size_t order = 16;
  std::string format_name = "text";
  bool half = false;
  std::string t_eval_text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"tsv", Format::Tsv}};

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Number of coefficients (default 16)")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  };
  auto add_half = [&](CLI::App* sub) {
    sub->add_flag("--half-length", half, "Let z count half-length (z^2 -> z)");
  };
  auto add_t_eval = [&](CLI::App* sub) {
    sub->add_option("--t-eval", t_eval_text, "track, zero, one or a rational value for t");
  };

  std::size_t count_length = 0;
  int count_level = 0;
  auto* count_cmd = app.add_subcommand("count", "Paths of a given length ending at a given level");
  count_cmd->add_option("length", count_length, "Number of steps")->required();
  count_cmd->add_option("level", count_level, "End level")->required()->check(CLI::NonNegativeNumber);
  add_t_eval(count_cmd);
  add_format(count_cmd);

  auto* series_cmd = app.add_subcommand("series", "Level-0 series from the algebraic equation");
  add_order(series_cmd);
  add_half(series_cmd);
  add_t_eval(series_cmd);
  add_format(series_cmd);

  auto* bivariate_cmd = app.add_subcommand("bivariate", "Rows of t-coefficients per half-length");
  add_order(bivariate_cmd);
  add_format(bivariate_cmd);

  unsigned levels_k = 0;
  auto* levels_cmd = app.add_subcommand("levels", "Generating function of paths ending at level k");
  levels_cmd->add_option("k", levels_k, "End level")->required();
  add_order(levels_cmd);
  add_half(levels_cmd);
  add_t_eval(levels_cmd);
  add_format(levels_cmd);

  std::string golden_dir = SKEWDYCK_GOLDEN_DIR;
  bool no_golden = false;
  bool sequential = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check and report PASS/FAIL");
  add_order(verify_cmd);
  add_format(verify_cmd);
  verify_cmd->add_option("--golden-dir", golden_dir, "Directory with reference tables");
  verify_cmd->add_flag("--no-golden", no_golden, "Skip the reference-table checks");
  verify_cmd->add_flag("--sequential", sequential, "Run checks one after another");

  std::vector<std::size_t> asympt_ns{50, 100, 200, 400, 800, 1600};
  auto* asympt_cmd = app.add_subcommand("asympt", "Exact coefficients against the asymptotic estimate");
  asympt_cmd->add_option("--n", asympt_ns, "Indices to report")->delimiter(',');
  asympt_cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));

  std::string render_word;
  std::string render_out;
  SvgOptions svg;
  auto* render_cmd = app.add_subcommand("render", "Draw a path (word over U, D, R) as SVG");
  render_cmd->add_option("word", render_word, "Step word, e.g. UUDR")->required();
  render_cmd->add_option("--unit", svg.unit_px, "Pixels per unit step")->check(CLI::PositiveNumber);
  render_cmd->add_option("-o,--out", render_out, "Output file (default stdout)");
  render_cmd->add_option("--up-color", svg.colors.up);
  render_cmd->add_option("--down-color", svg.colors.down_black);
  render_cmd->add_option("--red-color", svg.colors.down_red);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = formats.at(format_name);
    TEval t_default_track = parse_t_eval(t_eval_text.empty() ? "track" : t_eval_text);
    TEval t_default_zero = parse_t_eval(t_eval_text.empty() ? "zero" : t_eval_text);

    if (*count_cmd) return cmd_count(out, count_length, count_level, t_default_track, format);
    if (*series_cmd) return cmd_series(out, order, half, t_default_zero, format);
    if (*bivariate_cmd) return cmd_bivariate(out, order, format);
    if (*levels_cmd) return cmd_levels(out, levels_k, order, half, t_default_zero, format);
    if (*verify_cmd) return cmd_verify(out, order, no_golden ? std::string() : golden_dir, sequential, format);
    if (*asympt_cmd) return cmd_asympt(out, asympt_ns, format == Format::Json ? Format::Json : Format::Tsv);
    if (*render_cmd) return cmd_render(out, render_word, svg, render_out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace skewdyck::cli

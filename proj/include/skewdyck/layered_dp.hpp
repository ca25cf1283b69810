#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

#include "skewdyck/series.hpp"
#include "skewdyck/tpoly.hpp"

namespace skewdyck {

/// Automaton layers, named after the generating-function families f, g, h, k.
///   F: last step Up (or the empty path)
///   G: last step DownBlack directly after an Up
///   H: last step DownBlack otherwise
///   K: last step DownRed
enum class Layer : std::uint8_t { F, G, H, K };

inline constexpr Layer kAllLayers[] = {Layer::F, Layer::G, Layer::H, Layer::K};

std::string_view layer_name(Layer l);

struct StateKey {
  Layer layer;
  int level;

  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

/// Sparse map from (layer, level) to the t-weighted number of paths ending
/// there. Entries with zero weight are never stored.
class StateVector {
 public:
  /// The empty path: weight 1 at (F, 0).
  static StateVector initial();

  const std::map<StateKey, TPoly>& entries() const { return entries_; }

  /// Zero polynomial if absent.
  TPoly at(Layer layer, int level) const;
  /// Sum over all four layers at one level.
  TPoly at_level(int level) const;
  /// Sum over everything.
  TPoly total() const;

  void add(Layer layer, int level, const TPoly& weight);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::map<StateKey, TPoly> entries_;
};

enum class Transitions {
  Marked,            // the G --DownRed--> K edge carries weight t
  WithoutMarkedEdge  // the same edge deleted (up-down-red forbidden)
};

/// One automaton step.
StateVector step(const StateVector& state, Transitions transitions = Transitions::Marked);

/// States after 0, 1, ..., length steps.
std::vector<StateVector> run(std::size_t length, Transitions transitions = Transitions::Marked);

enum class CountMode { Track, Forbid, Total };

using CountResult = std::variant<TPoly, Integer>;

/// Paths of the given length ending at end_level (all layers). Track gives
/// the full t-polynomial, Forbid its value at t = 0, Total its value at t = 1.
CountResult count(std::size_t length, int end_level, CountMode mode);

TPoly count_track(std::size_t length, int end_level);

/// sum_m weight(layer, level after m steps) z^m, modulo z^order.
ZSeries<TPoly> layer_series(Layer layer, int level, std::size_t order);

}  // namespace skewdyck

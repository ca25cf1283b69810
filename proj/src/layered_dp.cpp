#include "skewdyck/layered_dp.hpp"

namespace skewdyck {

std::string_view layer_name(Layer l) {
  switch (l) {
    case Layer::F: return "F";
    case Layer::G: return "G";
    case Layer::H: return "H";
    case Layer::K: return "K";
  }
  return "?";
}

StateVector StateVector::initial() {
  StateVector s;
  s.add(Layer::F, 0, TPoly(1));
  return s;
}

TPoly StateVector::at(Layer layer, int level) const {
  auto it = entries_.find({layer, level});
  return it == entries_.end() ? TPoly() : it->second;
}

TPoly StateVector::at_level(int level) const {
  TPoly sum;
  for (Layer l : kAllLayers) sum += at(l, level);
  return sum;
}

TPoly StateVector::total() const {
  TPoly sum;
  for (const auto& [key, w] : entries_) sum += w;
  return sum;
}

void StateVector::add(Layer layer, int level, const TPoly& weight) {
  if (weight.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({layer, level}, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

StateVector step(const StateVector& state, Transitions transitions) {
  static const TPoly marker = TPoly::t();
  StateVector next;
  for (const auto& [key, w] : state.entries()) {
    const int up = key.level + 1;
    const int down = key.level - 1;
    switch (key.layer) {
      case Layer::F:
        next.add(Layer::F, up, w);
        if (down >= 0) next.add(Layer::G, down, w);
        break;
      case Layer::G:
        next.add(Layer::F, up, w);
        if (down >= 0) {
          next.add(Layer::H, down, w);
          if (transitions == Transitions::Marked) next.add(Layer::K, down, w * marker);
        }
        break;
      case Layer::H:
        next.add(Layer::F, up, w);
        if (down >= 0) {
          next.add(Layer::H, down, w);
          next.add(Layer::K, down, w);
        }
        break;
      case Layer::K:
        if (down >= 0) {
          next.add(Layer::H, down, w);
          next.add(Layer::K, down, w);
        }
        break;
    }
  }
  return next;
}

std::vector<StateVector> run(std::size_t length, Transitions transitions) {
  std::vector<StateVector> states;
  states.reserve(length + 1);
  states.push_back(StateVector::initial());
  for (std::size_t m = 0; m < length; ++m) states.push_back(step(states.back(), transitions));
  return states;
}

TPoly count_track(std::size_t length, int end_level) {
  if (end_level < 0 || static_cast<std::size_t>(end_level) > length) return {};
  return run(length).back().at_level(end_level);
}

CountResult count(std::size_t length, int end_level, CountMode mode) {
  TPoly p = count_track(length, end_level);
  switch (mode) {
    case CountMode::Track: return p;
    case CountMode::Forbid: return p.coeff(0);
    case CountMode::Total: return p.coefficient_sum();
  }
  return p;
}

ZSeries<TPoly> layer_series(Layer layer, int level, std::size_t order) {
  ZSeries<TPoly> s(order);
  if (order == 0) return s;
  const auto states = run(order - 1);
  for (std::size_t m = 0; m < order; ++m) s[m] = states[m].at(layer, level);
  return s;
}

}  // namespace skewdyck

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vkbr/laurent.hpp"

namespace vkbr {

/// Exhaustive 2^n folds refuse inputs above this many crossings (or edges).
inline constexpr int kDefaultMaxSize = 24;
/// Hard ceiling; enumeration masks are 64-bit.
inline constexpr int kAbsoluteMaxSize = 40;

using ArcId = std::uint32_t;

/// A classical crossing. Ports are listed counterclockwise; port 0 carries
/// the incoming under-strand arc and port 2 the outgoing one. The over strand
/// occupies ports 1 and 3 and enters at `over_in`.
struct Crossing {
  std::array<ArcId, 4> ports{};
  int over_in = 1;

  int over_out() const { return 4 - over_in; }
  bool is_incoming(int port) const { return port == 0 || port == over_in; }
  /// Port through which the strand entering at `in_port` leaves.
  int exit_port(int in_port) const { return in_port == 0 ? 2 : over_out(); }
  /// +1 when the over strand enters at port 3, -1 when it enters at port 1.
  int sign() const { return over_in == 3 ? 1 : -1; }
  /// Same crossing with over and under exchanged, ports relabelled so the
  /// new under strand enters at port 0.
  Crossing switched() const;
};

enum class Splitting : std::uint8_t { A = 0, B = 1 };

/// One splitting per classical crossing; bit i of the enumeration index is
/// the splitting at crossing i (A = 0, B = 1).
class State {
 public:
  State() = default;
  explicit State(std::vector<Splitting> choices) : choices_(std::move(choices)) {}
  static State from_index(std::size_t crossings, std::uint64_t index);
  static State all(std::size_t crossings, Splitting s) {
    return State(std::vector<Splitting>(crossings, s));
  }

  std::size_t size() const { return choices_.size(); }
  Splitting operator[](std::size_t i) const { return choices_[i]; }
  void toggle(std::size_t i) {
    choices_[i] = choices_[i] == Splitting::A ? Splitting::B : Splitting::A;
  }

 private:
  std::vector<Splitting> choices_;
};

struct StateStats {
  int alpha = 0;
  int beta = 0;
  int delta = 0;

  friend bool operator==(const StateStats&, const StateStats&) = default;
};

/// A crossing visited while walking along a component.
struct Pass {
  std::size_t crossing = 0;
  bool over = false;
};

/// Virtual link diagram: classical crossings joined by directed arcs plus a
/// count of crossing-free loops. Virtual crossings carry no data.
class Diagram {
 public:
  Diagram() = default;

  /// Validates the port structure; throws ParseError (line 0) on failure.
  Diagram(std::vector<Crossing> crossings, std::vector<std::string> arc_names,
          int free_loops = 0);

  static Diagram parse(std::string_view text);
  std::string to_text() const;

  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t arc_count() const { return arc_names_.size(); }
  int free_loops() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t i) const { return crossings_[i]; }
  const std::string& arc_name(ArcId a) const { return arc_names_[a]; }

  /// Where arc `a` ends: crossing index and incoming port.
  std::pair<std::size_t, int> head(ArcId a) const { return heads_[a]; }
  /// Where arc `a` starts: crossing index and outgoing port.
  std::pair<std::size_t, int> tail(ArcId a) const { return tails_[a]; }

  /// Cyclic pass sequences of the components that contain crossings, each
  /// starting at the lowest-numbered arc of its component.
  std::vector<std::vector<Pass>> component_passes() const;
  /// Number of link components, free loops included.
  std::size_t component_count() const;

  /// Copy with over/under exchanged at the listed crossings.
  Diagram with_switched(const std::vector<std::size_t>& crossings) const;
  /// Copy with every crossing switched.
  Diagram mirror() const;

 private:
  void index_arcs();

  std::vector<Crossing> crossings_;
  std::vector<std::string> arc_names_;
  int free_loops_ = 0;
  std::vector<std::pair<std::size_t, int>> heads_;
  std::vector<std::pair<std::size_t, int>> tails_;
};

/// Ports joined by a splitting: A joins {0,1},{2,3}; B joins {0,3},{1,2}.
std::array<std::array<int, 2>, 2> splitting_pairs(Splitting s);

StateStats split_stats(const Diagram& d, const State& s);

/// Sum over all 2^n states of A^alpha B^beta d^(delta-1).
LaurentPoly kauffman_bracket(const Diagram& d, int max_crossings = kDefaultMaxSize);

int writhe(const Diagram& d);

/// (-1)^w t^(3w/4) <L>(t^(-1/4), t^(1/4), -t^(1/2) - t^(-1/2)).
LaurentPoly jones(const Diagram& d, int max_crossings = kDefaultMaxSize);

/// The substitution A, B, d -> t used by `jones`.
Substitution jones_substitution();

}  // namespace vkbr

// surprise :: runs and run sets

#ifndef SURPRISE_RUN_HPP_
#define SURPRISE_RUN_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "surprise/error.hpp"

namespace surprise {

// The teacher's six options, in their natural order. `None` means no test.
enum class Run : std::uint8_t { Mo = 0, Tu, We, Th, Fr, None };

inline constexpr int kRunCount = 6;
inline constexpr std::array<Run, kRunCount> kAllRuns = {Run::Mo, Run::Tu, Run::We,
                                                      Run::Th, Run::Fr, Run::None};
inline constexpr std::array<Run, 5> kDays = {Run::Mo, Run::Tu, Run::We, Run::Th, Run::Fr};

constexpr int index_of(Run r) noexcept { return static_cast<int>(r); }
constexpr Run run_at(int i) noexcept { return static_cast<Run>(i); }

constexpr bool is_day(Run r) noexcept { return r != Run::None; }

// Defined for every day; successor(Fr) == None.
inline Run successor(Run d) {
  if (!is_day(d)) throw PreconditionError("successor: 'none' is not a day");
  return run_at(index_of(d) + 1);
}

inline Run predecessor(Run d) {
  if (!is_day(d) || d == Run::Mo) throw PreconditionError("predecessor: defined for days after Mo only");
  return run_at(index_of(d) - 1);
}

inline constexpr std::string_view run_name(Run r) noexcept {
  constexpr std::array<std::string_view, kRunCount> names = {"Mo", "Tu", "We", "Th", "Fr", "none"};
  return names[index_of(r)];
}

inline std::optional<Run> run_from_name(std::string_view s) noexcept {
  for (Run r : kAllRuns)
    if (run_name(r) == s) return r;
  return std::nullopt;
}

// A subset of the six runs, stored as a 6-bit mask (bit i <=> run i).
class RunSet {
public:
  using Mask = std::uint8_t;
  static constexpr Mask kFullMask = 0x3f;

  constexpr RunSet() noexcept = default;
  constexpr explicit RunSet(Mask m) noexcept : mask_(static_cast<Mask>(m & kFullMask)) {}
  constexpr RunSet(std::initializer_list<Run> runs) noexcept {
    for (Run r : runs) mask_ = static_cast<Mask>(mask_ | bit(r));
  }

  static constexpr RunSet empty_set() noexcept { return RunSet{}; }
  static constexpr RunSet all() noexcept { return RunSet{kFullMask}; }
  static constexpr RunSet days() noexcept { return RunSet{static_cast<Mask>(0x1f)}; }
  static constexpr RunSet single(Run r) noexcept { return RunSet{bit(r)}; }
  // {r | r <= d}, {r | r >= d}, {r | r < d}, {r | r > d}
  static constexpr RunSet at_most(Run d) noexcept {
    return RunSet{static_cast<Mask>((1u << (index_of(d) + 1)) - 1)};
  }
  static constexpr RunSet at_least(Run d) noexcept {
    return RunSet{static_cast<Mask>(kFullMask & ~((1u << index_of(d)) - 1))};
  }
  static constexpr RunSet below(Run d) noexcept {
    return RunSet{static_cast<Mask>((1u << index_of(d)) - 1)};
  }
  static constexpr RunSet above(Run d) noexcept {
    return RunSet{static_cast<Mask>(kFullMask & ~((1u << (index_of(d) + 1)) - 1))};
  }

  constexpr Mask mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(Run r) const noexcept { return (mask_ & bit(r)) != 0; }
  constexpr bool subset_of(RunSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }

  // Largest run in the set; empty sets have no maximum.
  constexpr std::optional<Run> max() const noexcept {
    if (empty()) return std::nullopt;
    return run_at(31 - std::countl_zero(static_cast<unsigned>(mask_)));
  }
  constexpr std::optional<Run> min() const noexcept {
    if (empty()) return std::nullopt;
    return run_at(std::countr_zero(static_cast<unsigned>(mask_)));
  }
  // K - {max K}, with the empty set mapped to itself.
  constexpr RunSet without_max() const noexcept {
    if (empty()) return *this;
    return RunSet{static_cast<Mask>(mask_ & ~bit(*max()))};
  }

  constexpr RunSet& insert(Run r) noexcept {
    mask_ = static_cast<Mask>(mask_ | bit(r));
    return *this;
  }
  constexpr RunSet& erase(Run r) noexcept {
    mask_ = static_cast<Mask>(mask_ & ~bit(r));
    return *this;
  }

  friend constexpr RunSet operator|(RunSet a, RunSet b) noexcept { return RunSet{static_cast<Mask>(a.mask_ | b.mask_)}; }
  friend constexpr RunSet operator&(RunSet a, RunSet b) noexcept { return RunSet{static_cast<Mask>(a.mask_ & b.mask_)}; }
  friend constexpr RunSet operator-(RunSet a, RunSet b) noexcept { return RunSet{static_cast<Mask>(a.mask_ & ~b.mask_)}; }
  friend constexpr RunSet complement(RunSet a) noexcept { return RunSet{static_cast<Mask>(~a.mask_)}; }
  friend constexpr bool operator==(RunSet, RunSet) noexcept = default;

  class iterator {
  public:
    using value_type = Run;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Mask rest) noexcept : rest_(rest) {}
    constexpr Run operator*() const noexcept { return run_at(std::countr_zero(static_cast<unsigned>(rest_))); }
    constexpr iterator& operator++() noexcept {
      rest_ = static_cast<Mask>(rest_ & (rest_ - 1));
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

  private:
    Mask rest_ = 0;
  };

  // Ascending run order.
  constexpr iterator begin() const noexcept { return iterator{mask_}; }
  constexpr iterator end() const noexcept { return iterator{0}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Run r : *this) {
      if (!first) out += ",";
      out += run_name(r);
      first = false;
    }
    return out + "}";
  }

private:
  static constexpr Mask bit(Run r) noexcept { return static_cast<Mask>(1u << index_of(r)); }
  Mask mask_ = 0;
};

// Every subset of R, in increasing mask order (64 entries).
inline constexpr std::array<RunSet, 64> all_run_sets() noexcept {
  std::array<RunSet, 64> out{};
  for (unsigned m = 0; m < 64; ++m) out[m] = RunSet{static_cast<RunSet::Mask>(m)};
  return out;
}

} // namespace surprise

#endif // SURPRISE_RUN_HPP_

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace paclab::core {

// A domain element. Flat domains use row 0 and col as the element id; grid
// domains use (row, col). The tag slot distinguishes otherwise-identical
// copies of a domain in product constructions and is 0 everywhere else.
struct DomainPoint {
  std::int64_t row = 0;
  std::int64_t col = 0;
  std::int64_t tag = 0;

  friend bool operator==(const DomainPoint&, const DomainPoint&) = default;
  friend auto operator<=>(const DomainPoint&, const DomainPoint&) = default;
};

std::string to_string(const DomainPoint& p);

struct DomainPointHash {
  std::size_t operator()(const DomainPoint& p) const noexcept {
    auto mix = [](std::uint64_t v) {
      v += 0x9e3779b97f4a7c15ull;
      v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
      v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
      return v ^ (v >> 31);
    };
    std::uint64_t h = mix(static_cast<std::uint64_t>(p.row));
    h = mix(h ^ static_cast<std::uint64_t>(p.col));
    h = mix(h ^ static_cast<std::uint64_t>(p.tag));
    return static_cast<std::size_t>(h);
  }
};

using PointSeq = std::vector<DomainPoint>;

// Distinct points of `seq` in sorted order, with per-point multiplicities.
struct CollapsedPoints {
  PointSeq points;
  std::vector<int> multiplicity;
  std::size_t total = 0;
};

CollapsedPoints collapse_points(const PointSeq& seq);

}  // namespace paclab::core

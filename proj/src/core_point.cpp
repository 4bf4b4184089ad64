#include "paclab/core/point.hpp"

#include <algorithm>
#include <cstdio>

namespace paclab::core {

std::string to_string(const DomainPoint& p) {
  char buf[80];
  if (p.tag == 0) {
    std::snprintf(buf, sizeof buf, "(%lld,%lld)", static_cast<long long>(p.row),
                  static_cast<long long>(p.col));
  } else {
    std::snprintf(buf, sizeof buf, "(%lld,%lld;%lld)",
                  static_cast<long long>(p.row), static_cast<long long>(p.col),
                  static_cast<long long>(p.tag));
  }
  return buf;
}

CollapsedPoints collapse_points(const PointSeq& seq) {
  PointSeq sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  CollapsedPoints out;
  out.total = seq.size();
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.points.push_back(sorted[i]);
    out.multiplicity.push_back(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace paclab::core

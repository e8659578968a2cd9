#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "grid.hpp"

namespace gridknot {

using BigInt = boost::multiprecision::cpp_int;

// M = 2b + cr; b >= 1, cr >= 0.
long long complexity_from_stats(int maxima, int crossings);

// (M - 2)^2: the most crossings any presentation of complexity <= M can carry.
long long max_crossings_bound(long long m);

// 1/2 * n * ((n-1)!)^2: presentations of complexity exactly n.
BigInt presentation_count_bound(int n);

// sum_{i=2}^{n} 1/2 * i * ((i-1)!)^2: length of a monotone simplification.
BigInt sequence_length_bound(int n);

// (M-2) * sequence_length_bound(M).
BigInt reidemeister_total_bound(int m);

struct BoundReport {
  int maxima = 0;      // 0 when built from n directly
  int crossings = 0;
  long long complexity = 0;            // M
  long long max_crossings = 0;         // (M-2)^2
  BigInt presentation_count;           // at complexity M
  BigInt sequence_length;
  BigInt reidemeister_total;
};

BoundReport bound_report_from_stats(int maxima, int crossings);
BoundReport bound_report_from_complexity(int n);
std::string format_bound_report(const BoundReport& r);

}  // namespace gridknot

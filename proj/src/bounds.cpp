#include "bounds.hpp"

namespace gridknot {

long long complexity_from_stats(int maxima, int crossings) {
  if (maxima < 1) throw Error("need at least one maximum, got " + std::to_string(maxima));
  if (crossings < 0) throw Error("negative crossing count");
  return 2LL * maxima + crossings;
}

long long max_crossings_bound(long long m) {
  if (m < 2) throw Error("complexity must be at least 2");
  return (m - 2) * (m - 2);
}

BigInt presentation_count_bound(int n) {
  if (n < 2) throw Error("complexity must be at least 2");
  BigInt f = 1;
  for (int i = 2; i < n; ++i) f *= i;  // (n-1)!
  return BigInt(n) * f * f / 2;
}

BigInt sequence_length_bound(int n) {
  if (n < 2) throw Error("complexity must be at least 2");
  BigInt sum = 0;
  BigInt f = 1;  // (i-1)! running
  for (int i = 2; i <= n; ++i) {
    f *= i - 1;
    sum += BigInt(i) * f * f / 2;
  }
  return sum;
}

BigInt reidemeister_total_bound(int m) {
  if (m < 2) throw Error("complexity must be at least 2");
  return BigInt(m - 2) * sequence_length_bound(m);
}

BoundReport bound_report_from_stats(int maxima, int crossings) {
  BoundReport r;
  r.maxima = maxima;
  r.crossings = crossings;
  r.complexity = complexity_from_stats(maxima, crossings);
  r.max_crossings = max_crossings_bound(r.complexity);
  r.presentation_count = presentation_count_bound(static_cast<int>(r.complexity));
  r.sequence_length = sequence_length_bound(static_cast<int>(r.complexity));
  r.reidemeister_total = reidemeister_total_bound(static_cast<int>(r.complexity));
  return r;
}

BoundReport bound_report_from_complexity(int n) {
  BoundReport r;
  r.complexity = n;
  r.max_crossings = max_crossings_bound(n);
  r.presentation_count = presentation_count_bound(n);
  r.sequence_length = sequence_length_bound(n);
  r.reidemeister_total = reidemeister_total_bound(n);
  return r;
}

std::string format_bound_report(const BoundReport& r) {
  std::string out;
  if (r.maxima > 0) {
    out += "b " + std::to_string(r.maxima) + "\n";
    out += "cr " + std::to_string(r.crossings) + "\n";
  }
  out += "M " + std::to_string(r.complexity) + "\n";
  out += "max_crossings_bound " + std::to_string(r.max_crossings) + "\n";
  out += "presentation_count_bound " + r.presentation_count.str() + "\n";
  out += "sequence_length_bound " + r.sequence_length.str() + "\n";
  out += "reidemeister_total_bound " + r.reidemeister_total.str() + "\n";
  return out;
}

}  // namespace gridknot

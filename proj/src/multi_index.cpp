#include "berncone/multi_index.hpp"

#include <stdexcept>

namespace berncone {

int total_degree(const MultiIndex& index) {
  int sum = 0;
  for (int e : index) sum += e;
  return sum;
}

Integer multinomial(const MultiIndex& parts) {
  Integer result = 1;
  Integer numerator = 0;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("negative exponent in multinomial");
    for (int i = 1; i <= part; ++i) {
      ++numerator;
      result *= numerator;
      result /= i;  // exact: C(numerator, i) accumulates integrally
    }
  }
  return result;
}

namespace {

void enumerate(int length, int budget, bool exact, MultiIndex& prefix,
               std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == length - 1) {
    if (exact) {
      prefix.push_back(budget);
      out.push_back(prefix);
      prefix.pop_back();
    } else {
      for (int last = 0; last <= budget; ++last) {
        prefix.push_back(last);
        out.push_back(prefix);
        prefix.pop_back();
      }
    }
    return;
  }
  for (int head = 0; head <= budget; ++head) {
    prefix.push_back(head);
    enumerate(length, budget - head, exact, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> exponents_with_total(int length, int total) {
  if (length <= 0) throw std::invalid_argument("exponent vector length must be positive");
  if (total < 0) throw std::invalid_argument("negative total degree");
  std::vector<MultiIndex> out;
  MultiIndex prefix;
  enumerate(length, total, /*exact=*/true, prefix, out);
  return out;
}

std::vector<MultiIndex> exponents_up_to_total(int length, int max_total) {
  if (length <= 0) throw std::invalid_argument("exponent vector length must be positive");
  if (max_total < 0) throw std::invalid_argument("negative total degree");
  std::vector<MultiIndex> out;
  MultiIndex prefix;
  enumerate(length, max_total, /*exact=*/false, prefix, out);
  return out;
}

}  // namespace berncone

#include "trace_census/cf_word.hpp"

#include <algorithm>

namespace trace_census {

CFWord::CFWord(std::vector<digit_type> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw DomainError("CFWord: digit sequence must be nonempty");
  if (std::ranges::any_of(digits_, [](digit_type a) { return a == 0; }))
    throw DomainError("CFWord: every digit must be >= 1");
}

CFWord CFWord::reversed() const {
  return CFWord(std::vector<digit_type>(digits_.rbegin(), digits_.rend()));
}

std::string CFWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i != 0) s += ' ';
    s += std::to_string(digits_[i]);
  }
  return s;
}

}  // namespace trace_census

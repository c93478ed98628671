#include "lrs/corpus.hpp"

namespace lrs {

RecurrenceSpec make_spec(std::initializer_list<long> coeffs, std::initializer_list<long> initials) {
  RecurrenceSpec s;
  for (long c : coeffs) s.coeffs.emplace_back(c);
  for (long u : initials) s.initials.emplace_back(u);
  return s;
}

std::vector<CorpusEntry> bundled_corpus() {
  return {
      {"three-times-two-pow", make_spec({2}, {3})},
      {"five-times-minus-three-pow", make_spec({-3}, {5})},
      {"fibonacci", make_spec({1, 1}, {0, 1})},
      {"pell", make_spec({2, 1}, {0, 1})},
      {"n-times-two-pow", make_spec({4, -4}, {0, 2})},
      {"complex-pair-sqrt2", make_spec({1, -2}, {0, 1})},
      {"gaussian-one-plus-two-i", make_spec({2, -5}, {0, 1})},
      {"two-pow-minus-two", make_spec({3, -2}, {-1, 0})},
      {"tribonacci", make_spec({1, 1, 1}, {0, 0, 1})},
      {"padovan", make_spec({0, 1, 1}, {1, 1, 1})},
      {"double-two-simple-minus-three", make_spec({1, 8, -12}, {0, 1, 2})},
      {"golden-times-silver", make_spec({3, 0, -3, -1}, {0, 0, 0, 1})},
      {"tetranacci", make_spec({1, 1, 1, 1}, {0, 0, 0, 1})},
      // (x - 3)(x + 2)^2(x^2 - x - 1) = x^5 - 10x^3 - 5x^2 + 20x + 12
      {"order-five-mixed", make_spec({0, 10, 5, -20, -12}, {0, 0, 0, 0, 1})},
  };
}

std::vector<CorpusEntry> degenerate_examples() {
  return {
      {"plus-minus-two", make_spec({0, 4}, {0, 2})},
      {"plus-minus-i", make_spec({0, -1}, {0, 1})},
  };
}

std::vector<mpq_class> corpus_eps() { return {mpq_class(1, 13), mpq_class(1, 20), mpq_class(1, 100)}; }

}  // namespace lrs

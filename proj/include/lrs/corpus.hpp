#pragma once

// Bundled example recurrences, orders 1 to 5.

#include "lrs/recurrence.hpp"

#include <string>
#include <vector>

namespace lrs {

struct CorpusEntry {
  std::string name;
  RecurrenceSpec spec;
};

std::vector<CorpusEntry> bundled_corpus();
/// Inputs the degeneracy gate must reject.
std::vector<CorpusEntry> degenerate_examples();

/// The eps values the corpus is checked at.
std::vector<mpq_class> corpus_eps();

RecurrenceSpec make_spec(std::initializer_list<long> coeffs, std::initializer_list<long> initials);

}  // namespace lrs

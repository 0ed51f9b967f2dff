#include "wellbeing/data.hpp"

#include <stdexcept>
#include <string>

namespace wellbeing {

void WeightedSample::validate(int education_categories,
                              int happiness_categories) const {
  if (records.size() != weights.size()) {
    throw std::invalid_argument("WeightedSample: records/weights mismatch");
  }
  if (records.empty()) {
    throw std::invalid_argument("WeightedSample: empty");
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    const std::string at = " at record " + std::to_string(i);
    if (!(r.income > 0.0)) {
      throw std::invalid_argument("WeightedSample: non-positive income" + at);
    }
    if (!(r.health > 0.0 && r.health < 1.0)) {
      throw std::invalid_argument("WeightedSample: health outside (0,1)" + at);
    }
    if (r.education < 1 || r.education > education_categories) {
      throw std::invalid_argument("WeightedSample: education category" + at);
    }
    if (r.happiness < 1 || r.happiness > happiness_categories) {
      throw std::invalid_argument("WeightedSample: happiness category" + at);
    }
    if (!(weights[i] >= 0.0)) {
      throw std::invalid_argument("WeightedSample: negative weight" + at);
    }
    if (weights[i] > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw std::invalid_argument("WeightedSample: all weights are zero");
  }
}

double WeightedSample::total_weight() const {
  double acc = 0.0;
  for (double w : weights) acc += w;
  return acc;
}

}  // namespace wellbeing

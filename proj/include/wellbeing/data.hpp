#pragma once

#include <vector>

namespace wellbeing {

/// Attribute order is fixed throughout: income, health, education, happiness.
enum class Attribute { kIncome = 0, kHealth = 1, kEducation = 2,
                       kHappiness = 3 };

inline const char* attribute_name(Attribute a) {
  switch (a) {
    case Attribute::kIncome: return "income";
    case Attribute::kHealth: return "health";
    case Attribute::kEducation: return "education";
    case Attribute::kHappiness: return "happiness";
  }
  return "?";
}

struct Record {
  double income = 0.0;   // > 0
  double health = 0.0;   // in (0,1)
  int education = 1;     // 1..L3
  int happiness = 1;     // 1..L4
};

/// Individual records with survey weights. Invariants are enforced by
/// validate(): positive incomes, health strictly inside (0,1), categories in
/// range, at least one strictly positive weight.
struct WeightedSample {
  std::vector<Record> records;
  std::vector<double> weights;

  int size() const { return static_cast<int>(records.size()); }
  void validate(int education_categories = 5,
                int happiness_categories = 5) const;
  double total_weight() const;
};

}  // namespace wellbeing

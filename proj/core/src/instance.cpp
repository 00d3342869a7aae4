#include "ukp/instance.hpp"

#include "ukp/errors.hpp"

namespace ukp {

Instance::Instance(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) {
    throw EmptyInstanceError("instance has no items");
  }
  const Rational one(1);
  for (const Item& item : items_) {
    if (item.profit.is_zero() || item.profit > one) {
      throw InvalidParameterError("item profit must lie in (0, 1], got " + item.profit.str());
    }
    if (item.size.is_zero() || item.size > one) {
      throw InvalidParameterError("item size must lie in (0, 1], got " + item.size.str());
    }
  }
}

void SolutionMultiset::add(const Item& item, const Integer& count) {
  if (sgn(count) <= 0) {
    throw InvalidParameterError("multiset count must be positive");
  }
  counts_[item.index] += count;
  total_profit_ += item.profit * count;
  total_size_ += item.size * count;
}

void SolutionMultiset::merge(const SolutionMultiset& other) {
  for (const auto& [index, count] : other.counts_) {
    counts_[index] += count;
  }
  total_profit_ += other.total_profit_;
  total_size_ += other.total_size_;
}

bool SolutionMultiset::consistent_with(const Instance& instance) const {
  Rational profit, size;
  auto items = instance.items();
  for (const auto& [index, count] : counts_) {
    const Item* found = nullptr;
    for (const Item& item : items) {
      if (item.index == index) {
        found = &item;
        break;
      }
    }
    if (found == nullptr || sgn(count) <= 0) return false;
    profit += found->profit * count;
    size += found->size * count;
  }
  return profit == total_profit_ && size == total_size_ && size <= Rational(1);
}

}  // namespace ukp

#include "ncg/tensor.hpp"

namespace ncg {

ComponentArray::ComponentArray(SymbolTablePtr table, std::size_t rank)
    : table_(std::move(table)), rank_(rank) {
  if (!table_) throw Error("component array: null symbol table");
  dim_ = table_->dim();
  std::size_t total = 1;
  for (std::size_t r = 0; r < rank_; ++r) total *= dim_;
  data_.assign(total, GradedExpr::zero(table_));
}

std::size_t ComponentArray::flat_index(const std::vector<std::size_t>& idx) const {
  if (idx.size() != rank_) throw DimensionMismatch("component array: wrong index rank");
  std::size_t flat = 0;
  for (std::size_t i : idx) {
    if (i >= dim_) throw DimensionMismatch("component array: index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

const GradedExpr& ComponentArray::at(const std::vector<std::size_t>& idx) const {
  return data_[flat_index(idx)];
}

GradedExpr& ComponentArray::at(const std::vector<std::size_t>& idx) {
  return data_[flat_index(idx)];
}

void ComponentArray::for_each(
    const std::function<void(const std::vector<std::size_t>&, const GradedExpr&)>& fn)
    const {
  std::vector<std::size_t> idx(rank_, 0);
  for (std::size_t flat = 0; flat < data_.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t r = rank_; r-- > 0;) {
      idx[r] = rem % dim_;
      rem /= dim_;
    }
    fn(idx, data_[flat]);
  }
}

bool ComponentArray::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

ComponentArray ComponentArray::operator+(const ComponentArray& o) const {
  if (rank_ != o.rank_ || dim_ != o.dim_)
    throw DimensionMismatch("component array: shape mismatch");
  ComponentArray r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

ComponentArray ComponentArray::operator-(const ComponentArray& o) const {
  if (rank_ != o.rank_ || dim_ != o.dim_)
    throw DimensionMismatch("component array: shape mismatch");
  ComponentArray r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

ComponentArray ComponentArray::scaled(const Rational& c) const {
  ComponentArray r = *this;
  for (auto& e : r.data_) e = e.scaled(c);
  return r;
}

ComponentArray ComponentArray::classical_part() const {
  ComponentArray r = *this;
  for (auto& e : r.data_) e = e.classical_part();
  return r;
}

ComponentArray ComponentArray::order1_as_order0() const {
  ComponentArray r = *this;
  for (auto& e : r.data_) e = e.order1_as_order0();
  return r;
}

bool ComponentArray::operator==(const ComponentArray& o) const {
  if (rank_ != o.rank_ || dim_ != o.dim_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

OneForm OneForm::operator+(const OneForm& o) const {
  OneForm r = *this;
  for (std::size_t k = 0; k < dim(); ++k) r.at(k) += o.at(k);
  return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
  OneForm r = *this;
  for (std::size_t k = 0; k < dim(); ++k) r.at(k) -= o.at(k);
  return r;
}

TwoTensor TwoTensor::operator+(const TwoTensor& o) const {
  TwoTensor r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) r.at(i, j) += o.at(i, j);
  return r;
}

TwoTensor TwoTensor::operator-(const TwoTensor& o) const {
  TwoTensor r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

TwoTensor TwoTensor::scaled_by(const GradedExpr& f) const {
  TwoTensor r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) r.at(i, j) = f * r.at(i, j);
  return r;
}

}  // namespace ncg

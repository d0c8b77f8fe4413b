#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ncg/graded_expr.hpp"

namespace ncg {

// Dense component holder for rank-r tensors with all slots running over the
// coordinate dimension.  Components are GradedExpr; a fresh array is zero.
class ComponentArray {
 public:
  ComponentArray() = default;
  ComponentArray(SymbolTablePtr table, std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const SymbolTablePtr& table() const { return table_; }

  const GradedExpr& at(const std::vector<std::size_t>& idx) const;
  GradedExpr& at(const std::vector<std::size_t>& idx);

  template <typename... I>
  const GradedExpr& operator()(I... i) const {
    return at(std::vector<std::size_t>{static_cast<std::size_t>(i)...});
  }
  template <typename... I>
  GradedExpr& operator()(I... i) {
    return at(std::vector<std::size_t>{static_cast<std::size_t>(i)...});
  }

  void for_each(const std::function<void(const std::vector<std::size_t>&,
                                         const GradedExpr&)>& fn) const;

  bool is_zero() const;
  ComponentArray operator+(const ComponentArray& o) const;
  ComponentArray operator-(const ComponentArray& o) const;
  ComponentArray scaled(const Rational& c) const;
  // Per-component grade projections.
  ComponentArray classical_part() const;
  ComponentArray order1_as_order0() const;

  bool operator==(const ComponentArray& o) const;

 private:
  std::size_t flat_index(const std::vector<std::size_t>& idx) const;

  SymbolTablePtr table_;
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<GradedExpr> data_;
};

// f_kappa dx^kappa with algebra coefficients on the left of the basis.
class OneForm {
 public:
  explicit OneForm(SymbolTablePtr table) : comps_(std::move(table), 1) {}

  const GradedExpr& at(std::size_t k) const { return comps_(k); }
  GradedExpr& at(std::size_t k) { return comps_(k); }
  std::size_t dim() const { return comps_.dim(); }
  const SymbolTablePtr& table() const { return comps_.table(); }
  const ComponentArray& components() const { return comps_; }

  bool is_zero() const { return comps_.is_zero(); }
  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  bool operator==(const OneForm& o) const { return comps_ == o.comps_; }

 private:
  ComponentArray comps_;
};

// f_{rho sigma} dx^rho (x) dx^sigma.
class TwoTensor {
 public:
  explicit TwoTensor(SymbolTablePtr table) : comps_(std::move(table), 2) {}

  const GradedExpr& at(std::size_t r, std::size_t s) const { return comps_(r, s); }
  GradedExpr& at(std::size_t r, std::size_t s) { return comps_(r, s); }
  std::size_t dim() const { return comps_.dim(); }
  const SymbolTablePtr& table() const { return comps_.table(); }
  const ComponentArray& components() const { return comps_; }

  bool is_zero() const { return comps_.is_zero(); }
  TwoTensor operator+(const TwoTensor& o) const;
  TwoTensor operator-(const TwoTensor& o) const;
  TwoTensor scaled_by(const GradedExpr& f) const;
  bool operator==(const TwoTensor& o) const { return comps_ == o.comps_; }

 private:
  ComponentArray comps_;
};

}  // namespace ncg

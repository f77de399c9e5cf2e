#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drsolve/errors.hpp"

namespace drsolve {

class Layout;
using LayoutPtr = std::shared_ptr<const Layout>;

/// Immutable description of how a flat real vector splits into named blocks.
class Layout {
public:
  struct Block {
    std::string id;
    Eigen::Index offset;
    Eigen::Index size;
  };

  static LayoutPtr make(std::initializer_list<std::pair<std::string, Eigen::Index>> blocks) {
    return make(std::vector<std::pair<std::string, Eigen::Index>>(blocks));
  }

  static LayoutPtr make(const std::vector<std::pair<std::string, Eigen::Index>>& blocks) {
    auto layout = std::make_shared<Layout>();
    Eigen::Index offset = 0;
    for (const auto& [id, size] : blocks) {
      if (size < 0) throw ConfigError("block '" + id + "' has negative size");
      for (const auto& b : layout->blocks_)
        if (b.id == id) throw ConfigError("duplicate block id '" + id + "'");
      layout->blocks_.push_back({id, offset, size});
      offset += size;
    }
    layout->total_dim_ = offset;
    return layout;
  }

  Eigen::Index total_dim() const { return total_dim_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  const Block& block(const std::string& id) const {
    for (const auto& b : blocks_)
      if (b.id == id) return b;
    throw ConfigError("no block named '" + id + "'");
  }

  bool operator==(const Layout& other) const {
    if (total_dim_ != other.total_dim_ || blocks_.size() != other.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].id != other.blocks_[i].id || blocks_[i].size != other.blocks_[i].size)
        return false;
    }
    return true;
  }

private:
  std::vector<Block> blocks_;
  Eigen::Index total_dim_ = 0;
};

inline bool same_layout(const LayoutPtr& a, const LayoutPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A real vector partitioned into the named blocks of a shared Layout.
/// Elementwise arithmetic is only defined between vectors of the same layout.
class PointVector {
public:
  PointVector() = default;

  explicit PointVector(LayoutPtr layout)
      : layout_(std::move(layout)), values_(Eigen::VectorXd::Zero(layout_->total_dim())) {}

  PointVector(LayoutPtr layout, Eigen::VectorXd values)
      : layout_(std::move(layout)), values_(std::move(values)) {
    if (values_.size() != layout_->total_dim())
      throw LayoutError("value size does not match layout dimension");
  }

  const LayoutPtr& layout() const { return layout_; }
  Eigen::Index size() const { return values_.size(); }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXd& values() { return values_; }

  Eigen::VectorBlock<const Eigen::VectorXd> block(const std::string& id) const {
    const auto& b = layout_->block(id);
    return values_.segment(b.offset, b.size);
  }
  Eigen::VectorBlock<Eigen::VectorXd> block(const std::string& id) {
    const auto& b = layout_->block(id);
    return values_.segment(b.offset, b.size);
  }

  double operator[](Eigen::Index i) const { return values_[i]; }
  double& operator[](Eigen::Index i) { return values_[i]; }

private:
  LayoutPtr layout_;
  Eigen::VectorXd values_;
};

inline void require_same_layout(const PointVector& a, const PointVector& b) {
  if (!same_layout(a.layout(), b.layout()))
    throw LayoutError("point vectors have different layouts");
}

inline PointVector operator+(const PointVector& a, const PointVector& b) {
  require_same_layout(a, b);
  return {a.layout(), a.values() + b.values()};
}

inline PointVector operator-(const PointVector& a, const PointVector& b) {
  require_same_layout(a, b);
  return {a.layout(), a.values() - b.values()};
}

inline PointVector operator*(double s, const PointVector& a) {
  return {a.layout(), s * a.values()};
}

inline double distance(const PointVector& a, const PointVector& b) {
  require_same_layout(a, b);
  return (a.values() - b.values()).norm();
}

/// Grouping of the coordinates into disjoint typed groups; group i has
/// group_size[i] coordinates (all strictly positive).
struct Partition {
  std::vector<std::int32_t> group_of;      // one entry per coordinate
  std::vector<Eigen::Index> group_size;    // l_i per group
  std::vector<std::string> labels;         // one label per group

  int group_count() const { return static_cast<int>(group_size.size()); }

  void validate(Eigen::Index total_dim) const {
    if (static_cast<Eigen::Index>(group_of.size()) != total_dim)
      throw ConfigError("partition does not cover the layout");
    std::vector<Eigen::Index> counts(group_size.size(), 0);
    for (auto g : group_of) {
      if (g < 0 || g >= group_count()) throw ConfigError("partition group index out of range");
      ++counts[static_cast<std::size_t>(g)];
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] != group_size[i]) throw ConfigError("partition group sizes inconsistent");
      if (group_size[i] == 0)
        throw ConfigError("empty partition group '" + labels[i] + "'");
    }
  }
};

}  // namespace drsolve

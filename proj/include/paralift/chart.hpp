#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paralift/error.hpp"

namespace paralift {

enum class CoordKind { Base, Fiber };

struct Coordinate {
  std::string name;
  int index = 0;
  CoordKind kind = CoordKind::Base;
};

// Immutable ordered coordinate system.  Copies share storage; equality is
// structural (same names and kinds in the same order), so polys built from
// independently parsed charts interoperate.
class Chart {
 public:
  Chart() = default;

  // All coordinates base-kind.  Names must be valid identifiers, unique,
  // and distinct from the reserved unit symbol "j".
  static Chart make(const std::vector<std::string>& names);
  static Chart make(std::vector<Coordinate> coords);

  bool valid() const { return data_ != nullptr; }
  int dim() const { return static_cast<int>(data_->coords.size()); }
  const Coordinate& coord(int i) const { return data_->coords.at(static_cast<size_t>(i)); }
  const std::vector<Coordinate>& coords() const { return data_->coords; }
  std::optional<int> find(std::string_view name) const;

  bool same(const Chart& other) const;
  friend bool operator==(const Chart& a, const Chart& b) { return a.same(b); }
  friend bool operator!=(const Chart& a, const Chart& b) { return !a.same(b); }

  std::string names_joined(const std::string& sep = " ") const;

 private:
  struct Data {
    std::vector<Coordinate> coords;
  };
  explicit Chart(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

bool valid_coordinate_name(std::string_view name);

// Throws EngineError unless a and b are the same chart.
void require_same_chart(const Chart& a, const Chart& b, const char* where);

}  // namespace paralift

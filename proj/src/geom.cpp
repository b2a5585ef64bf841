#include "niche/geom.hpp"

namespace niche {

std::string Point::to_string() const { return "(" + x1.to_string() + "," + x2.to_string() + ")"; }

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.to_string(); }

}  // namespace niche

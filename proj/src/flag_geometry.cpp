#include "g2forge/flag_geometry.hpp"

namespace g2f {

std::string TitsAngle::str() const {
    if (k == 0) return "0";
    if (k == 3) return "pi";
    return std::to_string(k) + "pi/3";
}

}  // namespace g2f

#pragma once

#include <stdexcept>
#include <string>

namespace qdist {

/// Raised when a request exceeds one of the documented operational caps
/// (counting, enumeration, or exhaustive-sweep limits).
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace qdist

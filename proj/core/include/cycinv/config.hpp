#pragma once

#include <stdexcept>
#include <string>

namespace cycinv {

// Resource caps for the enumerative operations.  These are configuration
// values; exceeding one raises CapExceeded, never silent truncation.
struct Caps {
    // Largest allowed dimension d^n of a degree-n homogeneous component.
    long ambient = 100000;
    // Largest allowed order of a materialized matrix group.
    long group_order = 10000;
    // Largest degree for the S-algebra span/membership computations.
    int s_degree = 6;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string cap_name, long limit, long requested)
        : std::runtime_error("cap '" + cap_name + "' exceeded: requested " +
                             std::to_string(requested) + ", limit " + std::to_string(limit)),
          cap_name_(std::move(cap_name)),
          limit_(limit),
          requested_(requested) {}

    const std::string& cap_name() const { return cap_name_; }
    long limit() const { return limit_; }
    long requested() const { return requested_; }

private:
    std::string cap_name_;
    long limit_;
    long requested_;
};

inline void check_ambient_cap(int alphabet_size, int degree, const Caps& caps) {
    long dim = 1;
    for (int i = 0; i < degree; ++i) {
        dim *= alphabet_size;
        if (dim > caps.ambient) throw CapExceeded("ambient-dimension", caps.ambient, dim);
    }
}

}  // namespace cycinv

#ifndef TWW_VERTEX_ORDER_HPP
#define TWW_VERTEX_ORDER_HPP

#include <vector>

#include "tww/error.hpp"

namespace tww {

/// Total order on {0..n-1}: a bijection between positions and vertices.
class VertexOrder {
public:
    VertexOrder() = default;
    explicit VertexOrder(std::vector<int> vertex_at);

    static VertexOrder identity(int n);

    int size() const { return static_cast<int>(vertex_at_.size()); }
    int vertex_at(int pos) const;
    int position_of(int v) const;
    const std::vector<int>& vertices() const { return vertex_at_; }

private:
    std::vector<int> vertex_at_;
    std::vector<int> position_of_;
};

} // namespace tww

#endif

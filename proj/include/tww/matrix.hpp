#ifndef TWW_MATRIX_HPP
#define TWW_MATRIX_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/vertex_order.hpp"

namespace tww {

/// 0/1 matrix with fixed row and column orders. Graph-derived matrices are
/// symmetric with zero diagonal and apply one shared order to rows and
/// columns; that order is kept alongside the entries.
class OrderedMatrix {
public:
    OrderedMatrix() = default;
    OrderedMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    long ones() const;

    const std::vector<int>& order() const { return order_; }
    void set_order(std::vector<int> order) { order_ = std::move(order); }

    /// Bits c0..c1-1 of rows r1 and r2 coincide.
    bool rows_equal_on(int r1, int r2, int c0, int c1) const;
    /// Bits r0..r1-1 of columns c1 and c2 coincide.
    bool cols_equal_on(int c1, int c2, int r0, int r1) const;

    bool operator==(const OrderedMatrix& other) const;

private:
    void check(int r, int c) const;

    int rows_ = 0, cols_ = 0;
    std::vector<bitset> row_, col_; // row-major and column-major views
    std::vector<int> order_;        // vertex order, for graph-derived matrices
};

/// Adjacency matrix of g under the given order: entry (i, j) is 1 iff the
/// i-th and j-th vertices of the order are adjacent.
OrderedMatrix adjacency_matrix(const Graph& g, const VertexOrder& order);

/// k consecutive row blocks x k consecutive col blocks. Cut positions are
/// the first row/col of each block after the first; strictly increasing,
/// inside (0, rows) resp. (0, cols).
struct Division {
    std::vector<int> row_cuts;
    std::vector<int> col_cuts;

    int k() const { return static_cast<int>(row_cuts.size()) + 1; }
};

/// Division search, exhaustive over cut sets; a partial cut set is
/// abandoned as soon as some completed cell fails the test (all-zero for
/// grid, constant rows or constant columns for mixed).
std::optional<Division> find_grid_minor(const OrderedMatrix& m, int k);
std::optional<Division> find_mixed_minor(const OrderedMatrix& m, int k);

bool has_k_grid_minor(const OrderedMatrix& m, int k);
bool has_k_mixed_minor(const OrderedMatrix& m, int k);

/// Largest k admitting the respective minor; 0 when already k = 1 fails.
int grid_number(const OrderedMatrix& m);
int mixed_number(const OrderedMatrix& m);

/// Minimum of the matrix number over all vertex orders (one shared
/// row/column order, as for adjacency matrices). |V| <= 8.
int graph_grid_number(const Graph& g);
int graph_mixed_number(const Graph& g);

enum class Region { all, upper_triangle, lower_triangle }; // upper: col > row

/// Longest run of 1-entries at strictly increasing rows and strictly
/// decreasing columns, optionally restricted to one triangle.
int longest_decreasing_chain(const OrderedMatrix& m, Region region = Region::all);

OrderedMatrix delete_rows_cols(const OrderedMatrix& m, const std::vector<int>& drop_rows,
                               const std::vector<int>& drop_cols);

OrderedMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const OrderedMatrix& m);
OrderedMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const OrderedMatrix& m);

} // namespace tww

#endif

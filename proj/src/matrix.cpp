#include "tww/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

namespace tww {

OrderedMatrix::OrderedMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw invalid_input("negative matrix dimension");
    row_.assign(rows, bitset(cols));
    col_.assign(cols, bitset(rows));
}

void OrderedMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw invalid_input("matrix entry out of range: (" + std::to_string(r) + ", " +
                            std::to_string(c) + ")");
}

bool OrderedMatrix::get(int r, int c) const {
    check(r, c);
    return row_[r].test(c);
}

void OrderedMatrix::set(int r, int c, bool value) {
    check(r, c);
    row_[r].set(c, value);
    col_[c].set(r, value);
}

long OrderedMatrix::ones() const {
    long total = 0;
    for (const auto& r : row_)
        total += static_cast<long>(r.count());
    return total;
}

namespace {

// any bit of (a ^ b) inside [lo, hi)?
bool differ_in_range(const bitset& a, const bitset& b, int lo, int hi) {
    bitset diff = a ^ b;
    auto p = diff.find_first();
    while (p != bitset::npos && static_cast<int>(p) < lo)
        p = diff.find_next(p);
    return p != bitset::npos && static_cast<int>(p) < hi;
}

} // namespace

bool OrderedMatrix::rows_equal_on(int r1, int r2, int c0, int c1) const {
    if (r1 < 0 || r1 >= rows_ || r2 < 0 || r2 >= rows_ || c0 < 0 || c1 > cols_)
        throw invalid_input("row comparison out of range");
    return !differ_in_range(row_[r1], row_[r2], c0, c1);
}

bool OrderedMatrix::cols_equal_on(int c1, int c2, int r0, int r1) const {
    if (c1 < 0 || c1 >= cols_ || c2 < 0 || c2 >= cols_ || r0 < 0 || r1 > rows_)
        throw invalid_input("column comparison out of range");
    return !differ_in_range(col_[c1], col_[c2], r0, r1);
}

bool OrderedMatrix::operator==(const OrderedMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
}

OrderedMatrix adjacency_matrix(const Graph& g, const VertexOrder& order) {
    if (order.size() != g.vertex_count())
        throw invalid_input("order size does not match the graph");
    const int n = g.vertex_count();
    OrderedMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(order.vertex_at(i), order.vertex_at(j))) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    m.set_order(order.vertices());
    return m;
}

namespace {

// Exhaustive division search: rows are cut first, every completed row block
// must pass a full-width necessary test; column cuts follow, and each
// completed column block checks its cells against every row block, so a cut
// set dies as soon as one finished cell fails.
struct DivisionSearch {
    const OrderedMatrix& m;
    int k;
    bool mixed;

    std::vector<std::vector<long>> prefix; // ones in [0,r) x [0,c)
    std::vector<int> row_bounds;           // k+1 boundaries once rows are fixed
    std::vector<int> row_cuts, col_cuts;

    DivisionSearch(const OrderedMatrix& matrix, int kk, bool mixed_mode)
        : m(matrix), k(kk), mixed(mixed_mode) {
        prefix.assign(m.rows() + 1, std::vector<long>(m.cols() + 1, 0));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                prefix[r + 1][c + 1] =
                    prefix[r][c + 1] + prefix[r + 1][c] - prefix[r][c] + (m.get(r, c) ? 1 : 0);
    }

    long cell_ones(int r0, int r1, int c0, int c1) const {
        return prefix[r1][c1] - prefix[r0][c1] - prefix[r1][c0] + prefix[r0][c0];
    }

    bool rows_all_equal(int r0, int r1, int c0, int c1) const {
        for (int r = r0; r + 1 < r1; ++r)
            if (!m.rows_equal_on(r, r + 1, c0, c1))
                return false;
        return true;
    }

    bool cols_all_equal(int c0, int c1, int r0, int r1) const {
        for (int c = c0; c + 1 < c1; ++c)
            if (!m.cols_equal_on(c, c + 1, r0, r1))
                return false;
        return true;
    }

    bool row_block_viable(int r0, int r1) const {
        if (mixed)
            return r1 - r0 >= 2 && !rows_all_equal(r0, r1, 0, m.cols());
        return cell_ones(r0, r1, 0, m.cols()) > 0;
    }

    bool col_block_viable(int c0, int c1) const {
        if (mixed)
            return c1 - c0 >= 2 && !cols_all_equal(c0, c1, 0, m.rows());
        return cell_ones(0, m.rows(), c0, c1) > 0;
    }

    bool cell_ok(int r0, int r1, int c0, int c1) const {
        if (!mixed)
            return cell_ones(r0, r1, c0, c1) > 0;
        return !rows_all_equal(r0, r1, c0, c1) && !cols_all_equal(c0, c1, r0, r1);
    }

    bool col_block_cells_ok(int c0, int c1) const {
        for (int i = 0; i < k; ++i)
            if (!cell_ok(row_bounds[i], row_bounds[i + 1], c0, c1))
                return false;
        return true;
    }

    bool search_cols(int start, int cuts_left) {
        if (cuts_left == 0)
            return col_block_viable(start, m.cols()) && col_block_cells_ok(start, m.cols());
        for (int cut = start + 1; cut <= m.cols() - cuts_left; ++cut) {
            if (!col_block_viable(start, cut) || !col_block_cells_ok(start, cut))
                continue;
            col_cuts.push_back(cut);
            if (search_cols(cut, cuts_left - 1))
                return true;
            col_cuts.pop_back();
        }
        return false;
    }

    bool search_rows(int start, int cuts_left) {
        if (cuts_left == 0) {
            if (!row_block_viable(start, m.rows()))
                return false;
            row_bounds.assign({0});
            row_bounds.insert(row_bounds.end(), row_cuts.begin(), row_cuts.end());
            row_bounds.push_back(m.rows());
            col_cuts.clear();
            return search_cols(0, k - 1);
        }
        for (int cut = start + 1; cut <= m.rows() - cuts_left; ++cut) {
            if (!row_block_viable(start, cut))
                continue;
            row_cuts.push_back(cut);
            if (search_rows(cut, cuts_left - 1))
                return true;
            row_cuts.pop_back();
        }
        return false;
    }

    std::optional<Division> run() {
        if (search_rows(0, k - 1))
            return Division{row_cuts, col_cuts};
        return std::nullopt;
    }
};

std::optional<Division> find_minor(const OrderedMatrix& m, int k, bool mixed) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw invalid_input("division size out of range: k = " + std::to_string(k) +
                            " for a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " matrix");
    return DivisionSearch(m, k, mixed).run();
}

} // namespace

std::optional<Division> find_grid_minor(const OrderedMatrix& m, int k) {
    return find_minor(m, k, false);
}

std::optional<Division> find_mixed_minor(const OrderedMatrix& m, int k) {
    return find_minor(m, k, true);
}

bool has_k_grid_minor(const OrderedMatrix& m, int k) { return find_grid_minor(m, k).has_value(); }

bool has_k_mixed_minor(const OrderedMatrix& m, int k) { return find_mixed_minor(m, k).has_value(); }

namespace {

int matrix_number(const OrderedMatrix& m, bool mixed) {
    const int limit = std::min(m.rows(), m.cols());
    int k = 0;
    while (k + 1 <= limit && find_minor(m, k + 1, mixed).has_value())
        ++k;
    return k;
}

int graph_number(const Graph& g, bool mixed) {
    const int n = g.vertex_count();
    if (n > 8)
        throw invalid_input("graph grid/mixed number limited to 8 vertices (n! orders), got " +
                            std::to_string(n));
    if (n == 0)
        return 0;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;

    int best = matrix_number(adjacency_matrix(g, VertexOrder(perm)), mixed);
    while (std::next_permutation(perm.begin(), perm.end()) && best > 0) {
        OrderedMatrix m = adjacency_matrix(g, VertexOrder(perm));
        if (find_minor(m, best, mixed).has_value())
            continue; // this order is no better
        best = matrix_number(m, mixed);
    }
    return best;
}

} // namespace

int grid_number(const OrderedMatrix& m) { return matrix_number(m, false); }

int mixed_number(const OrderedMatrix& m) { return matrix_number(m, true); }

int graph_grid_number(const Graph& g) { return graph_number(g, false); }

int graph_mixed_number(const Graph& g) { return graph_number(g, true); }

int longest_decreasing_chain(const OrderedMatrix& m, Region region) {
    // 1-entries sorted by (row asc, col asc); a chain needs strictly
    // increasing rows and strictly decreasing cols, so within one row the
    // ascending col order forbids two picks. Patience-style strict LDS on
    // the col values in O(ones log ones).
    std::vector<int> cols;
    cols.reserve(m.ones());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if (!m.get(r, c))
                continue;
            if (region == Region::upper_triangle && !(c > r))
                continue;
            if (region == Region::lower_triangle && !(c < r))
                continue;
            cols.push_back(c);
        }

    std::vector<int> tails; // tails[len-1] = largest possible last col of a chain of len
    for (int c : cols) {
        auto it = std::lower_bound(tails.begin(), tails.end(), c, std::greater<int>());
        if (it == tails.end())
            tails.push_back(c);
        else
            *it = c;
    }
    return static_cast<int>(tails.size());
}

OrderedMatrix delete_rows_cols(const OrderedMatrix& m, const std::vector<int>& drop_rows,
                               const std::vector<int>& drop_cols) {
    std::vector<char> row_gone(m.rows(), 0), col_gone(m.cols(), 0);
    for (int r : drop_rows) {
        if (r < 0 || r >= m.rows())
            throw invalid_input("row to delete out of range: " + std::to_string(r));
        row_gone[r] = 1;
    }
    for (int c : drop_cols) {
        if (c < 0 || c >= m.cols())
            throw invalid_input("column to delete out of range: " + std::to_string(c));
        col_gone[c] = 1;
    }
    std::vector<int> keep_rows, keep_cols;
    for (int r = 0; r < m.rows(); ++r)
        if (!row_gone[r])
            keep_rows.push_back(r);
    for (int c = 0; c < m.cols(); ++c)
        if (!col_gone[c])
            keep_cols.push_back(c);

    OrderedMatrix out(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            if (m.get(keep_rows[i], keep_cols[j]))
                out.set(i, j, true);
    return out;
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos)
            continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

} // namespace

OrderedMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line))
        throw parse_error("matrix file: missing header");
    std::istringstream head(line);
    std::string tag;
    int rows = -1, cols = -1;
    if (!(head >> tag >> rows >> cols) || tag != "m" || rows < 0 || cols < 0)
        throw parse_error("matrix file: expected header 'm <rows> <cols>', got '" + line + "'");

    OrderedMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!next_content_line(in, line))
            throw parse_error("matrix file: missing row " + std::to_string(r + 1));
        if (static_cast<int>(line.size()) != cols)
            throw parse_error("matrix file: row " + std::to_string(r + 1) + " has " +
                              std::to_string(line.size()) + " entries, expected " +
                              std::to_string(cols));
        for (int c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw parse_error("matrix file: bad character '" + std::string(1, line[c]) +
                                  "' in row " + std::to_string(r + 1));
        }
    }
    return m;
}

void write_matrix(std::ostream& out, const OrderedMatrix& m) {
    out << "m " << m.rows() << " " << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        std::string line(m.cols(), '0');
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                line[c] = '1';
        out << line << "\n";
    }
}

OrderedMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open file: " + path);
    return read_matrix(in);
}

void save_matrix(const std::string& path, const OrderedMatrix& m) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot write file: " + path);
    write_matrix(out, m);
}

} // namespace tww

#include "conley/gf2.hpp"

#include <string>

#include "conley/errors.hpp"

namespace conley {

namespace {

int words_for(int cols) { return (cols + 63) / 64; }

void require(bool cond, const std::string& msg) {
    if (!cond) throw DimensionError(msg);
}

std::string shape(const Gf2Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), words_per_row_(words_for(cols)) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
    bits_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> entries) {
    std::vector<std::vector<int>> rows;
    rows.reserve(entries.size());
    for (const auto& r : entries) rows.emplace_back(r);
    return from_rows(rows);
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& entries, int cols) {
    int ncols = cols >= 0 ? cols : (entries.empty() ? 0 : static_cast<int>(entries.front().size()));
    Gf2Matrix m(static_cast<int>(entries.size()), ncols);
    for (int r = 0; r < m.rows(); ++r) {
        require(static_cast<int>(entries[r].size()) == ncols, "ragged row data");
        for (int c = 0; c < ncols; ++c) m.set(r, c, entries[r][c] % 2 != 0);
    }
    return m;
}

Gf2Matrix Gf2Matrix::column_vector(const std::vector<int>& bits) {
    Gf2Matrix m(static_cast<int>(bits.size()), 1);
    for (int r = 0; r < m.rows(); ++r) m.set(r, 0, bits[r] % 2 != 0);
    return m;
}

bool Gf2Matrix::get(int r, int c) const {
    return (row_data(r)[c >> 6] >> (c & 63)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value)
        row_data(r)[c >> 6] |= mask;
    else
        row_data(r)[c >> 6] &= ~mask;
}

bool Gf2Matrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int w = 0; w < words_per_row_; ++w) {
            std::uint64_t word = row_data(r)[w];
            while (word) {
                int b = __builtin_ctzll(word);
                word &= word - 1;
                t.set(w * 64 + b, r, true);
            }
        }
    return t;
}

Gf2Matrix Gf2Matrix::column(int c) const {
    Gf2Matrix v(rows_, 1);
    for (int r = 0; r < rows_; ++r) v.set(r, 0, get(r, c));
    return v;
}

std::vector<int> Gf2Matrix::column_bits(int c) const {
    std::vector<int> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = get(r, c) ? 1 : 0;
    return out;
}

std::vector<int> Gf2Matrix::row_bits(int r) const {
    std::vector<int> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = get(r, c) ? 1 : 0;
    return out;
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<int>& idx) const {
    Gf2Matrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int r = 0; r < rows_; ++r) out.set(r, j, get(r, idx[j]));
    return out;
}

Gf2Matrix Gf2Matrix::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Gf2Matrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.set(i, j, get(row_idx[i], col_idx[j]));
    return out;
}

Gf2Matrix Gf2Matrix::hcat(const Gf2Matrix& a, const Gf2Matrix& b) {
    require(a.rows() == b.rows(), "hcat: row counts differ (" + shape(a) + " vs " + shape(b) + ")");
    Gf2Matrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < out.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
        for (int c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.get(r, c));
    }
    return out;
}

void Gf2Matrix::xor_row(int dst, int src) {
    std::uint64_t* d = row_data(dst);
    const std::uint64_t* s = row_data(src);
    for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::uint64_t* ra = row_data(a);
    std::uint64_t* rb = row_data(b);
    for (int w = 0; w < words_per_row_; ++w) std::swap(ra[w], rb[w]);
}

bool Gf2Matrix::row_is_zero(int r) const {
    const std::uint64_t* d = row_data(r);
    for (int w = 0; w < words_per_row_; ++w)
        if (d[w]) return false;
    return true;
}

bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
}

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_,
            "add: shapes differ (" + shape(a) + " vs " + shape(b) + ")");
    Gf2Matrix out = a;
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
    return out;
}

Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    require(a.cols_ == b.rows_, "mul: inner dimensions differ (" + shape(a) + " * " + shape(b) + ")");
    Gf2Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        std::uint64_t* dst = out.row_data(r);
        const std::uint64_t* src = a.row_data(r);
        for (int w = 0; w < a.words_per_row_; ++w) {
            std::uint64_t word = src[w];
            while (word) {
                int k = w * 64 + __builtin_ctzll(word);
                word &= word - 1;
                const std::uint64_t* brow = b.row_data(k);
                for (int v = 0; v < b.words_per_row_; ++v) dst[v] ^= brow[v];
            }
        }
    }
    return out;
}

RowEchelon reduced_row_echelon(const Gf2Matrix& m) {
    RowEchelon out{m, {}};
    int pivot_row = 0;
    for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (out.mat.get(r, c)) {
                found = r;
                break;
            }
        if (found < 0) continue;
        out.mat.swap_rows(pivot_row, found);
        for (int r = 0; r < m.rows(); ++r)
            if (r != pivot_row && out.mat.get(r, c)) out.mat.xor_row(r, pivot_row);
        out.pivot_cols.push_back(c);
        ++pivot_row;
    }
    return out;
}

int rank(const Gf2Matrix& m) { return static_cast<int>(reduced_row_echelon(m).pivot_cols.size()); }

Gf2Matrix kernel_basis(const Gf2Matrix& m) {
    RowEchelon re = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : re.pivot_cols) is_pivot[p] = true;

    int nullity = m.cols() - static_cast<int>(re.pivot_cols.size());
    Gf2Matrix basis(m.cols(), nullity);
    int j = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, j, true);
        for (int i = 0; i < static_cast<int>(re.pivot_cols.size()); ++i)
            if (re.mat.get(i, f)) basis.set(re.pivot_cols[i], j, true);
        ++j;
    }
    return basis;
}

Gf2Matrix image_basis(const Gf2Matrix& m) {
    // The row space of the transpose is the column space; its reduced
    // row-echelon rows are the canonical basis.
    RowEchelon re = reduced_row_echelon(m.transposed());
    int r = static_cast<int>(re.pivot_cols.size());
    Gf2Matrix basis(m.rows(), r);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < m.rows(); ++c) basis.set(c, i, re.mat.get(i, c));
    return basis;
}

std::optional<Gf2Matrix> solve(const Gf2Matrix& m, const Gf2Matrix& rhs) {
    require(m.rows() == rhs.rows(),
            "solve: rhs length differs from row count (" + shape(m) + " vs " + shape(rhs) + ")");
    RowEchelon re = reduced_row_echelon(Gf2Matrix::hcat(m, rhs));
    // Any pivot beyond the coefficient columns marks an inconsistent column.
    for (int p : re.pivot_cols)
        if (p >= m.cols()) return std::nullopt;

    Gf2Matrix x(m.cols(), rhs.cols());
    for (int i = 0; i < static_cast<int>(re.pivot_cols.size()); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            if (re.mat.get(i, m.cols() + j)) x.set(re.pivot_cols[i], j, true);
    return x;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
    require(m.rows() == m.cols(), "inverse: matrix is not square (" + shape(m) + ")");
    RowEchelon re = reduced_row_echelon(Gf2Matrix::hcat(m, Gf2Matrix::identity(m.rows())));
    if (static_cast<int>(re.pivot_cols.size()) < m.rows()) return std::nullopt;
    Gf2Matrix inv(m.rows(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.rows(); ++c) inv.set(r, c, re.mat.get(r, m.cols() + c));
    return inv;
}

Gf2Matrix block_assemble(const std::vector<std::vector<Gf2Matrix>>& grid) {
    if (grid.empty()) return Gf2Matrix();
    std::size_t bcols = grid.front().size();
    for (const auto& row : grid)
        require(row.size() == bcols, "block_assemble: ragged block grid");
    if (bcols == 0) return Gf2Matrix();

    std::vector<int> heights(grid.size()), widths(bcols);
    for (std::size_t i = 0; i < grid.size(); ++i) heights[i] = grid[i][0].rows();
    for (std::size_t j = 0; j < bcols; ++j) widths[j] = grid[0][j].cols();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < bcols; ++j)
            require(grid[i][j].rows() == heights[i] && grid[i][j].cols() == widths[j],
                    "block_assemble: block (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has shape " + shape(grid[i][j]) + ", expected " +
                        std::to_string(heights[i]) + "x" + std::to_string(widths[j]));

    int total_rows = 0, total_cols = 0;
    for (int h : heights) total_rows += h;
    for (int w : widths) total_cols += w;
    Gf2Matrix out(total_rows, total_cols);
    int roff = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int coff = 0;
        for (std::size_t j = 0; j < bcols; ++j) {
            const Gf2Matrix& blk = grid[i][j];
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    if (blk.get(r, c)) out.set(roff + r, coff + c, true);
            coff += widths[j];
        }
        roff += heights[i];
    }
    return out;
}

bool same_column_space(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows()) return false;
    int ra = rank(a);
    int rb = rank(b);
    return ra == rb && rank(Gf2Matrix::hcat(a, b)) == ra;
}

}  // namespace conley

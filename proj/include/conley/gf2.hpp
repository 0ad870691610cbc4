#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace conley {

/// Dense matrix over the two-element field with bit-packed rows (one bit per
/// entry, 64 entries per machine word). Dimensions are fixed at construction;
/// zero-row and zero-column shapes are valid values and occur routinely as
/// trivial homology groups.
///
/// All elimination-based operations (rank, kernel_basis, image_basis, solve)
/// use deterministic leftmost-pivot Gaussian elimination, so their outputs
/// are reproducible byte for byte.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> entries);
    /// Build from 0/1 row data; `cols` disambiguates the width when there are
    /// no rows (pass -1 to infer from the first row).
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& entries, int cols = -1);
    static Gf2Matrix column_vector(const std::vector<int>& bits);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    bool is_zero() const;
    Gf2Matrix transposed() const;

    /// Single column as an n-by-1 matrix.
    Gf2Matrix column(int c) const;
    std::vector<int> column_bits(int c) const;
    std::vector<int> row_bits(int r) const;

    /// Columns selected by index, in the given order.
    Gf2Matrix select_columns(const std::vector<int>& idx) const;
    /// Submatrix on the given row and column index lists, in the given order.
    Gf2Matrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    static Gf2Matrix hcat(const Gf2Matrix& a, const Gf2Matrix& b);

    // Row operations backing Gaussian elimination.
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator!=(const Gf2Matrix& a, const Gf2Matrix& b) { return !(a == b); }

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;

    std::uint64_t* row_data(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_per_row_; }
    const std::uint64_t* row_data(int r) const {
        return bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
    }

    friend Gf2Matrix mul(const Gf2Matrix&, const Gf2Matrix&);
    friend Gf2Matrix add(const Gf2Matrix&, const Gf2Matrix&);
};

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b);

inline Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) { return add(a, b); }
inline Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) { return mul(a, b); }

/// Reduced row-echelon form with pivot columns in increasing order.
struct RowEchelon {
    Gf2Matrix mat;
    std::vector<int> pivot_cols;
};
RowEchelon reduced_row_echelon(const Gf2Matrix& m);

int rank(const Gf2Matrix& m);

/// Basis of the null space as matrix columns, in reduced column-echelon form:
/// restricted to the non-pivot coordinates the basis is the identity.
/// Column count equals cols(m) - rank(m).
Gf2Matrix kernel_basis(const Gf2Matrix& m);

/// Basis of the column space as matrix columns, in reduced column-echelon
/// form (canonical for the subspace). Column count equals rank(m).
Gf2Matrix image_basis(const Gf2Matrix& m);

/// Solve m*x = rhs column by column; rhs may carry several right-hand sides.
/// Returns the pivot-ordered representative (free coordinates zero), or
/// nullopt when any column has no solution. No solution is a normal outcome.
std::optional<Gf2Matrix> solve(const Gf2Matrix& m, const Gf2Matrix& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);

/// Concatenate a rectangular grid of blocks. Row heights must agree along
/// each block row and column widths along each block column; a mismatch
/// throws DimensionError.
Gf2Matrix block_assemble(const std::vector<std::vector<Gf2Matrix>>& grid);

/// True when the column spaces of a and b coincide.
bool same_column_space(const Gf2Matrix& a, const Gf2Matrix& b);

}  // namespace conley

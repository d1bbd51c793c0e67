#include "gbpa/linalg.hpp"

#include <sstream>

namespace gbpa {

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                         FieldSpec field) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c, field);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = field.normalize(Scalar(v));
        ++i;
    }
    return m;
}

Matrix Matrix::row_vector(std::vector<Scalar> entries, FieldSpec field) {
    Matrix m(1, entries.size(), field);
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = std::move(entries[j]);
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

void Matrix::append_row(const std::vector<Scalar>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix out(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.mul(data_[i], c);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (field_.normalize(data_[i]) != field_.normalize(rhs.data_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!field_.is_zero(v)) return false;
    return true;
}

std::vector<Scalar> Matrix::apply_row(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            out[j] = field_.add(out[j], field_.mul(v[i], at(i, j)));
    }
    return out;
}

std::vector<Scalar> Matrix::apply_col(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << field_.to_string(at(i, j));
        }
        os << "]";
        if (i + 1 < rows_) os << ", ";
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& m) {
    const FieldSpec& f = m.field();
    Matrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < work.rows() && f.is_zero(work.at(sel, col))) ++sel;
        if (sel == work.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(sel, j), work.at(pivot_row, j));
        Scalar inv = f.inv(work.at(pivot_row, col));
        for (std::size_t j = col; j < work.cols(); ++j)
            work.at(pivot_row, j) = f.mul(work.at(pivot_row, j), inv);
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r == pivot_row) continue;
            Scalar c = f.normalize(work.at(r, col));
            if (c == 0) continue;
            for (std::size_t j = col; j < work.cols(); ++j)
                work.at(r, j) = f.sub(work.at(r, j), f.mul(c, work.at(pivot_row, j)));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    Matrix reduced(pivots.size(), work.cols(), f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        reduced.set_row(r, work.row(r));
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    RrefResult red = rref(aug);
    for (std::size_t r = 0; r < n; ++r)
        if (r >= red.pivot_cols.size() || red.pivot_cols[r] != r)
            throw Error("matrix is singular");
    Matrix out(n, n, m.field());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.reduced.at(r, n + c);
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    const FieldSpec& f = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    Matrix out(0, m.cols(), f);
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(0));
        v[free_col] = 1;
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = f.neg(r.reduced.at(pr, free_col));
        out.append_row(v);
    }
    if (out.rows() == 0) out = Matrix(0, m.cols(), f);
    return out;
}

QuotientBasis quotient_basis(const Matrix& span_rows, std::size_t ambient_dim) {
    const FieldSpec& f = span_rows.field();
    RrefResult r = rref(span_rows);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    QuotientBasis qb;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) qb.free_coords.push_back(c);
    qb.reduce = Matrix(qb.free_coords.size(), ambient_dim, f);
    // e_c maps to itself for free c; a pivot column e_p is congruent to
    // minus the free part of its rref row.
    for (std::size_t k = 0; k < qb.free_coords.size(); ++k)
        qb.reduce.at(k, qb.free_coords[k]) = 1;
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
        std::size_t p = r.pivot_cols[pr];
        for (std::size_t k = 0; k < qb.free_coords.size(); ++k)
            qb.reduce.at(k, p) = f.neg(r.reduced.at(pr, qb.free_coords[k]));
    }
    return qb;
}

void RowSpan::eliminate(std::vector<Scalar>& v) const {
    for (const auto& [pivot, row] : rows_) {
        Scalar c = field_.normalize(v[pivot]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
}

bool RowSpan::add(std::vector<Scalar> v) {
    eliminate(v);
    std::size_t pivot = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (!field_.is_zero(v[j])) {
            pivot = j;
            break;
        }
    }
    if (pivot == ambient_) return false;
    Scalar inv = field_.inv(v[pivot]);
    for (auto& x : v) x = field_.mul(x, inv);
    // Back-eliminate the new pivot from existing rows.
    for (auto& [p, row] : rows_) {
        Scalar c = field_.normalize(row[pivot]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            row[j] = field_.sub(row[j], field_.mul(c, v[j]));
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < pivot) ++it;
    rows_.insert(it, {pivot, std::move(v)});
    return true;
}

bool RowSpan::contains(std::vector<Scalar> v) const {
    eliminate(v);
    for (const auto& x : v)
        if (!field_.is_zero(x)) return false;
    return true;
}

Matrix RowSpan::rows() const {
    Matrix out(rows_.size(), ambient_, field_);
    for (std::size_t i = 0; i < rows_.size(); ++i) out.set_row(i, rows_[i].second);
    return out;
}

std::vector<Scalar> coords_in_rowspace(const Matrix& basis_rows, const std::vector<Scalar>& v) {
    const FieldSpec& f = basis_rows.field();
    std::vector<Scalar> combo(basis_rows.rows(), Scalar(0));
    std::vector<Scalar> target = v;
    // Eliminate v against the basis rows while tracking the combination used.
    Matrix work = basis_rows;
    std::vector<std::vector<Scalar>> track(basis_rows.rows());
    for (std::size_t i = 0; i < basis_rows.rows(); ++i) {
        track[i].assign(basis_rows.rows(), Scalar(0));
        track[i][i] = 1;
    }
    // Row-reduce the basis while tracking the transformation.
    std::size_t pivot_row = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < work.rows() && f.is_zero(work.at(sel, col))) ++sel;
        if (sel == work.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(sel, j), work.at(pivot_row, j));
            std::swap(track[sel], track[pivot_row]);
        }
        Scalar inv = f.inv(work.at(pivot_row, col));
        for (std::size_t j = 0; j < work.cols(); ++j)
            work.at(pivot_row, j) = f.mul(work.at(pivot_row, j), inv);
        for (auto& t : track[pivot_row]) t = f.mul(t, inv);
        for (std::size_t r2 = 0; r2 < work.rows(); ++r2) {
            if (r2 == pivot_row) continue;
            Scalar c = f.normalize(work.at(r2, col));
            if (c == 0) continue;
            for (std::size_t j = 0; j < work.cols(); ++j)
                work.at(r2, j) = f.sub(work.at(r2, j), f.mul(c, work.at(pivot_row, j)));
            for (std::size_t j = 0; j < track[r2].size(); ++j)
                track[r2][j] = f.sub(track[r2][j], f.mul(c, track[pivot_row][j]));
        }
        pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }
    for (auto [prow, pcol] : pivots) {
        Scalar c = f.normalize(target[pcol]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < target.size(); ++j)
            target[j] = f.sub(target[j], f.mul(c, work.at(prow, j)));
        for (std::size_t j = 0; j < combo.size(); ++j)
            combo[j] = f.add(combo[j], f.mul(c, track[prow][j]));
    }
    for (const auto& t : target)
        if (!f.is_zero(t)) throw Error("coords_in_rowspace: vector outside the span");
    return combo;
}

bool in_rowspace(const Matrix& basis_rows, const std::vector<Scalar>& v) {
    Matrix stacked(basis_rows.rows() + 1, basis_rows.cols() ? basis_rows.cols() : v.size(),
                   basis_rows.field());
    for (std::size_t i = 0; i < basis_rows.rows(); ++i) stacked.set_row(i, basis_rows.row(i));
    stacked.set_row(basis_rows.rows(), v);
    return rank(stacked) == rank(basis_rows);
}

} // namespace gbpa

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace verma510 {

// Sparse vector: sorted (index, coefficient) pairs, no zeros, indices unique.
class SparseVec {
  public:
    using Entry = std::pair<int, Rat>;

    SparseVec() = default;

    static SparseVec unit(int i, Rat c = Rat(1)) {
        SparseVec v;
        if (!is_zero(c)) v.e_.emplace_back(i, std::move(c));
        return v;
    }

    // Builds from possibly unsorted/duplicated terms; merges and drops zeros.
    static SparseVec from_terms(std::vector<Entry> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        SparseVec v;
        for (auto& t : terms) {
            if (!v.e_.empty() && v.e_.back().first == t.first)
                v.e_.back().second += t.second;
            else
                v.e_.push_back(std::move(t));
        }
        v.prune();
        return v;
    }

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    size_t nnz() const { return e_.size(); }

    Rat get(int i) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), i,
                                   [](const Entry& a, int b) { return a.first < b; });
        if (it != e_.end() && it->first == i) return it->second;
        return Rat(0);
    }

    int leading_index() const { return e_.empty() ? -1 : e_.front().first; }
    const Rat& leading_coeff() const { return e_.front().second; }

    // this += c * other
    void axpy(const Rat& c, const SparseVec& other) {
        if (is_zero(c) || other.empty()) return;
        std::vector<Entry> out;
        out.reserve(e_.size() + other.e_.size());
        size_t i = 0, j = 0;
        while (i < e_.size() && j < other.e_.size()) {
            if (e_[i].first < other.e_[j].first) {
                out.push_back(std::move(e_[i++]));
            } else if (e_[i].first > other.e_[j].first) {
                out.emplace_back(other.e_[j].first, c * other.e_[j].second);
                ++j;
            } else {
                Rat s = e_[i].second + c * other.e_[j].second;
                if (!is_zero(s)) out.emplace_back(e_[i].first, std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < e_.size(); ++i) out.push_back(std::move(e_[i]));
        for (; j < other.e_.size(); ++j)
            out.emplace_back(other.e_[j].first, c * other.e_[j].second);
        e_ = std::move(out);
    }

    void scale(const Rat& c) {
        if (is_zero(c)) {
            e_.clear();
            return;
        }
        for (auto& t : e_) t.second *= c;
    }

    Rat dot(const SparseVec& other) const {
        Rat s(0);
        size_t i = 0, j = 0;
        while (i < e_.size() && j < other.e_.size()) {
            if (e_[i].first < other.e_[j].first)
                ++i;
            else if (e_[i].first > other.e_[j].first)
                ++j;
            else
                s += e_[i++].second * other.e_[j++].second;
        }
        return s;
    }

    // Scales so the first (lowest-index) nonzero coefficient becomes 1.
    void normalize_leading() {
        if (e_.empty()) return;
        Rat inv = Rat(1) / e_.front().second;
        scale(inv);
    }

    bool operator==(const SparseVec& o) const { return e_ == o.e_; }

  private:
    void prune() {
        e_.erase(std::remove_if(e_.begin(), e_.end(),
                                [](const Entry& t) { return is_zero(t.second); }),
                 e_.end());
    }
    std::vector<Entry> e_;
};

// Sparse matrix, row-major. Entries are an association (row, col) -> nonzero Rat.
class SparseMat {
  public:
    SparseMat() : nrows_(0), ncols_(0) {}
    SparseMat(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.rows_[i] = SparseVec::unit(i);
        return m;
    }

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }
    const SparseVec& row(int r) const { return rows_[r]; }
    void set_row(int r, SparseVec v) { rows_[r] = std::move(v); }

    void add_entry(int r, int c, const Rat& val) {
        if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_)
            throw std::out_of_range("SparseMat::add_entry: index out of bounds");
        if (verma510::is_zero(val)) return;
        rows_[r].axpy(Rat(1), SparseVec::unit(c, val));
    }

    Rat get(int r, int c) const { return rows_[r].get(c); }

    size_t nnz() const {
        size_t n = 0;
        for (auto& r : rows_) n += r.nnz();
        return n;
    }

    bool is_zero() const {
        for (auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }

    // y = M x
    SparseVec apply(const SparseVec& x) const {
        std::vector<SparseVec::Entry> out;
        for (int r = 0; r < nrows_; ++r) {
            Rat s = rows_[r].dot(x);
            if (!verma510::is_zero(s)) out.emplace_back(r, std::move(s));
        }
        return SparseVec::from_terms(std::move(out));
    }

    SparseMat mul(const SparseMat& other) const {
        if (ncols_ != other.nrows_)
            throw std::invalid_argument("SparseMat::mul: dimension mismatch");
        SparseMat out(nrows_, other.ncols_);
        for (int r = 0; r < nrows_; ++r) {
            SparseVec acc;
            for (auto& [k, c] : rows_[r].entries()) acc.axpy(c, other.rows_[k]);
            out.rows_[r] = std::move(acc);
        }
        return out;
    }

    SparseMat add_scaled(const Rat& c, const SparseMat& other) const {
        if (nrows_ != other.nrows_ || ncols_ != other.ncols_)
            throw std::invalid_argument("SparseMat::add_scaled: dimension mismatch");
        SparseMat out = *this;
        for (int r = 0; r < nrows_; ++r) out.rows_[r].axpy(c, other.rows_[r]);
        return out;
    }

    SparseMat sub(const SparseMat& other) const { return add_scaled(Rat(-1), other); }

    void scale(const Rat& c) {
        for (auto& r : rows_) r.scale(c);
    }

    SparseMat transpose() const {
        SparseMat out(ncols_, nrows_);
        std::vector<std::vector<SparseVec::Entry>> cols(ncols_);
        for (int r = 0; r < nrows_; ++r)
            for (auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
        for (int c = 0; c < ncols_; ++c) out.rows_[c] = SparseVec::from_terms(std::move(cols[c]));
        return out;
    }

    // Stacks blocks vertically; all must share the column count.
    static SparseMat vstack(const std::vector<SparseMat>& blocks) {
        int nc = blocks.empty() ? 0 : blocks.front().cols();
        int nr = 0;
        for (auto& b : blocks) {
            if (b.cols() != nc) throw std::invalid_argument("vstack: column mismatch");
            nr += b.rows();
        }
        SparseMat out(nr, nc);
        int at = 0;
        for (auto& b : blocks)
            for (int r = 0; r < b.rows(); ++r) out.rows_[at++] = b.rows_[r];
        return out;
    }

    bool operator==(const SparseMat& o) const {
        return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
    }

  private:
    int nrows_, ncols_;
    std::vector<SparseVec> rows_;
};

namespace detail {

// Integer rows for fraction-free elimination: sorted (col, coeff) with content 1.
using IntRow = std::vector<std::pair<int, Int>>;

inline void strip_content(IntRow& r) {
    if (r.empty()) return;
    Int g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) v /= g;
}

inline IntRow int_row_from(const SparseVec& v) {
    Int l(1);
    for (auto& [c, q] : v.entries())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    IntRow r;
    r.reserve(v.nnz());
    for (auto& [c, q] : v.entries()) r.emplace_back(c, Int(q.get_num() * (l / q.get_den())));
    strip_content(r);
    return r;
}

// rj <- (pi * rj - pj * ri), content-stripped. Leading col of ri must match rj's.
inline void cross_eliminate(const IntRow& ri, IntRow& rj) {
    const Int& pi = ri.front().second;
    const Int& pj = rj.front().second;
    IntRow out;
    out.reserve(ri.size() + rj.size());
    size_t a = 0, b = 0;
    while (a < ri.size() && b < rj.size()) {
        if (ri[a].first < rj[b].first) {
            out.emplace_back(ri[a].first, Int(-pj * ri[a].second));
            ++a;
        } else if (ri[a].first > rj[b].first) {
            out.emplace_back(rj[b].first, Int(pi * rj[b].second));
            ++b;
        } else {
            Int s = pi * rj[b].second - pj * ri[a].second;
            if (s != 0) out.emplace_back(ri[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    for (; a < ri.size(); ++a) out.emplace_back(ri[a].first, Int(-pj * ri[a].second));
    for (; b < rj.size(); ++b) out.emplace_back(rj[b].first, Int(pi * rj[b].second));
    strip_content(out);
    rj = std::move(out);
}

struct Echelon {
    std::vector<IntRow> rows;   // leading columns strictly increasing
    std::vector<int> pivot_cols;
};

// Fraction-free forward elimination by leading column. The internal pivot
// choice (fewest nonzeros, then insertion order) only affects speed; the
// echelon row space, and hence every normalized output, is unique.
inline Echelon eliminate(std::vector<IntRow> work) {
    std::map<int, std::vector<IntRow>> by_lead;
    for (auto& r : work)
        if (!r.empty()) by_lead[r.front().first].push_back(std::move(r));
    Echelon ech;
    while (!by_lead.empty()) {
        auto it = by_lead.begin();
        int col = it->first;
        std::vector<IntRow> rows = std::move(it->second);
        by_lead.erase(it);
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size()) best = i;
        IntRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        for (auto& r : rows) {
            cross_eliminate(pivot, r);
            if (!r.empty()) by_lead[r.front().first].push_back(std::move(r));
        }
        ech.pivot_cols.push_back(col);
        ech.rows.push_back(std::move(pivot));
    }
    return ech;
}

}  // namespace detail

// Reduced row echelon form of the row space spanned by `rows` (over Q).
// Output rows have leading coefficient 1 at strictly increasing pivot columns
// and zeros above each pivot; this normal form is unique for the space.
inline std::vector<SparseVec> rref(const std::vector<SparseVec>& rows) {
    std::vector<detail::IntRow> work;
    work.reserve(rows.size());
    for (auto& r : rows)
        if (!r.empty()) work.push_back(detail::int_row_from(r));
    detail::Echelon ech = detail::eliminate(std::move(work));

    int n = static_cast<int>(ech.rows.size());
    std::vector<SparseVec> out(n);
    for (int i = n - 1; i >= 0; --i) {
        SparseVec v;
        {
            std::vector<SparseVec::Entry> ts;
            ts.reserve(ech.rows[i].size());
            for (auto& [c, z] : ech.rows[i]) ts.emplace_back(c, Rat(z));
            v = SparseVec::from_terms(std::move(ts));
        }
        // clear entries at later pivot columns
        for (int j = i + 1; j < n; ++j) {
            Rat c = v.get(ech.pivot_cols[j]);
            if (!is_zero(c)) v.axpy(-c, out[j]);
        }
        v.normalize_leading();
        out[i] = std::move(v);
    }
    return out;
}

// Exact basis of the right null space of M, reduced-echelon-normalized:
// each basis vector has a leading 1 at a distinct pivot index, pivots by
// ascending column index. Empty list for a trivial kernel.
inline std::vector<SparseVec> kernel_basis(const SparseMat& M) {
    std::vector<detail::IntRow> work;
    work.reserve(M.rows());
    for (int r = 0; r < M.rows(); ++r)
        if (!M.row(r).empty()) work.push_back(detail::int_row_from(M.row(r)));
    detail::Echelon ech = detail::eliminate(std::move(work));

    // RREF of the row space, over Q.
    int n = static_cast<int>(ech.rows.size());
    std::vector<SparseVec> R(n);
    for (int i = n - 1; i >= 0; --i) {
        std::vector<SparseVec::Entry> ts;
        for (auto& [c, z] : ech.rows[i]) ts.emplace_back(c, Rat(z));
        SparseVec v = SparseVec::from_terms(std::move(ts));
        for (int j = i + 1; j < n; ++j) {
            Rat c = v.get(ech.pivot_cols[j]);
            if (!is_zero(c)) v.axpy(-c, R[j]);
        }
        v.normalize_leading();
        R[i] = std::move(v);
    }

    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<SparseVec> kernel;
    for (int f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVec::Entry> ts;
        ts.emplace_back(f, Rat(1));
        for (int i = 0; i < n; ++i) {
            Rat c = R[i].get(f);
            if (!is_zero(c)) ts.emplace_back(ech.pivot_cols[i], -c);
        }
        kernel.push_back(SparseVec::from_terms(std::move(ts)));
    }
    return rref(kernel);
}

inline int rank_of(const SparseMat& M) {
    std::vector<detail::IntRow> work;
    for (int r = 0; r < M.rows(); ++r)
        if (!M.row(r).empty()) work.push_back(detail::int_row_from(M.row(r)));
    return static_cast<int>(detail::eliminate(std::move(work)).rows.size());
}

// One exact solution of M x = b if consistent: the particular solution with
// all free variables set to 0 under the ascending-pivot rule. nullopt if the
// system is inconsistent.
inline std::optional<SparseVec> solve_linear(const SparseMat& M, const SparseVec& b) {
    if (!b.empty() && b.entries().back().first >= M.rows())
        throw std::invalid_argument("solve_linear: rhs index exceeds row count");
    const int aug = M.cols();
    std::vector<detail::IntRow> work;
    for (int r = 0; r < M.rows(); ++r) {
        SparseVec row = M.row(r);
        Rat br = b.get(r);
        if (!is_zero(br)) row.axpy(Rat(1), SparseVec::unit(aug, br));
        if (!row.empty()) work.push_back(detail::int_row_from(row));
    }
    detail::Echelon ech = detail::eliminate(std::move(work));

    int n = static_cast<int>(ech.rows.size());
    for (int c : ech.pivot_cols)
        if (c == aug) return std::nullopt;

    std::vector<SparseVec> R(n);
    for (int i = n - 1; i >= 0; --i) {
        std::vector<SparseVec::Entry> ts;
        for (auto& [c, z] : ech.rows[i]) ts.emplace_back(c, Rat(z));
        SparseVec v = SparseVec::from_terms(std::move(ts));
        for (int j = i + 1; j < n; ++j) {
            Rat c = v.get(ech.pivot_cols[j]);
            if (!is_zero(c)) v.axpy(-c, R[j]);
        }
        v.normalize_leading();
        R[i] = std::move(v);
    }

    std::vector<SparseVec::Entry> xs;
    for (int i = 0; i < n; ++i) {
        Rat c = R[i].get(aug);
        if (!is_zero(c)) xs.emplace_back(ech.pivot_cols[i], std::move(c));
    }
    return SparseVec::from_terms(std::move(xs));
}

}  // namespace verma510

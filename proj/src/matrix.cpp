#include "modrep/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace modrep {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i].push_back({i, Scalar{1, 0}});
    return m;
}

Mat Mat::diagonal(const Vec& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.nrows; ++i)
        if (!(d[i] == Scalar{})) m.rows[i].push_back({i, d[i]});
    return m;
}

void Mat::add_at(int r, int c, const Scalar& v, const FieldCtx& F) {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second = F.add(it->second, v);
        if (it->second == Scalar{}) row.erase(it);
    } else if (!(v == Scalar{})) {
        row.insert(it, {c, v});
    }
}

Scalar Mat::at(int r, int c) const {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return {};
}

bool Mat::is_zero() const {
    for (const auto& r : rows)
        if (!r.empty()) return false;
    return true;
}

std::size_t Mat::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
}

Mat Mat::add(const Mat& o, const FieldCtx& F) const {
    Mat out(nrows, ncols);
    for (int i = 0; i < nrows; ++i) {
        const auto& a = rows[i];
        const auto& b = o.rows[i];
        auto& r = out.rows[i];
        std::size_t x = 0, y = 0;
        while (x < a.size() || y < b.size()) {
            if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                r.push_back(a[x++]);
            } else if (x == a.size() || b[y].first < a[x].first) {
                r.push_back(b[y++]);
            } else {
                Scalar s = F.add(a[x].second, b[y].second);
                if (!(s == Scalar{})) r.push_back({a[x].first, s});
                ++x;
                ++y;
            }
        }
    }
    return out;
}

Mat Mat::sub(const Mat& o, const FieldCtx& F) const { return add(o.negated(F), F); }

Mat Mat::negated(const FieldCtx& F) const {
    Mat out = *this;
    for (auto& r : out.rows)
        for (auto& e : r) e.second = F.neg(e.second);
    return out;
}

Mat Mat::scaled(const Scalar& s, const FieldCtx& F) const {
    if (s == Scalar{}) return Mat(nrows, ncols);
    Mat out = *this;
    for (auto& r : out.rows)
        for (auto& e : r) e.second = F.mul(e.second, s);
    return out;
}

Mat Mat::mul(const Mat& o, const FieldCtx& F) const {
    if (ncols != o.nrows) throw std::invalid_argument("Mat::mul: shape mismatch");
    Mat out(nrows, o.ncols);
    Vec buf(static_cast<std::size_t>(o.ncols), Scalar{});
    std::vector<int> touched;
    for (int i = 0; i < nrows; ++i) {
        touched.clear();
        for (const auto& [k, a] : rows[i]) {
            for (const auto& [j, b] : o.rows[k]) {
                if (buf[j] == Scalar{}) touched.push_back(j);
                buf[j] = F.add(buf[j], F.mul(a, b));
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        auto& r = out.rows[i];
        for (int j : touched) {
            if (!(buf[j] == Scalar{})) r.push_back({j, buf[j]});
            buf[j] = Scalar{};
        }
    }
    return out;
}

Vec Mat::apply(const Vec& v, const FieldCtx& F) const {
    Vec out(static_cast<std::size_t>(nrows), Scalar{});
    for (int i = 0; i < nrows; ++i) {
        Scalar acc{};
        for (const auto& [j, a] : rows[i]) acc = F.add(acc, F.mul(a, v[j]));
        out[i] = acc;
    }
    return out;
}

std::optional<std::pair<int, int>> Mat::first_difference(const Mat& o,
                                                         const FieldCtx& F) const {
    Mat d = sub(o, F);
    for (int i = 0; i < d.nrows; ++i)
        if (!d.rows[i].empty()) return std::make_pair(i, d.rows[i].front().first);
    return std::nullopt;
}

std::vector<std::vector<Scalar>> Mat::dense(const FieldCtx&) const {
    std::vector<Vec> out(static_cast<std::size_t>(nrows),
                         Vec(static_cast<std::size_t>(ncols), Scalar{}));
    for (int i = 0; i < nrows; ++i)
        for (const auto& [j, v] : rows[i]) out[i][j] = v;
    return out;
}

Mat kron(const Mat& A, const Mat& B, const FieldCtx& F) {
    Mat out(A.nrows * B.nrows, A.ncols * B.ncols);
    for (int ia = 0; ia < A.nrows; ++ia) {
        for (int ib = 0; ib < B.nrows; ++ib) {
            auto& r = out.rows[ia * B.nrows + ib];
            for (const auto& [ja, va] : A.rows[ia])
                for (const auto& [jb, vb] : B.rows[ib])
                    r.push_back({ja * B.ncols + jb, F.mul(va, vb)});
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    }
    return out;
}

void add_block(Mat& A, int r0, int c0, const Mat& B, const FieldCtx& F) {
    for (int i = 0; i < B.nrows; ++i)
        for (const auto& [j, v] : B.rows[i]) A.add_at(r0 + i, c0 + j, v, F);
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!(x == Scalar{})) return false;
    return true;
}

EchelonBasis::EchelonBasis(int ambient_dim, const FieldCtx& F, bool track_coords)
    : ambient_(ambient_dim), F_(&F), track_(track_coords) {}

Vec EchelonBasis::reduce(Vec v, Vec* coords) const {
    if (coords) {
        if (!track_) throw std::logic_error("EchelonBasis: coords not tracked");
        coords->assign(static_cast<std::size_t>(raw_count_), Scalar{});
    }
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Scalar& c = v[pivots_[t]];
        if (c == Scalar{}) continue;
        Scalar f = c; // pivot entries are normalized to one
        const Vec& row = rows_[t];
        for (int j = pivots_[t]; j < ambient_; ++j)
            if (!(row[j] == Scalar{})) v[j] = F_->sub(v[j], F_->mul(f, row[j]));
        if (coords)
            for (int m = 0; m < raw_count_; ++m)
                if (!(coords_[t][m] == Scalar{}))
                    (*coords)[m] = F_->add((*coords)[m], F_->mul(f, coords_[t][m]));
    }
    return v;
}

bool EchelonBasis::insert(Vec v) {
    Vec combo;
    Vec* combo_ptr = track_ ? &combo : nullptr;
    Vec res = reduce(std::move(v), combo_ptr);
    int raw_index = raw_count_;
    if (track_) ++raw_count_;
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!(res[j] == Scalar{})) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Scalar ipiv = F_->inv(res[piv]);
    for (int j = piv; j < ambient_; ++j) res[j] = F_->mul(res[j], ipiv);
    Vec crd;
    if (track_) {
        // echelon row = (raw - sum combo) / pivot
        crd.assign(static_cast<std::size_t>(raw_count_), Scalar{});
        for (std::size_t m = 0; m < combo.size(); ++m)
            crd[m] = F_->mul(F_->neg(combo[m]), ipiv);
        crd[static_cast<std::size_t>(raw_index)] = ipiv;
    }
    // keep pivots strictly increasing
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(res));
    if (track_) {
        for (auto& c : coords_) c.resize(static_cast<std::size_t>(raw_count_), Scalar{});
        coords_.insert(coords_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(crd));
    }
    // re-reduce earlier rows so the basis stays fully reduced above each pivot
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        if (t == idx) continue;
        Scalar c = rows_[t][piv];
        if (c == Scalar{}) continue;
        for (int j = piv; j < ambient_; ++j)
            if (!(rows_[idx][j] == Scalar{}))
                rows_[t][j] = F_->sub(rows_[t][j], F_->mul(c, rows_[idx][j]));
        if (track_)
            for (int m = 0; m < raw_count_; ++m)
                if (!(coords_[idx][m] == Scalar{}))
                    coords_[t][m] =
                        F_->sub(coords_[t][m], F_->mul(c, coords_[idx][m]));
    }
    return true;
}

std::vector<Vec> nullspace(std::vector<Vec> rows, int cols, const FieldCtx& F) {
    // RREF with partial structure: pivcol[t] for surviving rows
    std::vector<int> pivcols;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == Scalar{}) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar ip = F.inv(rows[r][c]);
        for (int j = c; j < cols; ++j) rows[r][j] = F.mul(rows[r][j], ip);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Scalar f = rows[i][c];
            if (f == Scalar{}) continue;
            for (int j = c; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivcols.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(static_cast<std::size_t>(cols), false);
    for (int c : pivcols) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[static_cast<std::size_t>(c)]) continue;
        Vec v(static_cast<std::size_t>(cols), Scalar{});
        v[static_cast<std::size_t>(c)] = Scalar{1, 0};
        for (std::size_t t = 0; t < pivcols.size(); ++t)
            v[static_cast<std::size_t>(pivcols[t])] = F.neg(rows[t][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of(std::vector<Vec> rows, const FieldCtx& F) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows[0].size());
    EchelonBasis eb(cols, F);
    for (auto& v : rows) eb.insert(std::move(v));
    return eb.dim();
}

} // namespace modrep

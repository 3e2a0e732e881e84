#include "confjord/linalg.hpp"

namespace confjord {

SparseVec sv_scaled(const SparseVec& a, const Rational& c) {
    SparseVec out;
    if (c.is_zero())
        return out;
    out.reserve(a.size());
    for (const auto& [col, v] : a)
        out.emplace_back(col, v * c);
    return out;
}

SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Rational& c) {
    if (c.is_zero())
        return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = b[j].second * c;
            if (!v.is_zero())
                out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Rational v = a[i].second + b[j].second * c;
            if (!v.is_zero())
                out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

bool sv_is_zero(const SparseVec& a) {
    return a.empty();
}

std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& generators,
    const std::vector<Rational>& target) {
    const std::size_t m = generators.size();
    const std::size_t d = target.size();
    for (const auto& g : generators)
        if (g.size() != d)
            throw InputError("solve_in_span: dimension mismatch");

    // Rows of the augmented system [G | t], one row per coordinate.
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(m + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < m; ++c)
            rows[r][c] = generators[c][r];
        rows[r][m] = target[r];
    }

    std::vector<long> pivot_of_col(m, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < d; ++col) {
        std::size_t sel = rank;
        while (sel < d && rows[sel][col].is_zero())
            ++sel;
        if (sel == d)
            continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t c = col; c <= m; ++c)
            rows[rank][c] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c <= m; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    // Inconsistent iff a zero row has nonzero augmented entry.
    for (std::size_t r = rank; r < d; ++r)
        if (!rows[r][m].is_zero())
            return std::nullopt;

    std::vector<Rational> coeffs(m);
    for (std::size_t c = 0; c < m; ++c)
        if (pivot_of_col[c] >= 0)
            coeffs[c] = rows[static_cast<std::size_t>(pivot_of_col[c])][m];
    return coeffs;
}

SparseVec SpanBasis::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end())
            break;
        v = sv_add_scaled(v, it->second, -v.front().second);
    }
    return v;
}

bool SpanBasis::insert(SparseVec v) {
    // Eliminate against existing pivots wherever they occur, not only at the
    // leading position, so stored rows stay fully reduced.
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = rows_.find(v[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        v = sv_add_scaled(v, it->second, -v[i].second);
    }
    if (v.empty())
        return false;
    Rational inv = Rational(1) / v.front().second;
    v = sv_scaled(v, inv);
    long pivot = v.front().first;
    for (auto& [p, row] : rows_) {
        for (const auto& [col, val] : row) {
            if (col == pivot) {
                row = sv_add_scaled(row, v, -val);
                break;
            }
            if (col > pivot)
                break;
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVec> SpanBasis::representatives() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_)
        out.push_back(row);
    return out;
}

}  // namespace confjord

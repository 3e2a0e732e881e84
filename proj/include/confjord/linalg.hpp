#pragma once

#include <map>
#include <optional>
#include <vector>

#include "confjord/rational.hpp"

namespace confjord {

/// Sparse coordinate vector: (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<long, Rational>>;

SparseVec sv_scaled(const SparseVec& a, const Rational& c);
/// a + c*b
SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Rational& c);
bool sv_is_zero(const SparseVec& a);

/// Exact Gaussian elimination: expresses `target` in the span of `generators`
/// (dense coordinates over a common index), or reports that it is not there.
/// All vectors must share one dimension.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Rational>>& generators,
    const std::vector<Rational>& target);

/// Incrementally maintained row-reduced basis of a rational span. Rows are
/// kept fully reduced, so membership is a single reduction pass.
class SpanBasis {
  public:
    /// Adds a vector; returns true when the rank grew.
    bool insert(SparseVec v);

    bool contains(const SparseVec& v) const { return sv_is_zero(reduce(v)); }

    /// Remainder of v after eliminating against the stored rows.
    SparseVec reduce(SparseVec v) const;

    std::size_t rank() const { return rows_.size(); }

    /// One representative per pivot, in pivot order.
    std::vector<SparseVec> representatives() const;

  private:
    std::map<long, SparseVec> rows_;  // pivot column -> row with leading 1
};

}  // namespace confjord
